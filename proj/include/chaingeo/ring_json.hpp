#pragma once

#include <json.hpp>

#include "chaingeo/finite_ring.hpp"

namespace chaingeo {

/// Size, unit and radical counts, and the boolean properties.
nlohmann::json ring_summary(const FiniteRing& ring);

/// {"name", "size", "zero", "one", "labels", "add", "mul"} with row-major tables.
nlohmann::json ring_tables(const FiniteRing& ring);

/// Inverse of ring_tables; the ring axioms are checked again. Parse on
/// malformed input.
FiniteRing ring_from_tables(const nlohmann::json& j);

}  // namespace chaingeo
