#pragma once

// Dense linear algebra over a finite field given as a FiniteRing. Matrices
// store field element indices in Eigen containers; arithmetic goes through
// the field's tables.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "chaingeo/finite_ring.hpp"

namespace chaingeo {

using FieldMatrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic>;
using FieldVector = Eigen::Matrix<Elem, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_in_place(const FiniteRing& field, FieldMatrix& m);

FieldMatrix rref(const FiniteRing& field, FieldMatrix m);
int rank(const FiniteRing& field, FieldMatrix m);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<FieldVector> solve(const FiniteRing& field, const FieldMatrix& a, const FieldVector& b);

FieldMatrix multiply(const FiniteRing& field, const FieldMatrix& a, const FieldMatrix& b);

}  // namespace chaingeo
