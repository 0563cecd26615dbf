#pragma once

// P(M_n(K)) as the Grassmannian of n-subspaces of K^2n: R(A,B) goes to the
// row space of (A|B).

#include <vector>

#include "chaingeo/field_linalg.hpp"
#include "chaingeo/projective_line.hpp"

namespace chaingeo {

/// An n-dimensional subspace of K^(2n), kept as its reduced echelon basis.
struct Subspace {
  FiniteRing field;
  int n = 0;
  FieldMatrix basis;  // n x 2n

  bool operator==(const Subspace& other) const;
  /// Row-major basis entries, a total order key.
  std::vector<Elem> key() const;
};

/// WrongRingKind unless the point lives on a full matrix ring.
Subspace to_subspace(const FiniteRing& ring, const ProjPoint& p);

/// DimensionMismatch unless both are n-subspaces of the same K^2n.
bool is_complementary(const Subspace& u, const Subspace& v);

/// All reduced echelon forms of rank `rows` with `cols` columns, by pivot
/// pattern and free entries.
std::vector<FieldMatrix> enumerate_echelon_forms(const FiniteRing& field, int rows, int cols);

struct GrassmannReport {
  int n = 0;
  std::string field;
  int points = 0;
  int subspaces = 0;          // independent enumeration
  bool injective = false;
  bool surjective = false;
  long distant_pairs = 0;
  long complementary_pairs = 0;
  bool distant_iff_complementary = false;
  int chains = 0;
  /// Every chain maps to |K|+1 mutually complementary subspaces.
  bool chains_complementary = false;
};

/// Exhaustive comparison for n <= 2 and |K| <= 3; SizeError otherwise.
GrassmannReport grassmann_check(const FiniteRing& field, int n);

}  // namespace chaingeo
