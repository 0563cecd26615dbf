#pragma once

// The projective line P(R) over a finite ring: points are cyclic submodules
// R(a,b) with (a,b) the first row of an invertible 2x2 matrix. Each point is
// stored as the lexicographically least pair in its orbit under left
// multiplication by units.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chaingeo/finite_ring.hpp"

namespace chaingeo {

/// Vertex budget for building a projective line or distant graph.
inline constexpr int kPointBudget = 1024;

struct Matrix2 {
  Elem a, b;  // first row
  Elem c, d;  // second row

  static Matrix2 identity(const FiniteRing& r) { return {r.one(), r.zero(), r.zero(), r.one()}; }
  bool operator==(const Matrix2&) const = default;
};

Matrix2 multiply(const FiniteRing& ring, const Matrix2& m, const Matrix2& n);

/// Two-sided inverse, if any.
///
/// Rings of at most 16 elements (or without algebra structure) are searched
/// column by column for a right inverse, which is then checked on the left.
/// For larger K-algebras the map v -> vM on R^2 is flattened to a K-linear
/// map of dimension 2 dim_K R and solved by row reduction.
std::optional<Matrix2> inverse(const FiniteRing& ring, const Matrix2& m);
bool is_invertible(const FiniteRing& ring, const Matrix2& m);

/// The same question answered by the flattened K-linear route only.
std::optional<Matrix2> inverse_by_linear_algebra(const FiniteRing& ring, const Matrix2& m);
/// The same question answered by the column scan only.
std::optional<Matrix2> inverse_by_scan(const FiniteRing& ring, const Matrix2& m);

/// ax + by = 1 for some x, y.
bool is_unimodular(const FiniteRing& ring, Elem a, Elem b);
/// Exhaustive search over all (c, d) for an invertible completion.
bool has_completion(const FiniteRing& ring, Elem a, Elem b);
/// Same verdict as has_completion. Non-unimodular pairs are rejected early,
/// since the first row of an invertible matrix is unimodular.
bool is_admissible(const FiniteRing& ring, Elem a, Elem b);
std::optional<Matrix2> completion(const FiniteRing& ring, Elem a, Elem b);

struct ProjPoint {
  std::uint64_t ring_id = 0;
  Elem a = 0, b = 0;

  auto operator<=>(const ProjPoint&) const = default;
};

/// Least pair (ua, ub) over units u.
std::pair<Elem, Elem> canonical_pair(const FiniteRing& ring, Elem a, Elem b);

/// Point R(a,b); throws NotAdmissible.
ProjPoint make_point(const FiniteRing& ring, Elem a, Elem b);

std::string point_label(const FiniteRing& ring, const ProjPoint& p);

/// All points in lexicographic order of their canonical pairs. SizeError when
/// there are more than kPointBudget of them.
std::vector<ProjPoint> points(const FiniteRing& ring);

/// Throws RingMismatch if the points do not belong to `ring`.
bool distant(const FiniteRing& ring, const ProjPoint& p, const ProjPoint& q);

/// R((a,b) M); throws NotInvertible.
ProjPoint act(const FiniteRing& ring, const Matrix2& m, const ProjPoint& p);

/// Point list with index lookup. Admissibility of arbitrary pairs is answered
/// from the point list: (c,d) is admissible iff its canonical pair is a point.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(FiniteRing ring);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  const ProjPoint& point(int i) const { return points_.at(i); }

  std::optional<int> index_of(const ProjPoint& p) const;
  /// Index of R(a,b), or nullopt if (a,b) is not admissible.
  std::optional<int> index_of_pair(Elem a, Elem b) const;
  bool admissible(Elem a, Elem b) const { return index_of_pair(a, b).has_value(); }

  /// Throws NotAdmissible.
  ProjPoint point_of(Elem a, Elem b) const;

 private:
  static std::uint32_t key(Elem a, Elem b) { return (std::uint32_t(a) << 16) | b; }
  FiniteRing ring_;
  std::vector<ProjPoint> points_;
  std::unordered_map<std::uint32_t, int> index_;
};

}  // namespace chaingeo
