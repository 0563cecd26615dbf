#pragma once

// Chain geometry over a finite K-algebra R: chains are the images of the
// embedded projective line over K under GL2(R).

#include <vector>

#include "chaingeo/distant_graph.hpp"
#include "chaingeo/projective_line.hpp"

namespace chaingeo {

/// Largest projective line for which all_chains enumerates triples.
inline constexpr int kChainBudget = 160;

struct Chain {
  std::vector<ProjPoint> points;  // sorted
  Matrix2 witness;                // maps the standard chain onto this one

  bool contains(const ProjPoint& p) const;
};

/// { R(1,k) : k in K } together with R(0,1).
Chain standard_chain(const FiniteRing& ring);

/// Image of the standard chain under an invertible matrix.
Chain chain_image(const FiniteRing& ring, const Matrix2& m);

/// The unique chain through three mutually distant points. Throws NotDistant.
Chain chain_through(const FiniteRing& ring, const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Every chain exactly once, sorted by point tuple. SizeError above kChainBudget points.
std::vector<Chain> all_chains(const ProjectiveLine& line, const DistantGraph& g);

/// Point indices of a chain in `line`.
std::vector<int> chain_indices(const ProjectiveLine& line, const Chain& chain);

struct CrossRatio {
  /// False when the fourth point is sent to a point R(a,b) with b not a unit.
  bool affine = false;
  /// All unit conjugates of the computed representative, sorted.
  std::vector<Elem> conjugacy_class;
};

/// Normalizes (p1, p2, p3) to (R(1,0), R(0,1), R(1,1)) and reads off p4.
CrossRatio cross_ratio(const FiniteRing& ring, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                       const ProjPoint& p4);

/// The cross ratio class contains an element of the embedded field.
bool meets_field(const FiniteRing& ring, const CrossRatio& cr);

/// { R(xy - 1, x) : x, y in R }.
std::vector<ProjPoint> bartolone_points(const ProjectiveLine& line);

}  // namespace chaingeo
