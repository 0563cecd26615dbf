#pragma once

// Maps between chain geometries induced by isomorphisms, antiisomorphisms and
// Jordan isomorphisms of the underlying rings, and the point sets P(S) of
// Jordan systems S inside a K-algebra.

#include <vector>

#include "chaingeo/chain_geometry.hpp"

namespace chaingeo {

/// A map of ring elements, stored as a table indexed by source element.
struct ElementMap {
  FiniteRing source;
  FiniteRing target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table.at(x); }
};

ElementMap identity_map(const FiniteRing& ring);
/// Transpose on a full matrix ring; WrongRingKind otherwise.
ElementMap transpose_map(const FiniteRing& ring);
/// (a, b) -> (f(a), g(b)) on a product ring whose factors are the sources of f and g.
ElementMap product_map(const FiniteRing& ring, const ElementMap& f, const ElementMap& g);
/// Checks sizes and ranges; DimensionMismatch or Domain on failure.
ElementMap element_map(const FiniteRing& source, const FiniteRing& target, std::vector<Elem> table);

bool is_bijective(const ElementMap& f);
bool is_additive(const ElementMap& f);
/// f(ab) = f(a) f(b) and f(1) = 1.
bool is_homomorphism(const ElementMap& f);
/// f(ab) = f(b) f(a) and f(1) = 1.
bool is_antihomomorphism(const ElementMap& f);

/// Bijective, additive and multiplicative (or antimultiplicative), K-linear when
/// both rings are algebras.
bool is_algebra_isomorphism(const ElementMap& f);
bool is_algebra_antiisomorphism(const ElementMap& f);

/// Bijection with f(1) = 1', K-linear (additive if there is no algebra
/// structure), and f(aba) = f(a) f(b) f(a) for all a, b.
bool is_jordan_isomorphism(const ElementMap& f);

/// image[i] is the index in the target line of the image of point i.
struct PointMap {
  std::vector<int> image;
};

/// R(xy-1, x) -> R'(f(x)f(y) - 1', f(x)). Every parametrization of every point
/// is evaluated; disagreement throws WellDefinednessViolation. Domain if f is
/// not a Jordan isomorphism.
PointMap jordan_induced_map(const ElementMap& f, const ProjectiveLine& source, const ProjectiveLine& target);

/// The same rule for an arbitrary bijection, without the Jordan precondition.
PointMap evaluate_bartolone_rule(const ElementMap& f, const ProjectiveLine& source, const ProjectiveLine& target);

/// R(a,b) -> R'(f(a), f(b)). Domain if f is not an algebra isomorphism.
PointMap algebra_iso_map(const ElementMap& f, const ProjectiveLine& source, const ProjectiveLine& target);

/// R(1, b) -> R'(1', f(b)) and R(a, 1) -> R'(f(a), 1') for local R. NotLocal
/// otherwise; Domain if f is not an antiisomorphism.
PointMap antiiso_map(const ElementMap& f, const ProjectiveLine& source, const ProjectiveLine& target);

bool is_bijection(const PointMap& m, int target_size);
/// p, q distant iff their images are, for all pairs.
bool preserves_distance(const PointMap& m, const DistantGraph& source, const DistantGraph& target);
/// The image of every source chain is a target chain, and every target chain is hit.
bool maps_chains_onto_chains(const PointMap& m, const std::vector<std::vector<int>>& source_chains,
                             const std::vector<std::vector<int>>& target_chains);

struct JordanSystemCheck {
  bool is_system = false;
  bool is_strong = false;
};

/// is_system: S is a K-subspace containing 1 and closed under inverses of its
/// units. is_strong: additionally every coset x + K, x in R, has more than
/// half of its elements invertible.
JordanSystemCheck is_strong_jordan_system(const FiniteRing& ring, const std::vector<Elem>& s);

/// { R(xy-1, x) : x, y in S }, sorted. NotASystem unless S is a Jordan system.
std::vector<ProjPoint> jordan_subspace_points(const ProjectiveLine& line, const std::vector<Elem>& s);

/// Symmetric matrices of a full matrix ring.
std::vector<Elem> symmetric_matrices(const FiniteRing& ring);
/// The embedded field K as a subset of R.
std::vector<Elem> embedded_field(const FiniteRing& ring);

/// Every chain through three mutually distant points of `pts` lies inside `pts`.
bool closed_under_chains(const ProjectiveLine& line, const std::vector<ProjPoint>& pts);

}  // namespace chaingeo
