#pragma once

// Finite rings given extensionally by addition and multiplication tables.
//
// Elements are indices 0..size-1. A FiniteRing is a cheap, immutable handle;
// copies share the validated tables. Structured constructors keep enough
// metadata (matrix shape, product factors, embedded field) to print elements
// and to build maps such as the transpose.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaingeo/error.hpp"

namespace chaingeo {

using Elem = std::uint16_t;

/// Largest ring whose axioms are checked on every triple; above this a fixed
/// random sample of triples is checked.
inline constexpr int kFullValidationBudget = 64;
/// Largest ring any constructor will build.
inline constexpr int kConstructionBudget = 256;
/// Largest rings handed to ring_isomorphic.
inline constexpr int kIsomorphismBudget = 16;

class FiniteRing;

/// Raw description accepted by FiniteRing::from_tables.
struct RingTables {
  std::string name;
  int size = 0;
  std::vector<Elem> add;  // row-major size x size
  std::vector<Elem> mul;  // row-major size x size
  Elem zero = 0;
  Elem one = 1;
  std::vector<std::string> labels;  // optional, defaults to indices
};

class FiniteRing {
 public:
  /// Validates the ring axioms and builds a ring without extra structure.
  static FiniteRing from_tables(RingTables tables);

  int size() const;
  const std::string& name() const;
  std::uint64_t id() const;
  bool same_as(const FiniteRing& other) const { return id() == other.id(); }

  Elem zero() const;
  Elem one() const;
  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  bool is_unit(Elem a) const;
  std::optional<Elem> inverse(Elem a) const;
  /// Units in increasing index order.
  const std::vector<Elem>& units() const;

  bool is_commutative() const;
  bool is_field() const;
  /// The non-units form a two-sided ideal.
  bool is_local() const;
  /// Additive order of an element.
  int additive_order(Elem a) const;

  const std::string& label(Elem a) const;
  std::optional<Elem> parse_label(const std::string& text) const;

  struct Algebra;
  struct MatrixShape;
  struct ProductFactors;

  /// Embedded central field, if this ring is built as an algebra.
  const Algebra* algebra() const;
  /// Like algebra(), but throws NoAlgebraStructure.
  const Algebra& require_algebra() const;
  const MatrixShape* matrix_shape() const;
  const ProductFactors* product_factors() const;

  struct Data;

 private:
  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend struct RingBuilder;
};

/// K-algebra structure: a field K embedded in the centre of R.
struct FiniteRing::Algebra {
  FiniteRing field;
  std::vector<Elem> embed;  // field element -> ring element
  int dimension = 0;        // dim_K R
  std::vector<Elem> basis;  // K-basis of R
  /// coords[r * dimension + i] = i-th coordinate of r (a field element).
  std::vector<Elem> coords;

  Elem scale(const FiniteRing& ring, Elem k, Elem r) const { return ring.mul(embed[k], r); }
  std::optional<Elem> field_preimage(Elem r) const;
};

/// Square (or upper triangular) n x n matrices over a field. Elements are
/// encoded base |K| over the stored entries in row-major order.
struct FiniteRing::MatrixShape {
  FiniteRing field;
  int n = 0;
  bool upper_triangular = false;
};

/// R1 x R2 with element index a + |R1| * b.
struct FiniteRing::ProductFactors {
  FiniteRing left;
  FiniteRing right;
};

// Constructors. Fields are GF(p) for p in {2, 3, 5, 7} and GF(4).
FiniteRing make_zn(int n);
FiniteRing make_gf(int q);
FiniteRing make_dual(const FiniteRing& field);
FiniteRing make_double(const FiniteRing& field);
FiniteRing make_matrix_ring(const FiniteRing& field, int n);
FiniteRing make_ternions(const FiniteRing& field, int n = 2);
FiniteRing make_product(const FiniteRing& left, const FiniteRing& right);

/// Entries of a matrix-ring element, n*n field elements in row-major order.
std::vector<Elem> matrix_entries(const FiniteRing& ring, Elem a);
Elem matrix_from_entries(const FiniteRing& ring, const std::vector<Elem>& entries);

std::pair<Elem, Elem> product_components(const FiniteRing& ring, Elem a);
Elem product_element(const FiniteRing& ring, Elem left, Elem right);

std::vector<Elem> units(const FiniteRing& ring);
bool is_unit(const FiniteRing& ring, Elem a);

/// J(R) = { r : 1 - a r is a unit for all a }, which is the Jacobson radical
/// for finite rings. Sorted by index.
std::vector<Elem> jacobson_radical(const FiniteRing& ring);

/// Exhaustive check that the tables form a ring; throws ConstructionError.
void validate_ring(const FiniteRing& ring, bool exhaustive);

/// Searches for a bijection preserving both tables and 1. SizeError above
/// kIsomorphismBudget.
bool ring_isomorphic(const FiniteRing& r1, const FiniteRing& r2);

Elem scalar_embed(const FiniteRing& ring, Elem k);

/// Additive and compatible with the scalar action of the embedded fields
/// (which must have the same size).
bool is_k_linear(const FiniteRing& source, const FiniteRing& target, const std::vector<Elem>& map);

}  // namespace chaingeo
