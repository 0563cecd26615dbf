#include "chaingeo/projective_line.hpp"

#include <algorithm>

#include "chaingeo/field_linalg.hpp"

namespace chaingeo {

Matrix2 multiply(const FiniteRing& R, const Matrix2& m, const Matrix2& n) {
  return {R.add(R.mul(m.a, n.a), R.mul(m.b, n.c)), R.add(R.mul(m.a, n.b), R.mul(m.b, n.d)),
          R.add(R.mul(m.c, n.a), R.mul(m.d, n.c)), R.add(R.mul(m.c, n.b), R.mul(m.d, n.d))};
}

namespace {

bool is_identity(const FiniteRing& R, const Matrix2& m) { return m == Matrix2::identity(R); }

std::optional<Matrix2> checked(const FiniteRing& R, const Matrix2& m, const Matrix2& n) {
  if (is_identity(R, multiply(R, m, n)) && is_identity(R, multiply(R, n, m))) return n;
  return std::nullopt;
}

// Some (x, z) with p x + q z = s and r x + t z = u.
std::optional<std::pair<Elem, Elem>> solve_column(const FiniteRing& R, Elem p, Elem q, Elem r, Elem t, Elem s,
                                                  Elem u) {
  for (int x = 0; x < R.size(); ++x) {
    const Elem px = R.mul(p, x), rx = R.mul(r, x);
    for (int z = 0; z < R.size(); ++z) {
      if (R.add(px, R.mul(q, z)) == s && R.add(rx, R.mul(t, z)) == u) {
        return std::make_pair(static_cast<Elem>(x), static_cast<Elem>(z));
      }
    }
  }
  return std::nullopt;
}

// K-coordinates of r, written into row `row` of `out` starting at column `col`.
void put_coords(const FiniteRing::Algebra& alg, Elem r, FieldMatrix& out, Eigen::Index row, Eigen::Index col) {
  for (int i = 0; i < alg.dimension; ++i) out(row, col + i) = alg.coords[static_cast<std::size_t>(r) * alg.dimension + i];
}

Elem from_coords(const FiniteRing& R, const FiniteRing::Algebra& alg, const FieldVector& v, Eigen::Index offset) {
  Elem r = R.zero();
  for (int i = 0; i < alg.dimension; ++i) r = R.add(r, alg.scale(R, v(offset + i), alg.basis[i]));
  return r;
}

}  // namespace

std::optional<Matrix2> inverse_by_scan(const FiniteRing& R, const Matrix2& m) {
  // M N = I column by column. In a finite ring a one-sided inverse is
  // two-sided, and checked() confirms it regardless.
  const auto col1 = solve_column(R, m.a, m.b, m.c, m.d, R.one(), R.zero());
  if (!col1) return std::nullopt;
  const auto col2 = solve_column(R, m.a, m.b, m.c, m.d, R.zero(), R.one());
  if (!col2) return std::nullopt;
  return checked(R, m, Matrix2{col1->first, col2->first, col1->second, col2->second});
}

std::optional<Matrix2> inverse_by_linear_algebra(const FiniteRing& R, const Matrix2& m) {
  const auto& alg = R.require_algebra();
  const int dim = alg.dimension;
  const FiniteRing& K = alg.field;
  // Row i of phi is the image of the i-th basis vector of R^2 under v -> vM.
  FieldMatrix phi(2 * dim, 2 * dim);
  for (int i = 0; i < dim; ++i) {
    const Elem e = alg.basis[i];
    put_coords(alg, R.mul(e, m.a), phi, i, 0);
    put_coords(alg, R.mul(e, m.b), phi, i, dim);
    put_coords(alg, R.mul(e, m.c), phi, dim + i, 0);
    put_coords(alg, R.mul(e, m.d), phi, dim + i, dim);
  }
  // Solve v phi = target, i.e. phi^T v^T = target^T.
  const FieldMatrix phi_t = phi.transpose();
  const auto row_of_inverse = [&](Elem first, Elem second) -> std::optional<std::pair<Elem, Elem>> {
    FieldVector target(2 * dim);
    for (int i = 0; i < dim; ++i) {
      target(i) = alg.coords[static_cast<std::size_t>(first) * dim + i];
      target(dim + i) = alg.coords[static_cast<std::size_t>(second) * dim + i];
    }
    const auto v = solve(K, phi_t, target);
    if (!v) return std::nullopt;
    return std::make_pair(from_coords(R, alg, *v, 0), from_coords(R, alg, *v, dim));
  };
  if (rank(K, phi) < 2 * dim) return std::nullopt;
  const auto r1 = row_of_inverse(R.one(), R.zero());
  const auto r2 = row_of_inverse(R.zero(), R.one());
  if (!r1 || !r2) return std::nullopt;
  return checked(R, m, Matrix2{r1->first, r1->second, r2->first, r2->second});
}

std::optional<Matrix2> inverse(const FiniteRing& R, const Matrix2& m) {
  if (R.size() > 16 && R.algebra()) return inverse_by_linear_algebra(R, m);
  return inverse_by_scan(R, m);
}

bool is_invertible(const FiniteRing& R, const Matrix2& m) { return inverse(R, m).has_value(); }

bool is_unimodular(const FiniteRing& R, Elem a, Elem b) {
  std::vector<bool> in_bR(R.size(), false);
  for (int y = 0; y < R.size(); ++y) in_bR[R.mul(b, y)] = true;
  for (int x = 0; x < R.size(); ++x) {
    if (in_bR[R.sub(R.one(), R.mul(a, x))]) return true;
  }
  return false;
}

std::optional<Matrix2> completion(const FiniteRing& R, Elem a, Elem b) {
  // Cheap candidates first, then everything.
  for (const auto& [c, d] : {std::pair{R.zero(), R.one()}, std::pair{R.one(), R.zero()}}) {
    if (is_invertible(R, {a, b, c, d})) return Matrix2{a, b, c, d};
  }
  for (int c = 0; c < R.size(); ++c) {
    for (int d = 0; d < R.size(); ++d) {
      const Matrix2 m{a, b, static_cast<Elem>(c), static_cast<Elem>(d)};
      if (is_invertible(R, m)) return m;
    }
  }
  return std::nullopt;
}

bool has_completion(const FiniteRing& R, Elem a, Elem b) { return completion(R, a, b).has_value(); }

bool is_admissible(const FiniteRing& R, Elem a, Elem b) {
  return is_unimodular(R, a, b) && has_completion(R, a, b);
}

std::pair<Elem, Elem> canonical_pair(const FiniteRing& R, Elem a, Elem b) {
  std::pair<Elem, Elem> best{a, b};
  for (Elem u : R.units()) best = std::min(best, std::pair<Elem, Elem>{R.mul(u, a), R.mul(u, b)});
  return best;
}

ProjPoint make_point(const FiniteRing& R, Elem a, Elem b) {
  if (a >= R.size() || b >= R.size()) throw Error(ErrorKind::Domain, "element out of range");
  if (!is_admissible(R, a, b)) {
    throw Error(ErrorKind::NotAdmissible, "(" + R.label(a) + ", " + R.label(b) + ") is not admissible");
  }
  const auto [ca, cb] = canonical_pair(R, a, b);
  return {R.id(), ca, cb};
}

std::string point_label(const FiniteRing& R, const ProjPoint& p) {
  return "R(" + R.label(p.a) + "," + R.label(p.b) + ")";
}

std::vector<ProjPoint> points(const FiniteRing& R) {
  std::vector<ProjPoint> out;
  for (int a = 0; a < R.size(); ++a) {
    for (int b = 0; b < R.size(); ++b) {
      const auto pair = std::pair<Elem, Elem>{static_cast<Elem>(a), static_cast<Elem>(b)};
      if (canonical_pair(R, pair.first, pair.second) != pair) continue;
      if (!is_admissible(R, pair.first, pair.second)) continue;
      out.push_back({R.id(), pair.first, pair.second});
      if (static_cast<int>(out.size()) > kPointBudget) {
        throw Error(ErrorKind::Size, "P(" + R.name() + ") has more than " + std::to_string(kPointBudget) + " points");
      }
    }
  }
  return out;
}

namespace {

void require_same_ring(const FiniteRing& R, const ProjPoint& p) {
  if (p.ring_id != R.id()) throw Error(ErrorKind::RingMismatch, "point does not belong to " + R.name());
}

}  // namespace

bool distant(const FiniteRing& R, const ProjPoint& p, const ProjPoint& q) {
  require_same_ring(R, p);
  require_same_ring(R, q);
  return is_invertible(R, {p.a, p.b, q.a, q.b});
}

ProjPoint act(const FiniteRing& R, const Matrix2& m, const ProjPoint& p) {
  require_same_ring(R, p);
  if (!is_invertible(R, m)) throw Error(ErrorKind::NotInvertible, "matrix is not in GL2(" + R.name() + ")");
  const Elem x = R.add(R.mul(p.a, m.a), R.mul(p.b, m.c));
  const Elem y = R.add(R.mul(p.a, m.b), R.mul(p.b, m.d));
  const auto [ca, cb] = canonical_pair(R, x, y);
  return {R.id(), ca, cb};
}

ProjectiveLine::ProjectiveLine(FiniteRing ring) : ring_(std::move(ring)), points_(chaingeo::points(ring_)) {
  for (int i = 0; i < size(); ++i) index_.emplace(key(points_[i].a, points_[i].b), i);
}

std::optional<int> ProjectiveLine::index_of(const ProjPoint& p) const {
  if (p.ring_id != ring_.id()) throw Error(ErrorKind::RingMismatch, "point does not belong to " + ring_.name());
  const auto it = index_.find(key(p.a, p.b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ProjectiveLine::index_of_pair(Elem a, Elem b) const {
  const auto [ca, cb] = canonical_pair(ring_, a, b);
  const auto it = index_.find(key(ca, cb));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ProjPoint ProjectiveLine::point_of(Elem a, Elem b) const {
  const auto i = index_of_pair(a, b);
  if (!i) throw Error(ErrorKind::NotAdmissible, "(" + ring_.label(a) + ", " + ring_.label(b) + ") is not admissible");
  return points_[*i];
}

}  // namespace chaingeo
