#include "chaingeo/jordan.hpp"

#include <algorithm>
#include <set>

namespace chaingeo {

ElementMap element_map(const FiniteRing& source, const FiniteRing& target, std::vector<Elem> table) {
  if (static_cast<int>(table.size()) != source.size()) {
    throw Error(ErrorKind::DimensionMismatch, "map has " + std::to_string(table.size()) + " entries, " +
                                                  source.name() + " has " + std::to_string(source.size()));
  }
  for (Elem e : table) {
    if (e >= target.size()) throw Error(ErrorKind::Domain, "map value out of range for " + target.name());
  }
  return {source, target, std::move(table)};
}

ElementMap identity_map(const FiniteRing& R) {
  std::vector<Elem> t(R.size());
  for (int i = 0; i < R.size(); ++i) t[i] = static_cast<Elem>(i);
  return {R, R, std::move(t)};
}

ElementMap transpose_map(const FiniteRing& R) {
  const auto* shape = R.matrix_shape();
  if (!shape || shape->upper_triangular) throw Error(ErrorKind::WrongRingKind, R.name() + " is not a full matrix ring");
  const int n = shape->n;
  std::vector<Elem> t(R.size());
  for (int x = 0; x < R.size(); ++x) {
    const auto e = matrix_entries(R, x);
    std::vector<Elem> tr(e.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) tr[j * n + i] = e[i * n + j];
    }
    t[x] = matrix_from_entries(R, tr);
  }
  return {R, R, std::move(t)};
}

ElementMap product_map(const FiniteRing& R, const ElementMap& f, const ElementMap& g) {
  const auto* pf = R.product_factors();
  if (!pf) throw Error(ErrorKind::WrongRingKind, R.name() + " is not a product ring");
  if (!pf->left.same_as(f.source) || !pf->right.same_as(g.source) || !f.source.same_as(f.target) ||
      !g.source.same_as(g.target)) {
    throw Error(ErrorKind::RingMismatch, "factor maps do not match the factors of " + R.name());
  }
  std::vector<Elem> t(R.size());
  for (int x = 0; x < R.size(); ++x) {
    const auto [a, b] = product_components(R, x);
    t[x] = product_element(R, f(a), g(b));
  }
  return {R, R, std::move(t)};
}

bool is_bijective(const ElementMap& f) {
  if (f.source.size() != f.target.size()) return false;
  std::vector<bool> seen(f.target.size(), false);
  for (Elem e : f.table) {
    if (seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

bool is_additive(const ElementMap& f) {
  const auto& S = f.source;
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      if (f(S.add(a, b)) != f.target.add(f(a), f(b))) return false;
    }
  }
  return true;
}

namespace {

bool multiplicative(const ElementMap& f, bool anti) {
  const auto& S = f.source;
  const auto& T = f.target;
  if (f(S.one()) != T.one()) return false;
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      const Elem rhs = anti ? T.mul(f(b), f(a)) : T.mul(f(a), f(b));
      if (f(S.mul(a, b)) != rhs) return false;
    }
  }
  return true;
}

// K-linear for algebras, additive for rings without a field.
bool linear(const ElementMap& f) {
  const bool sa = f.source.algebra() != nullptr;
  const bool ta = f.target.algebra() != nullptr;
  if (sa != ta) return false;
  if (sa) return is_k_linear(f.source, f.target, f.table);
  return is_additive(f);
}

void require_lines(const ElementMap& f, const ProjectiveLine& src, const ProjectiveLine& dst) {
  if (!src.ring().same_as(f.source) || !dst.ring().same_as(f.target)) {
    throw Error(ErrorKind::RingMismatch, "projective lines do not match the map");
  }
}

}  // namespace

bool is_homomorphism(const ElementMap& f) { return is_additive(f) && multiplicative(f, false); }
bool is_antihomomorphism(const ElementMap& f) { return is_additive(f) && multiplicative(f, true); }

bool is_algebra_isomorphism(const ElementMap& f) {
  return is_bijective(f) && linear(f) && multiplicative(f, false);
}

bool is_algebra_antiisomorphism(const ElementMap& f) {
  return is_bijective(f) && linear(f) && multiplicative(f, true);
}

bool is_jordan_isomorphism(const ElementMap& f) {
  const auto& S = f.source;
  const auto& T = f.target;
  if (!is_bijective(f) || f(S.one()) != T.one() || !linear(f)) return false;
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      if (f(S.mul(S.mul(a, b), a)) != T.mul(T.mul(f(a), f(b)), f(a))) return false;
    }
  }
  return true;
}

PointMap jordan_induced_map(const ElementMap& f, const ProjectiveLine& src, const ProjectiveLine& dst) {
  require_lines(f, src, dst);
  if (!is_jordan_isomorphism(f)) throw Error(ErrorKind::Domain, "map is not a Jordan isomorphism");
  return evaluate_bartolone_rule(f, src, dst);
}

PointMap evaluate_bartolone_rule(const ElementMap& f, const ProjectiveLine& src, const ProjectiveLine& dst) {
  require_lines(f, src, dst);
  const auto& S = f.source;
  const auto& T = f.target;
  PointMap out{std::vector<int>(src.size(), -1)};
  for (int x = 0; x < S.size(); ++x) {
    for (int y = 0; y < S.size(); ++y) {
      const auto p = src.index_of_pair(S.sub(S.mul(x, y), S.one()), static_cast<Elem>(x));
      const auto q = dst.index_of_pair(T.sub(T.mul(f(x), f(y)), T.one()), f(x));
      if (!p || !q) throw Error(ErrorKind::Internal, "(xy-1, x) is not admissible");
      if (out.image[*p] == -1) {
        out.image[*p] = *q;
      } else if (out.image[*p] != *q) {
        throw Error(ErrorKind::WellDefinednessViolation,
                    "two parametrizations of " + point_label(S, src.point(*p)) + " disagree");
      }
    }
  }
  if (std::find(out.image.begin(), out.image.end(), -1) != out.image.end()) {
    throw Error(ErrorKind::Internal, "induced map is not total");
  }
  return out;
}

PointMap algebra_iso_map(const ElementMap& f, const ProjectiveLine& src, const ProjectiveLine& dst) {
  require_lines(f, src, dst);
  if (!is_algebra_isomorphism(f)) throw Error(ErrorKind::Domain, "map is not an algebra isomorphism");
  PointMap out;
  for (const auto& p : src.points()) {
    const auto q = dst.index_of_pair(f(p.a), f(p.b));
    if (!q) throw Error(ErrorKind::Internal, "image pair is not admissible");
    out.image.push_back(*q);
  }
  return out;
}

PointMap antiiso_map(const ElementMap& f, const ProjectiveLine& src, const ProjectiveLine& dst) {
  require_lines(f, src, dst);
  const auto& S = f.source;
  const auto& T = f.target;
  if (!S.is_local()) throw Error(ErrorKind::NotLocal, S.name() + " is not local");
  if (!is_algebra_antiisomorphism(f)) throw Error(ErrorKind::Domain, "map is not an antiisomorphism");
  PointMap out;
  for (const auto& p : src.points()) {
    std::optional<int> q;
    if (const auto ai = S.inverse(p.a)) {
      q = dst.index_of_pair(T.one(), f(S.mul(*ai, p.b)));
    } else {
      const auto bi = S.inverse(p.b);
      if (!bi) throw Error(ErrorKind::Internal, "point over a local ring with no unit coordinate");
      q = dst.index_of_pair(f(S.mul(*bi, p.a)), T.one());
    }
    if (!q) throw Error(ErrorKind::Internal, "image pair is not admissible");
    out.image.push_back(*q);
  }
  return out;
}

bool is_bijection(const PointMap& m, int target_size) {
  if (static_cast<int>(m.image.size()) != target_size) return false;
  std::vector<bool> seen(target_size, false);
  for (int i : m.image) {
    if (i < 0 || i >= target_size || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

bool preserves_distance(const PointMap& m, const DistantGraph& g, const DistantGraph& h) {
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j) != h.adjacent(m.image[i], m.image[j])) return false;
    }
  }
  return true;
}

bool maps_chains_onto_chains(const PointMap& m, const std::vector<std::vector<int>>& src,
                             const std::vector<std::vector<int>>& dst) {
  std::set<std::vector<int>> targets(dst.begin(), dst.end());
  std::set<std::vector<int>> hit;
  for (const auto& c : src) {
    std::vector<int> img;
    for (int i : c) img.push_back(m.image.at(i));
    std::sort(img.begin(), img.end());
    if (!targets.count(img)) return false;
    hit.insert(img);
  }
  return hit.size() == targets.size();
}

JordanSystemCheck is_strong_jordan_system(const FiniteRing& R, const std::vector<Elem>& s_in) {
  const auto& alg = R.require_algebra();
  std::vector<bool> in(R.size(), false);
  for (Elem e : s_in) {
    if (e >= R.size()) throw Error(ErrorKind::Domain, "element out of range for " + R.name());
    in[e] = true;
  }
  std::vector<Elem> s;
  for (int i = 0; i < R.size(); ++i) {
    if (in[i]) s.push_back(static_cast<Elem>(i));
  }
  JordanSystemCheck out;
  if (s.empty() || !in[R.one()]) return out;
  for (Elem a : s) {
    for (Elem b : s) {
      if (!in[R.add(a, b)]) return out;
    }
    for (int k = 0; k < alg.field.size(); ++k) {
      if (!in[alg.scale(R, k, a)]) return out;
    }
    if (const auto ai = R.inverse(a); ai && !in[*ai]) return out;
  }
  out.is_system = true;
  const int q = alg.field.size();
  out.is_strong = true;
  for (int x = 0; x < R.size() && out.is_strong; ++x) {
    int count = 0;
    for (Elem k : alg.embed) count += R.is_unit(R.add(x, k)) ? 1 : 0;
    out.is_strong = 2 * count > q;
  }
  return out;
}

std::vector<ProjPoint> jordan_subspace_points(const ProjectiveLine& line, const std::vector<Elem>& s) {
  const FiniteRing& R = line.ring();
  const auto check = is_strong_jordan_system(R, s);
  if (!check.is_system) throw Error(ErrorKind::NotASystem, "subset is not a Jordan system of " + R.name());
  std::vector<bool> in(R.size(), false);
  for (Elem e : s) in[e] = true;
  if (check.is_strong) {
    for (Elem a : s) {
      for (Elem b : s) {
        if (!in[R.mul(R.mul(a, b), a)]) throw Error(ErrorKind::Internal, "strong Jordan system is not closed under aba");
      }
    }
  }
  std::vector<bool> hit(line.size(), false);
  for (Elem x : s) {
    for (Elem y : s) {
      const auto i = line.index_of_pair(R.sub(R.mul(x, y), R.one()), x);
      if (!i) throw Error(ErrorKind::Internal, "(xy-1, x) is not admissible");
      hit[*i] = true;
    }
  }
  std::vector<ProjPoint> out;
  for (int i = 0; i < line.size(); ++i) {
    if (hit[i]) out.push_back(line.point(i));
  }
  return out;
}

std::vector<Elem> symmetric_matrices(const FiniteRing& R) {
  const auto t = transpose_map(R);
  std::vector<Elem> out;
  for (int x = 0; x < R.size(); ++x) {
    if (t(x) == x) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

std::vector<Elem> embedded_field(const FiniteRing& R) {
  auto out = R.require_algebra().embed;
  std::sort(out.begin(), out.end());
  return out;
}

bool closed_under_chains(const ProjectiveLine& line, const std::vector<ProjPoint>& pts) {
  const FiniteRing& R = line.ring();
  std::vector<ProjPoint> sorted(pts);
  std::sort(sorted.begin(), sorted.end());
  const auto inside = [&](const ProjPoint& p) { return std::binary_search(sorted.begin(), sorted.end(), p); };
  const std::size_t n = sorted.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!distant(R, sorted[i], sorted[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!distant(R, sorted[i], sorted[k]) || !distant(R, sorted[j], sorted[k])) continue;
        const Chain c = chain_through(R, sorted[i], sorted[j], sorted[k]);
        if (!std::all_of(c.points.begin(), c.points.end(), inside)) return false;
      }
    }
  }
  return true;
}

}  // namespace chaingeo
