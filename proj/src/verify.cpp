#include "chaingeo/verify.hpp"

#include <cmath>
#include <complex>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "chaingeo/chain_geometry.hpp"
#include "chaingeo/distant_graph.hpp"
#include "chaingeo/grassmann.hpp"
#include "chaingeo/jordan.hpp"
#include "chaingeo/lie_cycles.hpp"
#include "chaingeo/ring_spec.hpp"

namespace chaingeo {

namespace {

using lie::Circle;
using lie::Infinity;
using lie::Point;
using lie::Spear;
using Cycle = lie::LieCycle<double>;
using V2 = lie::Vector2<double>;

constexpr std::uint64_t kSeed = 20240917;

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  os << std::setprecision(12);
  (os << ... << args);
  return os.str();
}

struct Rng {
  std::mt19937_64 gen{kSeed};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }
  V2 point() { return {uniform(-10, 10), uniform(-10, 10)}; }
  V2 unit() {
    const double t = uniform(0, 2 * std::numbers::pi);
    return {std::cos(t), std::sin(t)};
  }
  double radius() { return (below(2) ? 1.0 : -1.0) * uniform(0.1, 10); }
};

Cycle random_cycle(Rng& rng) {
  const int k = rng.below(10);
  if (k < 6) return Circle<double>(rng.point(), rng.radius());
  if (k < 8) return Spear<double>::through(rng.point(), rng.unit());
  if (k < 9) return Point<double>(rng.point());
  return Infinity{};
}

// ---- 1 ----

double round_trip_error(const Cycle& a, const Cycle& b) {
  if (a.index() != b.index()) return INFINITY;
  if (auto* c = std::get_if<Circle<double>>(&a)) {
    const auto& d = std::get<Circle<double>>(b);
    return std::max((c->center() - d.center()).norm(), std::abs(c->radius() - d.radius()));
  }
  if (auto* p = std::get_if<Point<double>>(&a)) return (p->position - std::get<Point<double>>(b).position).norm();
  if (auto* s = std::get_if<Spear<double>>(&a)) {
    const auto& t = std::get<Spear<double>>(b);
    return std::max({std::abs(s->a0() - t.a0()), std::abs(s->a1() - t.a1()), std::abs(s->a2() - t.a2())});
  }
  return 0;
}

CheckResult check_quadric() {
  CheckResult r{1, "Lie quadric membership and round trip of 1000 random cycles", true, ""};
  Rng rng;
  double worst_residual = 0, worst_trip = 0;
  for (int i = 0; i < 1000; ++i) {
    const Cycle c = random_cycle(rng);
    const auto q = lie::to_pentacyclic(c);
    worst_residual = std::max(worst_residual, std::abs(q.residual()));
    worst_trip = std::max(worst_trip, round_trip_error(c, lie::from_pentacyclic(q)));
  }
  r.passed = worst_residual <= 1e-12 && worst_trip <= 1e-9;
  r.detail = cat("max residual ", worst_residual, ", max round-trip error ", worst_trip);
  return r;
}

// ---- 2 ----

// Circles and points as (m, r) with r = 0 for points.
struct Round {
  V2 m;
  double r;
};

std::optional<Round> as_round(const Cycle& c) {
  if (auto* ci = std::get_if<Circle<double>>(&c)) return Round{ci->center(), ci->radius()};
  if (auto* p = std::get_if<Point<double>>(&c)) return Round{p->position, 0};
  return std::nullopt;
}

bool geometric_contact(const Cycle& x, const Cycle& y) {
  constexpr double tol = 1e-9;
  const auto rx = as_round(x), ry = as_round(y);
  const auto* sx = std::get_if<Spear<double>>(&x);
  const auto* sy = std::get_if<Spear<double>>(&y);
  if (rx && ry) {
    const double d = (rx->m - ry->m).squaredNorm() - (rx->r - ry->r) * (rx->r - ry->r);
    const double scale = 1 + rx->m.squaredNorm() + ry->m.squaredNorm() + rx->r * rx->r + ry->r * ry->r;
    return std::abs(d) <= tol * scale;
  }
  if ((rx && sy) || (ry && sx)) {
    const Round& c = rx ? *rx : *ry;
    const auto& s = sx ? *sx : *sy;
    const double d = s.a0() + s.a1() * c.m.x() + s.a2() * c.m.y() + c.r;
    return std::abs(d) <= tol * (1 + std::abs(s.a0()) + c.m.norm() + std::abs(c.r));
  }
  if (sx && sy) return std::abs(sx->a1() - sy->a1()) + std::abs(sx->a2() - sy->a2()) <= tol;
  // At least one is infinity.
  if (lie::is_infinity(x) && lie::is_infinity(y)) return true;
  return sx || sy;
}

Cycle tangent_partner(Rng& rng, const Cycle& x) {
  const int k = rng.below(3);
  if (auto* c = std::get_if<Circle<double>>(&x)) {
    const V2 u = rng.unit();
    if (k == 0) {
      double r2 = rng.radius();
      if (std::abs(r2 - c->radius()) < 1e-3) r2 += 1;
      return Circle<double>(c->center() + std::abs(c->radius() - r2) * u, r2);
    }
    if (k == 1) return Spear<double>::from_hesse(-u.dot(c->center()) - c->radius(), u.x(), u.y());
    return Point<double>(c->center() + std::abs(c->radius()) * u);
  }
  if (auto* s = std::get_if<Spear<double>>(&x)) {
    if (k == 0) {
      V2 m = rng.point();
      double r = -(s->a0() + s->a1() * m.x() + s->a2() * m.y());
      if (std::abs(r) < 1e-3) r = 1, m += (-(s->a0() + s->a1() * m.x() + s->a2() * m.y()) - 1) * V2(s->a1(), s->a2());
      return Circle<double>(m, r);
    }
    if (k == 1) return Spear<double>::from_hesse(rng.uniform(-10, 10), s->a1(), s->a2());
    return Point<double>(s->foot() + rng.uniform(-10, 10) * s->direction());
  }
  if (auto* p = std::get_if<Point<double>>(&x)) {
    if (k == 0) {
      const double r = rng.radius();
      return Circle<double>(p->position + std::abs(r) * rng.unit(), r);
    }
    if (k == 1) return Spear<double>::through(p->position, rng.unit());
    return *p;
  }
  return Spear<double>::through(rng.point(), rng.unit());
}

CheckResult check_contact() {
  CheckResult r{2, "bilinear contact agrees with geometric tangency on 1000 random pairs", true, ""};
  Rng rng;
  rng.gen.seed(kSeed + 2);
  int disagreements = 0, tangent = 0;
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    const Cycle x = random_cycle(rng);
    const Cycle y = i % 2 ? tangent_partner(rng, x) : random_cycle(rng);
    const bool form = lie::in_contact(x, y);
    const bool geo = geometric_contact(x, y);
    tangent += geo;
    if (form != geo) {
      if (!disagreements) first = cat("pair ", i, ": form says ", form, ", geometry says ", geo);
      ++disagreements;
    }
  }
  r.passed = disagreements == 0;
  r.detail = disagreements ? first : cat(tangent, " tangent and ", 1000 - tangent, " non-tangent pairs, 0 disagreements");
  return r;
}

// ---- 3 ----

struct OrientedDisk {
  V2 m;
  double r;
};

// Both circles touching three mutually tangent positive circles, from the
// complex Descartes theorem. Radii carry the orientation that touches
// counterclockwise inputs.
std::vector<OrientedDisk> descartes(const std::array<OrientedDisk, 3>& in) {
  using C = std::complex<double>;
  const double k1 = 1 / in[0].r, k2 = 1 / in[1].r, k3 = 1 / in[2].r;
  const C z1(in[0].m.x(), in[0].m.y()), z2(in[1].m.x(), in[1].m.y()), z3(in[2].m.x(), in[2].m.y());
  const double ks = k1 + k2 + k3, kr = 2 * std::sqrt(k1 * k2 + k2 * k3 + k3 * k1);
  const C zs = k1 * z1 + k2 * z2 + k3 * z3;
  const C zr = 2.0 * std::sqrt(k1 * k2 * z1 * z2 + k2 * k3 * z2 * z3 + k3 * k1 * z3 * z1);
  std::vector<OrientedDisk> out;
  for (double sk : {1.0, -1.0}) {
    const double k4 = ks + sk * kr;
    const double rho = 1 / std::abs(k4);
    OrientedDisk best{{0, 0}, 0};
    double best_err = INFINITY;
    for (double sz : {1.0, -1.0}) {
      const C z4 = (zs + sz * zr) / k4;
      const V2 m(z4.real(), z4.imag());
      double err = 0;
      for (const auto& c : in) {
        const double want = k4 > 0 ? rho + c.r : rho - c.r;
        err = std::max(err, std::abs((m - c.m).norm() - want));
      }
      if (err < best_err) best_err = err, best = {m, k4 > 0 ? -rho : rho};
    }
    out.push_back(best);
  }
  return out;
}

bool matches(const std::vector<Cycle>& got, const std::vector<OrientedDisk>& want, double tol, std::string& why) {
  if (got.size() != want.size()) {
    why = cat(got.size(), " solutions, expected ", want.size());
    return false;
  }
  for (const auto& w : want) {
    const bool found = std::any_of(got.begin(), got.end(), [&](const Cycle& c) {
      const auto* ci = std::get_if<Circle<double>>(&c);
      return ci && (ci->center() - w.m).norm() <= tol && std::abs(ci->radius() - w.r) <= tol;
    });
    if (!found) {
      why = cat("no solution near center (", w.m.x(), ", ", w.m.y(), ") radius ", w.r);
      return false;
    }
  }
  return true;
}

CheckResult check_apollonius() {
  CheckResult r{3, "Apollonius: Soddy circles match Descartes; 8 oriented solutions for a general triple", true, ""};
  const double h = std::sqrt(3.0);
  const std::array<OrientedDisk, 3> soddy{{{{0, 0}, 1}, {{2, 0}, 1}, {{1, h}, 1}}};
  const auto want = descartes(soddy);
  std::string why;
  for (double orient : {1.0, -1.0}) {
    std::vector<Cycle> in;
    for (const auto& c : soddy) in.push_back(Circle<double>(c.m, orient * c.r));
    const auto res = lie::apollonius(in[0], in[1], in[2]);
    std::vector<OrientedDisk> expect;
    for (const auto& w : want) expect.push_back({w.m, orient * w.r});
    if (!matches(res.solutions, expect, 1e-9, why)) {
      r.passed = false;
      r.detail = cat(orient > 0 ? "counterclockwise" : "clockwise", " Soddy inputs: ", why);
      return r;
    }
  }

  const lie::PlainCircle<double> u1{{0, 0}, 1}, u2{{6, 0}, 1}, u3{{3, 5}, 1};
  const auto all = lie::apollonius_all_orientations(u1, u2, u3);
  int touching = 0;
  for (const auto& s : all.solutions) {
    bool ok = false;
    for (double s2 : {1.0, -1.0}) {
      for (double s3 : {1.0, -1.0}) {
        ok = ok || (lie::in_contact<double>(s, Circle<double>(u1.center, u1.radius)) &&
                    lie::in_contact<double>(s, Circle<double>(u2.center, s2 * u2.radius)) &&
                    lie::in_contact<double>(s, Circle<double>(u3.center, s3 * u3.radius)));
      }
    }
    touching += ok;
  }
  r.passed = all.solutions.size() == 8 && touching == 8;
  r.detail = cat("Soddy radii ", want[0].r, " and ", want[1].r, " matched for both orientations; ",
                 all.solutions.size(), " oriented solutions, ", touching, " touching all inputs");
  return r;
}

// ---- 4-7 ----

CheckResult check_octahedron() {
  CheckResult r{4, "distant graphs of Z4 and GF(2)[e] are isomorphic octahedra, the rings are not isomorphic", true, ""};
  const auto z4 = make_zn(4);
  const auto d2 = make_dual(make_gf(2));
  const auto g1 = distant_graph(z4), g2 = distant_graph(d2);
  const auto s1 = graph_stats(g1), s2 = graph_stats(g2);
  const auto regular4 = [](const GraphStats& s) {
    return std::all_of(s.degrees.begin(), s.degrees.end(), [](int d) { return d == 4; });
  };
  const bool iso = graph_isomorphic(g1, g2);
  const bool rings = ring_isomorphic(z4, d2);
  r.passed = s1.vertices == 6 && s2.vertices == 6 && s1.edges == 12 && s2.edges == 12 && regular4(s1) &&
             regular4(s2) && iso && !rings;
  r.detail = cat("vertices ", s1.vertices, "/", s2.vertices, ", edges ", s1.edges, "/", s2.edges,
                 ", graphs isomorphic ", iso, ", rings isomorphic ", rings);
  return r;
}

CheckResult check_nine_points() {
  CheckResult r{5, "P(GF(2)xGF(2)) has 9 points, 18 edges, 4-regular, distant iff distant in both components", true, ""};
  const auto k = make_gf(2);
  const auto R = make_product(k, k);
  const ProjectiveLine line(R);
  const auto g = distant_graph(line);
  const auto s = graph_stats(g);
  int mismatches = 0;
  for (int i = 0; i < line.size(); ++i) {
    for (int j = 0; j < line.size(); ++j) {
      if (i == j) continue;
      const auto [a1, a2] = product_components(R, line.point(i).a);
      const auto [b1, b2] = product_components(R, line.point(i).b);
      const auto [c1, c2] = product_components(R, line.point(j).a);
      const auto [d1, d2] = product_components(R, line.point(j).b);
      const bool left = k.sub(k.mul(a1, d1), k.mul(b1, c1)) != k.zero();
      const bool right = k.sub(k.mul(a2, d2), k.mul(b2, c2)) != k.zero();
      mismatches += g.adjacent(i, j) != (left && right);
    }
  }
  const bool regular = std::all_of(s.degrees.begin(), s.degrees.end(), [](int d) { return d == 4; });
  r.passed = s.vertices == 9 && s.edges == 18 && regular && mismatches == 0;
  r.detail = cat("vertices ", s.vertices, ", edges ", s.edges, ", 4-regular ", regular, ", rule mismatches ", mismatches);
  return r;
}

CheckResult check_field_criterion() {
  CheckResult r{6, "distant graph complete iff field; every component diameter <= 2", true, ""};
  int rings = 0;
  for (const auto& spec : builtin_ring_specs()) {
    const auto R = parse_ring(spec);
    const auto s = graph_stats(distant_graph(R));
    const int diam = *std::max_element(s.diameters.begin(), s.diameters.end());
    if (s.complete != R.is_field() || diam > 2) {
      r.passed = false;
      r.detail = cat(spec, ": complete ", s.complete, ", field ", R.is_field(), ", diameter ", diam);
      return r;
    }
    ++rings;
  }
  r.detail = cat(rings, " rings");
  return r;
}

CheckResult check_radical() {
  CheckResult r{7, "radical_points(R) = { R(1,r) : r in J(R) }", true, ""};
  for (const char* spec : {"Z4", "GF(2)[e]", "GF(2)xGF(2)", "M2(GF(2))", "T2(GF(2))"}) {
    const auto R = parse_ring(spec);
    const ProjectiveLine line(R);
    const auto got = radical_points(line, distant_graph(line));
    std::vector<ProjPoint> want;
    for (Elem j : jacobson_radical(R)) want.push_back(line.point_of(R.one(), j));
    std::sort(want.begin(), want.end());
    if (got != want) {
      r.passed = false;
      r.detail = cat(spec, ": ", got.size(), " radical points, |J| = ", want.size());
      return r;
    }
    r.detail += cat(r.detail.empty() ? "" : ", ", spec, " |J|=", want.size());
  }
  return r;
}

// ---- 8-9 ----

std::uint64_t triple_key(int i, int j, int k) {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  return (std::uint64_t(t[0]) << 40) | (std::uint64_t(t[1]) << 20) | std::uint64_t(t[2]);
}

CheckResult check_chains() {
  CheckResult r{8, "chain counts, unique chain through mutually distant triples, co-chain iff distant", true, ""};
  const auto k2 = make_gf(2);
  {
    const ProjectiveLine line(make_dual(k2));
    const auto g = distant_graph(line);
    const auto chains = all_chains(line, g);
    int triangles = 0;
    for (int i = 0; i < line.size(); ++i)
      for (int j = i + 1; j < line.size(); ++j)
        for (int k = j + 1; k < line.size(); ++k) triangles += g.adjacent(i, j) && g.adjacent(i, k) && g.adjacent(j, k);
    const bool sizes = std::all_of(chains.begin(), chains.end(), [](const Chain& c) { return c.points.size() == 3; });
    if (chains.size() != 8 || triangles != 8 || !sizes) {
      r.passed = false;
      r.detail = cat("GF(2)[e]: ", chains.size(), " chains, ", triangles, " triangles");
      return r;
    }
  }
  {
    const ProjectiveLine line(make_product(k2, k2));
    const auto chains = all_chains(line, distant_graph(line));
    if (chains.size() != 6) {
      r.passed = false;
      r.detail = cat("GF(2)xGF(2): ", chains.size(), " chains");
      return r;
    }
  }
  int geometries = 0;
  long triples_total = 0;
  for (const auto& spec : builtin_ring_specs()) {
    const auto R = parse_ring(spec);
    if (!R.algebra()) continue;
    const ProjectiveLine line(R);
    if (line.size() > kChainBudget) continue;
    const auto g = distant_graph(line);
    const auto chains = all_chains(line, g);
    const int n = line.size();
    std::unordered_map<std::uint64_t, int> cover;
    std::vector<std::uint8_t> cochain(static_cast<std::size_t>(n) * n, 0);
    for (const auto& c : chains) {
      const auto idx = chain_indices(line, c);
      if (static_cast<int>(idx.size()) != R.require_algebra().field.size() + 1) {
        r.passed = false;
        r.detail = cat(spec, ": chain of size ", idx.size());
        return r;
      }
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          cochain[static_cast<std::size_t>(idx[a]) * n + idx[b]] = 1;
          for (std::size_t c3 = b + 1; c3 < idx.size(); ++c3) ++cover[triple_key(idx[a], idx[b], idx[c3])];
        }
      }
    }
    long distant_triples = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (static_cast<bool>(cochain[static_cast<std::size_t>(i) * n + j]) != g.adjacent(i, j)) {
          r.passed = false;
          r.detail = cat(spec, ": points ", i, " and ", j, " break co-chain iff distant");
          return r;
        }
        if (!g.adjacent(i, j)) continue;
        for (int k = j + 1; k < n; ++k) {
          if (!g.adjacent(i, k) || !g.adjacent(j, k)) continue;
          ++distant_triples;
          const auto it = cover.find(triple_key(i, j, k));
          if (it == cover.end() || it->second != 1) {
            r.passed = false;
            r.detail = cat(spec, ": triple (", i, ",", j, ",", k, ") lies on ", it == cover.end() ? 0 : it->second, " chains");
            return r;
          }
        }
      }
    }
    if (static_cast<long>(cover.size()) != distant_triples) {
      r.passed = false;
      r.detail = cat(spec, ": chains cover a triple that is not mutually distant");
      return r;
    }
    ++geometries;
    triples_total += distant_triples;
  }
  r.detail = cat("8 and 6 chains; ", geometries, " chain geometries, ", triples_total, " triples on exactly one chain");
  return r;
}

CheckResult check_cross_ratio() {
  CheckResult r{9, "in GF(3)[e], mutually distant points are co-chain iff the cross ratio meets K", true, ""};
  const auto R = make_dual(make_gf(3));
  const ProjectiveLine line(R);
  const auto g = distant_graph(line);
  const int n = line.size();
  long quads = 0, cochain = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a || !g.adjacent(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || !g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        const Chain chain = chain_through(R, line.point(a), line.point(b), line.point(c));
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c || !g.adjacent(a, d) || !g.adjacent(b, d) || !g.adjacent(c, d)) continue;
          ++quads;
          const bool on = chain.contains(line.point(d));
          const auto cr = cross_ratio(R, line.point(a), line.point(b), line.point(c), line.point(d));
          const bool in_k = cr.affine && meets_field(R, cr);
          cochain += on;
          if (on != in_k) {
            r.passed = false;
            r.detail = cat("points ", a, ",", b, ",", c, ",", d, ": co-chain ", on, ", meets K ", in_k);
            return r;
          }
        }
      }
    }
  r.detail = cat(quads, " ordered quadruples, ", cochain, " co-chain, 0 exceptions");
  return r;
}

// ---- 10-11 ----

struct MapCase {
  std::string name;
  ElementMap map;
};

std::vector<MapCase> jordan_cases() {
  std::vector<MapCase> out;
  for (const char* spec : {"GF(3)[e]", "GF(2)xGF(2)", "M2(GF(2))", "T2(GF(2))", "Z4"}) {
    out.push_back({cat("identity on ", spec), identity_map(parse_ring(spec))});
  }
  const auto m2 = make_matrix_ring(make_gf(2), 2);
  out.push_back({"transpose on M2(GF(2))", transpose_map(m2)});
  out.push_back({"transpose on M2(GF(3))", transpose_map(make_matrix_ring(make_gf(3), 2))});
  // Conjugation by [1 1;0 1], an inner automorphism.
  {
    const Elem u = matrix_from_entries(m2, {1, 1, 0, 1});
    const Elem ui = *m2.inverse(u);
    std::vector<Elem> t(m2.size());
    for (int x = 0; x < m2.size(); ++x) t[x] = m2.mul(m2.mul(u, x), ui);
    out.push_back({"conjugation on M2(GF(2))", element_map(m2, m2, std::move(t))});
  }
  {
    const auto t2 = make_ternions(make_gf(2));
    const auto p = make_product(t2, m2);
    out.push_back({"(A,B) -> (A,B^T) on T2(GF(2))xM2(GF(2))", product_map(p, identity_map(t2), transpose_map(m2))});
  }
  return out;
}

CheckResult check_bartolone() {
  CheckResult r{10, "R(xy-1,x) covers P(R); induced Jordan maps are well defined", true, ""};
  int rings = 0;
  for (const auto& spec : builtin_ring_specs()) {
    const ProjectiveLine line(parse_ring(spec));
    if (bartolone_points(line) != line.points()) {
      r.passed = false;
      r.detail = cat(spec, ": parametrization misses points");
      return r;
    }
    ++rings;
  }
  int maps = 0;
  for (const auto& c : jordan_cases()) {
    if (!is_jordan_isomorphism(c.map)) {
      r.passed = false;
      r.detail = c.name + " is not a Jordan isomorphism";
      return r;
    }
    const ProjectiveLine line(c.map.source);
    const auto g = distant_graph(line);
    PointMap pm;
    try {
      pm = jordan_induced_map(c.map, line, line);
    } catch (const Error& e) {
      r.passed = false;
      r.detail = c.name + ": " + e.what();
      return r;
    }
    bool ok = is_bijection(pm, line.size()) && preserves_distance(pm, g, g);
    if (ok && is_algebra_isomorphism(c.map)) ok = algebra_iso_map(c.map, line, line).image == pm.image;
    if (!ok) {
      r.passed = false;
      r.detail = c.name + ": induced map is not a distance-preserving bijection";
      return r;
    }
    ++maps;
  }
  r.detail = cat(rings, " rings covered, ", maps, " Jordan maps well defined");
  return r;
}

CheckResult check_transpose() {
  CheckResult r{11, "transpose on M2(GF(2)) induces an automorphism of the 35-point chain geometry", true, ""};
  const auto R = make_matrix_ring(make_gf(2), 2);
  const auto t = transpose_map(R);
  const ProjectiveLine line(R);
  const auto g = distant_graph(line);
  std::vector<std::vector<int>> chains;
  for (const auto& c : all_chains(line, g)) chains.push_back(chain_indices(line, c));
  const bool jordan = is_jordan_isomorphism(t);
  const auto pm = jordan_induced_map(t, line, line);
  const bool bij = is_bijection(pm, line.size());
  const bool dist = preserves_distance(pm, g, g);
  const bool onto = maps_chains_onto_chains(pm, chains, chains);
  r.passed = jordan && line.size() == 35 && bij && dist && onto;
  r.detail = cat("Jordan ", jordan, ", points ", line.size(), ", bijective ", bij, ", distance preserved ", dist,
                 ", ", chains.size(), " chains onto chains ", onto);
  return r;
}

// ---- 12-13 ----

CheckResult check_grassmann() {
  CheckResult r{12, "P(M2(GF(2))) maps onto the 35 planes of GF(2)^4; 280 distant = complementary pairs", true, ""};
  const auto rep = grassmann_check(make_gf(2), 2);
  r.passed = rep.points == 35 && rep.subspaces == 35 && rep.injective && rep.surjective && rep.distant_pairs == 280 &&
             rep.complementary_pairs == 280 && rep.distant_iff_complementary;
  r.detail = cat(rep.points, " points, ", rep.subspaces, " echelon forms, bijective ", rep.injective && rep.surjective,
                 ", distant ", rep.distant_pairs, ", complementary ", rep.complementary_pairs);
  return r;
}

CheckResult check_jordan_systems() {
  CheckResult r{13, "strong Jordan system verdicts; strong systems are closed under aba", true, ""};
  const auto d3 = make_dual(make_gf(3));
  const auto d2 = make_dual(make_gf(2));
  const auto m3 = make_matrix_ring(make_gf(3), 2);
  const auto all = [](const FiniteRing& R) {
    std::vector<Elem> s(R.size());
    for (int i = 0; i < R.size(); ++i) s[i] = static_cast<Elem>(i);
    return s;
  };
  const auto a = is_strong_jordan_system(d3, all(d3));
  const auto b = is_strong_jordan_system(d2, all(d2));
  const auto c = is_strong_jordan_system(m3, symmetric_matrices(m3));
  if (!(a.is_system && a.is_strong) || b.is_strong || c.is_strong || !c.is_system) {
    r.passed = false;
    r.detail = cat("GF(3)[e] (", a.is_system, ",", a.is_strong, "), GF(2)[e] (", b.is_system, ",", b.is_strong,
                   "), symmetric M2(GF(3)) (", c.is_system, ",", c.is_strong, ")");
    return r;
  }
  int strong = 0;
  for (const auto& spec : builtin_ring_specs()) {
    const auto R = parse_ring(spec);
    if (!R.algebra()) continue;
    std::vector<std::vector<Elem>> candidates{all(R), embedded_field(R)};
    if (R.matrix_shape() && !R.matrix_shape()->upper_triangular) candidates.push_back(symmetric_matrices(R));
    for (const auto& s : candidates) {
      if (!is_strong_jordan_system(R, s).is_strong) continue;
      std::vector<bool> in(R.size(), false);
      for (Elem e : s) in[e] = true;
      for (Elem x : s) {
        for (Elem y : s) {
          if (!in[R.mul(R.mul(x, y), x)]) {
            r.passed = false;
            r.detail = cat(spec, ": aba leaves a strong system");
            return r;
          }
        }
      }
      ++strong;
    }
  }
  r.detail = cat("expected verdicts; ", strong, " strong systems closed under aba");
  return r;
}

}  // namespace

CheckResult run_check(int id) {
  using Fn = CheckResult (*)();
  static const std::map<int, Fn> checks = {
      {1, check_quadric},     {2, check_contact},   {3, check_apollonius},        {4, check_octahedron},
      {5, check_nine_points}, {6, check_field_criterion}, {7, check_radical},     {8, check_chains},
      {9, check_cross_ratio}, {10, check_bartolone}, {11, check_transpose},       {12, check_grassmann},
      {13, check_jordan_systems},
  };
  const auto it = checks.find(id);
  if (it == checks.end()) throw Error(ErrorKind::Domain, "no check numbered " + std::to_string(id));
  try {
    return it->second();
  } catch (const std::exception& e) {
    return {id, "check " + std::to_string(id), false, std::string("error: ") + e.what()};
  }
}

std::vector<CheckResult> run_all() {
  std::vector<CheckResult> out;
  for (int i = 1; i <= kCheckCount; ++i) out.push_back(run_check(i));
  return out;
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j = {{"id", r.id}, {"claim", r.claim}, {"status", r.passed ? "PASS" : "FAIL"}};
  if (r.passed) j["detail"] = r.detail;
  else j["counterexample"] = r.detail;
  return j;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << std::setw(2) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << r.claim << "\n";
    os << "          " << r.detail << "\n";
  }
  return os.str();
}

}  // namespace chaingeo
