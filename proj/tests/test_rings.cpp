#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chaingeo/field_linalg.hpp"
#include "chaingeo/finite_ring.hpp"
#include "chaingeo/ring_json.hpp"
#include "chaingeo/ring_spec.hpp"

using namespace chaingeo;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

std::set<std::string> unit_labels(const FiniteRing& R) {
  std::set<std::string> out;
  for (Elem u : R.units()) out.insert(R.label(u));
  return out;
}

std::set<std::string> radical_labels(const FiniteRing& R) {
  std::set<std::string> out;
  for (Elem u : jacobson_radical(R)) out.insert(R.label(u));
  return out;
}

}  // namespace

TEST_CASE("integers modulo n") {
  const auto z4 = make_zn(4);
  CHECK(z4.size() == 4);
  CHECK(unit_labels(z4) == std::set<std::string>{"1", "3"});
  CHECK(z4.add(z4.one(), z4.one()) != z4.zero());
  const auto z6 = make_zn(6);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      CHECK(z6.add(a, b) == (a + b) % 6);
      CHECK(z6.mul(a, b) == (a * b) % 6);
    }
  }
  CHECK(z4.algebra() == nullptr);
  CHECK(make_zn(5).algebra() != nullptr);
  CHECK(throws_kind(ErrorKind::Construction, [] { make_zn(1); }));
}

TEST_CASE("dual and double numbers") {
  const auto d = make_dual(make_gf(2));
  CHECK(d.size() == 4);
  CHECK(d.add(d.one(), d.one()) == d.zero());
  CHECK(unit_labels(d) == std::set<std::string>{"1", "1+e"});
  const Elem e = *d.parse_label("e");
  CHECK(d.mul(e, e) == d.zero());
  CHECK(d.is_local());
  CHECK(d.require_algebra().dimension == 2);

  const auto dbl = make_double(make_gf(2));
  CHECK(dbl.size() == 4);
  CHECK(dbl.units().size() == 1);
  CHECK_FALSE(dbl.is_local());
}

TEST_CASE("GF(4)") {
  const auto f = make_gf(4);
  CHECK(f.is_field());
  CHECK(f.units().size() == 3);
  const Elem w = *f.parse_label("w");
  CHECK(f.mul(w, w) == *f.parse_label("w+1"));
  CHECK(f.add(f.one(), f.one()) == f.zero());
  CHECK(throws_kind(ErrorKind::Construction, [] { make_gf(8); }));
  CHECK(throws_kind(ErrorKind::Construction, [] { make_gf(6); }));
}

TEST_CASE("matrix rings agree with explicit matrix arithmetic") {
  const auto K = make_gf(3);
  const auto M = make_matrix_ring(K, 2);
  CHECK(M.size() == 81);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const int x = rng() % 81, y = rng() % 81;
    const auto a = matrix_entries(M, x), b = matrix_entries(M, y);
    std::vector<Elem> prod(4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) prod[i * 2 + j] = static_cast<Elem>((a[i * 2] * b[j] + a[i * 2 + 1] * b[2 + j]) % 3);
    }
    CHECK(matrix_entries(M, M.mul(x, y)) == prod);
    CHECK(matrix_from_entries(M, a) == x);
  }
  // |GL_n(p)| = prod (p^n - p^i)
  CHECK(make_matrix_ring(make_gf(2), 2).units().size() == 6);
  CHECK(M.units().size() == 48);
  CHECK(throws_kind(ErrorKind::Size, [] { make_matrix_ring(make_gf(2), 3); }));
  CHECK(make_ternions(make_gf(2), 3).units().size() == 8);
  CHECK(make_ternions(make_gf(2)).units().size() == 2);
  CHECK(make_ternions(make_gf(3)).units().size() == 12);
  CHECK_FALSE(M.is_commutative());
  CHECK_FALSE(M.is_local());
}

TEST_CASE("product units are pairs of units") {
  const auto L = make_zn(4), R = make_gf(3);
  const auto P = make_product(L, R);
  for (int x = 0; x < P.size(); ++x) {
    const auto [a, b] = product_components(P, x);
    CHECK(P.is_unit(x) == (L.is_unit(a) && R.is_unit(b)));
    CHECK(product_element(P, a, b) == x);
  }
}

TEST_CASE("identities hold in every built-in ring") {
  for (const auto& spec : builtin_ring_specs()) {
    const auto R = parse_ring(spec);
    for (int a = 0; a < R.size(); ++a) {
      CHECK(R.mul(a, R.zero()) == R.zero());
      CHECK(R.mul(R.zero(), a) == R.zero());
      CHECK(R.mul(a, R.one()) == a);
      CHECK(R.mul(R.one(), a) == a);
      if (auto inv = R.inverse(a)) {
        CHECK(R.mul(a, *inv) == R.one());
        CHECK(R.mul(*inv, a) == R.one());
      }
    }
  }
}

TEST_CASE("Jacobson radical") {
  CHECK(radical_labels(make_zn(4)) == std::set<std::string>{"0", "2"});
  CHECK(radical_labels(make_product(make_gf(2), make_gf(2))).size() == 1);
  CHECK(radical_labels(make_dual(make_gf(2))) == std::set<std::string>{"0", "e"});
  CHECK(jacobson_radical(make_matrix_ring(make_gf(2), 2)).size() == 1);
  CHECK(jacobson_radical(make_ternions(make_gf(2))).size() == 2);

  for (const auto& spec : builtin_ring_specs()) {
    const auto R = parse_ring(spec);
    const auto J = jacobson_radical(R);
    const std::set<Elem> js(J.begin(), J.end());
    for (Elem a : J) {
      for (Elem b : J) CHECK(js.count(R.add(a, b)));
      for (int r = 0; r < R.size(); ++r) {
        CHECK(js.count(R.mul(r, a)));
        CHECK(js.count(R.mul(a, r)));
      }
    }
  }
}

TEST_CASE("ring isomorphism") {
  CHECK_FALSE(ring_isomorphic(make_zn(4), make_dual(make_gf(2))));
  CHECK(ring_isomorphic(make_zn(4), make_zn(4)));
  CHECK_FALSE(ring_isomorphic(make_product(make_gf(2), make_gf(2)), make_gf(4)));
  CHECK(ring_isomorphic(make_product(make_gf(2), make_gf(2)), make_double(make_gf(2))));
  CHECK(ring_isomorphic(make_zn(6), make_product(make_gf(2), make_gf(3))));
  CHECK(ring_isomorphic(make_matrix_ring(make_gf(2), 2), make_matrix_ring(make_gf(2), 2)));
  CHECK(throws_kind(ErrorKind::Size, [] { ring_isomorphic(make_zn(27), make_ternions(make_gf(3))); }));
}

TEST_CASE("scalar embedding and linearity") {
  const auto d = make_dual(make_gf(2));
  CHECK(scalar_embed(d, 1) == d.one());
  std::vector<Elem> id(d.size());
  for (int i = 0; i < d.size(); ++i) id[i] = static_cast<Elem>(i);
  CHECK(is_k_linear(d, d, id));

  const auto p = make_product(make_gf(2), make_gf(2));
  std::vector<Elem> swap(p.size());
  for (int x = 0; x < p.size(); ++x) {
    const auto [a, b] = product_components(p, x);
    swap[x] = product_element(p, b, a);
  }
  CHECK(is_k_linear(p, p, swap));
  CHECK(throws_kind(ErrorKind::NoAlgebraStructure, [] { scalar_embed(make_zn(4), 1); }));
}

TEST_CASE("ring specs") {
  CHECK(parse_ring("Z4").name() == "Z4");
  CHECK(parse_ring("GF(3)").size() == 3);
  CHECK(parse_ring("GF(2)[e]").size() == 4);
  CHECK(parse_ring("GF(2)xGF(2)").size() == 4);
  CHECK(parse_ring("M2(GF(2))").size() == 16);
  CHECK(parse_ring("T2(GF(2))").size() == 8);
  CHECK(parse_ring("Z4xGF(2)").size() == 8);
  CHECK(parse_ring(" ( Z2 x Z2 ) x Z2 ").size() == 8);
  CHECK(parse_ring("Z2xZ2xZ3").name() == "Z2xZ2xZ3");

  try {
    parse_ring("GF(2)[e]xQ");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("position 9") != std::string::npos);
  }
  CHECK(throws_kind(ErrorKind::Parse, [] { parse_ring("M2(GF(2)"); }));
  CHECK(throws_kind(ErrorKind::Parse, [] { parse_ring(""); }));
  CHECK(throws_kind(ErrorKind::Parse, [] { parse_ring("Z4 Z4"); }));
  CHECK(throws_kind(ErrorKind::Size, [] { parse_ring("M2(GF(5))"); }));
  CHECK(throws_kind(ErrorKind::WrongRingKind, [] { parse_field("Z4"); }));
}

TEST_CASE("tables round trip through json") {
  for (const char* spec : {"Z4", "GF(2)[e]", "T2(GF(2))", "GF(4)"}) {
    const auto R = parse_ring(spec);
    const auto S = ring_from_tables(ring_tables(R));
    CHECK(S.size() == R.size());
    for (int a = 0; a < R.size(); ++a) {
      CHECK(S.label(a) == R.label(a));
      for (int b = 0; b < R.size(); ++b) {
        CHECK(S.add(a, b) == R.add(a, b));
        CHECK(S.mul(a, b) == R.mul(a, b));
      }
    }
  }
}

TEST_CASE("broken tables are rejected") {
  auto j = ring_tables(make_zn(3));
  j["mul"][2][2] = 2;  // 2*2 = 2 breaks distributivity
  CHECK(throws_kind(ErrorKind::Construction, [&] { ring_from_tables(j); }));
  auto k = ring_tables(make_zn(3));
  k["add"].erase(0);
  CHECK(throws_kind(ErrorKind::Parse, [&] { ring_from_tables(k); }));
  CHECK(throws_kind(ErrorKind::Parse, [] { ring_from_tables(nlohmann::json::object()); }));
}

TEST_CASE("row reduction over GF(3) against brute force") {
  const auto K = make_gf(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    FieldMatrix a(3, 3);
    FieldVector b(3);
    for (int i = 0; i < 3; ++i) {
      b(i) = static_cast<Elem>(rng() % 3);
      for (int j = 0; j < 3; ++j) a(i, j) = static_cast<Elem>(rng() % 3);
    }
    // Brute force: solutions of a x = b and the size of the image.
    std::set<std::vector<int>> image;
    bool solvable = false;
    for (int x = 0; x < 27; ++x) {
      const int v[3] = {x % 3, x / 3 % 3, x / 9};
      std::vector<int> ax(3);
      for (int i = 0; i < 3; ++i) ax[i] = (a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2]) % 3;
      image.insert(ax);
      if (ax == std::vector<int>{b(0), b(1), b(2)}) solvable = true;
    }
    const int r = rank(K, a);
    CHECK(static_cast<int>(image.size()) == static_cast<int>(std::pow(3, r)));
    const auto sol = solve(K, a, b);
    CHECK(sol.has_value() == solvable);
    if (sol) CHECK(multiply(K, a, *sol) == FieldMatrix(b));
    const FieldMatrix e = rref(K, a);
    CHECK(rref(K, e) == e);
  }
}
