#include "chaingeo/finite_ring.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>

namespace chaingeo {

struct FiniteRing::Data {
  std::string name;
  int size = 0;
  std::uint64_t id = 0;
  std::vector<Elem> add, mul, neg;
  Elem zero = 0, one = 1;
  std::vector<int> inverse;  // -1 for non-units
  std::vector<Elem> units;
  std::vector<std::string> labels;
  bool commutative = false;
  bool field = false;
  bool local = false;
  std::optional<Algebra> algebra;
  std::optional<MatrixShape> matrix;
  std::optional<ProductFactors> product;
};

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string wrap(const std::string& s) {
  return s.size() > 1 && s.find_first_of("+(") != std::string::npos ? "(" + s + ")" : s;
}

}  // namespace

// Assembles Data from tables, derives unit and radical information, and
// validates. Friend of FiniteRing so it can call the private constructor.
struct RingBuilder {
  static FiniteRing build(RingTables t, std::optional<FiniteRing::MatrixShape> matrix = std::nullopt,
                          std::optional<FiniteRing::ProductFactors> product = std::nullopt,
                          std::optional<std::pair<FiniteRing, std::vector<Elem>>> algebra = std::nullopt) {
    const int n = t.size;
    if (n < 2) throw Error(ErrorKind::Construction, "a ring needs at least two elements");
    if (n > kConstructionBudget) {
      throw Error(ErrorKind::Size, "ring of size " + std::to_string(n) + " exceeds the construction budget of " +
                                       std::to_string(kConstructionBudget));
    }
    const auto nn = static_cast<std::size_t>(n) * n;
    if (t.add.size() != nn || t.mul.size() != nn) throw Error(ErrorKind::Construction, "table size mismatch");
    for (std::size_t i = 0; i < nn; ++i) {
      if (t.add[i] >= n || t.mul[i] >= n) throw Error(ErrorKind::Construction, "table entry out of range");
    }
    if (t.zero >= n || t.one >= n) throw Error(ErrorKind::Construction, "identity out of range");
    if (t.zero == t.one) throw Error(ErrorKind::Construction, "1 must differ from 0");

    auto d = std::make_shared<FiniteRing::Data>();
    d->name = std::move(t.name);
    d->size = n;
    d->id = next_ring_id++;
    d->add = std::move(t.add);
    d->mul = std::move(t.mul);
    d->zero = t.zero;
    d->one = t.one;
    d->labels = std::move(t.labels);
    if (d->labels.empty()) {
      for (int i = 0; i < n; ++i) d->labels.push_back(std::to_string(i));
    }
    if (static_cast<int>(d->labels.size()) != n) throw Error(ErrorKind::Construction, "label count mismatch");

    d->neg.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      int found = -1;
      for (int b = 0; b < n; ++b) {
        if (d->add[a * n + b] == d->zero) {
          found = b;
          break;
        }
      }
      if (found < 0) throw Error(ErrorKind::Construction, "element without additive inverse");
      d->neg[a] = static_cast<Elem>(found);
    }

    d->inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (d->mul[a * n + b] == d->one && d->mul[b * n + a] == d->one) {
          d->inverse[a] = b;
          break;
        }
      }
      if (d->inverse[a] >= 0) d->units.push_back(static_cast<Elem>(a));
    }

    d->commutative = true;
    for (int a = 0; a < n && d->commutative; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (d->mul[a * n + b] != d->mul[b * n + a]) {
          d->commutative = false;
          break;
        }
      }
    }
    d->field = static_cast<int>(d->units.size()) == n - 1;

    d->local = true;
    for (int x = 0; x < n && d->local; ++x) {
      if (d->inverse[x] >= 0) continue;
      for (int y = 0; y < n; ++y) {
        if (d->inverse[y] < 0 && d->inverse[d->add[x * n + y]] >= 0) d->local = false;
        if (d->inverse[d->mul[x * n + y]] >= 0 || d->inverse[d->mul[y * n + x]] >= 0) d->local = false;
        if (!d->local) break;
      }
    }

    d->matrix = std::move(matrix);
    d->product = std::move(product);

    FiniteRing ring(d);
    validate_ring(ring, n <= kFullValidationBudget);

    if (algebra) {
      d->algebra = make_algebra(ring, algebra->first, std::move(algebra->second));
    }
    return ring;
  }

  static FiniteRing::Algebra make_algebra(const FiniteRing& ring, const FiniteRing& field, std::vector<Elem> embed) {
    const int q = field.size();
    const int n = ring.size();
    if (!field.is_field()) throw Error(ErrorKind::Construction, "algebra scalars must form a field");
    if (static_cast<int>(embed.size()) != q) throw Error(ErrorKind::Construction, "embedding size mismatch");
    if (embed[field.zero()] != ring.zero() || embed[field.one()] != ring.one()) {
      throw Error(ErrorKind::Construction, "embedding must preserve 0 and 1");
    }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (embed[field.add(a, b)] != ring.add(embed[a], embed[b]) ||
            embed[field.mul(a, b)] != ring.mul(embed[a], embed[b])) {
          throw Error(ErrorKind::Construction, "embedding is not a ring homomorphism");
        }
      }
      for (int r = 0; r < n; ++r) {
        if (ring.mul(embed[a], r) != ring.mul(r, embed[a])) {
          throw Error(ErrorKind::Construction, "embedded field is not central");
        }
      }
    }

    FiniteRing::Algebra alg{field, std::move(embed), 0, {}, {}};
    // Grow a K-basis greedily; every element of the span remembers its coordinates.
    std::vector<std::vector<Elem>> coord(n);
    std::vector<bool> in_span(n, false);
    std::vector<Elem> members{ring.zero()};
    in_span[ring.zero()] = true;
    for (int r = 0; r < n; ++r) {
      if (in_span[r]) continue;
      alg.basis.push_back(static_cast<Elem>(r));
      std::vector<Elem> grown;
      std::vector<std::vector<Elem>> grown_coord(n);
      for (Elem m : members) {
        for (int k = 0; k < q; ++k) {
          const Elem e = ring.add(m, alg.scale(ring, static_cast<Elem>(k), static_cast<Elem>(r)));
          if (!grown_coord[e].empty()) {
            throw Error(ErrorKind::Construction, "scalar action is not a vector space structure");
          }
          grown_coord[e] = coord[m];
          grown_coord[e].push_back(static_cast<Elem>(k));
          grown.push_back(e);
        }
      }
      members = std::move(grown);
      for (Elem e : members) {
        in_span[e] = true;
        coord[e] = std::move(grown_coord[e]);
      }
    }
    alg.dimension = static_cast<int>(alg.basis.size());
    alg.coords.resize(static_cast<std::size_t>(n) * alg.dimension);
    for (int r = 0; r < n; ++r) {
      for (int i = 0; i < alg.dimension; ++i) alg.coords[static_cast<std::size_t>(r) * alg.dimension + i] = coord[r][i];
    }
    return alg;
  }
};

// ---- accessors ----

FiniteRing FiniteRing::from_tables(RingTables tables) { return RingBuilder::build(std::move(tables)); }

int FiniteRing::size() const { return d_->size; }
const std::string& FiniteRing::name() const { return d_->name; }
std::uint64_t FiniteRing::id() const { return d_->id; }
Elem FiniteRing::zero() const { return d_->zero; }
Elem FiniteRing::one() const { return d_->one; }
Elem FiniteRing::add(Elem a, Elem b) const { return d_->add[static_cast<std::size_t>(a) * d_->size + b]; }
Elem FiniteRing::mul(Elem a, Elem b) const { return d_->mul[static_cast<std::size_t>(a) * d_->size + b]; }
Elem FiniteRing::neg(Elem a) const { return d_->neg[a]; }
bool FiniteRing::is_unit(Elem a) const { return d_->inverse[a] >= 0; }
std::optional<Elem> FiniteRing::inverse(Elem a) const {
  if (d_->inverse[a] < 0) return std::nullopt;
  return static_cast<Elem>(d_->inverse[a]);
}
const std::vector<Elem>& FiniteRing::units() const { return d_->units; }
bool FiniteRing::is_commutative() const { return d_->commutative; }
bool FiniteRing::is_field() const { return d_->field; }
bool FiniteRing::is_local() const { return d_->local; }
const std::string& FiniteRing::label(Elem a) const { return d_->labels.at(a); }

int FiniteRing::additive_order(Elem a) const {
  int order = 1;
  for (Elem x = a; x != d_->zero; x = add(x, a)) ++order;
  return order;
}

std::optional<Elem> FiniteRing::parse_label(const std::string& text) const {
  for (int i = 0; i < d_->size; ++i) {
    if (d_->labels[i] == text) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

const FiniteRing::Algebra* FiniteRing::algebra() const { return d_->algebra ? &*d_->algebra : nullptr; }
const FiniteRing::Algebra& FiniteRing::require_algebra() const {
  if (!d_->algebra) throw Error(ErrorKind::NoAlgebraStructure, name() + " carries no algebra structure");
  return *d_->algebra;
}
const FiniteRing::MatrixShape* FiniteRing::matrix_shape() const { return d_->matrix ? &*d_->matrix : nullptr; }
const FiniteRing::ProductFactors* FiniteRing::product_factors() const {
  return d_->product ? &*d_->product : nullptr;
}

std::optional<Elem> FiniteRing::Algebra::field_preimage(Elem r) const {
  for (std::size_t k = 0; k < embed.size(); ++k) {
    if (embed[k] == r) return static_cast<Elem>(k);
  }
  return std::nullopt;
}

// ---- validation ----

void validate_ring(const FiniteRing& R, bool exhaustive) {
  const int n = R.size();
  const auto fail = [&](const std::string& what) { throw Error(ErrorKind::Construction, R.name() + ": " + what); };
  for (int a = 0; a < n; ++a) {
    if (R.add(a, R.zero()) != a || R.add(R.zero(), a) != a) fail("0 is not an additive identity");
    if (R.mul(a, R.one()) != a || R.mul(R.one(), a) != a) fail("1 is not a multiplicative identity");
    for (int b = 0; b < n; ++b) {
      if (R.add(a, b) != R.add(b, a)) fail("addition is not commutative");
    }
  }
  const auto check = [&](Elem a, Elem b, Elem c) {
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) fail("addition is not associative");
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) fail("multiplication is not associative");
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) fail("left distributivity fails");
    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c))) fail("right distributivity fails");
  };
  if (exhaustive) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

// ---- constructors ----

namespace {

RingTables tables_from(std::string name, int n, const std::function<Elem(Elem, Elem)>& add,
                       const std::function<Elem(Elem, Elem)>& mul, Elem zero, Elem one,
                       std::vector<std::string> labels) {
  RingTables t;
  t.name = std::move(name);
  t.size = n;
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t.add[a * n + b] = add(a, b);
      t.mul[a * n + b] = mul(a, b);
    }
  }
  t.zero = zero;
  t.one = one;
  t.labels = std::move(labels);
  return t;
}

RingTables zn_tables(int n, std::string name) {
  return tables_from(
      std::move(name), n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
      [n](Elem a, Elem b) { return static_cast<Elem>((a * b) % n); }, 0, 1, {});
}

// GF(4) = GF(2)[w]/(w^2 + w + 1); index bit 0 is the constant term.
RingTables gf4_tables() {
  const auto mul = [](Elem a, Elem b) {
    int prod = 0;
    for (int i = 0; i < 2; ++i) {
      if (b & (1 << i)) prod ^= a << i;
    }
    if (prod & 4) prod ^= 0b111;
    return static_cast<Elem>(prod);
  };
  return tables_from(
      "GF(4)", 4, [](Elem a, Elem b) { return static_cast<Elem>(a ^ b); }, mul, 0, 1, {"0", "1", "w", "w+1"});
}

FiniteRing plain_prime_field(int p) { return RingBuilder::build(zn_tables(p, "GF(" + std::to_string(p) + ")")); }

std::vector<Elem> identity_embedding(int q) {
  std::vector<Elem> e(q);
  std::iota(e.begin(), e.end(), Elem{0});
  return e;
}

void require_field(const FiniteRing& k) {
  if (!k.is_field()) throw Error(ErrorKind::Construction, k.name() + " is not a field");
}

int ipow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > 1 << 20) return 1 << 21;
  }
  return static_cast<int>(r);
}

// Positions (row, col) stored for an n x n matrix ring element.
std::vector<std::pair<int, int>> stored_positions(int n, bool upper) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = upper ? i : 0; j < n; ++j) pos.emplace_back(i, j);
  return pos;
}

FiniteRing matrix_like(const FiniteRing& K, int n, bool upper) {
  require_field(K);
  const int q = K.size();
  const auto pos = stored_positions(n, upper);
  const int stored = static_cast<int>(pos.size());
  const int size = ipow(q, stored);
  if (size > kConstructionBudget) {
    throw Error(ErrorKind::Size, "matrix ring of size " + std::to_string(size) + " exceeds the construction budget");
  }

  const auto decode = [&](Elem x) {
    std::vector<Elem> m(static_cast<std::size_t>(n) * n, K.zero());
    int v = x;
    for (const auto& [i, j] : pos) {
      m[i * n + j] = static_cast<Elem>(v % q);
      v /= q;
    }
    return m;
  };
  const auto encode = [&](const std::vector<Elem>& m) {
    int v = 0;
    for (int s = stored - 1; s >= 0; --s) v = v * q + m[pos[s].first * n + pos[s].second];
    return static_cast<Elem>(v);
  };
  std::vector<std::vector<Elem>> dec(size);
  for (int x = 0; x < size; ++x) dec[x] = decode(static_cast<Elem>(x));

  const auto add = [&](Elem a, Elem b) {
    std::vector<Elem> m(n * n);
    for (int i = 0; i < n * n; ++i) m[i] = K.add(dec[a][i], dec[b][i]);
    return encode(m);
  };
  const auto mul = [&](Elem a, Elem b) {
    std::vector<Elem> m(n * n, K.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Elem s = K.zero();
        for (int k = 0; k < n; ++k) s = K.add(s, K.mul(dec[a][i * n + k], dec[b][k * n + j]));
        m[i * n + j] = s;
      }
    return encode(m);
  };
  std::vector<std::string> labels;
  for (int x = 0; x < size; ++x) {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      if (i) s += ';';
      for (int j = 0; j < n; ++j) {
        if (j) s += ' ';
        s += K.label(dec[x][i * n + j]);
      }
    }
    labels.push_back(s + "]");
  }
  std::vector<Elem> identity(n * n, K.zero());
  for (int i = 0; i < n; ++i) identity[i * n + i] = K.one();

  std::vector<Elem> embed(q);
  for (int k = 0; k < q; ++k) {
    std::vector<Elem> m(n * n, K.zero());
    for (int i = 0; i < n; ++i) m[i * n + i] = static_cast<Elem>(k);
    embed[k] = encode(m);
  }
  const std::string name = std::string(upper ? "T" : "M") + std::to_string(n) + "(" + K.name() + ")";
  auto t = tables_from(name, size, add, mul, encode(std::vector<Elem>(n * n, K.zero())), encode(identity),
                       std::move(labels));
  return RingBuilder::build(std::move(t), FiniteRing::MatrixShape{K, n, upper}, std::nullopt,
                            std::make_pair(K, std::move(embed)));
}

}  // namespace

FiniteRing make_zn(int n) {
  if (n < 2) throw Error(ErrorKind::Construction, "Z_n needs n >= 2");
  if (n > kConstructionBudget) throw Error(ErrorKind::Size, "Z_n exceeds the construction budget");
  auto t = zn_tables(n, "Z" + std::to_string(n));
  if (is_prime(n)) return RingBuilder::build(std::move(t), {}, {}, std::make_pair(plain_prime_field(n), identity_embedding(n)));
  return RingBuilder::build(std::move(t));
}

FiniteRing make_gf(int q) {
  if (q == 4) {
    return RingBuilder::build(gf4_tables(), {}, {}, std::make_pair(plain_prime_field(2), std::vector<Elem>{0, 1}));
  }
  if (!is_prime(q) || q > 7) throw Error(ErrorKind::Construction, "supported fields are GF(2), GF(3), GF(4), GF(5), GF(7)");
  return RingBuilder::build(zn_tables(q, "GF(" + std::to_string(q) + ")"), {}, {},
                            std::make_pair(plain_prime_field(q), identity_embedding(q)));
}

FiniteRing make_dual(const FiniteRing& K) {
  require_field(K);
  const int q = K.size();
  const int n = q * q;
  // a + b*eps with index a + q*b.
  const auto add = [&](Elem x, Elem y) {
    return static_cast<Elem>(K.add(x % q, y % q) + q * K.add(x / q, y / q));
  };
  const auto mul = [&](Elem x, Elem y) {
    const Elem a = x % q, b = x / q, c = y % q, d = y / q;
    return static_cast<Elem>(K.mul(a, c) + q * K.add(K.mul(a, d), K.mul(b, c)));
  };
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    const Elem a = x % q, b = x / q;
    const std::string eps = b == K.one() ? "e" : wrap(K.label(b)) + "e";
    if (b == K.zero()) labels.push_back(K.label(a));
    else if (a == K.zero()) labels.push_back(eps);
    else labels.push_back(wrap(K.label(a)) + "+" + eps);
  }
  auto t = tables_from(K.name() + "[e]", n, add, mul, K.zero(), K.one(), std::move(labels));
  return RingBuilder::build(std::move(t), {}, {}, std::make_pair(K, identity_embedding(q)));
}

FiniteRing make_double(const FiniteRing& K) {
  require_field(K);
  return make_product(K, K);
}

FiniteRing make_matrix_ring(const FiniteRing& K, int n) {
  if (n < 1 || n > 3) throw Error(ErrorKind::Construction, "matrix rings are supported for n = 1, 2, 3");
  return matrix_like(K, n, false);
}

FiniteRing make_ternions(const FiniteRing& K, int n) {
  if (n < 2 || n > 3) throw Error(ErrorKind::Construction, "ternion rings are supported for n = 2, 3");
  return matrix_like(K, n, true);
}

FiniteRing make_product(const FiniteRing& L, const FiniteRing& R) {
  const int a = L.size(), b = R.size();
  if (a * b > kConstructionBudget) throw Error(ErrorKind::Size, "product ring exceeds the construction budget");
  const auto add = [&](Elem x, Elem y) {
    return static_cast<Elem>(L.add(x % a, y % a) + a * R.add(x / a, y / a));
  };
  const auto mul = [&](Elem x, Elem y) {
    return static_cast<Elem>(L.mul(x % a, y % a) + a * R.mul(x / a, y / a));
  };
  std::vector<std::string> labels;
  for (int x = 0; x < a * b; ++x) labels.push_back("(" + L.label(x % a) + "," + R.label(x / a) + ")");
  auto t = tables_from(L.name() + "x" + R.name(), a * b, add, mul, static_cast<Elem>(L.zero() + a * R.zero()),
                       static_cast<Elem>(L.one() + a * R.one()), std::move(labels));

  std::optional<std::pair<FiniteRing, std::vector<Elem>>> alg;
  const auto* la = L.algebra();
  const auto* ra = R.algebra();
  if (la && ra && la->field.name() == ra->field.name() && la->field.size() == ra->field.size()) {
    std::vector<Elem> embed(la->field.size());
    for (std::size_t k = 0; k < embed.size(); ++k) embed[k] = static_cast<Elem>(la->embed[k] + a * ra->embed[k]);
    alg = std::make_pair(la->field, std::move(embed));
  }
  return RingBuilder::build(std::move(t), std::nullopt, FiniteRing::ProductFactors{L, R}, std::move(alg));
}

// ---- structure helpers ----

std::vector<Elem> matrix_entries(const FiniteRing& ring, Elem x) {
  const auto* shape = ring.matrix_shape();
  if (!shape) throw Error(ErrorKind::WrongRingKind, ring.name() + " is not a matrix ring");
  const int n = shape->n, q = shape->field.size();
  std::vector<Elem> m(static_cast<std::size_t>(n) * n, shape->field.zero());
  int v = x;
  for (const auto& [i, j] : stored_positions(n, shape->upper_triangular)) {
    m[i * n + j] = static_cast<Elem>(v % q);
    v /= q;
  }
  return m;
}

Elem matrix_from_entries(const FiniteRing& ring, const std::vector<Elem>& entries) {
  const auto* shape = ring.matrix_shape();
  if (!shape) throw Error(ErrorKind::WrongRingKind, ring.name() + " is not a matrix ring");
  const int n = shape->n, q = shape->field.size();
  const auto pos = stored_positions(n, shape->upper_triangular);
  int v = 0;
  for (int s = static_cast<int>(pos.size()) - 1; s >= 0; --s) v = v * q + entries.at(pos[s].first * n + pos[s].second);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; shape->upper_triangular && j < i; ++j) {
      if (entries.at(i * n + j) != shape->field.zero()) {
        throw Error(ErrorKind::Domain, "entries below the diagonal of a triangular matrix");
      }
    }
  }
  return static_cast<Elem>(v);
}

std::pair<Elem, Elem> product_components(const FiniteRing& ring, Elem x) {
  const auto* f = ring.product_factors();
  if (!f) throw Error(ErrorKind::WrongRingKind, ring.name() + " is not a product ring");
  return {static_cast<Elem>(x % f->left.size()), static_cast<Elem>(x / f->left.size())};
}

Elem product_element(const FiniteRing& ring, Elem left, Elem right) {
  const auto* f = ring.product_factors();
  if (!f) throw Error(ErrorKind::WrongRingKind, ring.name() + " is not a product ring");
  return static_cast<Elem>(left + f->left.size() * right);
}

std::vector<Elem> units(const FiniteRing& ring) { return ring.units(); }
bool is_unit(const FiniteRing& ring, Elem a) { return ring.is_unit(a); }

std::vector<Elem> jacobson_radical(const FiniteRing& R) {
  std::vector<Elem> out;
  for (int r = 0; r < R.size(); ++r) {
    bool quasi_regular = true;
    for (int a = 0; a < R.size() && quasi_regular; ++a) {
      quasi_regular = R.is_unit(R.sub(R.one(), R.mul(a, r)));
    }
    if (quasi_regular) out.push_back(static_cast<Elem>(r));
  }
  return out;
}

Elem scalar_embed(const FiniteRing& ring, Elem k) {
  const auto& alg = ring.require_algebra();
  if (k >= alg.embed.size()) throw Error(ErrorKind::Domain, "scalar out of range");
  return alg.embed[k];
}

bool is_k_linear(const FiniteRing& S, const FiniteRing& T, const std::vector<Elem>& map) {
  const auto& sa = S.require_algebra();
  const auto& ta = T.require_algebra();
  if (static_cast<int>(map.size()) != S.size()) throw Error(ErrorKind::Domain, "map size does not match the source");
  if (sa.field.size() != ta.field.size() || sa.field.name() != ta.field.name()) return false;
  for (int a = 0; a < S.size(); ++a) {
    if (map[a] >= T.size()) return false;
    for (int b = 0; b < S.size(); ++b) {
      if (map[S.add(a, b)] != T.add(map[a], map[b])) return false;
    }
    for (int k = 0; k < sa.field.size(); ++k) {
      if (map[sa.scale(S, k, a)] != ta.scale(T, k, map[a])) return false;
    }
  }
  return true;
}

// ---- isomorphism ----

namespace {

struct ElemSignature {
  int add_order;
  bool unit;
  bool square_zero;
  bool idempotent;
  int mul_order;  // 0 for non-units
  auto operator<=>(const ElemSignature&) const = default;
};

ElemSignature signature(const FiniteRing& R, Elem a) {
  int mul_order = 0;
  if (R.is_unit(a)) {
    mul_order = 1;
    for (Elem x = a; x != R.one(); x = R.mul(x, a)) ++mul_order;
  }
  const Elem sq = R.mul(a, a);
  return {R.additive_order(a), R.is_unit(a), sq == R.zero(), sq == a, mul_order};
}

class IsoSearch {
 public:
  IsoSearch(const FiniteRing& r1, const FiniteRing& r2) : a_(r1), b_(r2), n_(r1.size()) {
    map_.assign(n_, -1);
    used_.assign(n_, false);
    for (int x = 0; x < n_; ++x) {
      sig_a_.push_back(signature(a_, x));
      sig_b_.push_back(signature(b_, x));
    }
  }

  bool run() {
    std::vector<ElemSignature> sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb || a_.is_commutative() != b_.is_commutative()) return false;
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one())) return false;
    for (int x = 0; x < n_; ++x) {
      if (map_[x] < 0) order_.push_back(x);
    }
    return search(0);
  }

 private:
  bool assign(int x, int y) {
    if (map_[x] >= 0) return map_[x] == y;
    if (used_[y] || sig_a_[x] != sig_b_[y]) return false;
    map_[x] = y;
    used_[y] = true;
    assigned_.push_back(x);
    return true;
  }

  void unassign_to(std::size_t mark) {
    while (assigned_.size() > mark) {
      used_[map_[assigned_.back()]] = false;
      map_[assigned_.back()] = -1;
      assigned_.pop_back();
    }
  }

  // Extends the map along sums and products until it is closed or contradicts.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      const auto snapshot = assigned_;
      for (int x : snapshot) {
        for (int y : snapshot) {
          const int s = a_.add(x, y), p = a_.mul(x, y);
          const int fs = b_.add(map_[x], map_[y]), fp = b_.mul(map_[x], map_[y]);
          const bool s_new = map_[s] < 0, p_new = map_[p] < 0;
          if (!assign(s, fs) || !assign(p, fp)) return false;
          changed = changed || s_new || p_new;
        }
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    const std::size_t mark = assigned_.size();
    if (!propagate()) {
      unassign_to(mark);
      return false;
    }
    while (depth < order_.size() && map_[order_[depth]] >= 0) ++depth;
    if (depth == order_.size()) return true;
    const int x = order_[depth];
    const std::size_t mark2 = assigned_.size();
    for (int y = 0; y < n_; ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      assign(x, y);
      if (search(depth + 1)) return true;
      unassign_to(mark2);
    }
    unassign_to(mark);
    return false;
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  int n_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> assigned_;
  std::vector<int> order_;
  std::vector<ElemSignature> sig_a_, sig_b_;
};

}  // namespace

bool ring_isomorphic(const FiniteRing& r1, const FiniteRing& r2) {
  if (r1.size() > kIsomorphismBudget || r2.size() > kIsomorphismBudget) {
    throw Error(ErrorKind::Size, "ring isomorphism testing is limited to 16 elements");
  }
  if (r1.size() != r2.size()) return false;
  return IsoSearch(r1, r2).run();
}

}  // namespace chaingeo
