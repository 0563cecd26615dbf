#include "chaingeo/grassmann.hpp"

#include <set>

#include "chaingeo/chain_geometry.hpp"
#include "chaingeo/distant_graph.hpp"

namespace chaingeo {

bool Subspace::operator==(const Subspace& other) const {
  return field.same_as(other.field) && n == other.n && basis == other.basis;
}

std::vector<Elem> Subspace::key() const {
  std::vector<Elem> out;
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    for (Eigen::Index j = 0; j < basis.cols(); ++j) out.push_back(basis(i, j));
  }
  return out;
}

Subspace to_subspace(const FiniteRing& R, const ProjPoint& p) {
  const auto* shape = R.matrix_shape();
  if (!shape || shape->upper_triangular) throw Error(ErrorKind::WrongRingKind, R.name() + " is not a full matrix ring");
  if (p.ring_id != R.id()) throw Error(ErrorKind::RingMismatch, "point does not belong to " + R.name());
  const int n = shape->n;
  const auto a = matrix_entries(R, p.a);
  const auto b = matrix_entries(R, p.b);
  FieldMatrix m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = a[i * n + j];
      m(i, n + j) = b[i * n + j];
    }
  }
  const auto pivots = rref_in_place(shape->field, m);
  if (static_cast<int>(pivots.size()) != n) throw Error(ErrorKind::Internal, "(A|B) of a point has deficient rank");
  return {shape->field, n, std::move(m)};
}

bool is_complementary(const Subspace& u, const Subspace& v) {
  if (!u.field.same_as(v.field) || u.n != v.n || u.basis.rows() != v.basis.rows() ||
      u.basis.cols() != v.basis.cols() || u.basis.cols() != 2 * u.n || u.basis.rows() != u.n) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces are not n-subspaces of the same K^2n");
  }
  FieldMatrix stacked(2 * u.n, 2 * u.n);
  stacked << u.basis, v.basis;
  return rank(u.field, stacked) == 2 * u.n;
}

std::vector<FieldMatrix> enumerate_echelon_forms(const FiniteRing& K, int rows, int cols) {
  std::vector<FieldMatrix> out;
  if (rows < 0 || rows > cols) return out;
  const int q = K.size();
  std::vector<int> pivots(rows);
  for (int i = 0; i < rows; ++i) pivots[i] = i;
  while (true) {
    // Free positions: right of the row's pivot, outside every pivot column.
    std::vector<bool> pivot_col(cols, false);
    for (int c : pivots) pivot_col[c] = true;
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < rows; ++r) {
      for (int c = pivots[r] + 1; c < cols; ++c) {
        if (!pivot_col[c]) free.emplace_back(r, c);
      }
    }
    std::vector<int> digits(free.size(), 0);
    while (true) {
      FieldMatrix m = FieldMatrix::Constant(rows, cols, K.zero());
      for (int r = 0; r < rows; ++r) m(r, pivots[r]) = K.one();
      for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = static_cast<Elem>(digits[f]);
      out.push_back(std::move(m));
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == q) digits[f++] = 0;
      if (f == digits.size()) break;
    }
    // Next pivot combination in lexicographic order.
    int i = rows - 1;
    while (i >= 0 && pivots[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < rows; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

GrassmannReport grassmann_check(const FiniteRing& K, int n) {
  if (!K.is_field()) throw Error(ErrorKind::WrongRingKind, K.name() + " is not a field");
  if (n < 1 || n > 2 || K.size() > 3) throw Error(ErrorKind::Size, "grassmann_check needs n <= 2 and |K| <= 3");
  const FiniteRing R = make_matrix_ring(K, n);
  const ProjectiveLine line(R);
  const DistantGraph g = distant_graph(line);

  GrassmannReport rep;
  rep.n = n;
  rep.field = K.name();
  rep.points = line.size();

  std::vector<Subspace> image;
  std::set<std::vector<Elem>> keys;
  for (const auto& p : line.points()) {
    image.push_back(to_subspace(R, p));
    keys.insert(image.back().key());
  }
  rep.injective = static_cast<int>(keys.size()) == line.size();

  const auto forms = enumerate_echelon_forms(K, n, 2 * n);
  rep.subspaces = static_cast<int>(forms.size());
  std::set<std::vector<Elem>> form_keys;
  for (const auto& f : forms) form_keys.insert(Subspace{K, n, f}.key());
  rep.surjective = form_keys == keys;

  rep.distant_iff_complementary = true;
  for (int i = 0; i < line.size(); ++i) {
    for (int j = i + 1; j < line.size(); ++j) {
      const bool d = g.adjacent(i, j);
      const bool c = is_complementary(image[i], image[j]);
      rep.distant_pairs += d;
      rep.complementary_pairs += c;
      if (d != c) rep.distant_iff_complementary = false;
    }
  }

  const auto chains = all_chains(line, g);
  rep.chains = static_cast<int>(chains.size());
  rep.chains_complementary = true;
  for (const auto& c : chains) {
    const auto idx = chain_indices(line, c);
    if (static_cast<int>(idx.size()) != K.size() + 1) rep.chains_complementary = false;
    for (std::size_t s = 0; s < idx.size() && rep.chains_complementary; ++s) {
      for (std::size_t t = s + 1; t < idx.size(); ++t) {
        if (!is_complementary(image[idx[s]], image[idx[t]])) {
          rep.chains_complementary = false;
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace chaingeo
