#include "chaingeo/field_linalg.hpp"

namespace chaingeo {

std::vector<int> rref_in_place(const FiniteRing& F, FieldMatrix& m) {
  std::vector<int> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == F.zero()) ++p;
    if (p == rows) continue;
    m.row(p).swap(m.row(r));
    const Elem inv = *F.inverse(m(r, c));
    for (Eigen::Index j = 0; j < cols; ++j) m(r, j) = F.mul(inv, m(r, j));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == F.zero()) continue;
      const Elem factor = m(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(r, j)));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

FieldMatrix rref(const FiniteRing& F, FieldMatrix m) {
  rref_in_place(F, m);
  return m;
}

int rank(const FiniteRing& F, FieldMatrix m) { return static_cast<int>(rref_in_place(F, m).size()); }

std::optional<FieldVector> solve(const FiniteRing& F, const FieldMatrix& a, const FieldVector& b) {
  FieldMatrix aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto pivots = rref_in_place(F, aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  FieldVector x = FieldVector::Constant(a.cols(), F.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Eigen::Index>(i), a.cols());
  return x;
}

FieldMatrix multiply(const FiniteRing& F, const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Elem s = F.zero();
      for (Eigen::Index k = 0; k < a.cols(); ++k) s = F.add(s, F.mul(a(i, k), b(k, j)));
      out(i, j) = s;
    }
  return out;
}

}  // namespace chaingeo
