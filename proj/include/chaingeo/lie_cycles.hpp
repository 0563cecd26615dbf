#pragma once

// Lie's oriented circle geometry in the Euclidean plane.
//
// A Lie cycle (oriented circle, point, oriented line, or the point at
// infinity) maps to a point of the Lie quadric
//
//     -x0^2 + x1^2 + x2^2 + x3^2 - x4^2 = 0
//
// in real projective 4-space. Two cycles touch exactly when their images are
// orthogonal under diag(-1, 1, 1, 1, -1). Everything here is templated on the
// scalar type; `double` is what the rest of the project uses.

#include <algorithm>
#include <cmath>
#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "chaingeo/error.hpp"

namespace chaingeo::lie {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector5 = Eigen::Matrix<Scalar, 5, 1>;

/// Decision thresholds. Contact and dedup thresholds apply to representatives
/// normalized to unit Euclidean norm.
template <typename Scalar>
struct Tolerance {
  static constexpr Scalar contact = Scalar(1e-9);
  static constexpr Scalar quadric = Scalar(1e-12);
  static constexpr Scalar rank = Scalar(1e-8);
  static constexpr Scalar dedup = Scalar(1e-7);
  // Singular-value ratios inside (rank / band, rank * band) are ambiguous.
  static constexpr Scalar rank_band = Scalar(100);
};

template <typename Scalar>
class Circle {
 public:
  Circle(Vector2<Scalar> center, Scalar signed_radius) : center_(center), radius_(signed_radius) {
    if (!(signed_radius != Scalar(0)) || !std::isfinite(signed_radius)) {
      throw Error(ErrorKind::Domain, "circle radius must be finite and nonzero");
    }
  }
  Circle(Scalar m1, Scalar m2, Scalar signed_radius) : Circle(Vector2<Scalar>(m1, m2), signed_radius) {}

  const Vector2<Scalar>& center() const { return center_; }
  /// Positive for counterclockwise orientation.
  Scalar radius() const { return radius_; }
  bool counterclockwise() const { return radius_ > Scalar(0); }
  Circle flipped() const { return Circle(center_, -radius_); }

 private:
  Vector2<Scalar> center_;
  Scalar radius_;
};

template <typename Scalar>
struct Point {
  Vector2<Scalar> position;

  Point(Scalar x, Scalar y) : position(x, y) {}
  explicit Point(Vector2<Scalar> p) : position(p) {}
};

/// Oriented line a0 + a1*x + a2*y = 0 in Hesse normal form, with the unit
/// vector (-a2, a1) pointing along the orientation.
template <typename Scalar>
class Spear {
 public:
  /// Line through `point` running in direction `direction` (any nonzero length).
  static Spear through(const Vector2<Scalar>& point, const Vector2<Scalar>& direction) {
    const Scalar len = direction.norm();
    if (!(len > Scalar(0))) throw Error(ErrorKind::Domain, "spear direction must be nonzero");
    const Vector2<Scalar> d = direction / len;
    const Scalar a1 = d.y();
    const Scalar a2 = -d.x();
    return Spear(-(a1 * point.x() + a2 * point.y()), a1, a2);
  }

  /// Any equation b0 + b1*x + b2*y = 0 plus a direction along the line; the
  /// equation is normalized and its sign chosen to match the direction.
  static Spear from_equation(Scalar b0, Scalar b1, Scalar b2, const Vector2<Scalar>& direction) {
    const Scalar len = std::hypot(b1, b2);
    if (!(len > Scalar(0))) throw Error(ErrorKind::Domain, "line equation has zero normal");
    Scalar a0 = b0 / len, a1 = b1 / len, a2 = b2 / len;
    const Scalar along = -a2 * direction.x() + a1 * direction.y();
    if (along == Scalar(0)) throw Error(ErrorKind::Domain, "direction is not along the line");
    if (along < Scalar(0)) {
      a0 = -a0;
      a1 = -a1;
      a2 = -a2;
    }
    return Spear(a0, a1, a2);
  }

  /// Coefficients already in Hesse form; orientation is read off (-a2, a1).
  static Spear from_hesse(Scalar a0, Scalar a1, Scalar a2) {
    if (!(std::abs(a1 * a1 + a2 * a2 - Scalar(1)) <= Tolerance<Scalar>::quadric)) {
      throw Error(ErrorKind::Domain, "Hesse normal form needs a1^2 + a2^2 = 1");
    }
    return Spear(a0, a1, a2);
  }

  Scalar a0() const { return a0_; }
  Scalar a1() const { return a1_; }
  Scalar a2() const { return a2_; }
  Vector2<Scalar> direction() const { return Vector2<Scalar>(-a2_, a1_); }
  /// Foot of the perpendicular from the origin.
  Vector2<Scalar> foot() const { return Vector2<Scalar>(-a0_ * a1_, -a0_ * a2_); }
  Spear flipped() const { return Spear(-a0_, -a1_, -a2_); }

 private:
  Spear(Scalar a0, Scalar a1, Scalar a2) : a0_(a0), a1_(a1), a2_(a2) {}
  Scalar a0_, a1_, a2_;
};

struct Infinity {};

template <typename Scalar>
using LieCycle = std::variant<Circle<Scalar>, Point<Scalar>, Spear<Scalar>, Infinity>;

template <typename Scalar>
bool is_circle(const LieCycle<Scalar>& c) { return std::holds_alternative<Circle<Scalar>>(c); }
template <typename Scalar>
bool is_point(const LieCycle<Scalar>& c) { return std::holds_alternative<Point<Scalar>>(c); }
template <typename Scalar>
bool is_spear(const LieCycle<Scalar>& c) { return std::holds_alternative<Spear<Scalar>>(c); }
template <typename Scalar>
bool is_infinity(const LieCycle<Scalar>& c) { return std::holds_alternative<Infinity>(c); }

/// Same cycle with the opposite orientation; points and infinity are fixed.
template <typename Scalar>
LieCycle<Scalar> flip_orientation(const LieCycle<Scalar>& c) {
  if (auto* ci = std::get_if<Circle<Scalar>>(&c)) return ci->flipped();
  if (auto* s = std::get_if<Spear<Scalar>>(&c)) return s->flipped();
  return c;
}

/// A point of real projective 4-space, stored as a nonzero 5-vector.
template <typename Scalar>
class QuadricPoint {
 public:
  explicit QuadricPoint(const Vector5<Scalar>& coords) : x_(coords) {
    if (!(x_.cwiseAbs().maxCoeff() > Scalar(0))) {
      throw Error(ErrorKind::Domain, "homogeneous coordinates must not all vanish");
    }
  }
  QuadricPoint(Scalar x0, Scalar x1, Scalar x2, Scalar x3, Scalar x4)
      : QuadricPoint((Vector5<Scalar>() << x0, x1, x2, x3, x4).finished()) {}

  const Vector5<Scalar>& coords() const { return x_; }
  Scalar operator[](int i) const { return x_[i]; }

  QuadricPoint normalized() const { return QuadricPoint(x_ / x_.norm()); }

  /// Representative whose first nonzero coordinate is 1.
  QuadricPoint canonical() const {
    const Scalar eps = Tolerance<Scalar>::quadric * x_.norm();
    for (int i = 0; i < 5; ++i) {
      if (std::abs(x_[i]) > eps) return QuadricPoint(x_ / x_[i]);
    }
    return *this;  // unreachable for nonzero vectors
  }

  /// Quadric residual of the unit-normalized representative.
  Scalar residual() const {
    const Vector5<Scalar> u = x_ / x_.norm();
    return -u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3] - u[4] * u[4];
  }

  bool on_quadric(Scalar tol = Tolerance<Scalar>::quadric) const { return std::abs(residual()) <= tol; }

 private:
  Vector5<Scalar> x_;
};

/// Projective equality: unit representatives agree up to sign.
template <typename Scalar>
bool same_point(const QuadricPoint<Scalar>& p, const QuadricPoint<Scalar>& q,
                Scalar tol = Tolerance<Scalar>::dedup) {
  const Vector5<Scalar> u = p.coords().normalized();
  const Vector5<Scalar> v = q.coords().normalized();
  return (u - v).cwiseAbs().maxCoeff() <= tol || (u + v).cwiseAbs().maxCoeff() <= tol;
}

/// The Lie form matrix diag(-1, 1, 1, 1, -1).
template <typename Scalar>
Eigen::DiagonalMatrix<Scalar, 5> lie_metric() {
  return Eigen::DiagonalMatrix<Scalar, 5>(Vector5<Scalar>(
      (Vector5<Scalar>() << Scalar(-1), Scalar(1), Scalar(1), Scalar(1), Scalar(-1)).finished()));
}

/// -p0 q0 + p1 q1 + p2 q2 + p3 q3 - p4 q4 on the stored representatives.
template <typename Scalar>
Scalar lie_form(const Vector5<Scalar>& p, const Vector5<Scalar>& q) {
  return -p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3] - p[4] * q[4];
}

template <typename Scalar>
Scalar lie_form(const QuadricPoint<Scalar>& p, const QuadricPoint<Scalar>& q) {
  return lie_form(p.coords(), q.coords());
}

template <typename Scalar>
QuadricPoint<Scalar> to_pentacyclic(const LieCycle<Scalar>& cycle) {
  const auto circle_image = [](const Vector2<Scalar>& m, Scalar r) {
    const Scalar n = m.squaredNorm() - r * r;
    return QuadricPoint<Scalar>((Scalar(1) + n) / Scalar(2), (Scalar(1) - n) / Scalar(2), m.x(), m.y(), -r);
  };
  if (auto* c = std::get_if<Circle<Scalar>>(&cycle)) return circle_image(c->center(), c->radius());
  if (auto* p = std::get_if<Point<Scalar>>(&cycle)) return circle_image(p->position, Scalar(0));
  if (auto* s = std::get_if<Spear<Scalar>>(&cycle)) {
    return QuadricPoint<Scalar>(-s->a0(), s->a0(), s->a1(), s->a2(), Scalar(1));
  }
  return QuadricPoint<Scalar>(Scalar(-1), Scalar(1), Scalar(0), Scalar(0), Scalar(0));
}

/// Inverse of to_pentacyclic. Throws NotOnQuadric when the unit-normalized
/// residual exceeds `tol`.
template <typename Scalar>
LieCycle<Scalar> from_pentacyclic(const QuadricPoint<Scalar>& q, Scalar tol = Tolerance<Scalar>::quadric) {
  if (!q.on_quadric(tol)) throw Error(ErrorKind::NotOnQuadric, "point is not on the Lie quadric");
  const Vector5<Scalar> x = q.coords().normalized();
  const Scalar eps = Tolerance<Scalar>::quadric;

  const Scalar w = x[0] + x[1];
  if (std::abs(w) > eps) {
    const Vector5<Scalar> y = x / w;
    const Vector2<Scalar> m(y[2], y[3]);
    const Scalar r = -y[4];
    if (std::abs(r) <= eps * (Scalar(1) + m.norm())) return Point<Scalar>(m);
    return Circle<Scalar>(m, r);
  }
  if (std::abs(x[4]) > eps) {
    const Vector5<Scalar> y = x / x[4];
    const Scalar len = std::hypot(y[2], y[3]);
    return Spear<Scalar>::from_hesse(y[1] / len, y[2] / len, y[3] / len);
  }
  return Infinity{};
}

template <typename Scalar>
bool in_contact(const LieCycle<Scalar>& c1, const LieCycle<Scalar>& c2) {
  const Vector5<Scalar> p = to_pentacyclic(c1).coords().normalized();
  const Vector5<Scalar> q = to_pentacyclic(c2).coords().normalized();
  return std::abs(lie_form(p, q)) <= Tolerance<Scalar>::contact;
}

/// Membership of the point-or-infinity `x` in the Moebius circle cut out by `y`.
template <typename Scalar>
bool mobius_chain_contains(const LieCycle<Scalar>& x, const LieCycle<Scalar>& y) {
  if (!is_point(x) && !is_infinity(x)) throw Error(ErrorKind::Domain, "first argument must be a point or infinity");
  if (is_point(y) || is_infinity(y)) throw Error(ErrorKind::Domain, "second argument must be a circle or spear");
  return in_contact(x, y);
}

/// Membership of the spear `x` in the chain of spears touching `y`.
template <typename Scalar>
bool laguerre_chain_contains(const LieCycle<Scalar>& x, const LieCycle<Scalar>& y) {
  if (!is_spear(x)) throw Error(ErrorKind::Domain, "first argument must be a spear");
  if (!is_circle(y) && !is_point(y)) throw Error(ErrorKind::Domain, "second argument must be a circle or point");
  return in_contact(x, y);
}

template <typename Scalar>
bool same_cycle(const LieCycle<Scalar>& a, const LieCycle<Scalar>& b, Scalar tol = Tolerance<Scalar>::dedup) {
  return same_point(to_pentacyclic(a), to_pentacyclic(b), tol);
}

template <typename Scalar>
struct ApolloniusResult {
  std::vector<LieCycle<Scalar>> solutions;
  /// Projective dimension of the intersection of the three tangent
  /// hyperplanes; 1 in the regular case.
  int solution_space_dim = 1;
  /// Set when the hyperplanes do not meet in a line (coincident inputs).
  bool degenerate = false;
  /// The line is tangent to the quadric; the single solution is a double root.
  bool double_root = false;
  /// The whole line lies on the quadric, so every point of it is a solution.
  bool line_on_quadric = false;
  /// Number of solutions that came out as a point, spear, or infinity.
  int improper_solutions = 0;
};

namespace detail {

template <typename Scalar>
void push_solution(ApolloniusResult<Scalar>& out, const Vector5<Scalar>& x) {
  LieCycle<Scalar> c = from_pentacyclic(QuadricPoint<Scalar>(x), Tolerance<Scalar>::quadric * Scalar(1e3));
  for (const auto& existing : out.solutions) {
    if (same_cycle(existing, c)) return;
  }
  if (!is_circle(c)) ++out.improper_solutions;
  out.solutions.push_back(std::move(c));
}

}  // namespace detail

/// Oriented Apollonius problem: all Lie cycles touching c1, c2 and c3.
///
/// The tangent hyperplanes of the quadric at the three images are intersected;
/// in the regular case this is a line, which meets the quadric in at most two
/// points. Throws NumericalRankAmbiguity when a singular-value ratio falls in
/// the band around the rank threshold.
template <typename Scalar>
ApolloniusResult<Scalar> apollonius(const LieCycle<Scalar>& c1, const LieCycle<Scalar>& c2,
                                    const LieCycle<Scalar>& c3) {
  using Tol = Tolerance<Scalar>;
  Eigen::Matrix<Scalar, 3, 5> planes;
  const auto metric = lie_metric<Scalar>();
  int row = 0;
  for (const auto* c : {&c1, &c2, &c3}) {
    const Vector5<Scalar> p = to_pentacyclic(*c).coords().normalized();
    planes.row(row++) = (metric * p).transpose();
  }

  Eigen::JacobiSVD<Eigen::Matrix<Scalar, 3, 5>> svd(planes, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    const Scalar ratio = sv[i] / sv[0];
    if (ratio > Tol::rank / Tol::rank_band && ratio < Tol::rank * Tol::rank_band) {
      throw Error(ErrorKind::NumericalRankAmbiguity, "singular values straddle the rank threshold");
    }
    if (ratio > Tol::rank) ++rank;
  }

  ApolloniusResult<Scalar> out;
  out.solution_space_dim = 4 - rank;
  if (rank < 3) {
    out.degenerate = true;
    return out;
  }

  const Vector5<Scalar> u = svd.matrixV().col(3);
  const Vector5<Scalar> v = svd.matrixV().col(4);
  // Points s*u + t*v on the quadric: alpha s^2 + 2 beta s t + gamma t^2 = 0.
  const Scalar alpha = lie_form(u, u);
  const Scalar beta = lie_form(u, v);
  const Scalar gamma = lie_form(v, v);
  const Scalar eps = Tol::quadric;

  if (std::abs(alpha) <= eps && std::abs(beta) <= eps && std::abs(gamma) <= eps) {
    out.line_on_quadric = true;
    return out;
  }
  const Scalar disc = beta * beta - alpha * gamma;
  if (disc < -eps) return out;
  if (std::abs(alpha) <= eps && std::abs(gamma) <= eps) {
    detail::push_solution(out, u);
    detail::push_solution(out, v);
    return out;
  }
  const Scalar root = disc > eps ? std::sqrt(disc) : Scalar(0);
  out.double_root = disc <= eps;
  for (Scalar sign : {Scalar(1), Scalar(-1)}) {
    Vector5<Scalar> x;
    if (std::abs(alpha) >= std::abs(gamma)) {
      x = ((-beta + sign * root) / alpha) * u + v;
    } else {
      x = u + ((-beta + sign * root) / gamma) * v;
    }
    detail::push_solution(out, x);
    if (out.double_root) break;
  }
  return out;
}

/// Unoriented input circle for the classical Apollonius problem.
template <typename Scalar>
struct PlainCircle {
  Vector2<Scalar> center;
  Scalar radius;  // > 0
};

template <typename Scalar>
struct AllOrientationsResult {
  std::vector<LieCycle<Scalar>> solutions;  // at most 8, deduplicated
  bool degenerate = false;                  // some orientation pattern was degenerate
};

/// Classical Apollonius problem: the first circle is taken counterclockwise
/// and the other two run through both orientations. Each tangent circle of
/// the unoriented problem shows up once, with the orientation that matches.
template <typename Scalar>
AllOrientationsResult<Scalar> apollonius_all_orientations(const PlainCircle<Scalar>& u1, const PlainCircle<Scalar>& u2,
                                                          const PlainCircle<Scalar>& u3) {
  for (const auto* u : {&u1, &u2, &u3}) {
    if (!(u->radius > Scalar(0))) throw Error(ErrorKind::Domain, "circle radii must be positive");
  }
  const auto same_data = [](const PlainCircle<Scalar>& a, const PlainCircle<Scalar>& b) {
    return a.center == b.center && a.radius == b.radius;
  };
  if (same_data(u1, u2) || same_data(u1, u3) || same_data(u2, u3)) {
    throw Error(ErrorKind::Domain, "input circles must be distinct");
  }

  AllOrientationsResult<Scalar> out;
  const LieCycle<Scalar> first = Circle<Scalar>(u1.center, u1.radius);
  for (Scalar s2 : {Scalar(1), Scalar(-1)}) {
    for (Scalar s3 : {Scalar(1), Scalar(-1)}) {
      const LieCycle<Scalar> second = Circle<Scalar>(u2.center, s2 * u2.radius);
      const LieCycle<Scalar> third = Circle<Scalar>(u3.center, s3 * u3.radius);
      const auto res = apollonius(first, second, third);
      out.degenerate = out.degenerate || res.degenerate || res.line_on_quadric;
      for (const auto& c : res.solutions) {
        const bool seen = std::any_of(out.solutions.begin(), out.solutions.end(),
                                      [&](const LieCycle<Scalar>& e) { return same_cycle(e, c); });
        if (!seen) out.solutions.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace chaingeo::lie
