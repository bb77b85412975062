#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace sdym {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// 2x2 complex matrix. Holds connection values, curvature values and group elements.
template <typename Scalar>
using Mat2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

using Mat2cd = Mat2<double>;

/// Entry tolerance used by every membership predicate unless overridden.
inline constexpr double kDefaultTolerance = 1e-12;

enum class AlgebraKind { su2, sl2c };

inline std::string_view to_string(AlgebraKind kind) { return kind == AlgebraKind::su2 ? "su2" : "sl2c"; }

inline AlgebraKind parse_algebra_kind(std::string_view s) {
  if (s == "su2") return AlgebraKind::su2;
  if (s == "sl2c") return AlgebraKind::sl2c;
  throw std::invalid_argument("unknown algebra kind '" + std::string(s) + "'");
}

/// Largest entry modulus of X.
template <typename Scalar>
Scalar max_abs(const Mat2<Scalar>& X) {
  return X.cwiseAbs().maxCoeff();
}

/// Basis element lambda_a = -(i/2) sigma_a, a in {1,2,3}.
///
/// With this normalization the structure constants are the Levi-Civita symbol,
/// [lambda_a, lambda_b] = eps_abc lambda_c, and trace(lambda_a^H lambda_b) = delta_ab / 2.
template <typename Scalar = double>
Mat2<Scalar> basis(int a) {
  using C = Complex<Scalar>;
  const C h(0, Scalar(-0.5));  // -(i/2)
  Mat2<Scalar> m = Mat2<Scalar>::Zero();
  switch (a) {
    case 1:
      m(0, 1) = h;
      m(1, 0) = h;
      break;
    case 2:
      // sigma_2 = [[0,-i],[i,0]]
      m(0, 1) = h * C(0, -1);
      m(1, 0) = h * C(0, 1);
      break;
    case 3:
      m(0, 0) = h;
      m(1, 1) = -h;
      break;
    default:
      throw std::out_of_range("basis index must be 1, 2 or 3, got " + std::to_string(a));
  }
  return m;
}

template <typename Scalar>
Mat2<Scalar> commutator(const Mat2<Scalar>& X, const Mat2<Scalar>& Y) {
  return X * Y - Y * X;
}

/// trace(X^H Y).
template <typename Scalar>
Complex<Scalar> inner(const Mat2<Scalar>& X, const Mat2<Scalar>& Y) {
  return (X.adjoint() * Y).trace();
}

template <typename Scalar>
Scalar frobenius_norm(const Mat2<Scalar>& X) {
  return X.norm();
}

template <typename Scalar>
bool is_sl2c(const Mat2<Scalar>& X, double tol = kDefaultTolerance) {
  return std::abs(X.trace()) <= tol;
}

template <typename Scalar>
bool is_su2(const Mat2<Scalar>& X, double tol = kDefaultTolerance) {
  return is_sl2c(X, tol) && max_abs<Scalar>(X + X.adjoint()) <= tol;
}

template <typename Scalar>
bool is_in(const Mat2<Scalar>& X, AlgebraKind kind, double tol = kDefaultTolerance) {
  return kind == AlgebraKind::su2 ? is_su2(X, tol) : is_sl2c(X, tol);
}

/// Complex coefficients z_a with X = sum_a z_a lambda_a. Exact for traceless X.
template <typename Scalar>
Eigen::Matrix<Complex<Scalar>, 3, 1> coefficients(const Mat2<Scalar>& X) {
  Eigen::Matrix<Complex<Scalar>, 3, 1> z;
  for (int a = 1; a <= 3; ++a) z(a - 1) = Scalar(2) * inner(basis<Scalar>(a), X);
  return z;
}

template <typename Scalar>
Mat2<Scalar> from_coefficients(const Eigen::Matrix<Complex<Scalar>, 3, 1>& z) {
  Mat2<Scalar> X = Mat2<Scalar>::Zero();
  for (int a = 1; a <= 3; ++a) X += z(a - 1) * basis<Scalar>(a);
  return X;
}

/// Deterministic random algebra element drawn from an existing engine.
/// su2: real coefficients uniform in [-scale, scale]; sl2c: real and imaginary parts each uniform.
template <typename Scalar, typename Rng>
Mat2<Scalar> random_algebra(Rng& rng, AlgebraKind kind, Scalar scale) {
  if (!(scale > 0)) throw std::invalid_argument("random_algebra: scale must be positive");
  std::uniform_real_distribution<Scalar> u(-scale, scale);
  Eigen::Matrix<Complex<Scalar>, 3, 1> z;
  for (int a = 0; a < 3; ++a) {
    const Scalar re = u(rng);
    const Scalar im = kind == AlgebraKind::sl2c ? u(rng) : Scalar(0);
    z(a) = Complex<Scalar>(re, im);
  }
  return from_coefficients<Scalar>(z);
}

template <typename Scalar = double>
Mat2<Scalar> random_algebra(std::uint64_t seed, AlgebraKind kind, Scalar scale) {
  std::mt19937_64 rng(seed);
  return random_algebra<Scalar>(rng, kind, scale);
}

/// exp of a traceless matrix. Uses X^2 = -det(X) I, so exp(X) = cosh(s) I + sinh(s)/s X with s^2 = -det X.
template <typename Scalar>
Mat2<Scalar> exp_traceless(const Mat2<Scalar>& X) {
  const Complex<Scalar> s = std::sqrt(-X.determinant());
  const Complex<Scalar> c = std::cosh(s);
  const Complex<Scalar> sinhc = std::abs(s) < Scalar(1e-8) ? Complex<Scalar>(1) + s * s / Scalar(6) : std::sinh(s) / s;
  return c * Mat2<Scalar>::Identity() + sinhc * X;
}

/// Element of SU(2) or SL(2,C). Construction checks membership.
template <typename Scalar>
class GroupElement {
 public:
  GroupElement() : m_(Mat2<Scalar>::Identity()) {}

  GroupElement(const Mat2<Scalar>& m, AlgebraKind kind, double tol = kDefaultTolerance) : m_(m) {
    if (!is_group_member(m, kind, tol)) {
      throw std::invalid_argument(std::string("matrix is not an element of ") +
                                  (kind == AlgebraKind::su2 ? "SU(2)" : "SL(2,C)"));
    }
  }

  static GroupElement identity() { return GroupElement(); }

  static bool is_group_member(const Mat2<Scalar>& m, AlgebraKind kind, double tol = kDefaultTolerance) {
    if (std::abs(m.determinant() - Complex<Scalar>(1)) > tol) return false;
    if (kind == AlgebraKind::su2) return max_abs<Scalar>(m * m.adjoint() - Mat2<Scalar>::Identity()) <= tol;
    return true;
  }

  const Mat2<Scalar>& matrix() const { return m_; }

  /// Closed-form inverse of a unit-determinant 2x2 matrix.
  Mat2<Scalar> inverse() const {
    Mat2<Scalar> inv;
    inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return inv / m_.determinant();
  }

 private:
  Mat2<Scalar> m_;
};

/// Random group element exp(X) with X = random_algebra(rng, kind, scale), determinant renormalized to 1.
template <typename Scalar, typename Rng>
GroupElement<Scalar> random_group(Rng& rng, AlgebraKind kind, Scalar scale) {
  Mat2<Scalar> g = exp_traceless<Scalar>(random_algebra<Scalar>(rng, kind, scale));
  g /= std::sqrt(g.determinant());
  return GroupElement<Scalar>(g, kind);
}

}  // namespace sdym
