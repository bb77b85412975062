#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "sdym/cochain.hpp"
#include "sdym/curvature.hpp"
#include "sdym/hodge.hpp"
#include "sdym/problem.hpp"

namespace sdym {

/// Residual 2-cochain a F + b *F of a duality problem; zero exactly where F is (anti-)self-dual.
template <typename Scalar>
CurvatureField<Scalar> residual(const CurvatureField<Scalar>& F, const DualityProblem& p) {
  const auto [a, b] = residual_coefficients<Scalar>(p);
  CurvatureField<Scalar> R = star(F, p.metric);
  R *= b;
  for (std::size_t n = 0; n < R.data().size(); ++n) R.data()[n] += a * F.data()[n];
  R.set_kind(AlgebraKind::sl2c);
  return R;
}

namespace detail {

/// Expanded curvature expression for the plane (i, j) given the three sites it reads:
///   (A^j(up_i) - A^j(base)) - (A^i(up_j) - A^i(base)) + A^i(base) A^j(up_i) - A^j(base) A^i(up_j).
template <typename Scalar>
Mat2<Scalar> long_form(const ConnectionField<Scalar>& A, const LatticeIndex& base, const LatticeIndex& up_i,
                       const LatticeIndex& up_j, Axis i, Axis j) {
  const Mat2<Scalar> Ai = A.at(base, i - 1);
  const Mat2<Scalar> Aj = A.at(base, j - 1);
  const Mat2<Scalar> Aj_i = A.at(up_i, j - 1);
  const Mat2<Scalar> Ai_j = A.at(up_j, i - 1);
  return (Aj_i - Aj) - (Ai_j - Ai) + Ai * Aj_i - Aj * Ai_j;
}

inline LatticeIndex all_but(const LatticeIndex& k, Axis keep) {
  LatticeIndex r = shift_diag(k, Direction::down);
  r(keep) = k(keep);
  return r;
}

}  // namespace detail

/// Residual evaluated straight from the connection through the six long difference equations.
///
/// For target plane (i,j) with star row (source (p,q), sign s), the left side is the curvature
/// expression at k read from k, tau_i k, tau_j k; the right side is s times the expression for
/// (p,q) read from sigma_pq k, sigma_q k, sigma_p k.
template <typename Scalar>
CurvatureField<Scalar> residual_componentwise(const ConnectionField<Scalar>& A, const DualityProblem& p) {
  const auto [a, b] = residual_coefficients<Scalar>(p);
  const StarTable table = star_table(p.metric);
  CurvatureField<Scalar> R(A.window(), AlgebraKind::sl2c);
  for (std::size_t s = 0; s < A.sites(); ++s) {
    const LatticeIndex k = A.window().site(s);
    for (std::size_t t = 0; t < table.size(); ++t) {
      const StarEntry& e = table[t];
      const Axis i = e.target.i, j = e.target.j;
      const Axis sp = e.source.i, sq = e.source.j;

      const Mat2<Scalar> lhs = detail::long_form(A, k, shift_up(k, i), shift_up(k, j), i, j);
      const LatticeIndex base = shift_pair(k, sp, sq, Direction::down);
      const Mat2<Scalar> rhs = Scalar(e.sign) * detail::long_form(A, base, shift_down(k, sq), shift_down(k, sp), sp, sq);
      R(s, static_cast<int>(t)) = a * lhs + b * rhs;
    }
  }
  return R;
}

struct DiagonalReport {
  bool holds = false;
  double max_violation = 0.0;
};

/// F_k = F_{sigma k} for every plane, up to `tol` in the largest entry deviation.
template <typename Scalar>
DiagonalReport check_diagonal_relation(const CurvatureField<Scalar>& F, double tol = kDefaultTolerance) {
  const double v = static_cast<double>(diagonal_violation(F));
  return {v <= tol, v};
}

/// Diagonal relation written on the connection: the curvature expression at k against the same
/// expression read from sigma k, sigma tau_j k and sigma tau_r k.
template <typename Scalar>
DiagonalReport check_difference_form_13(const ConnectionField<Scalar>& A, double tol = kDefaultTolerance) {
  double worst = 0;
  for (std::size_t s = 0; s < A.sites(); ++s) {
    const LatticeIndex k = A.window().site(s);
    const LatticeIndex down = shift_diag(k, Direction::down);
    for (const Plane& pl : kPlanes) {
      const Mat2<Scalar> lhs = detail::long_form(A, k, shift_up(k, pl.i), shift_up(k, pl.j), pl.i, pl.j);
      const Mat2<Scalar> rhs =
          detail::long_form(A, down, detail::all_but(k, pl.i), detail::all_but(k, pl.j), pl.i, pl.j);
      worst = std::max(worst, static_cast<double>(max_abs<Scalar>(lhs - rhs)));
    }
  }
  return {worst <= tol, worst};
}

enum class TheoremVerdict { consistent, violates_support, violates_duality, nonzero_contradiction };

inline std::string_view to_string(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::consistent: return "consistent";
    case TheoremVerdict::violates_support: return "violates_support";
    case TheoremVerdict::violates_duality: return "violates_duality";
    case TheoremVerdict::nonzero_contradiction: return "nonzero_contradiction";
  }
  return "unknown";
}

struct TheoremReport {
  TheoremVerdict verdict = TheoremVerdict::consistent;
  std::int64_t bound = 0;            // max_i |N_i|
  double field_max = 0.0;            // largest entry of F
  double outside_support_max = 0.0;  // largest entry of F at sites with |k| >= bound
  double residual_max = 0.0;         // largest entry of the duality residual (0 if not evaluated)
  double diagonal_violation = 0.0;   // only evaluated when both checks pass on a nonzero field
};

/// Max-norm max_i |k_i|.
inline std::int64_t max_norm(const LatticeIndex& k) {
  std::int64_t m = 0;
  for (auto c : k.k) m = std::max(m, std::abs(c));
  return m;
}

/// Decision procedure for the compact-support triviality statement on a zero-boundary window.
///
/// A nonzero field is first tested against the support condition (F_k = 0 for |k| >= |N|, max-norm),
/// then against the duality residual. If it passes both, the diagonal relation is evaluated: on a
/// zero-boundary window every diagonal orbit leaves the window, so a nonzero field passing both
/// checks is reported as a contradiction.
template <typename Scalar>
TheoremReport verify_triviality_theorem(const CurvatureField<Scalar>& F, const LatticeIndex& N, const DualityProblem& p,
                                        double tol = kDefaultTolerance) {
  const Window& w = F.window();
  if (w.boundary() != Boundary::zero) throw std::invalid_argument("verify_triviality_theorem requires a zero-boundary window");
  TheoremReport r;
  r.bound = max_norm(N);
  for (auto n : w.dims())
    if (r.bound > n) throw std::invalid_argument("window too small for support bound " + std::to_string(r.bound));

  r.field_max = static_cast<double>(max_abs(F));
  if (r.field_max <= tol) return r;

  for (std::size_t s = 0; s < w.size(); ++s) {
    if (max_norm(w.site(s)) < r.bound) continue;
    for (int slot = 0; slot < 6; ++slot) r.outside_support_max = std::max(r.outside_support_max, static_cast<double>(max_abs<Scalar>(F(s, slot))));
  }
  if (r.outside_support_max > tol) {
    r.verdict = TheoremVerdict::violates_support;
    return r;
  }

  r.residual_max = static_cast<double>(max_abs(residual(F, p)));
  if (r.residual_max > tol) {
    r.verdict = TheoremVerdict::violates_duality;
    return r;
  }

  r.diagonal_violation = check_diagonal_relation(F, tol).max_violation;
  r.verdict = TheoremVerdict::nonzero_contradiction;
  return r;
}

}  // namespace sdym
