#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "sdym/curvature.hpp"
#include "sdym/duality.hpp"
#include "sdym/hodge.hpp"

namespace sdym {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// ---------------------------------------------------------------------------
// Real coordinates of a connection.
//
// Each slot A_k^i = sum_a z_a lambda_a. su2 stores the three real z_a; sl2c stores
// (Re z_1, Re z_2, Re z_3, Im z_1, Im z_2, Im z_3). Slots follow storage order.

inline int coordinates_per_slot(AlgebraKind kind) { return kind == AlgebraKind::su2 ? 3 : 6; }

template <typename Scalar>
VectorX<Scalar> to_coordinates(const ConnectionField<Scalar>& A) {
  const int per = coordinates_per_slot(A.kind());
  VectorX<Scalar> x(static_cast<Eigen::Index>(A.data().size()) * per);
  for (std::size_t n = 0; n < A.data().size(); ++n) {
    const auto z = coefficients<Scalar>(A.data()[n]);
    for (int a = 0; a < 3; ++a) {
      x(static_cast<Eigen::Index>(n) * per + a) = z(a).real();
      if (per == 6) x(static_cast<Eigen::Index>(n) * per + 3 + a) = z(a).imag();
    }
  }
  return x;
}

template <typename Scalar>
ConnectionField<Scalar> from_coordinates(const VectorX<Scalar>& x, const Window& w, AlgebraKind kind) {
  const int per = coordinates_per_slot(kind);
  ConnectionField<Scalar> A(w, kind);
  if (x.size() != static_cast<Eigen::Index>(A.data().size()) * per) throw std::invalid_argument("coordinate vector has the wrong length");
  for (std::size_t n = 0; n < A.data().size(); ++n) {
    Eigen::Matrix<Complex<Scalar>, 3, 1> z;
    for (int a = 0; a < 3; ++a) {
      const Eigen::Index base = static_cast<Eigen::Index>(n) * per;
      z(a) = Complex<Scalar>(x(base + a), per == 6 ? x(base + 3 + a) : Scalar(0));
    }
    A.data()[n] = from_coefficients<Scalar>(z);
  }
  return A;
}

// ---------------------------------------------------------------------------

/// R(A) = || residual(curvature(A), p) ||^2.
template <typename Scalar>
Scalar objective(const ConnectionField<Scalar>& A, const DualityProblem& p) {
  const Scalar n = field_norm(residual(curvature(A), p));
  return n * n;
}

/// Matrix-valued gradient G with dR = 2 Re sum <G_k^i, dA_k^i>, <X,Y> = trace(X^H Y).
template <typename Scalar>
ConnectionField<Scalar> matrix_gradient(const ConnectionField<Scalar>& A, const DualityProblem& p) {
  const auto [a, b] = residual_coefficients<Scalar>(p);
  const CurvatureField<Scalar> Res = residual(curvature(A), p);

  // Pull the residual back through F -> a F + b *F.
  CurvatureField<Scalar> GF = star_adjoint(Res, p.metric);
  GF *= std::conj(b);
  for (std::size_t n = 0; n < GF.data().size(); ++n) GF.data()[n] += std::conj(a) * Res.data()[n];

  const Window& w = A.window();
  ConnectionField<Scalar> GA(w, A.kind());
  auto add = [&](const LatticeIndex& k, Axis axis, const Mat2<Scalar>& m) {
    if (const auto off = w.resolve(k)) GA(*off, axis - 1) += m;
  };

  for (std::size_t s = 0; s < w.size(); ++s) {
    const LatticeIndex k = w.site(s);
    for (std::size_t pl = 0; pl < kPlanes.size(); ++pl) {
      const Axis i = kPlanes[pl].i, j = kPlanes[pl].j;
      const Mat2<Scalar>& G = GF(s, static_cast<int>(pl));
      const LatticeIndex up_i = shift_up(k, i), up_j = shift_up(k, j);
      const Mat2<Scalar> Ai = A(s, i - 1);
      const Mat2<Scalar> Aj = A(s, j - 1);
      const Mat2<Scalar> Aj_up_i = A.at(up_i, j - 1);
      const Mat2<Scalar> Ai_up_j = A.at(up_j, i - 1);

      add(up_i, j, G + Ai.adjoint() * G);
      add(k, j, -G - G * Ai_up_j.adjoint());
      add(up_j, i, -G - Aj.adjoint() * G);
      add(k, i, G + G * Aj_up_i.adjoint());
    }
  }
  return GA;
}

/// Gradient of R with respect to the real coordinates of `to_coordinates`.
template <typename Scalar>
VectorX<Scalar> gradient(const ConnectionField<Scalar>& A, const DualityProblem& p) {
  const ConnectionField<Scalar> GA = matrix_gradient(A, p);
  const int per = coordinates_per_slot(A.kind());
  VectorX<Scalar> g(static_cast<Eigen::Index>(GA.data().size()) * per);
  const Complex<Scalar> I(0, 1);
  for (std::size_t n = 0; n < GA.data().size(); ++n) {
    for (int c = 1; c <= 3; ++c) {
      const Mat2<Scalar> lam = basis<Scalar>(c);
      const Eigen::Index base = static_cast<Eigen::Index>(n) * per;
      g(base + c - 1) = Scalar(2) * inner(GA.data()[n], lam).real();
      if (per == 6) g(base + 2 + c) = Scalar(2) * inner<Scalar>(GA.data()[n], I * lam).real();
    }
  }
  return g;
}

/// Directional derivative of the curvature map at A along dA.
template <typename Scalar>
CurvatureField<Scalar> curvature_tangent(const ConnectionField<Scalar>& A, const ConnectionField<Scalar>& dA) {
  A.require_compatible(dA);
  return CurvatureField<Scalar>::generate(A.window(), AlgebraKind::sl2c, [&](const LatticeIndex& k, int slot) {
    const Plane& pl = kPlanes[static_cast<std::size_t>(slot)];
    const LatticeIndex up_i = shift_up(k, pl.i), up_j = shift_up(k, pl.j);
    const Mat2<Scalar> Ai = A.at(k, pl.i - 1), Aj = A.at(k, pl.j - 1);
    const Mat2<Scalar> Aj_up_i = A.at(up_i, pl.j - 1), Ai_up_j = A.at(up_j, pl.i - 1);
    const Mat2<Scalar> dAi = dA.at(k, pl.i - 1), dAj = dA.at(k, pl.j - 1);
    const Mat2<Scalar> dAj_up_i = dA.at(up_i, pl.j - 1), dAi_up_j = dA.at(up_j, pl.i - 1);
    return Mat2<Scalar>(dAj_up_i - dAj - dAi_up_j + dAi + dAi * Aj_up_i + Ai * dAj_up_i - dAj * Ai_up_j - Aj * dAi_up_j);
  });
}

/// Real vector of a 2-cochain: per slot, row-major entries as (re, im).
template <typename Scalar>
VectorX<Scalar> residual_vector(const CurvatureField<Scalar>& R) {
  VectorX<Scalar> v(static_cast<Eigen::Index>(R.data().size()) * 8);
  Eigen::Index n = 0;
  for (const auto& m : R.data()) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        v(n++) = m(r, c).real();
        v(n++) = m(r, c).imag();
      }
    }
  }
  return v;
}

/// Jacobian of residual_vector(residual(curvature(A), p)) with respect to to_coordinates(A).
///
/// Assembled column by column from the local stencil: the slot (k, a) enters F only at k and at
/// sigma_b k, and F at (k, q) enters the residual at (k, q) and at (tau_q k, target of q).
template <typename Scalar>
Eigen::SparseMatrix<Scalar> residual_jacobian(const ConnectionField<Scalar>& A, const DualityProblem& p) {
  const auto [ca, cb] = residual_coefficients<Scalar>(p);
  const StarTable table = star_table(p.metric);
  const Window& w = A.window();
  const int per = coordinates_per_slot(A.kind());
  const Complex<Scalar> I(0, 1);

  std::vector<Eigen::Triplet<Scalar>> triplets;
  std::map<std::pair<std::size_t, int>, Mat2<Scalar>> dres;  // (site, plane) -> residual derivative

  for (std::size_t s0 = 0; s0 < w.size(); ++s0) {
    const LatticeIndex k0 = w.site(s0);
    std::vector<std::size_t> sites{s0};
    for (Axis b = 1; b <= 4; ++b)
      if (const auto off = w.resolve(shift_down(k0, b))) sites.push_back(*off);
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());

    for (Axis a = 1; a <= 4; ++a) {
      for (int c = 0; c < per; ++c) {
        const Mat2<Scalar> E = c < 3 ? basis<Scalar>(c + 1) : Mat2<Scalar>(I * basis<Scalar>(c - 2));
        auto dA = [&](const LatticeIndex& k, Axis axis) -> Mat2<Scalar> {
          if (axis != a) return Mat2<Scalar>::Zero();
          const auto off = w.resolve(k);
          return off && *off == s0 ? E : Mat2<Scalar>::Zero();
        };

        dres.clear();
        for (std::size_t s : sites) {
          const LatticeIndex k = w.site(s);
          for (std::size_t q = 0; q < kPlanes.size(); ++q) {
            const Axis i = kPlanes[q].i, j = kPlanes[q].j;
            const LatticeIndex up_i = shift_up(k, i), up_j = shift_up(k, j);
            const Mat2<Scalar> dAi = dA(k, i), dAj = dA(k, j), dAj_up_i = dA(up_i, j), dAi_up_j = dA(up_j, i);
            if (dAi.isZero(0) && dAj.isZero(0) && dAj_up_i.isZero(0) && dAi_up_j.isZero(0)) continue;
            const Mat2<Scalar> Ai = A(s, i - 1), Aj = A(s, j - 1);
            const Mat2<Scalar> Aj_up_i = A.at(up_i, j - 1), Ai_up_j = A.at(up_j, i - 1);
            const Mat2<Scalar> dF =
                dAj_up_i - dAj - dAi_up_j + dAi + dAi * Aj_up_i + Ai * dAj_up_i - dAj * Ai_up_j - Aj * dAi_up_j;

            auto [it, fresh] = dres.try_emplace({s, static_cast<int>(q)}, Mat2<Scalar>::Zero());
            it->second += ca * dF;
            const StarEntry& e = star_entry_from(table, kPlanes[q]);
            if (const auto t = w.resolve(shift_pair(k, i, j, Direction::up))) {
              auto [jt, fresh2] = dres.try_emplace({*t, static_cast<int>(plane_index(e.target.i, e.target.j))}, Mat2<Scalar>::Zero());
              jt->second += cb * Scalar(e.sign) * dF;
            }
          }
        }

        const auto col = static_cast<Eigen::Index>((s0 * 4 + static_cast<std::size_t>(a - 1)) * static_cast<std::size_t>(per) +
                                                   static_cast<std::size_t>(c));
        for (const auto& [key, m] : dres) {
          const auto row0 = static_cast<Eigen::Index>((key.first * 6 + static_cast<std::size_t>(key.second)) * 8);
          Eigen::Index n = 0;
          for (int r = 0; r < 2; ++r) {
            for (int cc = 0; cc < 2; ++cc) {
              if (m(r, cc).real() != Scalar(0)) triplets.emplace_back(row0 + n, col, m(r, cc).real());
              if (m(r, cc).imag() != Scalar(0)) triplets.emplace_back(row0 + n + 1, col, m(r, cc).imag());
              n += 2;
            }
          }
        }
      }
    }
  }

  Eigen::SparseMatrix<Scalar> J(static_cast<Eigen::Index>(w.size()) * 6 * 8, static_cast<Eigen::Index>(w.size()) * 4 * per);
  J.setFromTriplets(triplets.begin(), triplets.end());
  return J;
}

// ---------------------------------------------------------------------------

/// gauss_newton: Levenberg-Marquardt step (J^T J + R I) d = -J^T r. gradient_descent: d = -grad R.
/// Both use the same Armijo backtracking and accept only strict decreases of R.
enum class SolveMethod { gauss_newton, gradient_descent };

inline std::string_view to_string(SolveMethod m) { return m == SolveMethod::gauss_newton ? "gn" : "gd"; }

inline SolveMethod parse_solve_method(std::string_view s) {
  if (s == "gn") return SolveMethod::gauss_newton;
  if (s == "gd") return SolveMethod::gradient_descent;
  throw std::invalid_argument("unknown solve method '" + std::string(s) + "' (expected gn or gd)");
}

struct SolveConfig {
  DualityProblem problem;
  SolveMethod method = SolveMethod::gauss_newton;
  int max_iter = 10000;
  double tol = 1e-8;      // target for the scalar residual ||residual||
  double step0 = 1.0;     // initial trial step of every line search
  double backtrack = 0.5; // step shrink factor
  double armijo = 1e-4;   // sufficient-decrease constant
  std::uint64_t seed = 0; // initial-field seed for callers that generate A0
  int trace_every = 1;

  void validate() const {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (!(backtrack > 0 && backtrack < 1)) throw std::invalid_argument("backtrack must lie in (0, 1)");
    if (!(step0 > 0)) throw std::invalid_argument("step0 must be positive");
    if (!(armijo > 0 && armijo < 1)) throw std::invalid_argument("armijo must lie in (0, 1)");
    if (trace_every < 1) throw std::invalid_argument("trace_every must be >= 1");
  }
};

struct TracePoint {
  int iteration = 0;
  double residual = 0.0;
  double step = 0.0;
};

enum class StopReason { converged, max_iter, step_underflow, stationary };

inline std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::converged: return "converged";
    case StopReason::max_iter: return "max_iter";
    case StopReason::step_underflow: return "step_underflow";
    case StopReason::stationary: return "stationary";
  }
  return "unknown";
}

struct SolveReport {
  int iterations = 0;
  double final_residual = 0.0;
  std::vector<TracePoint> residual_trace;
  bool converged = false;
  StopReason reason = StopReason::max_iter;
};

template <typename Scalar>
struct SolveResult {
  ConnectionField<Scalar> connection;
  SolveReport report;
};

/// Minimum trial step before the line search gives up.
inline constexpr double kStepUnderflow = 1e-16;

namespace detail {

/// Levenberg-Marquardt direction; falls back to steepest descent if the factorization fails.
template <typename Scalar>
VectorX<Scalar> lm_direction(const ConnectionField<Scalar>& A, const DualityProblem& p, Scalar f) {
  const Eigen::SparseMatrix<Scalar> J = residual_jacobian(A, p);
  const VectorX<Scalar> r = residual_vector(residual(curvature(A), p));
  const VectorX<Scalar> Jtr = J.transpose() * r;
  Eigen::SparseMatrix<Scalar> H = J.transpose() * J;
  Eigen::SparseMatrix<Scalar> damping(H.rows(), H.cols());
  damping.setIdentity();
  H += f * damping;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<Scalar>> ldlt(H);
  if (ldlt.info() == Eigen::Success) {
    VectorX<Scalar> d = -ldlt.solve(Jtr);
    if (ldlt.info() == Eigen::Success && d.allFinite() && d.dot(Jtr) < Scalar(0)) return d;
  }
  return -Scalar(2) * Jtr;
}

}  // namespace detail

/// Minimizes R from A0 with Armijo backtracking. A step is accepted only if R strictly decreases,
/// so the recorded residual trace is non-increasing.
template <typename Scalar>
SolveResult<Scalar> solve(const ConnectionField<Scalar>& A0, const SolveConfig& cfg) {
  cfg.validate();
  if (A0.window().boundary() != Boundary::periodic) throw std::invalid_argument("solve requires a periodic window");

  const Window& w = A0.window();
  const AlgebraKind kind = A0.kind();
  VectorX<Scalar> x = to_coordinates(A0);
  ConnectionField<Scalar> A = from_coordinates(x, w, kind);
  Scalar f = objective(A, cfg.problem);

  SolveReport rep;
  rep.residual_trace.push_back({0, std::sqrt(static_cast<double>(f)), 0.0});
  auto done = [&] { return std::sqrt(static_cast<double>(f)) <= cfg.tol; };

  if (done()) {
    rep.converged = true;
    rep.reason = StopReason::converged;
  }

  double last_step = 0.0;
  for (int it = 1; it <= cfg.max_iter && !rep.converged; ++it) {
    const VectorX<Scalar> g = gradient(A, cfg.problem);
    if (g.squaredNorm() == Scalar(0)) {
      rep.reason = StopReason::stationary;
      break;
    }
    const VectorX<Scalar> d =
        cfg.method == SolveMethod::gauss_newton ? detail::lm_direction(A, cfg.problem, f) : VectorX<Scalar>(-g);
    const Scalar slope = g.dot(d);  // negative

    double t = cfg.step0;
    bool accepted = false;
    while (t >= kStepUnderflow) {
      VectorX<Scalar> xn = x + Scalar(t) * d;
      ConnectionField<Scalar> An = from_coordinates(xn, w, kind);
      const Scalar fn = objective(An, cfg.problem);
      if (fn < f && fn <= f + Scalar(cfg.armijo * t) * slope) {
        x = std::move(xn);
        A = std::move(An);
        f = fn;
        accepted = true;
        break;
      }
      t *= cfg.backtrack;
    }
    if (!accepted) {
      rep.reason = StopReason::step_underflow;
      break;
    }

    rep.iterations = it;
    last_step = t;
    if (done()) {
      rep.converged = true;
      rep.reason = StopReason::converged;
    }
    if (it % cfg.trace_every == 0 || rep.converged || it == cfg.max_iter)
      rep.residual_trace.push_back({it, std::sqrt(static_cast<double>(f)), t});
  }

  if (rep.residual_trace.back().iteration != rep.iterations)
    rep.residual_trace.push_back({rep.iterations, std::sqrt(static_cast<double>(f)), last_step});
  rep.final_residual = std::sqrt(static_cast<double>(f));
  return {std::move(A), std::move(rep)};
}

}  // namespace sdym
