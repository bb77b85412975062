#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <vector>

#include "sdym/cochain.hpp"
#include "sdym/hodge.hpp"
#include "sdym/problem.hpp"

namespace sdym {

/// F_k^{ij} = D_i A_k^j - D_j A_k^i + A_k^i A_{tau_i k}^j - A_k^j A_{tau_j k}^i for any axes i, j.
/// The product order is as written; swapping i and j negates the result.
template <typename Scalar>
Mat2<Scalar> curvature_component(const ConnectionField<Scalar>& A, const LatticeIndex& k, Axis i, Axis j) {
  const Mat2<Scalar> Ai = component(A, k, i);
  const Mat2<Scalar> Aj = component(A, k, j);
  const Mat2<Scalar> Aj_up_i = component(A, shift_up(k, i), j);
  const Mat2<Scalar> Ai_up_j = component(A, shift_up(k, j), i);
  return (Aj_up_i - Aj) - (Ai_up_j - Ai) + Ai * Aj_up_i - Aj * Ai_up_j;
}

/// The result carries the connection's algebra tag. The quadratic terms multiply values taken at
/// different sites, so the entries generally have a nonzero trace and lie in gl(2,C).
template <typename Scalar>
CurvatureField<Scalar> curvature(const ConnectionField<Scalar>& A) {
  return CurvatureField<Scalar>::generate(A.window(), A.kind(), [&](const LatticeIndex& k, int slot) {
    const Plane& p = kPlanes[static_cast<std::size_t>(slot)];
    return curvature_component(A, k, p.i, p.j);
  });
}

/// Reads of a gauge field outside a zero-boundary window return the identity.
template <typename Scalar>
Mat2<Scalar> gauge_at(const GaugeField<Scalar>& g, const LatticeIndex& k) {
  return g.at(k, 0, Mat2<Scalar>::Identity());
}

/// Pure-gauge connection A_k^j = -(g_{tau_j k} - g_k) g_k^{-1}.
template <typename Scalar>
ConnectionField<Scalar> pure_gauge(const GaugeField<Scalar>& g, double singular_tol = kDefaultTolerance) {
  std::vector<Mat2<Scalar>> inverses;
  inverses.reserve(g.sites());
  for (std::size_t s = 0; s < g.sites(); ++s) {
    const Mat2<Scalar>& m = g(s, 0);
    const Complex<Scalar> det = m.determinant();
    if (std::abs(det) <= singular_tol) throw std::invalid_argument("pure_gauge: singular gauge matrix at site offset " + std::to_string(s));
    Mat2<Scalar> inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    inverses.push_back(inv / det);
  }
  ConnectionField<Scalar> A(g.window(), g.kind());
  for (std::size_t s = 0; s < g.sites(); ++s) {
    const LatticeIndex k = g.window().site(s);
    for (Axis j = 1; j <= 4; ++j) A(s, j - 1) = -(gauge_at(g, shift_up(k, j)) - g(s, 0)) * inverses[s];
  }
  return A;
}

// ---------------------------------------------------------------------------
// Generators

template <typename Scalar>
ConnectionField<Scalar> zero_connection(const Window& w, AlgebraKind kind) {
  return ConnectionField<Scalar>(w, kind);
}

/// A_k^i = values[i-1] at every site.
template <typename Scalar>
ConnectionField<Scalar> constant_connection(const Window& w, AlgebraKind kind, const std::array<Mat2<Scalar>, 4>& values) {
  return ConnectionField<Scalar>::generate(w, kind, [&](const LatticeIndex&, int slot) { return values[static_cast<std::size_t>(slot)]; });
}

/// Independent random algebra values per (site, axis), drawn in storage order.
template <typename Scalar>
ConnectionField<Scalar> random_connection(const Window& w, AlgebraKind kind, std::uint64_t seed, Scalar scale) {
  std::mt19937_64 rng(seed);
  return ConnectionField<Scalar>::generate(w, kind, [&](const LatticeIndex&, int) { return random_algebra<Scalar>(rng, kind, scale); });
}

template <typename Scalar>
GaugeField<Scalar> random_gauge(const Window& w, AlgebraKind kind, std::uint64_t seed, Scalar scale) {
  std::mt19937_64 rng(seed);
  return GaugeField<Scalar>::generate(w, kind, [&](const LatticeIndex&, int) { return random_group<Scalar>(rng, kind, scale).matrix(); });
}

template <typename Scalar>
GaugeField<Scalar> constant_gauge(const Window& w, AlgebraKind kind, const Mat2<Scalar>& g) {
  return GaugeField<Scalar>::generate(w, kind, [&](const LatticeIndex&, int) { return g; });
}

/// Scalar-per-site plane slice used to seed synthetic dual curvature.
template <typename Scalar>
using PlaneSlice = Cochain<Scalar, 1>;

template <typename Scalar>
PlaneSlice<Scalar> constant_slice(const Window& w, AlgebraKind kind, const Mat2<Scalar>& M) {
  return PlaneSlice<Scalar>::generate(w, kind, [&](const LatticeIndex&, int) { return M; });
}

/// Random slice that is invariant under the diagonal shift: one random value per diagonal orbit.
/// Orbits are visited in order of their smallest site offset.
template <typename Scalar>
PlaneSlice<Scalar> random_diagonal_slice(const Window& w, AlgebraKind kind, std::uint64_t seed, Scalar scale) {
  if (w.boundary() != Boundary::periodic) throw std::invalid_argument("random_diagonal_slice requires a periodic window");
  std::mt19937_64 rng(seed);
  PlaneSlice<Scalar> slice(w, kind);
  std::vector<bool> done(w.size(), false);
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (done[s]) continue;
    const Mat2<Scalar> value = random_algebra<Scalar>(rng, kind, scale);
    LatticeIndex k = w.site(s);
    for (std::size_t off = s; !done[off]; off = *w.resolve(k)) {
      done[off] = true;
      slice(off, 0) = value;
      k = shift_diag(k, Direction::down);
    }
  }
  return slice;
}

/// Largest entry deviation |S_k - S_{sigma k}| over the window.
template <typename Scalar, int Slots>
Scalar diagonal_violation(const Cochain<Scalar, Slots>& c) {
  return max_abs_difference(c, shift_diag(c, Direction::down));
}

/// Curvature with F^{12} = slice and F^{34} chosen so that *F = mu F holds exactly on planes 12/34.
/// Planes 13, 14, 23, 24 are zero.
///
/// With (*F)^{12}_k = s12 F^{34}_{sigma_34 k} and (*F)^{34}_k = s34 F^{12}_{sigma_12 k}, setting
/// F^{34}_k = (s34 / mu) F^{12}_{sigma_12 k} makes the 34 relation hold by construction; the 12
/// relation then needs s12 s34 = mu^2 (true for both metrics) and F^{12}_{sigma k} = F^{12}_k.
template <typename Scalar>
CurvatureField<Scalar> synthetic_sd_curvature(const PlaneSlice<Scalar>& slice, const DualityProblem& p,
                                              double tol = kDefaultTolerance) {
  const Window& w = slice.window();
  if (w.boundary() != Boundary::periodic) throw std::invalid_argument("synthetic_sd_curvature requires a periodic window");
  if (diagonal_violation(slice) > tol) throw std::invalid_argument("synthetic_sd_curvature: slice is not invariant under the diagonal shift");

  const StarTable table = star_table(p.metric);
  const Complex<Scalar> factor = Scalar(table[plane_index(3, 4)].sign) * std::conj(star_eigenvalue<Scalar>(p));  // 1/mu = conj(mu)
  const int p12 = static_cast<int>(plane_index(1, 2));
  const int p34 = static_cast<int>(plane_index(3, 4));

  CurvatureField<Scalar> F(w, slice.kind() == AlgebraKind::su2 && p.metric == Metric::euclid ? AlgebraKind::su2 : AlgebraKind::sl2c);
  for (std::size_t s = 0; s < w.size(); ++s) {
    const LatticeIndex k = w.site(s);
    F(s, p12) = slice(s, 0);
    F(s, p34) = factor * slice.at(shift_pair(k, 1, 2, Direction::down), 0);
  }
  return F;
}

}  // namespace sdym
