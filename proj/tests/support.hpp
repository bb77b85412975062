#pragma once

#include <random>

#include "oracle.hpp"
#include "sdym/sdym.hpp"

namespace support {

inline oracle::Grid grid_of(const sdym::Window& w) {
  return {w.dims(), w.boundary() == sdym::Boundary::periodic};
}

inline sdym::LatticeIndex li(const oracle::K& k) { return sdym::LatticeIndex{k}; }

// Copy a library field into the oracle layout site by site through the public checked accessor.
template <int Slots>
oracle::Field to_oracle(const sdym::Cochain<double, Slots>& c) {
  oracle::Field f(grid_of(c.window()), Slots);
  for (std::int64_t n = 0; n < f.grid.sites(); ++n) {
    const oracle::K k = f.grid.site(n);
    for (int s = 0; s < Slots; ++s) f.ref(k, s) = c(li(k), s);
  }
  return f;
}

// Dense random curvature with independent entries; not restricted to any algebra.
inline sdym::CurvatureField<double> random_curvature(const sdym::Window& w, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  return sdym::CurvatureField<double>::generate(w, sdym::AlgebraKind::sl2c, [&](const sdym::LatticeIndex&, int) {
    sdym::Mat2cd m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = {u(rng), u(rng)};
    return m;
  });
}

inline sdym::Mat2cd random_matrix(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  sdym::Mat2cd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = {u(rng), u(rng)};
  return m;
}

// Central difference (R(x + h e_c) - R(x - h e_c)) / 2h of R = sum |r|^2 on the oracle residual, summed
// entrywise as (r+ - r-)(r+ + r-) so the large unchanged part of R never enters the subtraction.
inline double central_difference(const sdym::ConnectionField<double>& A, const sdym::DualityProblem& p, Eigen::Index c,
                                 double h) {
  const bool euclid = p.metric == sdym::Metric::euclid, sd = p.orientation == sdym::Orientation::self_dual;
  const sdym::AlgebraKind kind = A.kind();
  const sdym::Window& w = A.window();
  Eigen::VectorXd xp = sdym::to_coordinates(A), xm = xp;
  xp(c) += h;
  xm(c) -= h;
  const auto rp = oracle::residual(oracle::curvature(to_oracle(sdym::from_coordinates(xp, w, kind))), euclid, sd);
  const auto rm = oracle::residual(oracle::curvature(to_oracle(sdym::from_coordinates(xm, w, kind))), euclid, sd);
  double sum = 0;
  for (std::size_t n = 0; n < rp.v.size(); ++n) {
    const Eigen::Matrix2cd d = rp.v[n] - rm.v[n];
    if (d.isZero(0)) continue;
    sum += (d.cwiseProduct((rp.v[n] + rm.v[n]).conjugate())).sum().real();
  }
  return sum / (2 * h);
}

inline const std::array<sdym::DualityProblem, 4> kProblems{{
    {sdym::Metric::euclid, sdym::Orientation::self_dual},
    {sdym::Metric::euclid, sdym::Orientation::anti_self_dual},
    {sdym::Metric::mink, sdym::Orientation::self_dual},
    {sdym::Metric::mink, sdym::Orientation::anti_self_dual},
}};

}  // namespace support
