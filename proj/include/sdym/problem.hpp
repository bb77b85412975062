#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "sdym/hodge.hpp"

namespace sdym {

enum class Orientation { self_dual, anti_self_dual };

inline std::string_view to_string(Orientation o) { return o == Orientation::self_dual ? "sd" : "asd"; }

inline Orientation parse_orientation(std::string_view s) {
  if (s == "sd") return Orientation::self_dual;
  if (s == "asd") return Orientation::anti_self_dual;
  throw std::invalid_argument("unknown duality orientation '" + std::string(s) + "'");
}

struct DualityProblem {
  Metric metric = Metric::euclid;
  Orientation orientation = Orientation::self_dual;
};

/// The eigenvalue mu with *F = mu F for a solution: euclid +1 / -1, mink +i / -i.
template <typename Scalar = double>
std::complex<Scalar> star_eigenvalue(const DualityProblem& p) {
  const Scalar s = p.orientation == Orientation::self_dual ? Scalar(1) : Scalar(-1);
  return p.metric == Metric::euclid ? std::complex<Scalar>(s, 0) : std::complex<Scalar>(0, s);
}

/// Coefficients (a, b) of the residual operator F -> a F + b *F.
///   euclid: F - *F, F + *F
///   mink:   *F - iF, *F + iF
template <typename Scalar = double>
std::pair<std::complex<Scalar>, std::complex<Scalar>> residual_coefficients(const DualityProblem& p) {
  using C = std::complex<Scalar>;
  const bool sd = p.orientation == Orientation::self_dual;
  if (p.metric == Metric::euclid) return {C(1), C(sd ? -1 : 1)};
  return {C(0, sd ? -1 : 1), C(1)};
}

}  // namespace sdym
