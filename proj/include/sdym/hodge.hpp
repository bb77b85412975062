#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sdym/cochain.hpp"

namespace sdym {

enum class Metric { euclid, mink };

inline std::string_view to_string(Metric m) { return m == Metric::euclid ? "euclid" : "mink"; }

inline Metric parse_metric(std::string_view s) {
  if (s == "euclid") return Metric::euclid;
  if (s == "mink") return Metric::mink;
  throw std::invalid_argument("unknown metric '" + std::string(s) + "'");
}

/// One row of the star on 2-cochains, component form:
///   (*F)^{target}_k = sign * F^{source}_{sigma_source k}
/// and, equivalently, basis form:
///   *eps_source^k = sign * eps_target^{tau_source k}.
struct StarEntry {
  Plane source;
  Plane target;
  int sign;
};

/// Rows indexed by target plane in canonical order (12, 13, 14, 23, 24, 34).
using StarTable = std::array<StarEntry, 6>;

/// Euclidean signs (+,-,+,+,-,+); Minkowski flips the last three to (-,+,-), which is where the
/// time-orientation factor Q(mu) of the Lorentzian star shows up.
inline StarTable star_table(Metric m) {
  const int t = m == Metric::euclid ? 1 : -1;
  return StarTable{{
      {{3, 4}, {1, 2}, +1},
      {{2, 4}, {1, 3}, -1},
      {{2, 3}, {1, 4}, +1},
      {{1, 4}, {2, 3}, +1 * t},
      {{1, 3}, {2, 4}, -1 * t},
      {{1, 2}, {3, 4}, +1 * t},
  }};
}

/// Row of the table whose source is `p`.
inline const StarEntry& star_entry_from(const StarTable& table, const Plane& p) {
  for (const auto& e : table)
    if (e.source == p) return e;
  throw std::invalid_argument("plane " + plane_name(p) + " is not canonical");
}

/// Image of a single basis element under the star: *eps_p^k = sign * eps_target^{site}.
struct BasisImage {
  Plane target;
  LatticeIndex site;
  int sign;
};

inline BasisImage star_basis_action(const Plane& p, const LatticeIndex& k, Metric m) {
  const StarTable table = star_table(m);
  const StarEntry& e = star_entry_from(table, p);
  return {e.target, shift_pair(k, p.i, p.j, Direction::up), e.sign};
}

template <typename Scalar>
CurvatureField<Scalar> star(const CurvatureField<Scalar>& F, Metric m) {
  const StarTable table = star_table(m);
  return CurvatureField<Scalar>::generate(F.window(), F.kind(), [&](const LatticeIndex& k, int slot) {
    const StarEntry& e = table[static_cast<std::size_t>(slot)];
    const LatticeIndex from = shift_pair(k, e.source.i, e.source.j, Direction::down);
    return Mat2<Scalar>(Scalar(e.sign) * F.at(from, static_cast<int>(plane_index(e.source.i, e.source.j))));
  });
}

/// Adjoint of `star` under the slotwise Frobenius inner product:
///   (star^T R)^{source}_k = sign * R^{target}_{tau_source k}.
/// On periodic windows this is the inverse of `star`.
template <typename Scalar>
CurvatureField<Scalar> star_adjoint(const CurvatureField<Scalar>& R, Metric m) {
  const StarTable table = star_table(m);
  return CurvatureField<Scalar>::generate(R.window(), R.kind(), [&](const LatticeIndex& k, int slot) {
    const StarEntry& e = star_entry_from(table, kPlanes[static_cast<std::size_t>(slot)]);
    const LatticeIndex from = shift_pair(k, e.source.i, e.source.j, Direction::up);
    return Mat2<Scalar>(Scalar(e.sign) * R.at(from, static_cast<int>(plane_index(e.target.i, e.target.j))));
  });
}

/// Star applied twice. Euclidean: F_{sigma k} at k. Minkowski: -F_{sigma k} at k.
template <typename Scalar>
CurvatureField<Scalar> double_star(const CurvatureField<Scalar>& F, Metric m) {
  return star(star(F, m), m);
}

}  // namespace sdym
