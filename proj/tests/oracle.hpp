#pragma once

// Naive reference implementations used as test oracles. They share no code with the library
// beyond the Eigen matrix type: indexing, shifts and the star table are written out again here.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using M = Eigen::Matrix2cd;
using K = std::array<std::int64_t, 4>;
using cd = std::complex<double>;

struct Grid {
  K dims;
  bool periodic = true;

  std::int64_t sites() const { return dims[0] * dims[1] * dims[2] * dims[3]; }

  // Row-major with the last coordinate fastest; nullopt when a zero-boundary read leaves the box.
  std::optional<std::int64_t> index(K k) const {
    std::int64_t n = 0;
    for (int a = 0; a < 4; ++a) {
      if (periodic) {
        k[a] = ((k[a] % dims[a]) + dims[a]) % dims[a];
      } else if (k[a] < 0 || k[a] >= dims[a]) {
        return std::nullopt;
      }
      n = n * dims[a] + k[a];
    }
    return n;
  }

  K site(std::int64_t n) const {
    K k{};
    for (int a = 3; a >= 0; --a) {
      k[a] = n % dims[a];
      n /= dims[a];
    }
    return k;
  }
};

inline K up(K k, int axis) {
  k[axis - 1] += 1;
  return k;
}
inline K down(K k, int axis) {
  k[axis - 1] -= 1;
  return k;
}

// Field with `slots` matrices per site, stored [site][slot].
struct Field {
  Grid grid;
  int slots = 0;
  std::vector<M> v;

  Field(Grid g, int s) : grid(g), slots(s), v(static_cast<std::size_t>(g.sites() * s), M::Zero()) {}

  M get(const K& k, int slot) const {
    const auto n = grid.index(k);
    return n ? v[static_cast<std::size_t>(*n * slots + slot)] : M::Zero();
  }
  M& ref(const K& k, int slot) { return v[static_cast<std::size_t>(*grid.index(k) * slots + slot)]; }
};

// Plane numbering 0..5 for 12, 13, 14, 23, 24, 34.
inline constexpr std::array<std::array<int, 2>, 6> kPlane{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

inline int plane_of(int i, int j) {
  for (int p = 0; p < 6; ++p)
    if (kPlane[p][0] == i && kPlane[p][1] == j) return p;
  return -1;
}

// Connection slots are axis-1. F^{ij}_k written exactly as printed:
//   Delta_i A^j - Delta_j A^i + A^i_k A^j_{tau_i k} - A^j_k A^i_{tau_j k}
inline Field curvature(const Field& A) {
  Field F(A.grid, 6);
  for (std::int64_t n = 0; n < A.grid.sites(); ++n) {
    const K k = A.grid.site(n);
    for (int p = 0; p < 6; ++p) {
      const int i = kPlane[p][0], j = kPlane[p][1];
      const M dij = A.get(up(k, i), j - 1) - A.get(k, j - 1);
      const M dji = A.get(up(k, j), i - 1) - A.get(k, i - 1);
      F.ref(k, p) = dij - dji + A.get(k, i - 1) * A.get(up(k, i), j - 1) - A.get(k, j - 1) * A.get(up(k, j), i - 1);
    }
  }
  return F;
}

// Star, copied term by term from the printed expansions of *F:
//   euclid: + F34 e12 - F24 e13 + F23 e14 + F14 e23 - F13 e24 + F12 e34
//   mink:   + F34 e12 - F24 e13 + F23 e14 - F14 e23 + F13 e24 - F12 e34
// each source read at sigma_{source} k.
struct Row {
  int target, source_i, source_j, sign_euclid, sign_mink;
};
inline constexpr std::array<Row, 6> kStarRows{{
    {0, 3, 4, +1, +1},
    {1, 2, 4, -1, -1},
    {2, 2, 3, +1, +1},
    {3, 1, 4, +1, -1},
    {4, 1, 3, -1, +1},
    {5, 1, 2, +1, -1},
}};

inline Field star(const Field& F, bool euclid) {
  Field S(F.grid, 6);
  for (std::int64_t n = 0; n < F.grid.sites(); ++n) {
    const K k = F.grid.site(n);
    for (const Row& r : kStarRows) {
      const K from = down(down(k, r.source_i), r.source_j);
      const double sign = euclid ? r.sign_euclid : r.sign_mink;
      S.ref(k, r.target) = sign * F.get(from, plane_of(r.source_i, r.source_j));
    }
  }
  return S;
}

// Residual of the first-order equation: euclid F -/+ *F, mink *F -/+ iF.
inline Field residual(const Field& F, bool euclid, bool self_dual) {
  const Field S = star(F, euclid);
  Field R(F.grid, 6);
  const double s = self_dual ? 1.0 : -1.0;
  for (std::size_t n = 0; n < R.v.size(); ++n) {
    if (euclid)
      R.v[n] = F.v[n] - s * S.v[n];
    else
      R.v[n] = S.v[n] - s * cd(0, 1) * F.v[n];
  }
  return R;
}

inline double max_diff(const Field& a, const Field& b) {
  double m = 0;
  for (std::size_t n = 0; n < a.v.size(); ++n) m = std::max(m, (a.v[n] - b.v[n]).cwiseAbs().maxCoeff());
  return m;
}

// Pauli matrices and lambda_a = -(i/2) sigma_a, entered by hand.
inline M pauli(int a) {
  M s;
  switch (a) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cd(0, -1), cd(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}
inline M lambda(int a) { return cd(0, -0.5) * pauli(a); }

inline int levi_civita(int a, int b, int c) { return (a - b) * (b - c) * (c - a) / 2; }

}  // namespace oracle
