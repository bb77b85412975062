#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdym {

/// Lattice axis, 1-based (1..4).
using Axis = int;

inline void check_axis(Axis i) {
  if (i < 1 || i > 4) throw std::out_of_range("axis must be in 1..4, got " + std::to_string(i));
}

/// Multi-index k = (k1, k2, k3, k4) in Z^4.
struct LatticeIndex {
  std::array<std::int64_t, 4> k{};

  /// Component on a 1-based axis.
  std::int64_t operator()(Axis i) const { return k[static_cast<std::size_t>(i - 1)]; }
  std::int64_t& operator()(Axis i) { return k[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

enum class Direction { up, down };

inline std::int64_t step(Direction d) { return d == Direction::up ? 1 : -1; }

/// tau_i k: increment component i.
inline LatticeIndex shift_up(LatticeIndex k, Axis i) {
  check_axis(i);
  ++k(i);
  return k;
}

/// sigma_i k: decrement component i.
inline LatticeIndex shift_down(LatticeIndex k, Axis i) {
  check_axis(i);
  --k(i);
  return k;
}

inline LatticeIndex shift(LatticeIndex k, Axis i, Direction d) {
  return d == Direction::up ? shift_up(k, i) : shift_down(k, i);
}

/// tau_ij / sigma_ij: shift two distinct components one step in the same direction.
inline LatticeIndex shift_pair(LatticeIndex k, Axis i, Axis j, Direction d) {
  check_axis(i);
  check_axis(j);
  if (i == j) throw std::invalid_argument("shift_pair requires distinct axes, got " + std::to_string(i) + " twice");
  k(i) += step(d);
  k(j) += step(d);
  return k;
}

/// Diagonal shift: all four components one step in the same direction.
inline LatticeIndex shift_diag(LatticeIndex k, Direction d) {
  for (auto& c : k.k) c += step(d);
  return k;
}

enum class Boundary { periodic, zero };

inline std::string_view to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "zero"; }

inline Boundary parse_boundary(std::string_view s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "zero") return Boundary::zero;
  throw std::invalid_argument("unknown boundary mode '" + std::string(s) + "'");
}

/// Finite box [0,N1) x ... x [0,N4) of Z^4 with a rule for reads outside it.
///
/// Sites are enumerated row-major over (k1, k2, k3, k4), k4 fastest.
class Window {
 public:
  using Dims = std::array<std::int64_t, 4>;

  Window() : Window(Dims{1, 1, 1, 1}) {}

  explicit Window(Dims dims, Boundary boundary = Boundary::periodic) : dims_(dims), boundary_(boundary) {
    for (auto n : dims_)
      if (n < 1) throw std::invalid_argument("window dimensions must be positive");
  }

  const Dims& dims() const { return dims_; }
  std::int64_t dim(Axis i) const { return dims_[static_cast<std::size_t>(i - 1)]; }
  Boundary boundary() const { return boundary_; }

  std::size_t size() const { return static_cast<std::size_t>(dims_[0] * dims_[1] * dims_[2] * dims_[3]); }

  bool contains(const LatticeIndex& k) const {
    for (std::size_t a = 0; a < 4; ++a)
      if (k.k[a] < 0 || k.k[a] >= dims_[a]) return false;
    return true;
  }

  /// Periodic: componentwise modulo dims. Zero: k itself if inside, nullopt otherwise.
  std::optional<LatticeIndex> wrap(LatticeIndex k) const {
    if (boundary_ == Boundary::zero) return contains(k) ? std::optional<LatticeIndex>(k) : std::nullopt;
    for (std::size_t a = 0; a < 4; ++a) {
      k.k[a] %= dims_[a];
      if (k.k[a] < 0) k.k[a] += dims_[a];
    }
    return k;
  }

  /// Linear offset of an in-window site.
  std::size_t offset(const LatticeIndex& k) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < 4; ++a) off = off * static_cast<std::size_t>(dims_[a]) + static_cast<std::size_t>(k.k[a]);
    return off;
  }

  /// Offset of the site a read at k resolves to, or nullopt when the read falls outside a zero window.
  std::optional<std::size_t> resolve(const LatticeIndex& k) const {
    const auto w = wrap(k);
    if (!w) return std::nullopt;
    return offset(*w);
  }

  LatticeIndex site(std::size_t offset) const {
    LatticeIndex k;
    for (std::size_t a = 4; a-- > 0;) {
      const auto n = static_cast<std::size_t>(dims_[a]);
      k.k[a] = static_cast<std::int64_t>(offset % n);
      offset /= n;
    }
    return k;
  }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Dims dims_;
  Boundary boundary_;
};

/// Oriented coordinate plane (i, j) with i < j.
struct Plane {
  Axis i;
  Axis j;
  friend constexpr bool operator==(const Plane&, const Plane&) = default;
};

/// Canonical plane order 12, 13, 14, 23, 24, 34. Used by storage, serialization and the star tables.
inline constexpr std::array<Plane, 6> kPlanes{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Position of plane (i, j), i < j, in the canonical order.
inline std::size_t plane_index(Axis i, Axis j) {
  for (std::size_t p = 0; p < kPlanes.size(); ++p)
    if (kPlanes[p].i == i && kPlanes[p].j == j) return p;
  throw std::invalid_argument("no canonical plane (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

inline std::string plane_name(const Plane& p) { return std::to_string(p.i) + std::to_string(p.j); }

}  // namespace sdym
