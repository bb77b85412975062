#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdym/algebra.hpp"
#include "sdym/lattice.hpp"

namespace sdym {

/// Dense matrix-valued cochain over a Window: `Slots` matrices per site.
///
/// Slots = 1: 0-cochain (gauge field g_k); 4: connection A_k^i (slot i-1); 6: curvature F_k^{ij}
/// in canonical plane order.
template <typename Scalar, int Slots>
class Cochain {
 public:
  using Matrix = Mat2<Scalar>;
  static constexpr int kSlots = Slots;

  Cochain() = default;

  Cochain(const Window& window, AlgebraKind kind)
      : window_(window), kind_(kind), data_(window.size() * Slots, Matrix::Zero()) {}

  /// Fill every (site, slot) from `f(LatticeIndex, slot)`.
  template <typename F>
  static Cochain generate(const Window& window, AlgebraKind kind, F&& f) {
    Cochain c(window, kind);
    for (std::size_t s = 0; s < window.size(); ++s) {
      const LatticeIndex k = window.site(s);
      for (int slot = 0; slot < Slots; ++slot) c(s, slot) = f(k, slot);
    }
    return c;
  }

  const Window& window() const { return window_; }
  AlgebraKind kind() const { return kind_; }
  void set_kind(AlgebraKind kind) { kind_ = kind; }

  std::size_t sites() const { return window_.size(); }

  Matrix& operator()(std::size_t site, int slot) { return data_[site * Slots + static_cast<std::size_t>(slot)]; }
  const Matrix& operator()(std::size_t site, int slot) const {
    return data_[site * Slots + static_cast<std::size_t>(slot)];
  }

  Matrix& operator()(const LatticeIndex& k, int slot) { return (*this)(checked_offset(k), slot); }
  const Matrix& operator()(const LatticeIndex& k, int slot) const { return (*this)(checked_offset(k), slot); }

  /// Read at an arbitrary k in Z^4, resolved by the window's boundary mode.
  Matrix at(const LatticeIndex& k, int slot, const Matrix& outside = Matrix::Zero()) const {
    const auto off = window_.resolve(k);
    return off ? (*this)(*off, slot) : outside;
  }

  std::vector<Matrix>& data() { return data_; }
  const std::vector<Matrix>& data() const { return data_; }

  Cochain& operator+=(const Cochain& o) {
    require_compatible(o);
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += o.data_[n];
    return *this;
  }

  Cochain& operator-=(const Cochain& o) {
    require_compatible(o);
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] -= o.data_[n];
    return *this;
  }

  Cochain& operator*=(const Complex<Scalar>& c) {
    for (auto& m : data_) m *= c;
    return *this;
  }

  void require_compatible(const Cochain& o) const {
    if (!(window_ == o.window_)) throw std::invalid_argument("cochain window mismatch");
  }

 private:
  std::size_t checked_offset(const LatticeIndex& k) const {
    if (!window_.contains(k)) throw std::out_of_range("site outside window");
    return window_.offset(k);
  }

  Window window_;
  AlgebraKind kind_ = AlgebraKind::su2;
  std::vector<Matrix> data_;
};

template <typename Scalar>
using ConnectionField = Cochain<Scalar, 4>;
template <typename Scalar>
using CurvatureField = Cochain<Scalar, 6>;
template <typename Scalar>
using GaugeField = Cochain<Scalar, 1>;

template <typename Scalar, int Slots>
Cochain<Scalar, Slots> operator+(Cochain<Scalar, Slots> a, const Cochain<Scalar, Slots>& b) {
  return a += b;
}

template <typename Scalar, int Slots>
Cochain<Scalar, Slots> operator-(Cochain<Scalar, Slots> a, const Cochain<Scalar, Slots>& b) {
  return a -= b;
}

template <typename Scalar, int Slots>
Cochain<Scalar, Slots> operator-(Cochain<Scalar, Slots> a) {
  return a *= Complex<Scalar>(-1);
}

template <typename Scalar, int Slots>
Cochain<Scalar, Slots> operator*(const Complex<Scalar>& c, Cochain<Scalar, Slots> a) {
  return a *= c;
}

template <typename Scalar, int Slots>
Cochain<Scalar, Slots> operator*(Scalar c, Cochain<Scalar, Slots> a) {
  return a *= Complex<Scalar>(c);
}

/// A_k^i for a connection (1-based axis), zero outside a zero-boundary window.
template <typename Scalar>
Mat2<Scalar> component(const ConnectionField<Scalar>& A, const LatticeIndex& k, Axis i) {
  return A.at(k, i - 1);
}

/// F_k^{ij} for any ordered pair: stored for i < j, -F_k^{ji} for i > j, zero for i == j.
template <typename Scalar>
Mat2<Scalar> component(const CurvatureField<Scalar>& F, const LatticeIndex& k, Axis i, Axis j) {
  if (i == j) return Mat2<Scalar>::Zero();
  if (i > j) return -F.at(k, static_cast<int>(plane_index(j, i)));
  return F.at(k, static_cast<int>(plane_index(i, j)));
}

/// Forward difference Delta_{k_i} A_k^j = A_{tau_i k}^j - A_k^j.
template <typename Scalar>
Mat2<Scalar> delta(const ConnectionField<Scalar>& A, Axis diff_axis, Axis comp_axis, const LatticeIndex& k) {
  return component(A, shift_up(k, diff_axis), comp_axis) - component(A, k, comp_axis);
}

/// sqrt of the summed squared Frobenius norms of every slot.
template <typename Scalar, int Slots>
Scalar field_norm(const Cochain<Scalar, Slots>& c) {
  Scalar s = 0;
  for (const auto& m : c.data()) s += m.squaredNorm();
  return std::sqrt(s);
}

/// Largest entry modulus over all slots.
template <typename Scalar, int Slots>
Scalar max_abs(const Cochain<Scalar, Slots>& c) {
  Scalar s = 0;
  for (const auto& m : c.data()) s = std::max(s, max_abs<Scalar>(m));
  return s;
}

template <typename Scalar, int Slots>
Scalar max_abs_difference(const Cochain<Scalar, Slots>& a, const Cochain<Scalar, Slots>& b) {
  a.require_compatible(b);
  Scalar s = 0;
  for (std::size_t n = 0; n < a.data().size(); ++n) s = std::max(s, max_abs<Scalar>(a.data()[n] - b.data()[n]));
  return s;
}

/// Slotwise exact equality, including window.
template <typename Scalar, int Slots>
bool identical(const Cochain<Scalar, Slots>& a, const Cochain<Scalar, Slots>& b) {
  return a.window() == b.window() && a.data() == b.data();
}

/// (S c)_k = c_{sigma k} for `down`, c_{tau k} for `up`, with boundary-resolved reads.
template <typename Scalar, int Slots>
Cochain<Scalar, Slots> shift_diag(const Cochain<Scalar, Slots>& c, Direction d) {
  return Cochain<Scalar, Slots>::generate(c.window(), c.kind(),
                                          [&](const LatticeIndex& k, int slot) { return c.at(shift_diag(k, d), slot); });
}

}  // namespace sdym
