#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace sdym;
using oracle::cd;

TEST_CASE("basis matrices are -i/2 times the Pauli matrices") {
  Mat2cd expected;
  expected << cd(0, -0.5), 0, 0, cd(0, 0.5);
  CHECK(basis<double>(3) == expected);
  for (int a = 1; a <= 3; ++a) CHECK(max_abs<double>(basis<double>(a) - oracle::lambda(a)) == 0.0);
  CHECK_THROWS_AS(basis<double>(0), std::out_of_range);
  CHECK_THROWS_AS(basis<double>(4), std::out_of_range);
}

TEST_CASE("basis is orthogonal with norm 1/2 under trace(X^H Y)") {
  for (int a = 1; a <= 3; ++a) {
    CHECK(is_su2<double>(basis<double>(a)));
    for (int b = 1; b <= 3; ++b) {
      const cd ip = (oracle::lambda(a).adjoint() * oracle::lambda(b)).trace();
      CHECK(inner<double>(basis<double>(a), basis<double>(b)) == ip);
      CHECK(ip == cd(a == b ? 0.5 : 0.0, 0));
    }
  }
}

TEST_CASE("structure constants [l_a, l_b] = eps_abc l_c") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      Mat2cd expected = Mat2cd::Zero();
      for (int c = 1; c <= 3; ++c) expected += double(oracle::levi_civita(a, b, c)) * oracle::lambda(c);
      const Mat2cd direct = oracle::lambda(a) * oracle::lambda(b) - oracle::lambda(b) * oracle::lambda(a);
      CHECK(max_abs<double>(direct - expected) < 1e-16);
      CHECK(max_abs<double>(commutator<double>(basis<double>(a), basis<double>(b)) - expected) < 1e-16);
    }
  }
  CHECK(commutator<double>(basis<double>(2), basis<double>(1)) == Mat2cd(-basis<double>(3)));
  const Mat2cd X = random_algebra<double>(3, AlgebraKind::sl2c, 1.0);
  CHECK(commutator<double>(X, X) == Mat2cd::Zero());
}

TEST_CASE("frobenius norm") {
  CHECK(frobenius_norm<double>(Mat2cd::Zero()) == 0.0);
  CHECK(frobenius_norm<double>(Mat2cd::Identity()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(frobenius_norm<double>(basis<double>(1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("random algebra elements: membership, determinism, closure") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Mat2cd X = random_algebra<double>(s, AlgebraKind::su2, 1.0);
    const Mat2cd Y = random_algebra<double>(s + 1000, AlgebraKind::su2, 1.0);
    CHECK(is_su2<double>(X));
    CHECK(is_su2<double>(commutator<double>(X, Y)));
    CHECK(random_algebra<double>(s, AlgebraKind::su2, 1.0) == X);

    const Mat2cd Z = random_algebra<double>(s, AlgebraKind::sl2c, 1.0);
    CHECK(std::abs(Z.trace()) < 1e-15);
    CHECK(is_sl2c<double>(commutator<double>(Z, Y)));
  }
  CHECK(random_algebra<double>(1, AlgebraKind::su2, 1.0) != random_algebra<double>(2, AlgebraKind::su2, 1.0));
  CHECK_FALSE(is_su2<double>(Mat2cd::Identity()));
  CHECK_FALSE(is_sl2c<double>(Mat2cd::Identity()));
}

TEST_CASE("coefficients invert from_coefficients") {
  const Mat2cd X = random_algebra<double>(11, AlgebraKind::sl2c, 2.0);
  const auto z = coefficients<double>(X);
  CHECK(max_abs<double>(from_coefficients<double>(z) - X) < 1e-15);
  Mat2cd manual = Mat2cd::Zero();
  for (int a = 0; a < 3; ++a) manual += z(a) * oracle::lambda(a + 1);
  CHECK(max_abs<double>(manual - X) < 1e-15);
}

TEST_CASE("exp of traceless matrices agrees with a Taylor series") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Mat2cd X = random_algebra<double>(s, AlgebraKind::sl2c, 1.0);
    Mat2cd term = Mat2cd::Identity(), sum = Mat2cd::Identity();
    for (int n = 1; n < 40; ++n) {
      term = term * X / double(n);
      sum += term;
    }
    CHECK(max_abs<double>(exp_traceless<double>(X) - sum) < 1e-13);
  }
  CHECK(max_abs<double>(exp_traceless<double>(Mat2cd::Zero()) - Mat2cd::Identity()) == 0.0);
}

TEST_CASE("random group elements and their inverses") {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 100; ++n) {
    for (auto kind : {AlgebraKind::su2, AlgebraKind::sl2c}) {
      const auto g = random_group<double>(rng, kind, 1.0);
      CHECK(GroupElement<double>::is_group_member(g.matrix(), kind));
      CHECK(max_abs<double>(g.matrix() * g.inverse() - Mat2cd::Identity()) <= 1e-12);
      CHECK(max_abs<double>(g.inverse() * g.matrix() - Mat2cd::Identity()) <= 1e-12);
    }
  }
}

TEST_CASE("group membership is enforced") {
  Mat2cd m;
  m << 2, 0, 0, 0.5;
  CHECK_NOTHROW(GroupElement<double>(m, AlgebraKind::sl2c));
  CHECK_THROWS_AS(GroupElement<double>(m, AlgebraKind::su2), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement<double>(Mat2cd(2.0 * Mat2cd::Identity()), AlgebraKind::sl2c), std::invalid_argument);
  CHECK(GroupElement<double>::identity().matrix() == Mat2cd::Identity());
}

TEST_CASE("algebra kind names") {
  CHECK(parse_algebra_kind("su2") == AlgebraKind::su2);
  CHECK(parse_algebra_kind("sl2c") == AlgebraKind::sl2c);
  CHECK_THROWS_AS(parse_algebra_kind("u1"), std::invalid_argument);
  CHECK(to_string(AlgebraKind::sl2c) == "sl2c");
}
