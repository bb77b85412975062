#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace sdym;
using oracle::cd;

namespace {

// Objective straight from the oracle path.
double oracle_objective(const ConnectionField<double>& A, const DualityProblem& p) {
  const auto R = oracle::residual(oracle::curvature(support::to_oracle(A)), p.metric == Metric::euclid,
                                  p.orientation == Orientation::self_dual);
  double s = 0;
  for (const auto& m : R.v) s += m.squaredNorm();
  return s;
}

}  // namespace

TEST_CASE("objective examples") {
  const DualityProblem p{Metric::euclid, Orientation::self_dual};
  const Window w3({3, 3, 3, 3});
  CHECK(objective(zero_connection<double>(w3, AlgebraKind::su2), p) == 0.0);
  const Mat2cd X = random_algebra<double>(5, AlgebraKind::su2, 1.0);
  CHECK(objective(constant_connection<double>(w3, AlgebraKind::su2, {X, X, X, X}), p) == 0.0);

  const Window w2({2, 2, 2, 2});
  const auto A = constant_connection<double>(w2, AlgebraKind::su2, {basis<double>(1), basis<double>(2), Mat2cd::Zero(), Mat2cd::Zero()});
  CHECK(objective(A, p) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(oracle_objective(A, p) == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("coordinates round trip") {
  const Window w({2, 3, 2, 2});
  for (auto kind : {AlgebraKind::su2, AlgebraKind::sl2c}) {
    const auto A = random_connection<double>(w, kind, 4, 1.0);
    const auto x = to_coordinates(A);
    CHECK(x.size() == static_cast<Eigen::Index>(w.size() * 4 * coordinates_per_slot(kind)));
    CHECK(max_abs_difference(from_coordinates(x, w, kind), A) < 1e-15);
  }
  CHECK_THROWS_AS(from_coordinates(VectorX<double>(3), w, AlgebraKind::su2), std::invalid_argument);
}

TEST_CASE("gradient vanishes at the flat connection") {
  const Window w({3, 3, 3, 3});
  for (const auto& p : support::kProblems) CHECK(gradient(zero_connection<double>(w, AlgebraKind::su2), p).norm() == 0.0);
}

TEST_CASE("gradient agrees with central differences") {
  const Window w({3, 3, 3, 3});
  const double h = 1e-6;
  std::mt19937_64 rng(2024);
  for (const auto& p : support::kProblems) {
    for (auto kind : {AlgebraKind::su2, AlgebraKind::sl2c}) {
      const auto A = random_connection<double>(w, kind, 31, 0.5);
      const VectorX<double> x = to_coordinates(A);
      const VectorX<double> g = gradient(A, p);
      std::uniform_int_distribution<Eigen::Index> pick(0, x.size() - 1);
      double worst = 0;
      for (int n = 0; n < 30; ++n) {
        const Eigen::Index c = pick(rng);
        const double fd = support::central_difference(A, p, c, h);
        worst = std::max(worst, std::abs(fd - g(c)) / std::max(std::abs(fd), std::abs(g(c))));
      }
      CAPTURE(to_string(p.metric));
      CAPTURE(to_string(kind));
      CHECK(worst <= 1e-6);
    }
  }
}

TEST_CASE("directional derivative along A itself") {
  const Window w({3, 3, 3, 3});
  const DualityProblem p{Metric::mink, Orientation::self_dual};
  const auto A = random_connection<double>(w, AlgebraKind::sl2c, 8, 0.3);
  const VectorX<double> x = to_coordinates(A);
  const double h = 1e-6;
  const double fd = (objective(from_coordinates<double>((1 + h) * x, w, AlgebraKind::sl2c), p) -
                     objective(from_coordinates<double>((1 - h) * x, w, AlgebraKind::sl2c), p)) /
                    (2 * h);
  const double an = gradient(A, p).dot(x);
  CHECK(std::abs(fd - an) <= 1e-6 * std::abs(an));
  // at t = 0 both sides vanish
  CHECK(gradient(zero_connection<double>(w, AlgebraKind::sl2c), p).dot(x) == 0.0);
}

TEST_CASE("curvature tangent is the derivative of curvature") {
  const Window w({3, 3, 3, 3});
  const auto A = random_connection<double>(w, AlgebraKind::sl2c, 3, 0.5);
  const auto dA = random_connection<double>(w, AlgebraKind::sl2c, 4, 1.0);
  const double h = 1e-6;
  const auto fd = (1.0 / (2 * h)) * (curvature(A + h * dA) - curvature(A - h * dA));
  CHECK(max_abs_difference(curvature_tangent(A, dA), fd) < 1e-8);
}

TEST_CASE("residual Jacobian") {
  const Window w({3, 3, 3, 3});
  std::mt19937_64 rng(6);
  for (const auto& p : support::kProblems) {
    for (auto kind : {AlgebraKind::su2, AlgebraKind::sl2c}) {
      const auto A = random_connection<double>(w, kind, 12, 0.5);
      const auto J = residual_jacobian(A, p);
      const VectorX<double> r = residual_vector(residual(curvature(A), p));
      CHECK((2.0 * (J.transpose() * r) - gradient(A, p)).cwiseAbs().maxCoeff() < 1e-12);

      VectorX<double> v(J.cols());
      std::normal_distribution<double> n;
      for (Eigen::Index c = 0; c < v.size(); ++c) v(c) = n(rng);
      const auto dA = from_coordinates(v, w, kind);
      const VectorX<double> direct = residual_vector(residual(curvature_tangent(A, dA), p));
      CHECK((J * v - direct).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("solve from the flat connection returns immediately") {
  SolveConfig cfg;
  cfg.problem = {Metric::euclid, Orientation::self_dual};
  const auto r = solve(zero_connection<double>(Window({3, 3, 3, 3}), AlgebraKind::su2), cfg);
  CHECK(r.report.converged);
  CHECK(r.report.iterations == 0);
  CHECK(r.report.final_residual == 0.0);
  CHECK(r.report.reason == StopReason::converged);
}

TEST_CASE("solve converges from a small random start with a non-increasing trace") {
  SolveConfig cfg;
  cfg.problem = {Metric::euclid, Orientation::self_dual};
  const auto r = solve(random_connection<double>(Window({3, 3, 3, 3}), AlgebraKind::su2, 0, 1e-2), cfg);
  CHECK(r.report.converged);
  CHECK(r.report.final_residual <= 1e-8);
  CHECK(r.report.iterations <= 10000);
  for (std::size_t n = 1; n < r.report.residual_trace.size(); ++n)
    CHECK(r.report.residual_trace[n].residual < r.report.residual_trace[n - 1].residual);
  CHECK(std::sqrt(objective(r.connection, cfg.problem)) == r.report.final_residual);
}

TEST_CASE("solve in Minkowski signature over sl(2,C)") {
  SolveConfig cfg;
  cfg.problem = {Metric::mink, Orientation::anti_self_dual};
  const auto r = solve(random_connection<double>(Window({2, 2, 2, 2}), AlgebraKind::sl2c, 9, 1e-2), cfg);
  CHECK(r.report.converged);
  CHECK(r.report.final_residual <= 1e-8);
}

TEST_CASE("gradient descent keeps the trace monotone") {
  SolveConfig cfg;
  cfg.problem = {Metric::euclid, Orientation::anti_self_dual};
  cfg.method = SolveMethod::gradient_descent;
  cfg.max_iter = 200;
  cfg.trace_every = 10;
  const auto r = solve(random_connection<double>(Window({3, 3, 3, 3}), AlgebraKind::su2, 2, 1e-1), cfg);
  const auto& t = r.report.residual_trace;
  CHECK(t.front().iteration == 0);
  CHECK(t.back().iteration == r.report.iterations);
  for (std::size_t n = 1; n < t.size(); ++n) CHECK(t[n].residual <= t[n - 1].residual);
  CHECK(t.back().residual < t.front().residual);
}

TEST_CASE("solve configuration is validated") {
  const auto A = zero_connection<double>(Window({2, 2, 2, 2}), AlgebraKind::su2);
  SolveConfig cfg;
  cfg.backtrack = 1.0;
  CHECK_THROWS_AS(solve(A, cfg), std::invalid_argument);
  cfg = SolveConfig{};
  cfg.tol = 0;
  CHECK_THROWS_AS(solve(A, cfg), std::invalid_argument);
  CHECK_THROWS_AS(solve(zero_connection<double>(Window({2, 2, 2, 2}, Boundary::zero), AlgebraKind::su2), SolveConfig{}),
                  std::invalid_argument);
  CHECK(parse_solve_method("gd") == SolveMethod::gradient_descent);
  CHECK_THROWS_AS(parse_solve_method("newton"), std::invalid_argument);
}

TEST_CASE("identical inputs give bitwise identical traces") {
  SolveConfig cfg;
  cfg.problem = {Metric::mink, Orientation::self_dual};
  const auto A0 = random_connection<double>(Window({2, 2, 2, 2}), AlgebraKind::sl2c, 5, 1e-2);
  for (auto method : {SolveMethod::gauss_newton, SolveMethod::gradient_descent}) {
    cfg.method = method;
    cfg.max_iter = 50;
    const auto a = solve(A0, cfg), b = solve(A0, cfg);
    REQUIRE(a.report.residual_trace.size() == b.report.residual_trace.size());
    for (std::size_t n = 0; n < a.report.residual_trace.size(); ++n) {
      CHECK(a.report.residual_trace[n].residual == b.report.residual_trace[n].residual);
      CHECK(a.report.residual_trace[n].step == b.report.residual_trace[n].step);
    }
    CHECK(identical(a.connection, b.connection));
  }
}
