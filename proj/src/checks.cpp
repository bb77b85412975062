#include "sdym/checks.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <string>

namespace sdym::checks {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string site_name(const LatticeIndex& k) {
  std::string s = "(";
  for (std::size_t a = 0; a < 4; ++a) s += std::to_string(k.k[a]) + (a < 3 ? "," : ")");
  return s;
}

constexpr std::array<DualityProblem, 4> kAllProblems{{
    {Metric::euclid, Orientation::self_dual},
    {Metric::euclid, Orientation::anti_self_dual},
    {Metric::mink, Orientation::self_dual},
    {Metric::mink, Orientation::anti_self_dual},
}};

std::string problem_name(const DualityProblem& p) {
  return std::string(to_string(p.metric)) + "/" + std::string(to_string(p.orientation));
}

AlgebraKind kind_for(Metric m) { return m == Metric::euclid ? AlgebraKind::su2 : AlgebraKind::sl2c; }

/// Expected image of an impulse at `source` on site k0: (target plane, site, sign).
struct Expectation {
  Plane source;
  Plane target;
  int sign;
};

// Euclidean basis relations: *eps_source^k = sign * eps_target^{tau_source k}.
constexpr std::array<Expectation, 6> kEuclidBasis{{
    {{1, 2}, {3, 4}, +1},
    {{1, 3}, {2, 4}, -1},
    {{1, 4}, {2, 3}, +1},
    {{2, 3}, {1, 4}, +1},
    {{2, 4}, {1, 3}, -1},
    {{3, 4}, {1, 2}, +1},
}};

// Minkowski component relations: (*F)^{target}_k = sign * F^{source}_{sigma_source k}.
constexpr std::array<Expectation, 6> kMinkComponents{{
    {{3, 4}, {1, 2}, +1},
    {{2, 4}, {1, 3}, -1},
    {{2, 3}, {1, 4}, +1},
    {{1, 4}, {2, 3}, -1},
    {{1, 3}, {2, 4}, +1},
    {{1, 2}, {3, 4}, -1},
}};

bool impulse_maps_to(const CurvatureField<double>& image, const Plane& target, const LatticeIndex& site, const Mat2cd& value) {
  const auto t = static_cast<int>(plane_index(target.i, target.j));
  const auto off = *image.window().resolve(site);
  for (std::size_t s = 0; s < image.sites(); ++s) {
    for (int slot = 0; slot < 6; ++slot) {
      const Mat2cd expected = (s == off && slot == t) ? value : Mat2cd::Zero();
      if (image(s, slot) != expected) return false;
    }
  }
  return true;
}

}  // namespace

CurvatureField<double> impulse(const Window& w, const Plane& plane, const LatticeIndex& site, const Mat2cd& value) {
  CurvatureField<double> F(w, is_su2(value) ? AlgebraKind::su2 : AlgebraKind::sl2c);
  F(site, static_cast<int>(plane_index(plane.i, plane.j))) = value;
  return F;
}

CurvatureField<double> random_compact_curvature(const Window& w, std::int64_t bound, int sites, std::uint64_t seed,
                                                AlgebraKind kind, double scale) {
  if (bound < 1) throw std::invalid_argument("random_compact_curvature: bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, bound - 1);
  std::uniform_int_distribution<int> plane(0, 5);
  CurvatureField<double> F(w, kind);
  for (int n = 0; n < sites; ++n) {
    LatticeIndex k;
    for (auto& c : k.k) c = coord(rng);
    const int p = plane(rng);
    F(k, p) += random_algebra<double>(rng, kind, scale);
  }
  return F;
}

CheckResult star_table_impulses() {
  CheckResult r;
  const Window w({4, 4, 4, 4});
  const LatticeIndex k0{{1, 2, 0, 3}};
  const Mat2cd M = basis(1) + 2.0 * basis(3);

  for (const auto& e : kEuclidBasis) {
    const CurvatureField<double> image = star(impulse(w, e.source, k0, M), Metric::euclid);
    const LatticeIndex site = shift_pair(k0, e.source.i, e.source.j, Direction::up);
    const bool ok = impulse_maps_to(image, e.target, site, double(e.sign) * M);
    r.record(ok, "euclid *eps_" + plane_name(e.source) + " = " + (e.sign > 0 ? "+" : "-") + "eps_" + plane_name(e.target) +
                     " at tau_" + plane_name(e.source) + " k");
  }
  for (const auto& e : kMinkComponents) {
    const CurvatureField<double> image = star(impulse(w, e.source, k0, M), Metric::mink);
    const LatticeIndex site = shift_pair(k0, e.source.i, e.source.j, Direction::up);
    const bool ok = impulse_maps_to(image, e.target, site, double(e.sign) * M);
    r.record(ok, "mink (*F)^" + plane_name(e.target) + "_k = " + (e.sign > 0 ? "+" : "-") + "F^" + plane_name(e.source) +
                     "_{sigma_" + plane_name(e.source) + " k}");
  }
  return r;
}

CheckResult diagonal_relation_family(std::uint64_t seed, int count, const Window::Dims& dims) {
  CheckResult r;
  const Window w(dims, Boundary::periodic);
  for (const auto& p : kAllProblems) {
    double worst_violation = 0, worst_residual = 0;
    bool ok = true;
    for (int n = 0; n < count; ++n) {
      const auto slice = random_diagonal_slice<double>(w, kind_for(p.metric), seed + static_cast<std::uint64_t>(n), 1.0);
      const auto F = synthetic_sd_curvature(slice, p);
      const auto rep = check_diagonal_relation(F);
      const double res = max_abs(residual(F, p));
      worst_violation = std::max(worst_violation, rep.max_violation);
      worst_residual = std::max(worst_residual, res);
      ok = ok && rep.max_violation == 0.0 && res == 0.0;
    }
    r.record(ok, "synthetic " + problem_name(p) + ": " + std::to_string(count) + " fields, residual " + fmt(worst_residual) +
                     ", diagonal violation " + fmt(worst_violation));
  }

  std::mt19937_64 rng(seed);
  bool all_fail = true;
  for (int n = 0; n < count; ++n) {
    LatticeIndex k;
    for (std::size_t a = 0; a < 4; ++a) k.k[a] = std::uniform_int_distribution<std::int64_t>(0, dims[a] - 1)(rng);
    const Plane& pl = kPlanes[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
    const auto F = impulse(w, pl, k, random_algebra<double>(rng, AlgebraKind::su2, 1.0));
    all_fail = all_fail && !check_diagonal_relation(F).holds;
  }
  r.record(all_fail, "single impulses: " + std::to_string(count) + " fields all violate the diagonal relation");
  return r;
}

CheckResult proposition1_family(std::uint64_t seed, int count, const Window::Dims& dims) {
  CheckResult r;
  const Window w(dims, Boundary::periodic);
  for (Orientation o : {Orientation::self_dual, Orientation::anti_self_dual}) {
    const DualityProblem p{Metric::euclid, o};
    bool ok = true;
    for (int n = 0; n < count; ++n) {
      const auto F = synthetic_sd_curvature(random_diagonal_slice<double>(w, AlgebraKind::su2, seed + static_cast<std::uint64_t>(n), 1.0), p);
      ok = ok && identical(double_star(F, Metric::euclid), F);
    }
    r.record(ok, "euclid/" + std::string(to_string(o)) + ": **F == F on " + std::to_string(count) + " synthetic fields");
  }
  return r;
}

CheckResult proposition2_family(std::uint64_t seed, int count, const Window::Dims& dims) {
  CheckResult r;
  const Window w(dims, Boundary::periodic);
  for (Orientation o : {Orientation::self_dual, Orientation::anti_self_dual}) {
    const DualityProblem p{Metric::mink, o};
    bool ok = true;
    for (int n = 0; n < count; ++n) {
      const auto F = synthetic_sd_curvature(random_diagonal_slice<double>(w, AlgebraKind::sl2c, seed + static_cast<std::uint64_t>(n), 1.0), p);
      ok = ok && check_diagonal_relation(F, 0.0).holds && identical(double_star(F, Metric::mink), -F);
    }
    r.record(ok, "mink/" + std::string(to_string(o)) + ": diagonal relation and **F == -F on " + std::to_string(count) + " synthetic fields");
  }
  return r;
}

CheckResult theorem_family(std::uint64_t seed, int count, const Window::Dims& dims) {
  CheckResult r;
  const Window w(dims, Boundary::zero);
  const std::int64_t max_bound = *std::min_element(dims.begin(), dims.end());
  std::mt19937_64 rng(seed);

  for (const auto& p : kAllProblems) {
    const auto rep = verify_triviality_theorem(CurvatureField<double>(w, kind_for(p.metric)), LatticeIndex{{1, 1, 1, 1}}, p);
    r.record(rep.verdict == TheoremVerdict::consistent, "zero field, " + problem_name(p) + ": " + std::string(to_string(rep.verdict)));
  }

  int support = 0, duality = 0, consistent = 0, contradiction = 0;
  for (int n = 0; n < count; ++n) {
    const auto& p = kAllProblems[static_cast<std::size_t>(n) % kAllProblems.size()];
    const std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, max_bound)(rng);
    const int sites = std::uniform_int_distribution<int>(1, 4)(rng);
    const LatticeIndex N{{b, std::uniform_int_distribution<std::int64_t>(0, b)(rng), 0, 0}};
    const auto F = random_compact_curvature(w, b, sites, rng(), kind_for(p.metric), 1.0);
    switch (verify_triviality_theorem(F, N, p).verdict) {
      case TheoremVerdict::consistent: ++consistent; break;
      case TheoremVerdict::violates_support: ++support; break;
      case TheoremVerdict::violates_duality: ++duality; break;
      case TheoremVerdict::nonzero_contradiction: ++contradiction; break;
    }
  }
  r.record(consistent == 0 && contradiction == 0,
           std::to_string(count) + " compactly supported nonzero fields: consistent " + std::to_string(consistent) +
               ", violates_duality " + std::to_string(duality) + ", violates_support " + std::to_string(support) +
               ", nonzero_contradiction " + std::to_string(contradiction));
  return r;
}

CheckResult path_equivalence_family(std::uint64_t seed, int count, const Window::Dims& dims, double tol) {
  CheckResult r;
  const Window w(dims, Boundary::periodic);
  for (const auto& p : kAllProblems) {
    double worst = 0;
    for (int n = 0; n < count; ++n) {
      const AlgebraKind kind = n % 2 == 0 ? AlgebraKind::su2 : AlgebraKind::sl2c;
      const auto A = random_connection<double>(w, kind, seed + static_cast<std::uint64_t>(n), 1.0);
      worst = std::max(worst, max_abs_difference(residual_componentwise(A, p), residual(curvature(A), p)));
    }
    r.record(worst <= tol, problem_name(p) + ": " + std::to_string(count) + " connections, max entry difference " + fmt(worst));
  }
  return r;
}

CheckResult diagonal_relation(const CurvatureField<double>& F) {
  CheckResult r;
  const auto rep = check_diagonal_relation(F);
  r.record(rep.holds, "F_k == F_{sigma k}: max violation " + fmt(rep.max_violation));
  return r;
}

CheckResult difference_form_13(const ConnectionField<double>& A) {
  CheckResult r;
  const auto direct = check_difference_form_13(A);
  const auto two_stage = check_diagonal_relation(curvature(A));
  r.record(direct.holds, "difference form on A: max violation " + fmt(direct.max_violation));
  r.record(direct.holds == two_stage.holds, "agrees with the diagonal relation of curvature(A) (violation " + fmt(two_stage.max_violation) + ")");
  return r;
}

CheckResult proposition1(const CurvatureField<double>& F) {
  CheckResult r;
  const auto rep = check_diagonal_relation(F);
  r.record(rep.holds, "premise F_k == F_{sigma k}: max violation " + fmt(rep.max_violation));
  const double d = max_abs_difference(double_star(F, Metric::euclid), F);
  r.record(d <= kDefaultTolerance, "euclid **F == F: max entry difference " + fmt(d));
  return r;
}

CheckResult proposition2(const CurvatureField<double>& F) {
  CheckResult r;
  const auto rep = check_diagonal_relation(F);
  r.record(rep.holds, "premise F_k == F_{sigma k}: max violation " + fmt(rep.max_violation));
  const double d = max_abs_difference(double_star(F, Metric::mink), -F);
  r.record(d <= kDefaultTolerance, "mink **F == -F: max entry difference " + fmt(d));
  return r;
}

CheckResult theorem(const CurvatureField<double>& F, const LatticeIndex& bound, const DualityProblem& p) {
  CheckResult r;
  const auto rep = verify_triviality_theorem(F, bound, p);
  r.record(rep.verdict != TheoremVerdict::nonzero_contradiction,
           "verdict " + std::string(to_string(rep.verdict)) + " (bound " + site_name(bound) + ", field max " + fmt(rep.field_max) +
               ", outside support " + fmt(rep.outside_support_max) + ", residual " + fmt(rep.residual_max) + ")");
  return r;
}

CheckResult path_equivalence(const ConnectionField<double>& A, double tol) {
  CheckResult r;
  for (const auto& p : kAllProblems) {
    const double d = max_abs_difference(residual_componentwise(A, p), residual(curvature(A), p));
    r.record(d <= tol, problem_name(p) + ": max entry difference " + fmt(d));
  }
  return r;
}

}  // namespace sdym::checks
