#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdym/sdym.hpp"

// Seeded verification families behind `sdym check`. Each returns a pass flag plus one
// human-readable line per sub-check.
namespace sdym::checks {

struct CheckResult {
  bool passed = true;
  std::vector<std::string> lines;

  void record(bool ok, std::string line) {
    passed = passed && ok;
    lines.push_back((ok ? "PASS " : "FAIL ") + std::move(line));
  }
};

/// Single-slot impulses through both star tables: 6 Euclidean basis relations, 6 Minkowski component relations.
CheckResult star_table_impulses();

/// Synthetic SD/ASD fields (both metrics) satisfy the diagonal relation; single impulses do not.
CheckResult diagonal_relation_family(std::uint64_t seed, int count, const Window::Dims& dims);

/// Euclidean synthetic SD/ASD fields: double star is the identity.
CheckResult proposition1_family(std::uint64_t seed, int count, const Window::Dims& dims);

/// Minkowski synthetic SD/ASD fields: diagonal relation holds and double star is minus the identity.
CheckResult proposition2_family(std::uint64_t seed, int count, const Window::Dims& dims);

/// Random compactly supported nonzero fields on a zero-boundary window are never `consistent`.
CheckResult theorem_family(std::uint64_t seed, int count, const Window::Dims& dims);

/// Componentwise residual agrees with the two-stage residual for random connections.
CheckResult path_equivalence_family(std::uint64_t seed, int count, const Window::Dims& dims, double tol = 1e-13);

CheckResult diagonal_relation(const CurvatureField<double>& F);
CheckResult difference_form_13(const ConnectionField<double>& A);
CheckResult proposition1(const CurvatureField<double>& F);
CheckResult proposition2(const CurvatureField<double>& F);
CheckResult theorem(const CurvatureField<double>& F, const LatticeIndex& bound, const DualityProblem& p);
CheckResult path_equivalence(const ConnectionField<double>& A, double tol = 1e-13);

/// Nonzero curvature supported on sites with max-norm < bound; `sites` random sites are populated
/// with random values on random planes.
CurvatureField<double> random_compact_curvature(const Window& w, std::int64_t bound, int sites, std::uint64_t seed,
                                                AlgebraKind kind, double scale);

/// Field with a single nonzero slot.
CurvatureField<double> impulse(const Window& w, const Plane& plane, const LatticeIndex& site, const Mat2cd& value);

}  // namespace sdym::checks
