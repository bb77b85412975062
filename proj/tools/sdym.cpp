// sdym: command-line front end for the discrete self-dual Yang-Mills library.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdym/checks.hpp"
#include "sdym/io.hpp"
#include "sdym/sdym.hpp"

namespace {

using namespace sdym;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Input problem attributable to a specific flag or argument.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Window::Dims parse_dims(const std::string& text, const std::string& flag) {
  Window::Dims d{};
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == 4) throw UsageError(flag + ": expected 4 comma-separated integers, got '" + text + "'");
    try {
      std::size_t used = 0;
      d[n] = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not an integer");
    }
    ++n;
  }
  if (n != 4) throw UsageError(flag + ": expected 4 comma-separated integers, got '" + text + "'");
  return d;
}

Mat2cd parse_matrix(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("--matrix: '" + item + "' is not a number");
    }
  }
  if (v.size() != 8) throw UsageError("--matrix: expected 8 numbers (row-major re,im pairs)");
  Mat2cd m;
  m << Complex<double>(v[0], v[1]), Complex<double>(v[2], v[3]), Complex<double>(v[4], v[5]), Complex<double>(v[6], v[7]);
  return m;
}

template <typename Parse>
auto parse_flag(const std::string& flag, const std::string& value, Parse parse) {
  try {
    return parse(value);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

/// File metric must be "none" or agree with the requested one.
void require_metric(const io::FieldFile& f, Metric m, const std::string& path) {
  if (f.meta.metric != "none" && f.meta.metric != to_string(m))
    throw UsageError("--metric: " + std::string(to_string(m)) + " conflicts with metric '" + f.meta.metric + "' recorded in " + path);
}

io::FieldFile load_input(const std::string& path) {
  try {
    return io::load(path);
  } catch (const io::IoError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <int Slots>
const Cochain<double, Slots>& expect_rank(const io::FieldFile& f, const std::string& path) {
  try {
    return io::get<Slots>(f);
  } catch (const io::IoError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int print_check(const checks::CheckResult& r) {
  for (const auto& line : r.lines) std::cout << line << "\n";
  std::cout << (r.passed ? "check passed" : "check FAILED") << "\n";
  return r.passed ? kOk : kCheckFailed;
}

void write_trace(const std::string& path, const SolveReport& rep) {
  std::ofstream out(path);
  if (!out) throw UsageError("--trace: cannot open '" + path + "'");
  out << "iteration,residual,step\n";
  for (const auto& t : rep.residual_trace) out << t.iteration << "," << g17(t.residual) << "," << g17(t.step) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete self-dual Yang-Mills on Z^4: fields, Hodge star, duality checks and solver"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a connection field");
  std::string gen_kind = "zero", gen_dims = "4,4,4,4", gen_boundary = "periodic", gen_algebra = "su2", gen_out, gen_matrix;
  std::string gen_axes = "1,2,3,4";
  std::uint64_t gen_seed = 0;
  double gen_scale = 1.0;
  gen->add_option("--kind", gen_kind, "zero | constant | random | pure-gauge")->check(CLI::IsMember({"zero", "constant", "random", "pure-gauge"}));
  gen->add_option("--dims", gen_dims, "N1,N2,N3,N4");
  gen->add_option("--boundary", gen_boundary, "periodic | zero");
  gen->add_option("--algebra", gen_algebra, "su2 | sl2c");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--scale", gen_scale);
  gen->add_option("--matrix", gen_matrix, "constant kind: 8 numbers, row-major [re,im] entries");
  gen->add_option("--axes", gen_axes, "constant kind: axes that carry the matrix (others zero)");
  gen->add_option("-o,--output", gen_out)->required();

  // curv
  auto* curv = app.add_subcommand("curv", "curvature of a connection");
  std::string curv_in, curv_out, curv_metric = "none";
  curv->add_option("input", curv_in)->required();
  curv->add_option("-o,--output", curv_out)->required();
  curv->add_option("--metric", curv_metric, "provenance recorded in the output");

  // star
  auto* st = app.add_subcommand("star", "Hodge star of a curvature field");
  std::string star_in, star_out, star_metric;
  st->add_option("input", star_in)->required();
  st->add_option("-o,--output", star_out)->required();
  st->add_option("--metric", star_metric, "euclid | mink")->required();

  // residual
  auto* res = app.add_subcommand("residual", "duality residual of a curvature (or connection) field");
  std::string res_in, res_metric, res_dual;
  res->add_option("input", res_in)->required();
  res->add_option("--metric", res_metric, "euclid | mink")->required();
  res->add_option("--dual", res_dual, "sd | asd")->required();

  // check
  auto* chk = app.add_subcommand("check", "verify an identity; exit 1 on failure");
  std::string chk_relation, chk_in, chk_metric = "euclid", chk_dual = "sd", chk_bound = "3,3,3,3", chk_dims;
  std::uint64_t chk_seed = 0;
  int chk_count = 100;
  chk->add_option("--relation", chk_relation, "13 | prop1 | prop2 | theorem | star-table | path-equivalence")
      ->required()
      ->check(CLI::IsMember({"13", "prop1", "prop2", "theorem", "star-table", "path-equivalence"}));
  chk->add_option("input", chk_in, "optional field file; seeded families are used when omitted");
  chk->add_option("--seed", chk_seed);
  chk->add_option("--count", chk_count, "fields per seeded family");
  chk->add_option("--dims", chk_dims, "window for seeded families");
  chk->add_option("--metric", chk_metric, "theorem: euclid | mink");
  chk->add_option("--dual", chk_dual, "theorem: sd | asd");
  chk->add_option("--bound", chk_bound, "theorem: support bound N1,N2,N3,N4");

  // solve
  auto* slv = app.add_subcommand("solve", "minimize the duality residual over connections");
  std::string slv_in, slv_out, slv_metric, slv_dual, slv_trace, slv_dims = "3,3,3,3", slv_algebra = "su2";
  SolveConfig cfg;
  double slv_scale = 1e-2;
  std::string slv_method = "gn";
  slv->add_option("input", slv_in, "initial connection; random when omitted");
  slv->add_option("-o,--output", slv_out);
  slv->add_option("--metric", slv_metric)->required();
  slv->add_option("--dual", slv_dual)->required();
  slv->add_option("--method", slv_method, "gn (damped Gauss-Newton, default) | gd (gradient descent)");
  slv->add_option("--max-iter", cfg.max_iter);
  slv->add_option("--tol", cfg.tol);
  slv->add_option("--step0", cfg.step0);
  slv->add_option("--backtrack", cfg.backtrack);
  slv->add_option("--trace-every", cfg.trace_every);
  slv->add_option("--trace", slv_trace, "CSV trace output");
  slv->add_option("--seed", cfg.seed, "random initial field seed");
  slv->add_option("--dims", slv_dims, "random initial field window");
  slv->add_option("--algebra", slv_algebra, "random initial field algebra");
  slv->add_option("--scale", slv_scale, "random initial field scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      const Window w(parse_dims(gen_dims, "--dims"), parse_flag("--boundary", gen_boundary, parse_boundary));
      const AlgebraKind kind = parse_flag("--algebra", gen_algebra, parse_algebra_kind);
      if (!(gen_scale > 0)) throw UsageError("--scale: must be positive");
      ConnectionField<double> A;
      if (gen_kind == "zero") {
        A = zero_connection<double>(w, kind);
      } else if (gen_kind == "constant") {
        if (gen_matrix.empty()) throw UsageError("--matrix: required for --kind constant");
        const Mat2cd M = parse_matrix(gen_matrix);
        if (!is_in(M, kind)) throw UsageError("--matrix: not an element of " + std::string(to_string(kind)));
        std::array<Mat2cd, 4> values{Mat2cd::Zero(), Mat2cd::Zero(), Mat2cd::Zero(), Mat2cd::Zero()};
        std::stringstream ss(gen_axes);
        std::string item;
        while (std::getline(ss, item, ',')) {
          int axis = 0;
          try {
            axis = std::stoi(item);
          } catch (const std::exception&) {
            throw UsageError("--axes: '" + item + "' is not an axis");
          }
          if (axis < 1 || axis > 4) throw UsageError("--axes: axis must be in 1..4");
          values[static_cast<std::size_t>(axis - 1)] = M;
        }
        A = constant_connection<double>(w, kind, values);
      } else if (gen_kind == "random") {
        A = random_connection<double>(w, kind, gen_seed, gen_scale);
      } else {
        A = pure_gauge(random_gauge<double>(w, kind, gen_seed, gen_scale));
      }
      io::save(io::make_file(A), gen_out);
      return kOk;
    }

    if (*curv) {
      if (curv_metric != "none") parse_flag("--metric", curv_metric, parse_metric);
      const auto f = load_input(curv_in);
      const auto& A = expect_rank<4>(f, curv_in);
      io::save(io::make_file(curvature(A), curv_metric), curv_out);
      return kOk;
    }

    if (*st) {
      const Metric m = parse_flag("--metric", star_metric, parse_metric);
      const auto f = load_input(star_in);
      require_metric(f, m, star_in);
      const auto& F = expect_rank<6>(f, star_in);
      io::save(io::make_file(star(F, m), std::string(to_string(m))), star_out);
      return kOk;
    }

    if (*res) {
      const DualityProblem p{parse_flag("--metric", res_metric, parse_metric), parse_flag("--dual", res_dual, parse_orientation)};
      const auto f = load_input(res_in);
      require_metric(f, p.metric, res_in);
      CurvatureField<double> F;
      if (f.meta.rank == 1)
        F = curvature(io::get<4>(f));
      else
        F = expect_rank<6>(f, res_in);
      const CurvatureField<double> R = residual(F, p);
      std::cout << "residual " << g17(field_norm(R)) << "\n";
      for (std::size_t pl = 0; pl < kPlanes.size(); ++pl) {
        double worst = 0;
        for (std::size_t s = 0; s < R.sites(); ++s) worst = std::max(worst, frobenius_norm(R(s, static_cast<int>(pl))));
        std::cout << "plane " << plane_name(kPlanes[pl]) << " max " << g17(worst) << "\n";
      }
      return kOk;
    }

    if (*chk) {
      if (chk_count < 1) throw UsageError("--count: must be >= 1");
      const auto dims_or = [&](Window::Dims fallback) { return chk_dims.empty() ? fallback : parse_dims(chk_dims, "--dims"); };
      const DualityProblem p{parse_flag("--metric", chk_metric, parse_metric), parse_flag("--dual", chk_dual, parse_orientation)};

      if (chk_relation == "star-table") return print_check(checks::star_table_impulses());

      if (chk_in.empty()) {
        if (chk_relation == "13") return print_check(checks::diagonal_relation_family(chk_seed, chk_count, dims_or({4, 4, 4, 4})));
        if (chk_relation == "prop1") return print_check(checks::proposition1_family(chk_seed, chk_count, dims_or({4, 4, 4, 4})));
        if (chk_relation == "prop2") return print_check(checks::proposition2_family(chk_seed, chk_count, dims_or({4, 4, 4, 4})));
        if (chk_relation == "theorem") return print_check(checks::theorem_family(chk_seed, chk_count, dims_or({6, 6, 6, 6})));
        return print_check(checks::path_equivalence_family(chk_seed, chk_count, dims_or({3, 3, 3, 3})));
      }

      const auto f = load_input(chk_in);
      if (chk_relation == "13") {
        if (f.meta.rank == 1) return print_check(checks::difference_form_13(io::get<4>(f)));
        return print_check(checks::diagonal_relation(expect_rank<6>(f, chk_in)));
      }
      if (chk_relation == "prop1") return print_check(checks::proposition1(expect_rank<6>(f, chk_in)));
      if (chk_relation == "prop2") return print_check(checks::proposition2(expect_rank<6>(f, chk_in)));
      if (chk_relation == "theorem") {
        const auto& F = expect_rank<6>(f, chk_in);
        const auto b = parse_dims(chk_bound, "--bound");
        try {
          return print_check(checks::theorem(F, LatticeIndex{b}, p));
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--bound: ") + e.what());
        }
      }
      return print_check(checks::path_equivalence(expect_rank<4>(f, chk_in)));
    }

    if (*slv) {
      cfg.problem = {parse_flag("--metric", slv_metric, parse_metric), parse_flag("--dual", slv_dual, parse_orientation)};
      cfg.method = parse_flag("--method", slv_method, parse_solve_method);
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      ConnectionField<double> A0;
      if (slv_in.empty()) {
        if (!(slv_scale > 0)) throw UsageError("--scale: must be positive");
        A0 = random_connection<double>(Window(parse_dims(slv_dims, "--dims")), parse_flag("--algebra", slv_algebra, parse_algebra_kind), cfg.seed,
                                       slv_scale);
      } else {
        const auto f = load_input(slv_in);
        require_metric(f, cfg.problem.metric, slv_in);
        A0 = expect_rank<4>(f, slv_in);
        if (A0.window().boundary() != Boundary::periodic) throw UsageError(slv_in + ": solve requires a periodic window");
      }
      const auto result = solve(A0, cfg);
      const auto& rep = result.report;
      std::cout << "iterations " << rep.iterations << "\n"
                << "final_residual " << g17(rep.final_residual) << "\n"
                << "converged " << (rep.converged ? "true" : "false") << "\n"
                << "stop " << to_string(rep.reason) << "\n";
      if (!slv_trace.empty()) write_trace(slv_trace, rep);
      if (!slv_out.empty()) io::save(io::make_file(result.connection, std::string(to_string(cfg.problem.metric))), slv_out);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
