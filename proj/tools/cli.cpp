#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "pottssos/errors.hpp"
#include "pottssos/exact_oracle.hpp"
#include "pottssos/periodic_solver.hpp"
#include "pottssos/phase_diagram.hpp"
#include "scan_csv.hpp"

namespace pottssos::cli {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
constexpr double kVerifyThreshold = 1e-9;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  double theta = kUnset;
  double r = kUnset;
  int k = 2;
  int m = 2;
  bool from_couplings = false;
  double J = kUnset;
  double Jp = kUnset;
  double beta = kUnset;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
  cmd->add_option("--theta", p.theta, "SOS activity exp(J*beta), > 0");
  cmd->add_option("--r", p.r, "Potts activity exp(Jp*beta), > 0");
  cmd->add_option("--k", p.k, "Branching order of the Cayley tree")->capture_default_str();
  cmd->add_option("--m", p.m, "Field dimension (spins 0..m)")->capture_default_str();
  cmd->add_flag("--from-couplings", p.from_couplings, "Read --J, --Jp, --beta instead");
  cmd->add_option("--J", p.J, "SOS coupling");
  cmd->add_option("--Jp", p.Jp, "Potts coupling");
  cmd->add_option("--beta", p.beta, "Inverse temperature, > 0");
}

ModelParams resolve(const ParamFlags& p) {
  if (p.from_couplings) {
    if (std::isnan(p.J) || std::isnan(p.Jp) || std::isnan(p.beta)) {
      throw UsageError("--from-couplings needs --J, --Jp and --beta");
    }
    return ModelParams::from_couplings(p.J, p.Jp, p.beta, p.m, p.k);
  }
  if (std::isnan(p.theta) || std::isnan(p.r)) throw UsageError("--theta and --r are required");
  return ModelParams::from_activities(p.theta, p.r, p.m, p.k);
}

std::vector<TwoCycle> solve_cycles(const ModelParams& params) {
  return params.k() == 2 ? solve_two_cycles_k2(params.theta(), params.r())
                         : solve_two_cycles_numeric(params);
}

std::string field_text(const BoundaryField& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ", ";
    s += format_real(h[i]);
  }
  return s + ")";
}

int cmd_solve(const ParamFlags& flags, bool as_json, std::ostream& out) {
  const ModelParams params = resolve(flags);
  const auto fixed = solve_fixed_points(params);
  const auto cycles = solve_cycles(params);
  const bool k2 = params.k() == 2;

  if (as_json) {
    nlohmann::json j;
    j["params"] = to_json(params);
    j["fixed_points"] = nlohmann::json::array();
    for (double z : fixed) {
      const BoundaryField h({0.0, std::log(z)});
      j["fixed_points"].push_back(
          {{"z", z},
           {"field", to_json(h)},
           {"residual", max_abs(period2_residual({1.0, z, 1.0, z}, params))}});
    }
    if (k2) j["discriminant"] = to_json(discriminant(params.theta(), params.r()));
    j["two_cycles"] = nlohmann::json::array();
    for (const TwoCycle& c : cycles) {
      const auto [even, odd] = fields_from_cycle(c);
      j["two_cycles"].push_back({{"z1", c.z1},
                                 {"t1", c.t1},
                                 {"degenerate", c.degenerate},
                                 {"even_field", to_json(even)},
                                 {"odd_field", to_json(odd)},
                                 {"residual", max_abs(period2_residual(c.point(), params))}});
    }
    j["n_unordered_cycles"] = count_unordered_cycles(cycles);
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "theta = " << format_real(params.theta()) << "\n"
      << "r = " << format_real(params.r()) << "\n"
      << "m = " << params.m() << ", k = " << params.k() << "\n\n";
  out << "translation-invariant fixed points of f: " << fixed.size() << "\n";
  for (double z : fixed) {
    out << "  z = " << format_real(z) << "  field = " << field_text(BoundaryField({0.0, std::log(z)}))
        << "  residual = " << format_real(max_abs(period2_residual({1.0, z, 1.0, z}, params)))
        << "\n";
  }
  if (k2) {
    const auto d = discriminant(params.theta(), params.r());
    out << "\nquadratic: a = " << format_real(d.a) << ", b = " << format_real(d.b)
        << ", c = " << format_real(d.c) << "\n"
        << "D = b^2 - 4ac = " << format_real(d.D_std) << "  (b^2 - ac = " << format_real(d.D_paper)
        << ")\n"
        << "two real positive roots: " << (d.two_real_positive ? "yes" : "no")
        << (d.degenerate() ? " (degenerate, D within band)" : "") << "\n";
  }
  const int unordered = count_unordered_cycles(cycles);
  out << "\nperiod-2 measures: " << unordered << " cycle(s), " << cycles.size()
      << " ordered assignment(s)\n";
  for (const TwoCycle& c : cycles) {
    const auto [even, odd] = fields_from_cycle(c);
    out << "  z1 = " << format_real(c.z1) << "  t1 = " << format_real(c.t1)
        << (c.degenerate ? "  [degenerate]" : "") << "\n"
        << "    even field = " << field_text(even) << "  odd field = " << field_text(odd)
        << "  residual = " << format_real(max_abs(period2_residual(c.point(), params))) << "\n";
  }
  return kOk;
}

int cmd_theta_d(double tol, bool as_json, std::ostream& out) {
  const double t = find_theta_D(tol);
  const double poly = theta_D_polynomial(t);
  const double b = discriminant(t, t * t).b;
  if (as_json) {
    nlohmann::json j = {{"theta_D", t}, {"tol", tol}, {"polynomial", poly}, {"b", b}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "theta_D = " << format_real(t) << "\n"
      << "tolerance = " << format_real(tol) << "\n"
      << "3t^4 + 10t^3 + 6t^2 - 1 = " << format_real(poly) << "\n"
      << "b(theta_D, theta_D^2) = " << format_real(b) << "\n";
  return kOk;
}

struct ScanFlags {
  double theta_min = kUnset, theta_max = kUnset;
  int theta_steps = 0;
  double r_min = kUnset, r_max = kUnset;
  int r_steps = 0;
  std::string line;
  std::string out_path;
  unsigned threads = 0;
};

int cmd_scan(const ScanFlags& f, std::ostream& out, std::ostream& err) {
  GridSpec grid;
  if (std::isnan(f.theta_min) || std::isnan(f.theta_max) || f.theta_steps == 0) {
    throw UsageError("--theta-min, --theta-max and --theta-steps are required");
  }
  grid.theta = {f.theta_min, f.theta_max, f.theta_steps};
  if (!f.line.empty()) {
    if (f.line != "r=theta^2") throw UsageError("--line only accepts r=theta^2");
    grid.r_equals_theta_squared = true;
  } else {
    if (std::isnan(f.r_min) || std::isnan(f.r_max) || f.r_steps == 0) {
      throw UsageError("--r-min, --r-max and --r-steps are required without --line");
    }
    grid.r = {f.r_min, f.r_max, f.r_steps};
  }
  grid.validate();

  std::ofstream file(f.out_path);
  if (!file) {
    err << "cannot open " << f.out_path << " for writing\n";
    return kFailure;
  }
  const auto rows = scan_grid(grid, f.threads);
  write_scan_csv(file, rows);
  file.close();
  if (!file) {
    err << "failed writing " << f.out_path << "\n";
    return kFailure;
  }
  out << "wrote " << rows.size() << " rows to " << f.out_path << "\n";
  return kOk;
}

int cmd_audit_potts(double r_min, double r_max, int steps, std::ostream& out) {
  const GridRange range{r_min, r_max, steps};
  range.validate("r");
  const auto r_values = range.nodes();
  const auto violations = potts_line_audit(r_values);
  if (violations.empty()) {
    out << "OK: no period-2 cycles on theta = 1 for " << r_values.size() << " value(s) of r in ["
        << format_real(r_min) << ", " << format_real(r_max) << "]\n";
    return kOk;
  }
  out << "VIOLATIONS: " << violations.size() << " value(s) of r with a period-2 cycle at theta = 1\n";
  for (double r : violations) out << "  r = " << format_real(r) << "\n";
  return kFailure;
}

struct VerifyFlags {
  ParamFlags params;
  int depth = 2;
  bool cycle = false;
  bool fixed_point = false;
  std::size_t index = 0;
  std::size_t max_vertices = 20;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const ModelParams params = resolve(f.params);
  if (params.m() != 2) {
    throw UnsupportedDimensionError("verify supports m = 2 only");
  }
  if (f.depth < 1) throw DomainError("--depth must be >= 1");
  // Size check up front so an oversized request fails before any solving.
  const TreeOptions tree_options{RootMode::half, f.max_vertices, params.states()};
  const FiniteTree tree = build_tree(params.k(), f.depth, tree_options);

  FieldRule rule;
  if (f.cycle) {
    const auto cycles = solve_cycles(params);
    if (cycles.empty()) {
      out << "no period-2 cycle at theta = " << format_real(params.theta())
          << ", r = " << format_real(params.r()) << "\n";
      return kFailure;
    }
    if (f.index >= cycles.size()) throw DomainError("--index out of range");
    const auto [even, odd] = fields_from_cycle(cycles[f.index]);
    out << "mode = cycle\n"
        << "even field = " << field_text(even) << "\n"
        << "odd field = " << field_text(odd) << "\n";
    rule = parity_rule(even, odd);
  } else {
    const auto fixed = solve_fixed_points(params);
    if (f.index >= fixed.size()) throw DomainError("--index out of range");
    const BoundaryField h({0.0, std::log(fixed[f.index])});
    out << "mode = fixed-point\n"
        << "field = " << field_text(h) << "\n";
    rule = constant_rule(h);
  }

  const double residual = compatibility_residual(rule(tree), tree, params);
  OracleOptions oracle;
  oracle.max_vertices = f.max_vertices;
  const double gap = consistency_gap(params.k(), f.depth, rule, params, oracle);
  out << "depth = " << f.depth << " (" << tree.vertex_count() << " vertices)\n"
      << "compatibility residual = " << format_real(residual) << "\n"
      << "consistency gap = " << format_real(gap) << "\n";
  if (gap < kVerifyThreshold) {
    out << "PASS\n";
    return kOk;
  }
  out << "FAIL\n";
  return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic Gibbs measures of the Potts-SOS model on a Cayley tree", "pottssos"};
  app.require_subcommand(1);

  ParamFlags solve_flags;
  bool solve_json = false;
  auto* solve = app.add_subcommand("solve", "Fixed points and period-2 cycles of the m = 2 system");
  add_param_flags(solve, solve_flags);
  solve->add_flag("--json", solve_json, "Emit a JSON report");

  double tol = 1e-8;
  bool theta_json = false;
  auto* theta_d = app.add_subcommand("theta-d", "Threshold theta_D on the line r = theta^2");
  theta_d->add_option("--tol", tol, "Bisection bracket width")->capture_default_str();
  theta_d->add_flag("--json", theta_json, "Emit a JSON report");

  ScanFlags scan_flags;
  auto* scan = app.add_subcommand("scan", "Classify a (theta, r) grid and write CSV");
  scan->add_option("--theta-min", scan_flags.theta_min);
  scan->add_option("--theta-max", scan_flags.theta_max);
  scan->add_option("--theta-steps", scan_flags.theta_steps);
  scan->add_option("--r-min", scan_flags.r_min);
  scan->add_option("--r-max", scan_flags.r_max);
  scan->add_option("--r-steps", scan_flags.r_steps);
  scan->add_option("--line", scan_flags.line, "Constrain the grid, e.g. r=theta^2");
  scan->add_option("--out", scan_flags.out_path, "CSV output path")->required();
  scan->add_option("--threads", scan_flags.threads, "Worker threads (0 = all cores)");

  double audit_r_min = 0.05, audit_r_max = 5.0;
  int audit_steps = 100;
  auto* audit = app.add_subcommand("audit-potts", "Look for period-2 cycles on theta = 1");
  audit->add_option("--r-min", audit_r_min)->capture_default_str();
  audit->add_option("--r-max", audit_r_max)->capture_default_str();
  audit->add_option("--steps", audit_steps)->capture_default_str();

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Check solutions against exact enumeration");
  add_param_flags(verify, verify_flags.params);
  verify->add_option("--depth", verify_flags.depth, "Depth of the outer tree")
      ->capture_default_str();
  auto* cycle_flag = verify->add_flag("--cycle", verify_flags.cycle, "Use period-2 cycle fields");
  auto* fixed_flag =
      verify->add_flag("--fixed-point", verify_flags.fixed_point, "Use fixed-point fields");
  cycle_flag->excludes(fixed_flag);
  verify->add_option("--index", verify_flags.index, "Which solution to use (ascending order)")
      ->capture_default_str();
  verify->add_option("--max-vertices", verify_flags.max_vertices, "Enumeration cap")
      ->capture_default_str();

  std::vector<std::string> argv_storage{"pottssos"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_flags, solve_json, out);
    if (theta_d->parsed()) return cmd_theta_d(tol, theta_json, out);
    if (scan->parsed()) return cmd_scan(scan_flags, out, err);
    if (audit->parsed()) return cmd_audit_potts(audit_r_min, audit_r_max, audit_steps, out);
    if (verify->parsed()) return cmd_verify(verify_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedDimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace pottssos::cli
