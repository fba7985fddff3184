#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polycollatz/bounds.hpp"
#include "polycollatz/checks.hpp"
#include "polycollatz/closed_form.hpp"
#include "polycollatz/dynamics.hpp"
#include "polycollatz/error.hpp"
#include "polycollatz/fp_dynamics.hpp"
#include "polycollatz/gf2_poly.hpp"
#include "polycollatz/sweep.hpp"

namespace polycollatz::cli {
namespace {

/// Raised for bad flag values found after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Gf2Poly parse_poly_arg(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const Error& e) {
    throw UsageError(std::string("invalid polynomial '") + text + "': " + e.what());
  }
}

struct TrajArgs {
  std::string poly;
  std::string map = "T";
  std::optional<std::size_t> budget;
  std::string format = "text";
};

struct StopArgs {
  std::string poly;
  std::string method = "reduced";
  std::string format = "text";
};

struct FamilyArgs {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t n = 1;
  bool verify = false;
  std::string format = "text";
};

struct ApArgs {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  int d_min = 0;
  int d_max = 0;
  std::string format = "csv";
};

struct SweepArgs {
  std::size_t d_min = 0;
  std::size_t d_max = 0;
  std::size_t threads = 1;
  std::string out_file;
  std::string format = "csv";
  bool cross_check = false;
  bool growth = false;
};

struct FpArgs {
  std::uint32_t p = 2;
  std::string poly;
  bool sweep = false;
  std::size_t d_max = 0;
  std::string format = "text";
};

struct CheckArgs {
  bool quick = false;
  bool full = false;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

void run_traj(const TrajArgs& args, std::ostream& out) {
  const Gf2Poly f = parse_poly_arg(args.poly);
  const MapKind map = *parse_map_kind(args.map);
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "zero polynomial has no trajectory");
  const std::size_t budget = args.budget.value_or(default_budget(map, f.degree().value()));
  if (budget == 0) throw UsageError("--budget must be at least 1");
  const Trajectory traj = trajectory(f, map, budget);
  if (args.format == "json") {
    out << trajectory_json(traj) << '\n';
    return;
  }
  for (std::size_t i = 0; i < traj.steps.size(); ++i) {
    out << i << '\t' << to_symbolic(traj.steps[i]) << '\n';
  }
  if (const auto t = traj.t_min()) {
    out << "t_min " << *t << '\n';
  } else if (traj.truncated) {
    out << "truncated after " << budget << " steps\n";
  } else {
    out << "reached 0\n";
  }
}

void run_stop(const StopArgs& args, std::ostream& out) {
  const Gf2Poly f = parse_poly_arg(args.poly);
  std::size_t t = 0;
  if (args.method == "direct") {
    t = stopping_time_direct(f, MapKind::T).t_min;
  } else if (args.method == "reduced") {
    t = stopping_time_reduced(f).t_min;
  } else {
    const auto direct = stopping_time_direct(f, MapKind::T).t_min;
    const auto reduced = stopping_time_reduced(f).t_min;
    if (direct != reduced) {
      throw Error(ErrorCode::InternalMismatch, "direct (" + std::to_string(direct) +
                                                   ") and reduced (" + std::to_string(reduced) +
                                                   ") stopping times disagree");
    }
    t = direct;
  }
  if (args.format == "json") {
    out << "{\"input\":\"" << to_hex(f) << "\",\"method\":\"" << args.method
        << "\",\"t_min\":" << t << "}\n";
  } else {
    out << t << '\n';
  }
}

void run_family(const FamilyArgs& args, std::ostream& out) {
  const FamilyParams params{args.a, args.b, args.n};
  try {
    params.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const std::uint64_t t = family_stopping_time(params);
  if (args.verify) {
    const auto direct = stopping_time_direct(family_poly(params), MapKind::T).t_min;
    if (direct != t) {
      throw Error(ErrorCode::InternalMismatch, "formula gives " + std::to_string(t) +
                                                   " but direct iteration gives " +
                                                   std::to_string(direct));
    }
  }
  if (args.format == "json") {
    out << "{\"a\":" << args.a << ",\"b\":" << args.b << ",\"n\":" << args.n << ",\"t_min\":" << t
        << ",\"verified\":" << (args.verify ? "true" : "false") << "}\n";
  } else {
    out << t << '\n';
  }
}

void run_ap(const ApArgs& args, std::ostream& out) {
  if (args.a == 0 && args.b == 0) throw UsageError("ap-runs requires --a > 0 or --b > 0");
  if (args.d_min > args.d_max) throw UsageError("--d-min must not exceed --d-max");
  const auto cap = static_cast<int>(degree_cap_from_env());
  if (args.d_max > cap) {
    throw Error(ErrorCode::CapExceeded,
                "--d-max " + std::to_string(args.d_max) + " exceeds the safety cap " + std::to_string(cap));
  }
  const auto runs = ap_runs(args.a, args.b, args.d_min, args.d_max);
  out << (args.format == "json" ? ap_runs_json(runs) : ap_runs_csv(runs));
}

void run_sweep(const SweepArgs& args, std::ostream& out) {
  if (args.d_min > args.d_max) throw UsageError("--d-min must not exceed --d-max");
  SweepOptions options;
  options.threads = args.threads;
  options.cap = degree_cap_from_env();
  options.cross_check = args.cross_check;
  const auto rows = sweep(args.d_min, args.d_max, options);
  for (const auto& row : rows) {
    if (!row.within_bound()) {
      throw Error(ErrorCode::InternalMismatch,
                  "sigma exceeds (2d)^1.5 + d at d=" + std::to_string(row.d));
    }
  }
  std::string text;
  if (args.growth) {
    const auto growth = growth_report(rows);
    text = args.format == "json" ? growth_json(growth) : growth_csv(growth);
  } else {
    text = args.format == "json" ? sweep_json(rows) : sweep_csv(rows);
  }
  if (args.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(args.out_file, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + args.out_file + " for writing");
  file << text;
  if (!file) throw Error(ErrorCode::InvalidArgument, "failed writing " + args.out_file);
}

void run_fp(const FpArgs& args, std::ostream& out) {
  if (!is_prime(args.p) || args.p >= (1u << 16)) {
    throw UsageError("--p must be a prime below 65536");
  }
  if (args.sweep == !args.poly.empty()) {
    throw UsageError("fp takes either a polynomial or --sweep --d-max D");
  }
  if (args.sweep) {
    const auto rows = fp_bound_sweep(args.p, args.d_max);
    if (args.format == "json") {
      out << fp_bound_json(rows);
      return;
    }
    out << "p\td\tcount\tmax_pre_period\tbound\tviolations\n";
    for (const auto& r : rows) {
      out << r.p << '\t' << r.d << '\t' << r.count << '\t' << r.max_pre_period << '\t' << r.bound
          << '\t' << r.violations << '\n';
    }
    return;
  }
  FpPoly f(args.p);
  try {
    f = parse_fp(args.p, args.poly);
  } catch (const Error& e) {
    throw UsageError(std::string("invalid polynomial '") + args.poly + "': " + e.what());
  }
  const auto res = fp_stopping_time(f);
  const auto bound = f.is_zero() ? 0 : fp_pre_period_bound(args.p, f.degree().value());
  if (args.format == "json") {
    out << "{\"p\":" << args.p << ",\"input\":\"" << format_fp(f) << "\",\"pre_period\":"
        << res.pre_period << ",\"cycle_length\":" << res.cycle_length << ",\"cycle_entry\":\""
        << format_fp(res.cycle_entry) << "\",\"bound\":" << bound << "}\n";
  } else {
    out << "pre_period " << res.pre_period << '\n'
        << "cycle_length " << res.cycle_length << '\n'
        << "cycle_entry " << format_fp(res.cycle_entry) << '\n'
        << "bound " << bound << '\n';
  }
}

int run_check(const CheckArgs& args, std::ostream& out) {
  if (args.quick && args.full) throw UsageError("--quick and --full are exclusive");
  CheckOptions options;
  options.full = args.full;
  options.seed = args.seed;
  options.threads = args.threads;
  bool all_passed = true;
  for (const auto& r : run_checks(options)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial Collatz dynamics over F_2[x] and F_p[x]", "polycollatz"};
  app.require_subcommand(1);

  const auto formats_text_json = CLI::IsMember({"text", "json"});
  const auto formats_csv_json = CLI::IsMember({"csv", "json"});

  TrajArgs traj;
  auto* traj_cmd = app.add_subcommand("traj", "Print the trajectory of a polynomial under a map");
  traj_cmd->add_option("poly", traj.poly, "Polynomial, symbolic or 0x-hex")->required();
  traj_cmd->add_option("--map", traj.map, "Map to iterate")
      ->check(CLI::IsMember({"T", "T1", "T2", "T3", "S1", "S2", "S3"}));
  traj_cmd->add_option("--budget", traj.budget, "Maximum number of steps");
  traj_cmd->add_option("--format", traj.format)->check(formats_text_json);

  StopArgs stop;
  auto* stop_cmd = app.add_subcommand("stop", "Stopping time under T");
  stop_cmd->add_option("poly", stop.poly, "Polynomial, symbolic or 0x-hex")->required();
  stop_cmd->add_option("--method", stop.method)->check(CLI::IsMember({"direct", "reduced", "both"}));
  stop_cmd->add_option("--format", stop.format)->check(formats_text_json);

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "Closed-form stopping time of (x^a(x+1)^b)^n + 1");
  family_cmd->add_option("--a", family.a)->required();
  family_cmd->add_option("--b", family.b)->required();
  family_cmd->add_option("--n", family.n)->required()->check(CLI::PositiveNumber);
  family_cmd->add_flag("--verify", family.verify, "Also run direct iteration and compare");
  family_cmd->add_option("--format", family.format)->check(formats_text_json);

  ApArgs ap;
  auto* ap_cmd = app.add_subcommand("ap-runs", "Arithmetic runs in the family stopping times");
  ap_cmd->add_option("--a", ap.a)->required();
  ap_cmd->add_option("--b", ap.b)->required();
  ap_cmd->add_option("--d-min", ap.d_min)->required()->check(CLI::Range(0, 40));
  ap_cmd->add_option("--d-max", ap.d_max)->required()->check(CLI::Range(0, 40));
  ap_cmd->add_option("--format", ap.format)->check(formats_csv_json);

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive per-degree stopping-time statistics");
  sweep_cmd->add_option("--d-min", sw.d_min)->required();
  sweep_cmd->add_option("--d-max", sw.d_max)->required();
  sweep_cmd->add_option("--threads", sw.threads)->check(CLI::Range(1, 1024));
  sweep_cmd->add_option("--out", sw.out_file, "Write output to FILE instead of stdout");
  sweep_cmd->add_option("--format", sw.format)->check(formats_csv_json);
  sweep_cmd->add_flag("--cross-check", sw.cross_check, "Recheck every value with the direct engine");
  sweep_cmd->add_flag("--growth", sw.growth, "Emit growth ratios instead of the rows");

  FpArgs fp;
  auto* fp_cmd = app.add_subcommand("fp", "Pre-period of the Collatz map on F_p[x]");
  fp_cmd->add_option("--p", fp.p)->required();
  fp_cmd->add_option("poly", fp.poly, "Polynomial such as 2x^2+1");
  auto* fp_sweep = fp_cmd->add_flag("--sweep", fp.sweep, "Exhaustive bound check");
  fp_cmd->add_option("--d-max", fp.d_max)->needs(fp_sweep)->check(CLI::Range(0, 24));
  fp_cmd->add_option("--format", fp.format)->check(formats_text_json);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run the cross-validation suites");
  auto* quick_flag = check_cmd->add_flag("--quick", check.quick);
  auto* full_flag = check_cmd->add_flag("--full", check.full);
  quick_flag->excludes(full_flag);
  check_cmd->add_option("--seed", check.seed);
  check_cmd->add_option("--threads", check.threads)->check(CLI::Range(1, 1024));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return 2;
  }

  std::ostringstream buffer;
  try {
    int code = 0;
    if (traj_cmd->parsed()) {
      run_traj(traj, buffer);
    } else if (stop_cmd->parsed()) {
      run_stop(stop, buffer);
    } else if (family_cmd->parsed()) {
      run_family(family, buffer);
    } else if (ap_cmd->parsed()) {
      run_ap(ap, buffer);
    } else if (sweep_cmd->parsed()) {
      run_sweep(sw, buffer);
    } else if (fp_cmd->parsed()) {
      run_fp(fp, buffer);
    } else if (check_cmd->parsed()) {
      code = run_check(check, buffer);
    }
    out << buffer.str();
    out.flush();
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace polycollatz::cli
