#include "thetaspline/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "thetaspline/bspline.hpp"
#include "thetaspline/error.hpp"
#include "thetaspline/experiments.hpp"
#include "thetaspline/interp.hpp"
#include "thetaspline/knots.hpp"
#include "thetaspline/mellin.hpp"
#include "thetaspline/run_config.hpp"
#include "thetaspline/theta.hpp"

namespace thetaspline {

namespace {

std::string g(double v, int digits = 15) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

PrecisionContext context_for(const RunConfig& cfg) {
  PrecisionContext ctx = PrecisionContext::from_env();
  if (cfg.max_bits > 0) ctx.max_bits = cfg.max_bits;
  if (ctx.start_bits > ctx.max_bits) ctx.start_bits = ctx.max_bits;
  ctx.validate();
  return ctx;
}

ExperimentOptions options_for(const RunConfig& cfg) {
  ExperimentOptions opt;
  opt.ctx = context_for(cfg);
  opt.threads = cfg.threads;
  opt.timing = cfg.timing;
  return opt;
}

bool is_poly_family(const std::string& f) {
  return f == "chebyshev-T" || f == "chebyshev-U" || f == "T" || f == "U" || f == "gegenbauer" || f == "hermite" ||
         f == "equidistant";
}

PolyFamily family_for(const RunConfig& cfg) {
  PolyFamily fam{PolyFamily::parse_kind(cfg.family), cfg.d, cfg.N, cfg.lambda};
  fam.validate();
  return fam;
}

KnotSet knots_for(const RunConfig& cfg) {
  if (!cfg.omega.empty()) return custom_knots(cfg.omega);
  if (cfg.family == "cardinal") return cardinal_knots(cfg.N);
  if (cfg.family == "reciprocal") return reciprocal_knots(cfg.nu);
  if (cfg.family == "general") return general_knots(cfg.N);
  if (cfg.family == "custom") throw ValidationError("custom knots need --omega");
  if (!is_poly_family(cfg.family)) throw ValidationError("unknown family '" + cfg.family + "'");
  auto fam = family_for(cfg);
  if (cfg.kind == "omega_squared") return omega_squared(fam, cfg.u);
  if (cfg.kind == "omega_star") return omega_star(fam, cfg.u);
  throw ValidationError("unknown knot kind '" + cfg.kind + "'");
}

// Emits to --output when given, else to `out`.
template <class Writer>
void with_output(const RunConfig& cfg, std::ostream& out, Writer write) {
  if (cfg.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + cfg.output + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + cfg.output + "'");
}

OutputFormat format_for(const RunConfig& cfg) {
  if (cfg.format == "csv") return OutputFormat::csv;
  if (cfg.format == "json") return OutputFormat::json;
  throw ValidationError("format must be csv or json");
}

int emit_records(const RunConfig& cfg, std::ostream& out, const std::vector<ConvergenceRecord>& records) {
  auto fmt = format_for(cfg);
  with_output(cfg, out, [&](std::ostream& o) { write_records(o, records, fmt); });
  bool failed = std::any_of(records.begin(), records.end(), [](const auto& r) { return r.precision_bits < 0; });
  return failed ? 3 : 0;
}

int cmd_knots(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto knots = knots_for(cfg);
  for (const auto& w : knots.warnings) err << "warning: " << w << '\n';
  auto values = knots.materialize(256);
  with_output(cfg, out, [&](std::ostream& o) {
    for (const auto& v : values) o << v.to_string(25) << '\n';
  });
  return 0;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.t.empty()) throw ValidationError("eval needs --t");
  auto knots = knots_for(cfg);
  for (const auto& w : knots.warnings) err << "warning: " << w << '\n';
  auto ctx = context_for(cfg);
  std::ostringstream buf;
  buf << "t,b_value,assoc_log,assoc_sign,precision_bits,interval\n";
  for (double t : cfg.t) {
    auto ev = eval_divided_difference(knots, XReal(t, 512), ctx);
    buf << g(t) << ',' << ev.b_value.to_string(20) << ',';
    if (knots.min() >= 0 && t >= 0) {
      auto a = t == 0.0 ? eval_assoc(knots, XReal(0L, 128), ctx) : ev.assoc_log;
      buf << g(a.sign == 0 ? 0.0 : a.log_mag, 17) << ',' << a.sign;
    } else {
      buf << "nan,0";
    }
    buf << ',' << ev.precision_used << ',' << ev.interval_index << '\n';
  }
  with_output(cfg, out, [&](std::ostream& o) { o << buf.str(); });
  return 0;
}

int cmd_theta(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.t.empty()) throw ValidationError("theta needs --t");
  std::ostringstream buf;
  buf << "d,t,theta\n";
  for (double t : cfg.t) {
    if (t < 0) throw DomainError("theta needs t >= 0");
    buf << cfg.d << ',' << g(t) << ',' << g(theta_eval(cfg.d, t), 16) << '\n';
  }
  with_output(cfg, out, [&](std::ostream& o) { o << buf.str(); });
  return 0;
}

int cmd_mellin(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::string which = cfg.which.empty() ? "theta-closed" : cfg.which;
  std::ostringstream buf;
  if (which == "theta-closed") {
    buf << "d,sigma,value\n" << cfg.d << ',' << g(cfg.sigma) << ',' << g(mellin_theta_closed(cfg.d, cfg.sigma), 16)
        << '\n';
  } else if (which == "theta-numeric") {
    auto m = mellin_theta_numeric(cfg.d, cfg.sigma);
    buf << "d,sigma,value,err_estimate\n"
        << cfg.d << ',' << g(cfg.sigma) << ',' << g(m.value.real(), 16) << ',' << g(m.err_estimate, 3) << '\n';
  } else if (which == "gn-contour" || which == "gn-direct") {
    auto fam = family_for(cfg);
    auto ctx = context_for(cfg);
    std::vector<double> s_list = cfg.s_list.empty() ? std::vector<double>{cfg.s} : cfg.s_list;
    buf << "N,s,value,err_estimate\n";
    for (double s : s_list) {
      auto m = which == "gn-contour" ? gn_contour(fam, cfg.u, s) : gn_direct(fam, cfg.u, s, {}, ctx);
      buf << cfg.N << ',' << g(s) << ',' << g(m.value.real(), 16) << ',' << g(m.err_estimate, 3) << '\n';
    }
  } else if (which == "assoc") {
    auto knots = knots_for(cfg);
    auto m = mellin_assoc_bspline(knots, cfg.sigma, {}, context_for(cfg));
    buf << "sigma,value,err_estimate,precision_bits\n"
        << g(cfg.sigma) << ',' << g(m.value.real(), 16) << ',' << g(m.err_estimate, 3) << ',' << m.precision_bits
        << '\n';
  } else {
    throw ValidationError("unknown mellin quantity '" + which + "'");
  }
  with_output(cfg, out, [&](std::ostream& o) { o << buf.str(); });
  return 0;
}

void print_identity(std::ostream& o, const IdentityResult& r) {
  o << "lhs," << g(r.lhs, 16) << "\nrhs," << g(r.rhs, 16) << "\nrel_gap," << g(r.rel_gap, 3) << "\nprecision_bits,"
    << r.precision_bits << "\nroute," << r.route << '\n';
}

int cmd_identity(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::string which = cfg.which.empty() ? "remainder" : cfg.which;
  auto ctx = context_for(cfg);
  std::ostringstream buf;
  if (which == "remainder") {
    auto knots = knots_for(cfg);
    int idx = find_knot(knots, cfg.u * (cfg.omega.empty() && is_poly_family(cfg.family) ? cfg.u : 1.0));
    auto r = cfg.m > 0 ? remainder_identity_log(knots, idx, cfg.m, ctx) : remainder_identity(knots, idx, cfg.s, cfg.d, ctx);
    print_identity(buf, r);
  } else if (which == "symmetric") {
    if (cfg.zeros.empty()) throw ValidationError("symmetric needs --zeros");
    print_identity(buf, symmetric_identity(cfg.zeros, cfg.y, cfg.s, ctx));
  } else if (which == "rescaling") {
    auto fam = family_for(cfg);
    std::vector<double> ys = cfg.t;
    if (ys.empty()) {
      for (int i = 0; i < 10; ++i) ys.push_back((i + 0.5) / 10.0 * cfg.u * cfg.u);
    }
    buf << "y,lhs,rhs,rel_gap,precision_bits\n";
    for (const auto& row : check_rescaling(fam, cfg.u, ys, ctx)) {
      buf << g(row.y) << ',' << g(row.lhs, 16) << ',' << g(row.rhs, 16) << ',' << g(row.rel_gap, 3) << ','
          << row.precision_bits << '\n';
    }
  } else {
    throw ValidationError("unknown identity '" + which + "'");
  }
  with_output(cfg, out, [&](std::ostream& o) { o << buf.str(); });
  return 0;
}

std::vector<int> or_default(const std::vector<int>& v, const std::vector<int>& fallback) {
  return v.empty() ? fallback : v;
}
std::vector<double> or_default(const std::vector<double>& v, const std::vector<double>& fallback) {
  return v.empty() ? fallback : v;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::string which = cfg.which.empty() ? "theta-pointwise" : cfg.which;
  auto opt = options_for(cfg);
  const auto Ns = or_default(cfg.N_list, default_N_list());
  std::vector<ConvergenceRecord> records;
  if (which == "theta-pointwise") {
    auto fam = family_for(cfg);
    if (!fam.is_chebyshev()) throw ValidationError("theta-pointwise takes chebyshev-T or chebyshev-U");
    records = run_theta_pointwise(fam.cheb_lambda(), cfg.d, cfg.u, or_default(cfg.t_grid, default_t_grid()), Ns, opt);
  } else if (which == "theta-mellin") {
    auto fam = family_for(cfg);
    double r = cfg.r > 0 ? cfg.r : cfg.d + 2.0;
    std::vector<std::complex<double>> s_grid;
    for (double v : or_default(cfg.v_grid, {0.0, 1.0, 2.0, 5.0})) s_grid.emplace_back(r, v);
    records = run_theta_mellin(fam, cfg.u, s_grid, Ns, opt);
  } else if (which == "gaussian") {
    GaussKnots kind = cfg.kind == "general" ? GaussKnots::general : GaussKnots::cardinal;
    records = run_gaussian(kind, Ns, or_default(cfg.t_grid, {0.0, 0.5, 1.0, 1.5, 2.0}), opt);
  } else if (which == "cosh") {
    records = run_cosh(or_default(cfg.N_list, {8, 16, 32}), or_default(cfg.t_grid, {0.0, 0.5, 1.0, 2.0, 4.0}), opt);
  } else if (which == "perfect-spline") {
    auto fam = family_for(cfg);
    if (!fam.is_chebyshev()) throw ValidationError("perfect-spline takes chebyshev-T or chebyshev-U");
    records = run_perfect_spline(Ns, or_default(cfg.t_grid, default_t_grid()), fam.cheb_lambda(), cfg.d, cfg.u, opt);
  } else if (which == "route") {
    auto fam = family_for(cfg);
    records = route_consistency(fam, cfg.u, or_default(cfg.s_list, {cfg.d + 0.5, cfg.d + 2.5}),
                                or_default(cfg.N_list, {6, 10}), opt);
  } else if (which == "interp-limit") {
    InterpLimitSpec spec{family_for(cfg), cfg.s, cfg.m};
    double u = cfg.u;
    spec.u_of_N = [u](int) { return u; };
    records = interpolation_limit(spec, or_default(cfg.N_list, {8, 16, 32, 64}), opt.ctx);
  } else {
    throw ValidationError("unknown experiment '" + which + "'");
  }
  return emit_records(cfg, out, records);
}

int cmd_probe(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::string which = cfg.which.empty() ? "rbeta" : cfg.which;
  std::ostringstream buf;
  if (which == "rbeta") {
    auto fam = family_for(cfg);
    double r = cfg.r > 0 ? cfg.r : 2.0 - cfg.d;
    auto v_grid = or_default(cfg.v_grid, {1, 2, 3, 5, 7, 10, 12, 15});
    auto rows = rbeta_probe(fam, cfg.u, r, v_grid, or_default(cfg.N_list, {10, 20, 40}));
    buf << "N,v,lhs,envelope,ratio\n";
    for (const auto& row : rows) {
      buf << row.N << ',' << g(row.v) << ',' << g(row.lhs, 12) << ',' << g(row.envelope, 12) << ','
          << g(row.ratio, 12) << '\n';
    }
  } else if (which == "scaling") {
    auto fam = family_for(cfg);
    std::vector<std::complex<double>> zs;
    for (double x : or_default(cfg.t, {0.0, 0.5, 1.0, 2.0})) zs.emplace_back(x, 0.0);
    for (double v : cfg.v_grid) zs.emplace_back(0.0, v);
    buf << "re_z,im_z,lhs_error,bound,ratio\n";
    for (const auto& row : scaling_probe(fam, zs)) {
      buf << g(row.z.real()) << ',' << g(row.z.imag()) << ',' << g(row.lhs_error, 6) << ',' << g(row.bound, 6)
          << ',' << g(row.ratio, 6) << '\n';
    }
  } else if (which == "conjecture") {
    auto opt = options_for(cfg);
    auto records = conjecture_probe(family_for(cfg), cfg.u, or_default(cfg.t_grid, default_t_grid()),
                                    or_default(cfg.N_list, {16, 32, 64}), opt);
    return emit_records(cfg, out, records);
  } else {
    throw ValidationError("unknown probe '" + which + "'");
  }
  with_output(cfg, out, [&](std::ostream& o) { o << buf.str(); });
  return 0;
}

struct Subcommand {
  const char* name;
  const char* description;
  int (*run)(const RunConfig&, std::ostream&, std::ostream&);
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> list = {
      {"knots",
       "Print a knot set. Formula: Omega = {0, u^2} U {x_k^2} with x_k the positive zeros of the degree 2N+d "
       "polynomial; omega_star is its image under y -> 2y-1; cardinal k-(N+1)/2; reciprocal 1/(2k-1).",
       cmd_knots},
      {"eval",
       "Evaluate B_N and B*_N at extended precision. Formula: B_N(t) = (N+1) sum_v (v-t)_+^N / W'(v), "
       "W(t) = prod_v (t-v), B*_N(t) = t^-N B_N(t).",
       cmd_eval},
      {"theta",
       "Evaluate Theta_d. Formula: Theta_0(t) = 1 - (4/pi) sum_k (-1)^k exp(-(pi^2/4)(2k+1)^2/t)/(2k+1); "
       "Theta_1(t) = 1 + 2 sum_k (-1)^k exp(-(pi k)^2/t).",
       cmd_theta},
      {"mellin",
       "Mellin transforms (--which theta-closed|theta-numeric|gn-contour|gn-direct|assoc). Formula: "
       "M(F,s) = int_0^inf F(t) t^(s-1) dt; M(Theta_d, sigma) = 4 Gamma(2 sigma+d) c_d(2 sigma+d)/Gamma(1+sigma), "
       "c_0 = beta, c_1(x) = (1-2^-x) zeta(x).",
       cmd_mellin},
      {"identity",
       "Check a finite-N identity (--which remainder|symmetric|rescaling). Formula: u^sigma - L_N(u) = "
       "M_{N,s,d} w(u) int_0^max B*_N(t) t^(sigma-1) dt with sigma = (s-d)/2; "
       "|y|^s - L_2N(y) = (2 sin(s pi/2)/pi) G(y) int_0^inf t^(s-1)/((1+(t/y)^2) G(it)) dt; "
       "B_N(y, Omega) = 2 B_N(2y-1, Omega*).",
       cmd_identity},
      {"converge",
       "Run a convergence experiment (--which theta-pointwise|theta-mellin|gaussian|cosh|perfect-spline|route|interp-limit). "
       "Formula: u^2 prod x_k^2 / N * B*_N(N t/beta_N^2) -> Theta_d(t); sqrt((N+1)/12) B_N(sqrt((N+1)/12) t) -> "
       "exp(-t^2/2)/sqrt(2 pi); B_2nu(t/(2nu+2))/(nu+1) -> 2/(pi cosh t).",
       cmd_converge},
      {"probe",
       "Diagnostic probes (--which rbeta|scaling|conjecture). Formula: beta_N^r |int_0^inf t^(s-1)/((1+(t/u)^2) "
       "G(it)) dt| against |v|^mu exp(-pi |v|/2), mu = 3 + max(r+d-2, 0), s = r + iv.",
       cmd_probe},
  };
  return list;
}

void add_options(CLI::App* sub, RunConfig& cfg, bool& dump) {
  sub->add_option("--which", cfg.which, "Quantity or experiment to compute");
  sub->add_option("--family", cfg.family,
                  "chebyshev-T, chebyshev-U, gegenbauer, hermite, equidistant, cardinal, reciprocal, general, custom");
  sub->add_option("--kind", cfg.kind, "omega_squared or omega_star (gaussian: cardinal or general)");
  sub->add_option("--d", cfg.d, "Parity index d (0 or 1)");
  sub->add_option("--lambda", cfg.lambda, "Gegenbauer parameter lambda");
  sub->add_option("--u,--uN", cfg.u, "u_N (knot u_N^2 of Omega)");
  sub->add_option("--N", cfg.N, "Spline degree N");
  sub->add_option("--nu", cfg.nu, "nu for reciprocal knots (N = 2 nu)");
  sub->add_option("--m", cfg.m, "Integer m of the log case");
  sub->add_option("--s", cfg.s, "Real s");
  sub->add_option("--r", cfg.r, "Re s of a vertical line");
  sub->add_option("--y", cfg.y, "Evaluation point y");
  sub->add_option("--sigma", cfg.sigma, "Mellin variable sigma");
  sub->add_option("--t", cfg.t, "Points t (comma separated)")->delimiter(',');
  sub->add_option("--N-list", cfg.N_list, "Degrees N (comma separated)")->delimiter(',');
  sub->add_option("--t-grid", cfg.t_grid, "Grid of t (comma separated)")->delimiter(',');
  sub->add_option("--s-list", cfg.s_list, "Real s values (comma separated)")->delimiter(',');
  sub->add_option("--v-grid", cfg.v_grid, "Imaginary parts v (comma separated)")->delimiter(',');
  sub->add_option("--omega", cfg.omega, "Explicit knots as decimals (comma separated)")->delimiter(',');
  sub->add_option("--zeros", cfg.zeros, "Positive zeros z_k (comma separated)")->delimiter(',');
  sub->add_option("--format", cfg.format, "csv or json");
  sub->add_option("--output,-o", cfg.output, "Output file (default: standard output)");
  sub->add_option("--max-bits", cfg.max_bits, "Precision ceiling in bits (overrides THETASPLINE_MAX_BITS)");
  sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  sub->add_flag("--timing", cfg.timing, "Record wall-clock times (output is then not reproducible)");
  sub->add_option("--config", "JSON run configuration; explicit flags override it");
  sub->add_flag("--dump-config", dump, "Print the resolved configuration as JSON and exit");
}

int exit_code(const Error& e) {
  switch (e.error_class()) {
    case ErrorClass::validation: return 2;
    case ErrorClass::numeric: return 3;
    case ErrorClass::io: return 4;
  }
  return 1;
}

// The config file is read before parsing so that explicit flags override it.
RunConfig preload_config(const std::vector<std::string>& args) {
  for (size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      continue;
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return RunConfig::from_json(ss.str());
  }
  return {};
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : subcommands()) n.push_back(s.name);
    return n;
  }();
  return names;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = preload_config(args);
    bool dump = false;
    CLI::App app{"B-splines on special knot sets, theta-like functions and Mellin transforms"};
    app.name("thetaspline");
    app.require_subcommand(1);
    std::vector<std::pair<CLI::App*, const Subcommand*>> subs;
    for (const auto& s : subcommands()) {
      auto* sub = app.add_subcommand(s.name, s.description);
      add_options(sub, cfg, dump);
      subs.emplace_back(sub, &s);
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      // help for the subcommand that was named, if any
      for (auto& [sub, s] : subs) {
        if (sub->parsed()) {
          out << sub->help();
          return 0;
        }
      }
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    for (auto& [sub, s] : subs) {
      if (!sub->parsed()) continue;
      cfg.command = s->name;
      context_for(cfg);  // rejects a malformed THETASPLINE_MAX_BITS for every subcommand
      if (dump) {
        out << cfg.to_json();
        return 0;
      }
      return s->run(cfg, out, err);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
}

}  // namespace thetaspline
