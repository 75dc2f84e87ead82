#include "grashof/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "grashof/expansion.hpp"
#include "grashof/fixtures.hpp"
#include "grashof/io.hpp"
#include "grashof/order.hpp"
#include "grashof/steady.hpp"

namespace grashof::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::map<int, double> parse_coeffs(const std::string& text) {
  std::map<int, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--coeffs: expected m:c pairs, got '" + item + "'");
    try {
      size_t used = 0;
      const int m = std::stoi(item.substr(0, colon), &used);
      const double c = std::stod(item.substr(colon + 1));
      if (m < 2) throw UsageError("--coeffs: wavenumber must be at least 2, got " + std::to_string(m));
      if (out.count(m)) throw UsageError("--coeffs: wavenumber " + std::to_string(m) + " given twice");
      out[m] = c;
    } catch (const std::logic_error&) {
      throw UsageError("--coeffs: cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--coeffs: no coefficients given");
  return out;
}

NestedScale parse_scale(const std::string& text, int levels) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  std::vector<double> values;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        values.push_back(std::stod(item));
      } catch (const std::logic_error&) {
        throw UsageError("--scale: cannot parse exponent '" + item + "'");
      }
    }
  }
  try {
    if (head == "2d-periodic" && values.empty()) return NestedScale::default_periodic_2d(levels);
    if (head == "single") {
      if (values.size() != 1) throw UsageError("--scale single needs one exponent, e.g. single:0.5");
      return NestedScale::single(values[0], levels);
    }
    if (head == "2d-periodic" || head == "general") return NestedScale::from_list(values, scale_regime_from_string(head));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--scale: ") + e.what());
  }
  throw UsageError("--scale: unknown scale '" + text + "'");
}

std::vector<int> index_list(int start, double factor, int count) {
  if (start < 1) throw UsageError("--n-start must be positive");
  if (count < 1) throw UsageError("--count must be positive");
  if (!(factor >= 1.0)) throw UsageError("--n-factor must be at least 1");
  std::vector<int> ns;
  for (int i = 0; i < count; ++i) {
    int n = factor == 1.0 ? start + i : static_cast<int>(std::llround(start * std::pow(factor, i)));
    if (!ns.empty() && n <= ns.back()) n = ns.back() + 1;
    ns.push_back(n);
  }
  return ns;
}

std::string field_name(int n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fields/v_%07d.json", n);
  return buf;
}

// Relative size of B(v,v) in V', the quantity that must vanish in the limit.
double nonlinear_defect(const SpectralField& v, const SpectralField& g) {
  return norm_Vdual(bilinear_B(v, v)) / norm_Vdual(g);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  double alpha_start = 1.0;
  double alpha_factor = 2.0;
  int count = 10;
  std::string force;
  std::string fixture;
  std::string coeffs = "2:1";
  int n_start = 1;
  double n_factor = 1.0;
  int truncation = 0;
  double tol = 1e-12;
  std::string out;
};

int do_sweep(const SweepArgs& a, Context& ctx) {
  if (a.force.empty() == a.fixture.empty()) throw UsageError("sweep: give exactly one of --force or --fixture");
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  std::vector<double> alphas;
  std::vector<SpectralField> forces;
  std::vector<int> ns;
  SpectralField g_limit;
  int N = a.truncation;
  std::vector<std::string> notes = {"continuation branch only; no branch switching"};
  if (!a.fixture.empty()) {
    if (a.fixture != "manufactured-shear") throw UsageError("--fixture: unknown fixture '" + a.fixture + "'");
    ShearFamilyConfig cfg{parse_coeffs(a.coeffs)};
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--coeffs: ") + e.what());
    }
    ns = index_list(a.n_start, a.n_factor, a.count);
    if (N == 0) N = cfg.truncation();
    if (N < cfg.truncation()) throw UsageError("--truncation is below the fixture's largest wavenumber");
    for (int n : ns) {
      const ShearSample s = shear_family(cfg, n);
      alphas.push_back(s.alpha);
      forces.push_back(s.g_n);
      g_limit = s.g_limit;
    }
    notes.push_back("forcing g_n from the manufactured-shear family, coefficients " + a.coeffs);
  } else {
    if (!(a.alpha_start > 0.0)) throw UsageError("--alpha-start must be positive");
    if (!(a.alpha_factor > 1.0)) throw UsageError("--alpha-factor must exceed 1");
    if (a.count < 1) throw UsageError("--count must be positive");
    const SpectralField g = read_field(a.force);
    if (N == 0) N = std::max(1, g.max_wavenumber());
    for (int i = 0; i < a.count; ++i) {
      alphas.push_back(a.alpha_start * std::pow(a.alpha_factor, i));
      ns.push_back(i + 1);
    }
    forces.push_back(g);
    g_limit = g;
    notes.push_back("fixed forcing from " + a.force);
  }

  SweepOptions opts;
  opts.solver.tol = a.tol;
  const std::vector<SolveReport> reports = sweep(alphas, forces, N, opts);

  const fs::path dir = a.out;
  Manifest m;
  m.notes = notes;
  m.forcing = "forcing.json";
  write_field(dir / "forcing.json", g_limit.truncated(N).with_truncation(N));
  CsvTable csv;
  csv.header = {"n", "alpha", "residual_H", "bound_check", "energy_check", "newton_iters", "nonlinear_defect"};
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    write_field(dir / field_name(ns[i]), r.solution);
    m.entries.push_back({ns[i], alphas[i], field_name(ns[i]), r.residual_H, r.bound_check});
    csv.rows.push_back({std::to_string(ns[i]), format_double(alphas[i]), format_double(r.residual_H),
                        format_double(r.bound_check), format_double(r.energy_check),
                        std::to_string(r.newton_iters), format_double(nonlinear_defect(r.solution, g_limit))});
  }
  write_manifest(dir / "manifest.json", m);
  write_text_atomic(dir / "sweep.csv", csv.render());
  ctx.out << "sweep: " << reports.size() << " converged solves written to " << dir.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- fixtures

struct FixtureArgs {
  std::string name;
  std::string coeffs = "2:1";
  int count = 20;
  int n_start = 1;
  double n_factor = 1.0;
  int truncation = 64;
  int levels = 3;
  std::string out;
};

int do_fixtures(const FixtureArgs& a, Context& ctx) {
  const fs::path dir = a.out;
  Manifest m;
  if (a.name == "manufactured-shear") {
    ShearFamilyConfig cfg{parse_coeffs(a.coeffs)};
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--coeffs: ") + e.what());
    }
    const std::vector<int> ns = index_list(a.n_start, a.n_factor, a.count);
    SpectralField g;
    for (int n : ns) {
      const ShearSample s = shear_family(cfg, n);
      write_field(dir / field_name(n), s.v_n);
      const double res = norm_H(residual(s.v_n, {s.g_n, s.alpha, cfg.truncation()}));
      m.entries.push_back({n, s.alpha, field_name(n), res, norm_H(stokes(s.v_n)) / norm_H(s.g_n)});
      g = s.g_limit;
    }
    write_field(dir / "forcing.json", g);
    m.forcing = "forcing.json";
    m.notes = {"manufactured-shear closed form, coefficients " + a.coeffs};
    if (ns.size() >= 6) write_expansion(dir / "analytic_expansion.json", shear_family_expansion(cfg, ns));
  } else if (a.name == "eigen-cascade") {
    if (a.truncation < kCascadeMinTruncation)
      throw UsageError("--truncation must be at least " + std::to_string(kCascadeMinTruncation));
    const std::vector<int> ns = index_list(a.n_start, a.n_factor, a.count);
    if (ns.back() > 6) throw UsageError("--count: eigen-cascade indices must stay within 1..6");
    for (int n : ns) {
      const EigenCascadeSample s = eigen_cascade(n, a.truncation, a.levels);
      write_field(dir / field_name(n), s.v_n);
      m.entries.push_back({n, std::exp(static_cast<double>(n)), field_name(n), 0.0, 0.0});
    }
    m.notes = {"eigen-cascade closed form, truncation " + std::to_string(a.truncation),
               "alpha column holds exp(n), the decay variable of the family"};
    if (ns.size() >= 6) {
      write_expansion(dir / "analytic_unitary.json", eigen_cascade_unitary(ns, a.truncation, a.levels));
      write_expansion(dir / "analytic_degenerate.json", eigen_cascade_degenerate(ns, a.truncation, a.levels));
    }
  } else {
    throw UsageError("fixtures: unknown fixture '" + a.name + "'");
  }
  write_manifest(dir / "manifest.json", m);
  ctx.out << "fixtures: " << a.name << " with " << m.entries.size() << " samples written to " << dir.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
  std::string manifest;
  std::string out;
  std::string rule = "unitary";
  std::string scale = "2d-periodic";
  int levels = 6;
  std::string estimator = "extrapolate";
  int window = 0;
  double tol_limit = 1e-10;
  double tol_finite = 1e-10;
  double tol_zero = 1e-10;
  int min_window = 6;
};

int do_extract(const ExtractArgs& a, Context& ctx) {
  CoefficientRule rule;
  ToleranceSet tols;
  try {
    rule = coefficient_rule_from_string(a.rule);
    tols.estimator = limit_estimator_from_string(a.estimator);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.levels < 1) throw UsageError("--levels must be positive");
  if (a.window < 0) throw UsageError("--window must be nonnegative");
  const NestedScale scale = parse_scale(a.scale, a.levels);
  tols.max_levels = a.levels;
  tols.window = a.window;
  tols.limit = a.tol_limit;
  tols.finite = a.tol_finite;
  tols.zero = a.tol_zero;
  tols.min_window = a.min_window;
  const Manifest m = read_manifest(a.manifest);
  const SequenceData data = load_sequence(m);
  const ExpansionResult e = extract(data, scale, tols, rule);
  write_expansion(a.out, e);
  ctx.out << "extract: " << to_string(e.kind) << " expansion with " << e.depth() << " term(s)";
  if (e.degenerate_N) ctx.out << ", degenerate after " << *e.degenerate_N;
  ctx.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int do_verify(const std::string& expansion, const std::string& manifest, const std::string& out, Context& ctx) {
  const ExpansionResult e = read_expansion(expansion);
  const SequenceData data = load_sequence(read_manifest(manifest));
  const VerificationReport rep = verify_expansion(e, data);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"id", c.id}, {"passed", c.passed}, {"value", c.value}, {"detail", c.detail}});
    ctx.out << (c.passed ? "PASS " : "FAIL ") << c.id << " " << format_double(c.value) << "\n";
  }
  if (!out.empty())
    write_json_atomic(out, {{"format", "grashof-verification"},
                            {"version", 1},
                            {"all_passed", rep.all_passed()},
                            {"checks", checks},
                            {"remainder_ratios", rep.remainder_ratios}});
  return kExitOk;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string expansion;
  std::string manifest;
  std::string forcing;
  std::string out;
  OrderTolerances tols;
};

int do_classify(const ClassifyArgs& a, Context& ctx) {
  const ExpansionResult e = read_expansion(a.expansion);
  const Manifest m = read_manifest(a.manifest);
  fs::path gpath;
  if (!a.forcing.empty()) {
    gpath = a.forcing;
  } else if (m.forcing) {
    gpath = m.resolve(*m.forcing);
  } else {
    throw UsageError("classify: manifest has no forcing entry; pass --forcing");
  }
  const SpectralField g = read_field(gpath);
  const ClassificationReport r = classify(e, g, a.tols);
  write_classification(a.out, r);
  ctx.out << "classify: branch " << r.branch << "\n";
  for (const auto& w : r.warnings) ctx.out << "warning: " << w << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- report

int do_report(const std::string& dir_arg, Context& ctx) {
  const fs::path dir = dir_arg;
  const std::vector<std::string> needed = {"manifest.json", "expansion.json", "classification.json"};
  std::vector<std::string> missing;
  for (const auto& f : needed)
    if (!fs::exists(dir / f)) missing.push_back(f);
  if (!missing.empty()) {
    std::string list;
    for (const auto& f : missing) list += " " + f;
    throw UsageError("report: " + dir.string() + " lacks" + list +
                     " (run fixtures or sweep, then extract, then classify into the same directory)");
  }
  const Manifest m = read_manifest(dir / "manifest.json");
  const ExpansionResult e = read_expansion(dir / "expansion.json");
  const json cls = read_json(dir / "classification.json");
  const SequenceData data = load_sequence(m);
  const VerificationReport ver = verify_expansion(e, data);

  std::map<int, size_t> field_pos;
  for (size_t i = 0; i < data.indices.size(); ++i) field_pos[data.indices[i]] = i;
  std::map<int, const ManifestEntry*> by_n;
  for (const auto& en : m.entries) by_n[en.n] = &en;
  const int K = e.depth();
  CsvTable csv;
  csv.header = {"n", "alpha"};
  for (int k = 1; k <= K; ++k) csv.header.push_back("Gamma_" + std::to_string(k));
  for (int k = 1; k <= K; ++k) csv.header.push_back("remainder_ratio_" + std::to_string(k));
  csv.header.push_back("residual_H");
  csv.header.push_back("bound_check");
  for (int i = 0; i < e.window(); ++i) {
    const int n = e.indices[i];
    std::vector<std::string> row = {std::to_string(n), e.alphas.empty() ? "" : format_double(e.alphas[i])};
    for (int k = 0; k < K; ++k) row.push_back(format_double(e.terms[k].gammas[i]));
    for (int k = 1; k <= K; ++k) {
      // Remainder after k terms in Z_k, relative to Gamma_k.
      const double s = e.scale.exponent(std::min(k, e.scale.levels()));
      const double rem = norm_Ds(data.fields.at(field_pos.at(n)) - e.partial_sum(k, i), s);
      row.push_back(format_double(rem / e.terms[k - 1].gammas[i]));
    }
    const ManifestEntry* en = by_n.count(n) ? by_n[n] : nullptr;
    row.push_back(en ? format_double(en->residual_H) : "");
    row.push_back(en ? format_double(en->bound_check) : "");
    csv.rows.push_back(std::move(row));
  }
  write_text_atomic(dir / "series.csv", csv.render());

  std::ostringstream txt;
  txt << "samples: " << m.entries.size() << " (n = " << m.entries.front().n << " .. " << m.entries.back().n << ")\n";
  txt << "expansion: " << to_string(e.kind) << ", " << K << " term(s), rule " << to_string(e.rule) << ", scale "
      << to_string(e.scale.regime) << "\n";
  if (e.depth_capped) txt << "  depth verdict is provisional on a finite window\n";
  txt << "limit: |v|_V = " << format_double(norm_V(e.limit)) << ", uncertainty "
      << format_double(e.limit_uncertainty) << "\n";
  txt << "verification:\n";
  for (const auto& c : ver.checks)
    txt << "  " << (c.passed ? "pass " : "FAIL ") << c.id << " (" << format_double(c.value) << ")\n";
  txt << "classification: " << cls.value("branch", "?") << "\n";
  if (cls.contains("constants"))
    for (const auto& [k, c] : cls["constants"].items())
      txt << "  " << k << " = " << format_double(c.value("value", 0.0)) << " +- "
          << format_double(c.value("uncertainty", 0.0)) << "\n";
  if (cls.contains("residuals"))
    for (const auto& r : cls["residuals"])
      txt << "  residual " << r.value("id", "?") << " = " << format_double(r.value("residual", 0.0)) << "\n";
  if (cls.contains("warnings"))
    for (const auto& w : cls["warnings"]) txt << "  warning: " << w.get<std::string>() << "\n";
  for (const auto& note : m.notes) txt << "note: " << note << "\n";
  write_text_atomic(dir / "report.txt", txt.str());
  ctx.out << txt.str();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic expansions of steady 2D periodic Navier-Stokes solutions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Context ctx{out, err};

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Newton continuation along increasing alpha");
  sweep_cmd->add_option("--alpha-start", sw.alpha_start, "first alpha (with --force)");
  sweep_cmd->add_option("--alpha-factor", sw.alpha_factor, "geometric alpha ratio (with --force)");
  sweep_cmd->add_option("--count", sw.count, "number of solves");
  sweep_cmd->add_option("--force", sw.force, "forcing field file");
  sweep_cmd->add_option("--fixture", sw.fixture, "built-in forcing family: manufactured-shear");
  auto* sw_coeffs = sweep_cmd->add_option("--coeffs", sw.coeffs, "shear coefficients m:c, comma separated");
  double sw_c2 = 0.0;
  auto* sw_c2_opt = sweep_cmd->add_option("--c2", sw_c2, "shorthand for --coeffs 2:<value>")->excludes(sw_coeffs);
  sweep_cmd->add_option("--n-start", sw.n_start, "first family index");
  sweep_cmd->add_option("--n-factor", sw.n_factor, "geometric index ratio, 1 for consecutive");
  sweep_cmd->add_option("--truncation", sw.truncation, "Galerkin radius N (0 = from forcing)");
  sweep_cmd->add_option("--tol", sw.tol, "Newton tolerance relative to max(1,|g|)");
  sweep_cmd->add_option("--out", sw.out, "output directory")->required();

  ExtractArgs ex;
  auto* extract_cmd = app.add_subcommand("extract", "Extract the asymptotic expansion of a sequence");
  extract_cmd->add_option("--manifest", ex.manifest, "sequence manifest")->required();
  extract_cmd->add_option("--out", ex.out, "expansion file to write")->required();
  extract_cmd->add_option("--rule", ex.rule, "strict or unitary");
  extract_cmd->add_option("--scale", ex.scale, "2d-periodic, single:<s>, 2d-periodic:<list>, general:<list>");
  extract_cmd->add_option("--levels", ex.levels, "maximum number of terms");
  extract_cmd->add_option("--estimator", ex.estimator, "extrapolate or tail-average");
  extract_cmd->add_option("--window", ex.window, "trailing samples used by the estimator (0 = all)");
  extract_cmd->add_option("--tol-limit", ex.tol_limit, "Cauchy tolerance for the limit");
  extract_cmd->add_option("--tol-finite", ex.tol_finite, "witness stabilization tolerance");
  extract_cmd->add_option("--tol-zero", ex.tol_zero, "zero-direction tolerance");
  extract_cmd->add_option("--min-window", ex.min_window, "minimum number of samples");

  std::string v_expansion, v_manifest, v_out;
  auto* verify_cmd = app.add_subcommand("verify", "Check the expansion properties against the data");
  verify_cmd->add_option("--expansion", v_expansion, "expansion file")->required();
  verify_cmd->add_option("--manifest", v_manifest, "sequence manifest")->required();
  verify_cmd->add_option("--out", v_out, "verification report to write");

  ClassifyArgs cl;
  auto* classify_cmd = app.add_subcommand("classify", "Order relations and limit-equation branch");
  classify_cmd->add_option("--expansion", cl.expansion, "expansion file")->required();
  classify_cmd->add_option("--manifest", cl.manifest, "sequence manifest")->required();
  classify_cmd->add_option("--forcing", cl.forcing, "limit forcing field (default: from manifest)");
  classify_cmd->add_option("--out", cl.out, "classification file to write")->required();
  classify_cmd->add_option("--slope-tol", cl.tols.slope, "log-slope threshold for succ/prec");
  classify_cmd->add_option("--disp-tol", cl.tols.disp, "log-dispersion threshold for sim");
  classify_cmd->add_option("--residual-tol", cl.tols.residual, "branch equation tolerance");

  FixtureArgs fx;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write closed-form fixture sequences");
  fixtures_cmd->add_option("name", fx.name, "manufactured-shear or eigen-cascade")->required();
  auto* fx_coeffs = fixtures_cmd->add_option("--coeffs", fx.coeffs, "shear coefficients m:c, comma separated");
  double fx_c2 = 0.0;
  auto* fx_c2_opt = fixtures_cmd->add_option("--c2", fx_c2, "shorthand for --coeffs 2:<value>")->excludes(fx_coeffs);
  fixtures_cmd->add_option("--count", fx.count, "number of samples");
  fixtures_cmd->add_option("--n-start", fx.n_start, "first index");
  fixtures_cmd->add_option("--n-factor", fx.n_factor, "geometric index ratio, 1 for consecutive");
  fixtures_cmd->add_option("--truncation", fx.truncation, "eigenmode count for eigen-cascade");
  fixtures_cmd->add_option("--levels", fx.levels, "terms in the closed-form cascade expansions");
  fixtures_cmd->add_option("--out", fx.out, "output directory")->required();

  std::string r_dir;
  auto* report_cmd = app.add_subcommand("report", "Summarize a pipeline directory");
  report_cmd->add_option("--dir", r_dir, "directory with manifest, expansion and classification")->required();

  std::vector<std::string> store = args;
  std::vector<char*> argv;
  for (auto& s : store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) {
      if (sw_c2_opt->count()) sw.coeffs = "2:" + format_double(sw_c2);
      return do_sweep(sw, ctx);
    }
    if (fixtures_cmd->parsed()) {
      if (fx_c2_opt->count()) fx.coeffs = "2:" + format_double(fx_c2);
      return do_fixtures(fx, ctx);
    }
    if (extract_cmd->parsed()) return do_extract(ex, ctx);
    if (verify_cmd->parsed()) return do_verify(v_expansion, v_manifest, v_out, ctx);
    if (classify_cmd->parsed()) return do_classify(cl, ctx);
    if (report_cmd->parsed()) return do_report(r_dir, ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MissingInput& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedInput& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContinuationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace grashof::cli
