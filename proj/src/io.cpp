#include "grashof/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace grashof {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_text_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_json_atomic(const fs::path& path, const json& j) { write_text_atomic(path, j.dump(2) + "\n"); }

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInput("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

json field_to_json(const SpectralField& f) {
  json modes = json::array();
  for (const auto& [k, c] : f.modes()) {
    if (!k.is_representative()) continue;
    modes.push_back({{"k", {k.kx, k.ky}},
                     {"c", {{c[0].real(), c[0].imag()}, {c[1].real(), c[1].imag()}}}});
  }
  return {{"format", "grashof-field"},
          {"version", 1},
          {"truncation", f.truncation()},
          {"conjugate_closure", true},
          {"modes", modes}};
}

SpectralField field_from_json(const json& j, const std::string& origin) {
  try {
    if (j.value("format", "") != "grashof-field") throw MalformedInput(origin + ": not a field file");
    if (!j.value("conjugate_closure", false))
      throw MalformedInput(origin + ": only conjugate-closed mode lists are supported");
    const int N = j.at("truncation").get<int>();
    SpectralField::ModeMap m;
    for (const auto& e : j.at("modes")) {
      const WaveIndex k{e.at("k").at(0).get<int>(), e.at("k").at(1).get<int>()};
      const auto& c = e.at("c");
      const Vec2c v = {cplx(c.at(0).at(0).get<double>(), c.at(0).at(1).get<double>()),
                       cplx(c.at(1).at(0).get<double>(), c.at(1).at(1).get<double>())};
      if (m.count(k)) throw MalformedInput(origin + ": duplicate mode");
      m[k] = v;
    }
    return SpectralField::from_modes(N, m);
  } catch (const json::exception& e) {
    throw MalformedInput(origin + ": " + e.what());
  } catch (const MalformedInput& e) {
    const std::string what = e.what();
    if (what.rfind(origin, 0) == 0) throw;
    throw MalformedInput(origin + ": " + what);
  }
}

void write_field(const fs::path& path, const SpectralField& f) { write_json_atomic(path, field_to_json(f)); }

SpectralField read_field(const fs::path& path) { return field_from_json(read_json(path), path.string()); }

void write_manifest(const fs::path& path, const Manifest& m) {
  json entries = json::array();
  for (const auto& e : m.entries)
    entries.push_back({{"n", e.n},
                       {"alpha", e.alpha},
                       {"field", e.field},
                       {"residual_H", e.residual_H},
                       {"bound_check", e.bound_check}});
  json j = {{"format", "grashof-manifest"}, {"version", 1}, {"entries", entries}, {"notes", m.notes}};
  if (m.forcing) j["forcing"] = *m.forcing;
  write_json_atomic(path, j);
}

Manifest read_manifest(const fs::path& path) {
  const json j = read_json(path);
  Manifest m;
  m.base = path.parent_path();
  try {
    if (j.value("format", "") != "grashof-manifest") throw MalformedInput(path.string() + ": not a manifest");
    for (const auto& e : j.at("entries"))
      m.entries.push_back({e.at("n").get<int>(), e.at("alpha").get<double>(), e.at("field").get<std::string>(),
                           e.value("residual_H", 0.0), e.value("bound_check", 0.0)});
    if (j.contains("forcing")) m.forcing = j.at("forcing").get<std::string>();
    if (j.contains("notes")) m.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
  if (m.entries.empty()) throw MalformedInput(path.string() + ": manifest has no entries");
  return m;
}

SequenceData load_sequence(const Manifest& m) {
  SequenceData d;
  bool all_alpha = true;
  for (const auto& e : m.entries) {
    d.fields.push_back(read_field(m.resolve(e.field)));
    d.indices.push_back(e.n);
    if (!(e.alpha > 0.0)) all_alpha = false;
    d.alphas.push_back(e.alpha);
  }
  if (!all_alpha) d.alphas.clear();
  return d;
}

namespace {

json tolerances_to_json(const ToleranceSet& t) {
  return {{"limit", t.limit},
          {"finite", t.finite},
          {"zero", t.zero},
          {"floor", t.floor},
          {"reconstruction", t.reconstruction},
          {"unit", t.unit},
          {"max_levels", t.max_levels},
          {"min_window", t.min_window},
          {"estimator", to_string(t.estimator)},
          {"max_degree", t.max_degree},
          {"window", t.window},
          {"noise_factor", t.noise_factor}};
}

ToleranceSet tolerances_from_json(const json& j) {
  ToleranceSet t;
  t.limit = j.value("limit", t.limit);
  t.finite = j.value("finite", t.finite);
  t.zero = j.value("zero", t.zero);
  t.floor = j.value("floor", t.floor);
  t.reconstruction = j.value("reconstruction", t.reconstruction);
  t.unit = j.value("unit", t.unit);
  t.max_levels = j.value("max_levels", t.max_levels);
  t.min_window = j.value("min_window", t.min_window);
  t.estimator = limit_estimator_from_string(j.value("estimator", to_string(t.estimator)));
  t.max_degree = j.value("max_degree", t.max_degree);
  t.window = j.value("window", t.window);
  t.noise_factor = j.value("noise_factor", t.noise_factor);
  return t;
}

std::string pad(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return buf;
}

}  // namespace

void write_expansion(const fs::path& path, const ExpansionResult& e) {
  const std::string dir = path.stem().string() + "_fields";
  const fs::path base = path.parent_path();
  write_field(base / dir / "limit.json", e.limit);
  json terms = json::array();
  for (int k = 0; k < e.depth(); ++k) {
    const auto& t = e.terms[k];
    const std::string dname = dir + "/w" + std::to_string(k + 1) + ".json";
    write_field(base / dname, t.direction);
    json wit = json::array();
    for (size_t i = 0; i < t.witnesses.size(); ++i) {
      const std::string wname = dir + "/witness_" + std::to_string(k + 1) + "_" + pad(e.indices[i]) + ".json";
      write_field(base / wname, t.witnesses[i]);
      wit.push_back(wname);
    }
    terms.push_back({{"gammas", t.gammas}, {"direction", dname}, {"witnesses", wit}});
  }
  json j = {{"format", "grashof-expansion"},
            {"version", 1},
            {"limit", dir + "/limit.json"},
            {"kind", to_string(e.kind)},
            {"rule", to_string(e.rule)},
            {"scale", {{"regime", to_string(e.scale.regime)}, {"exponents", e.scale.exponents}}},
            {"tolerances", tolerances_to_json(e.tols)},
            {"indices", e.indices},
            {"alphas", e.alphas},
            {"depth_capped", e.depth_capped},
            {"limit_uncertainty", e.limit_uncertainty},
            {"direction_uncertainty", e.direction_uncertainty},
            {"terms", terms},
            {"decisions", e.decisions}};
  j["degenerate_N"] = e.degenerate_N ? json(*e.degenerate_N) : json(nullptr);
  write_json_atomic(path, j);
}

ExpansionResult read_expansion(const fs::path& path) {
  const json j = read_json(path);
  const fs::path base = path.parent_path();
  ExpansionResult e;
  try {
    if (j.value("format", "") != "grashof-expansion") throw MalformedInput(path.string() + ": not an expansion file");
    e.limit = read_field(base / j.at("limit").get<std::string>());
    e.kind = expansion_kind_from_string(j.at("kind").get<std::string>());
    e.rule = coefficient_rule_from_string(j.at("rule").get<std::string>());
    e.scale.regime = scale_regime_from_string(j.at("scale").at("regime").get<std::string>());
    e.scale.exponents = j.at("scale").at("exponents").get<std::vector<double>>();
    e.scale.validate();
    e.tols = tolerances_from_json(j.at("tolerances"));
    e.indices = j.at("indices").get<std::vector<int>>();
    e.alphas = j.at("alphas").get<std::vector<double>>();
    e.depth_capped = j.value("depth_capped", false);
    e.limit_uncertainty = j.value("limit_uncertainty", 0.0);
    e.direction_uncertainty = j.value("direction_uncertainty", std::vector<double>{});
    e.decisions = j.value("decisions", std::vector<std::string>{});
    if (!j.at("degenerate_N").is_null()) e.degenerate_N = j.at("degenerate_N").get<int>();
    for (const auto& t : j.at("terms")) {
      ExpansionTerm term;
      term.gammas = t.at("gammas").get<std::vector<double>>();
      term.direction = read_field(base / t.at("direction").get<std::string>());
      for (const auto& w : t.at("witnesses")) term.witnesses.push_back(read_field(base / w.get<std::string>()));
      if (term.gammas.size() != e.indices.size() || term.witnesses.size() != e.indices.size())
        throw MalformedInput(path.string() + ": term length differs from the index window");
      e.terms.push_back(std::move(term));
    }
  } catch (const json::exception& ex) {
    throw MalformedInput(path.string() + ": " + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw MalformedInput(path.string() + ": " + ex.what());
  }
  return e;
}

json classification_to_json(const ClassificationReport& r) {
  json constants = json::object();
  for (const auto& [k, c] : r.constants)
    constants[k] = {{"value", c.value}, {"uncertainty", c.uncertainty}, {"dispersion", c.dispersion}, {"order", c.order}};
  json residuals = json::array();
  for (const auto& c : r.residuals) residuals.push_back({{"id", c.id}, {"residual", c.residual}, {"passed", c.passed}});
  json relations = json::array();
  const auto& m = r.matrix;
  for (size_t i = 0; i < m.sequences.size(); ++i)
    for (size_t j = i + 1; j < m.sequences.size(); ++j) {
      const auto& rel = m.relations[i][j];
      json x = {{"xi", m.sequences[i].label},
                {"eta", m.sequences[j].label},
                {"verdict", to_string(rel.verdict)},
                {"slope", rel.slope},
                {"dispersion", rel.dispersion}};
      if (rel.verdict == Verdict::sim) x["lambda"] = rel.lambda;
      relations.push_back(x);
    }
  json undecided = json::array();
  for (const auto& [a, b] : r.comparability.undecided) undecided.push_back({a, b});
  json j = {{"format", "grashof-classification"},
            {"version", 1},
            {"branch", r.branch},
            {"constants", constants},
            {"residuals", residuals},
            {"relations", relations},
            {"comparability", {{"total", r.comparability.total}, {"undecided", undecided}}},
            {"tolerances",
             {{"slope", r.tols.slope},
              {"disp", r.tols.disp},
              {"residual", r.tols.residual},
              {"zero_gate", r.tols.zero_gate},
              {"window", "tail half"}}},
            {"decisions", r.decisions},
            {"warnings", r.warnings}};
  if (r.chi) {
    j["chi"] = {{"tag", to_string(r.chi->tag)}, {"values", r.chi->chi}};
    if (r.chi->extended) j["chi"]["extended_total"] = r.chi->comparability.total;
  } else {
    j["chi"] = nullptr;
  }
  return j;
}

void write_classification(const fs::path& path, const ClassificationReport& r) {
  write_json_atomic(path, classification_to_json(r));
}

std::string CsvTable::render() const {
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace grashof
