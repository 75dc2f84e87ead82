#include "catch_amalgamated.hpp"

#include <fstream>
#include <random>

#include "grashof/fixtures.hpp"
#include "grashof/io.hpp"

using namespace grashof;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("grashof_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("doubles print with round-trip precision", "[io]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    REQUIRE(std::stod(format_double(x)) == x);
  }
  REQUIRE(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("field files round-trip exactly", "[io]") {
  const fs::path dir = scratch("field");
  const SpectralField f = random_field(5, 17);
  write_field(dir / "f.json", f);
  const SpectralField g = read_field(dir / "f.json");
  REQUIRE(g.truncation() == f.truncation());
  REQUIRE(g.modes() == f.modes());
  REQUIRE_FALSE(fs::exists(dir / "f.json.tmp"));
}

TEST_CASE("unreadable and malformed inputs are reported", "[io]") {
  const fs::path dir = scratch("bad");
  SECTION("missing file") { REQUIRE_THROWS_AS(read_field(dir / "none.json"), MissingInput); }

  SECTION("not JSON") {
    std::ofstream(dir / "x.json") << "{ not json";
    REQUIRE_THROWS_AS(read_field(dir / "x.json"), MalformedInput);
  }

  SECTION("wrong format tag") {
    std::ofstream(dir / "x.json") << R"({"format": "other"})";
    REQUIRE_THROWS_AS(read_field(dir / "x.json"), MalformedInput);
  }

  SECTION("divergent mode") {
    std::ofstream(dir / "x.json")
        << R"({"format":"grashof-field","version":1,"truncation":2,"conjugate_closure":true,)"
        << R"("modes":[{"k":[1,0],"c":[[1,0],[0,0]]}]})";
    try {
      read_field(dir / "x.json");
      FAIL("expected a malformed field");
    } catch (const MalformedInput& e) {
      REQUIRE(std::string(e.what()).find("x.json") != std::string::npos);
    }
  }

  SECTION("empty manifest") {
    std::ofstream(dir / "m.json") << R"({"format":"grashof-manifest","version":1,"entries":[]})";
    REQUIRE_THROWS_AS(read_manifest(dir / "m.json"), MalformedInput);
  }
}

TEST_CASE("manifest and sequence loading", "[io]") {
  const fs::path dir = scratch("manifest");
  Manifest m;
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "fields/v" + std::to_string(n) + ".json";
    write_field(dir / name, random_field(2, n));
    m.entries.push_back({n, 2.0 * n, name, 1e-14, 0.5});
  }
  m.forcing = "g.json";
  m.notes = {"test manifest"};
  write_manifest(dir / "manifest.json", m);

  const Manifest r = read_manifest(dir / "manifest.json");
  REQUIRE(r.entries.size() == 3);
  REQUIRE(r.forcing == std::optional<std::string>("g.json"));
  REQUIRE(r.notes == m.notes);
  const SequenceData d = load_sequence(r);
  REQUIRE(d.indices == std::vector<int>{1, 2, 3});
  REQUIRE(d.alphas == std::vector<double>{2.0, 4.0, 6.0});
  REQUIRE(d.fields[1].modes() == random_field(2, 2).modes());

  SECTION("missing alphas fall back to indices") {
    Manifest z = m;
    z.entries[1].alpha = 0.0;
    write_manifest(dir / "z.json", z);
    REQUIRE(load_sequence(read_manifest(dir / "z.json")).alphas.empty());
  }
}

TEST_CASE("expansion files round-trip", "[io]") {
  const fs::path dir = scratch("expansion");
  const ShearFamilyConfig cfg{{{2, 1.0}}};
  const ExpansionResult e = shear_family_expansion(cfg, {1, 2, 3, 4, 5, 6});
  write_expansion(dir / "exp.json", e);
  const ExpansionResult r = read_expansion(dir / "exp.json");
  REQUIRE(r.kind == e.kind);
  REQUIRE(r.rule == e.rule);
  REQUIRE(r.indices == e.indices);
  REQUIRE(r.alphas == e.alphas);
  REQUIRE(r.scale.exponents == e.scale.exponents);
  REQUIRE(r.limit.modes() == e.limit.modes());
  REQUIRE(r.depth() == e.depth());
  for (int k = 0; k < e.depth(); ++k) {
    REQUIRE(r.terms[k].gammas == e.terms[k].gammas);
    REQUIRE(r.terms[k].direction.modes() == e.terms[k].direction.modes());
    for (int i = 0; i < e.window(); ++i) REQUIRE(r.terms[k].witnesses[i].modes() == e.terms[k].witnesses[i].modes());
  }
  REQUIRE(fs::exists(dir / "exp_fields" / "w1.json"));
}

TEST_CASE("CSV rendering", "[io]") {
  CsvTable t{{"n", "alpha"}, {{"1", "2.5"}, {"2", "5"}}};
  REQUIRE(t.render() == "n,alpha\n1,2.5\n2,5\n");
}
