#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inls/config.hpp"
#include "inls/diag_io.hpp"
#include "inls/report_json.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace inls;

TEST_CASE("lemma reports round-trip bit-identically through JSON") {
  ParamSet p;
  p.dim = 3;
  p.alpha = Rational(5, 2);
  p.b = Rational(1, 2);
  p.s = Rational(1);
  p.theta = Rational(1, 100);
  const LemmaReport report = global_pairs(p);
  CHECK(report.pass());

  const Json j = to_json(report);
  const std::string once = j.dump(2);
  const LemmaReport parsed = lemma_report_from_json(Json::parse(once));
  const std::string twice = to_json(parsed).dump(2);
  CHECK(once == twice);
  CHECK(parsed.pass() == report.pass());

  // a tampered verdict is rejected on re-validation
  Json bad = Json::parse(once);
  bad["identities"][0]["pass"] = false;
  CHECK_THROWS_AS(lemma_report_from_json(bad), std::invalid_argument);
}

TEST_CASE("run config parses sections, rejects unknown keys") {
  std::istringstream good(R"(
# comment
[params]
N = 1
alpha = 3
b = 1/4
s = 0
lambda = -1

[grid]
dim = 1
extent = 50.0
points = 512

[run]
T = 1.0
dt = 0.001
sample_every = 10

[output]
dir = out
formats = csv, json
)");
  const RunConfig cfg = parse_run_config(good);
  CHECK(cfg.params.dim == 1);
  CHECK(cfg.params.alpha == Rational(3));
  CHECK(cfg.params.b == Rational(1, 4));
  CHECK(cfg.grid.points == 512);
  CHECK(cfg.run.dt == doctest::Approx(1e-3));
  CHECK(cfg.output.formats == std::vector<std::string>{"csv", "json"});

  std::istringstream typo("[params]\nalfa = 3\n");
  CHECK_THROWS_WITH_AS(parse_run_config(typo),
                       "unknown key 'alfa' in section [params]", std::invalid_argument);
  std::istringstream badsec("[stuff]\nx = 1\n");
  CHECK_THROWS_AS(parse_run_config(badsec), std::invalid_argument);
  std::istringstream badfmt("[output]\nformats = yaml\n");
  CHECK_THROWS_AS(parse_run_config(badfmt), std::invalid_argument);
}

TEST_CASE("diagnostics CSV carries one hs column per requested order") {
  Diagnostics d;
  d.times = {0.0, 0.5};
  d.mass_trace = {1.0, 1.0};
  d.energy_trace = {2.0, 2.0};
  d.l2_trace = {1.0, 1.0};
  d.hs_orders = {0.5, 1.0};
  d.hs_traces = {{3.0, 3.1}, {4.0, 4.1}};
  CHECK(diagnostics_csv_header(d) == "time,mass,energy,l2,hs_0.5,hs_1");

  std::ostringstream os;
  write_diagnostics_csv(os, d);
  const std::string text = os.str();
  CHECK(text.find("time,mass,energy,l2,hs_0.5,hs_1\n") == 0);
  CHECK(text.find("0.5,1,2,1,3.1") != std::string::npos);
}

TEST_CASE("binary field records round-trip with their descriptor") {
  const Grid g = make_grid(1, 16.0, 32);
  Field a = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  Field b = linear_propagate(a, 0.25);
  const auto path = std::filesystem::temp_directory_path() / "inls_test_field.bin";

  write_field_bin(path.string(), {{0.0, a}, {0.25, b}});
  const auto frames = read_field_bin(path.string());
  REQUIRE(frames.size() == 2);
  CHECK(frames[0].first == 0.0);
  CHECK(frames[1].first == 0.25);
  CHECK(frames[0].second.grid == g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(frames[0].second.values[i] == a.values[i]);
    CHECK(frames[1].second.values[i] == b.values[i]);
  }
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".json");
}
