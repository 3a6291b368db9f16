#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "eulerspec/evolution.hpp"
#include "eulerspec/serialize.hpp"
#include "eulerspec/spectra.hpp"

using namespace eulerspec;
using nlohmann::json;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("slices report round trip") {
  const ProblemInstance inst{{0, 2}, Complex(2, 0), {}};
  const auto rep = make_slices_report(inst);
  CHECK(rep.kappa == 6);
  REQUIRE(rep.slices.size() == 4);
  REQUIRE(rep.betas.size() == 4);

  const std::string text = to_json(rep);
  CHECK(to_json(rep) == text);  // deterministic
  CHECK(text.back() == '\n');
  const json j = json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "slices");
  CHECK(j["kappa"] == 6);
  CHECK(j["instance"]["p"] == json::array({0, 2}));
  CHECK(j["instance"]["gamma"] == json::array({2.0, 0.0}));
  CHECK(j["slices"].size() == 4);
  CHECK(j["slices"][0]["qhat"] == json::array({-1, 0}));
  CHECK(j["slices"][0]["window"] == json::array({0, 0}));

  const std::string csv = to_csv(rep);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "qhat_x,qhat_y,n_lo,n_hi,beta_re,beta_im");
  CHECK(count_lines(csv) == 5);  // header + one row per slice
}

TEST_CASE("pretty and compact forms carry the same document") {
  const ProblemInstance inst{{1, 1}, Complex(1, 0), {}};
  const auto rep = make_slices_report(inst);
  const std::string compact = to_json(rep, false);
  const std::string pretty = to_json(rep, true);
  CHECK(pretty != compact);
  CHECK(pretty.find('\n') != std::string::npos);
  CHECK(json::parse(pretty) == json::parse(compact));
}

TEST_CASE("spectrum report serialization") {
  const ProblemInstance inst{{1, 1}, Complex(1, 0), {}};
  const auto rep = nonimaginary_spectrum(inst);
  const std::string text = to_json(rep);
  CHECK(to_json(rep) == text);
  const json j = json::parse(text);
  CHECK(j["kind"] == "spectrum");
  CHECK(j["schema"] == 1);
  CHECK(j["kappa"] == 4);
  CHECK(j["bound_ok"] == true);
  CHECK(j["symmetry_ok"] == true);
  CHECK(j["all_converged"] == true);
  REQUIRE(j["nonimaginary"].size() == 4);
  for (const auto& e : j["nonimaginary"]) {
    CHECK(e["lambda"].size() == 2);
    CHECK(e["multiplicity"] == 2);
    CHECK(e.contains("qhat"));
  }
  REQUIRE(j.contains("per_slice"));
  for (const auto& s : j["per_slice"]) {
    CHECK(s["converged"] == true);
    CHECK(s["final_N"].get<int>() >= 64);
  }

  const std::string csv = to_csv(rep);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "qhat_x,qhat_y,re,im,converged");
  // one row per eigenvalue of every slice at its final window
  int rows = 0;
  for (const auto& s : rep.per_slice) rows += static_cast<int>(s.eigenvalues.size());
  CHECK(count_lines(csv) == rows + 1);
}

TEST_CASE("evolve and resolvent report serialization") {
  const ProblemInstance inst{{0, 2}, Complex(2, 0), {}};
  EvolveReport er;
  er.instance = inst;
  er.K = 8;
  er.trials = 1;
  er.seed = 7;
  er.t_final = 2.0;
  const double dt = max_stable_dt(inst, er.K) / 2;
  er.dt = dt;
  er.mapping.reference = 0.5;
  er.mapping.tolerance = 0.025;
  er.mapping.rates = {0.49};
  er.mapping.ok = true;
  er.trajectory = evolve(inst, er.K, random_state(er.K, 7), er.t_final, dt);

  const std::string text = to_json(er);
  CHECK(to_json(er) == text);
  const json j = json::parse(text);
  CHECK(j["kind"] == "evolve");
  CHECK(j["seed"] == 7);
  CHECK(j["rates"] == json::array({0.49}));
  CHECK(j["trajectory"]["times"].size() == er.trajectory.times.size());

  const std::string csv = to_csv(er);
  CHECK(csv.rfind("t,norm\n", 0) == 0);
  CHECK(count_lines(csv) == static_cast<int>(er.trajectory.times.size()) + 1);

  ResolventReport rr;
  rr.instance = inst;
  rr.K = 4;
  rr.a = 0.5;
  rr.taus = {0.0, 10.0};
  rr.samples = {2.0, 1.0};
  rr.tail_ok = true;
  const json rj = json::parse(to_json(rr));
  CHECK(rj["kind"] == "resolvent");
  CHECK(rj["a"] == 0.5);
  CHECK(rj["samples"].size() == 2);
  CHECK(to_csv(rr).rfind("tau,resolvent_norm\n", 0) == 0);
}

TEST_CASE("report combination") {
  const ProblemInstance inst{{1, 1}, Complex(1, 0), {}};
  const std::string spectrum = to_json(nonimaginary_spectrum(inst));

  CHECK_FALSE(combine_reports_json("", "", "", false).has_value());
  CHECK_FALSE(combine_reports_markdown("", "", "").has_value());

  const auto solo = combine_reports_json(spectrum, "", "", false);
  REQUIRE(solo.has_value());
  const json j = json::parse(*solo);
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "report");
  CHECK(j["spectrum"]["kind"] == "spectrum");
  CHECK_FALSE(j.contains("evolution"));
  CHECK_FALSE(j.contains("resolvent"));

  const auto md = combine_reports_markdown(spectrum, "", "");
  REQUIRE(md.has_value());
  CHECK(md->find("# Spectral verification report") != std::string::npos);
  CHECK(md->find("## Spectrum") != std::string::npos);
  CHECK(md->find("## Evolution") == std::string::npos);

  // wrong document kinds are rejected loudly
  CHECK_THROWS(combine_reports_json("", spectrum, "", false));
  const std::string unversioned = R"({"kind":"spectrum"})";
  CHECK_THROWS(combine_reports_json(unversioned, "", "", false));
}
