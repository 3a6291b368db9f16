#include "eulerspec/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eulerspec {

namespace {

using Json = nlohmann::ordered_json;

Json pair_of(Complex z) { return Json::array({z.real(), z.imag()}); }
Json pair_of(const LatticeVector& v) { return Json::array({v.x, v.y}); }

Json instance_json(const ProblemInstance& inst) {
  Json j;
  j["p"] = pair_of(inst.p);
  j["gamma"] = pair_of(inst.gamma);
  j["controls"] = Json{{"N0", inst.controls.N0},
                       {"N_max", inst.controls.N_max},
                       {"eig_tol", inst.controls.eig_tol},
                       {"classify_tol", inst.controls.classify_tol}};
  return j;
}

Json eigen_list(const std::vector<Complex>& v) {
  Json j = Json::array();
  for (const Complex& z : v) j.push_back(pair_of(z));
  return j;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump() + "\n"; }

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  std::string s = fmt_double(z.real());
  s += z.imag() < 0 ? "-" : "+";
  s += fmt_double(std::abs(z.imag()));
  s += "i";
  return s;
}

const char* kind_name(TridiagonalKind k) {
  switch (k) {
    case TridiagonalKind::Lq: return "Lq";
    case TridiagonalKind::M0: return "M0";
    case TridiagonalKind::Mq: return "Mq";
    case TridiagonalKind::Bq: return "Bq";
  }
  return "?";
}

}  // namespace

SlicesReport make_slices_report(const ProblemInstance& inst) {
  SlicesReport r;
  r.instance = inst;
  r.slices = contributing_slices(inst.p);
  r.kappa = kappa(inst.p);
  r.betas.reserve(r.slices.size());
  for (const SliceDescriptor& s : r.slices)
    r.betas.push_back(-(static_cast<double>(det2(s.qhat, inst.p)) /
                        (2.0 * static_cast<double>(norm_sq(inst.p)))) *
                      inst.gamma);
  return r;
}

std::string to_json(const SlicesReport& r, bool pretty) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "slices";
  j["instance"] = instance_json(r.instance);
  j["kappa"] = r.kappa;
  j["slices"] = Json::array();
  for (std::size_t i = 0; i < r.slices.size(); ++i) {
    const SliceDescriptor& s = r.slices[i];
    Json e;
    e["qhat"] = pair_of(s.qhat);
    if (s.disk_window)
      e["window"] = Json::array({s.disk_window->lo, s.disk_window->hi});
    else
      e["window"] = nullptr;
    e["beta"] = pair_of(r.betas[i]);
    j["slices"].push_back(std::move(e));
  }
  return dump(j, pretty);
}

std::string to_csv(const SlicesReport& r) {
  std::ostringstream out;
  out << "qhat_x,qhat_y,n_lo,n_hi,beta_re,beta_im\n";
  for (std::size_t i = 0; i < r.slices.size(); ++i) {
    const SliceDescriptor& s = r.slices[i];
    out << s.qhat.x << "," << s.qhat.y << ",";
    if (s.disk_window)
      out << s.disk_window->lo << "," << s.disk_window->hi;
    else
      out << ",";
    out << "," << fmt_double(r.betas[i].real()) << "," << fmt_double(r.betas[i].imag()) << "\n";
  }
  return out.str();
}

std::string to_json(const SpectrumReport& r, bool pretty) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "spectrum";
  j["instance"] = instance_json(r.instance);
  j["kappa"] = r.kappa;
  j["bound_ok"] = r.bound_ok;
  j["symmetry_ok"] = r.symmetry_ok;
  j["all_converged"] = r.all_converged;
  j["nonimaginary"] = Json::array();
  for (const NonimaginaryEigenvalue& e : r.nonimaginary)
    j["nonimaginary"].push_back(Json{{"lambda", pair_of(e.lambda)},
                                     {"multiplicity", e.multiplicity},
                                     {"qhat", pair_of(e.qhat)}});
  j["per_slice"] = Json::array();
  for (const SliceSpectrumEntry& e : r.per_slice) {
    Json s;
    s["qhat"] = pair_of(e.slice.qhat);
    s["beta"] = pair_of(e.beta);
    s["final_N"] = e.final_N;
    s["converged"] = e.converged;
    s["residual"] = e.residual;
    s["off_axis"] = eigen_list(e.off_axis);
    s["eigenvalues"] = eigen_list(e.eigenvalues);
    j["per_slice"].push_back(std::move(s));
  }
  return dump(j, pretty);
}

std::string to_csv(const SpectrumReport& r) {
  std::ostringstream out;
  out << "qhat_x,qhat_y,re,im,converged\n";
  for (const SliceSpectrumEntry& e : r.per_slice)
    for (const Complex& z : e.eigenvalues)
      out << e.slice.qhat.x << "," << e.slice.qhat.y << "," << fmt_double(z.real()) << ","
          << fmt_double(z.imag()) << "," << (e.converged ? 1 : 0) << "\n";
  return out.str();
}

std::string to_json(const EvolveReport& r, bool pretty) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "evolve";
  j["instance"] = instance_json(r.instance);
  j["K"] = r.K;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["t_final"] = r.t_final;
  j["dt"] = r.dt;
  j["reference_rate"] = r.mapping.reference;
  j["tolerance"] = r.mapping.tolerance;
  j["rates"] = r.mapping.rates;
  j["spectrum_converged"] = r.mapping.spectrum_converged;
  j["ok"] = r.mapping.ok;
  j["trajectory"] = Json{{"times", r.trajectory.times}, {"norms", r.trajectory.norms}};
  return dump(j, pretty);
}

std::string to_csv(const EvolveReport& r) {
  std::ostringstream out;
  out << "t,norm\n";
  for (std::size_t i = 0; i < r.trajectory.times.size(); ++i)
    out << fmt_double(r.trajectory.times[i]) << "," << fmt_double(r.trajectory.norms[i]) << "\n";
  return out.str();
}

std::string to_json(const ResolventReport& r, bool pretty) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "resolvent";
  j["instance"] = instance_json(r.instance);
  j["K"] = r.K;
  j["a"] = r.a;
  j["split_tau"] = r.split_tau;
  j["taus"] = r.taus;
  j["samples"] = r.samples;
  j["tail_ok"] = r.tail_ok;
  return dump(j, pretty);
}

std::string to_csv(const ResolventReport& r) {
  std::ostringstream out;
  out << "tau,resolvent_norm\n";
  for (std::size_t i = 0; i < r.taus.size(); ++i)
    out << fmt_double(r.taus[i]) << "," << fmt_double(r.samples[i]) << "\n";
  return out.str();
}

std::string to_json(const TridiagonalOperator& t, bool pretty) {
  Json j;
  j["schema"] = 1;
  j["kind"] = kind_name(t.kind);
  j["window"] = Json::array({t.n_lo, t.n_hi});
  j["p"] = pair_of(t.p);
  j["qhat"] = pair_of(t.qhat);
  j["circulation"] = pair_of(t.circulation);
  j["beta"] = pair_of(t.beta);
  j["sub"] = eigen_list(t.sub);
  j["diag"] = eigen_list(t.diag);
  j["super"] = eigen_list(t.super);
  return dump(j, pretty);
}

namespace {

std::optional<Json> parse_optional(const std::string& text, const char* expected_kind) {
  if (text.empty()) return std::nullopt;
  Json j = Json::parse(text);  // throws on malformed input
  if (!j.contains("schema") || j["schema"] != 1)
    throw std::runtime_error("report input does not carry schema 1");
  if (!j.contains("kind") || j["kind"] != expected_kind)
    throw std::runtime_error(std::string("report input is not a ") + expected_kind +
                             " document");
  return j;
}

}  // namespace

std::optional<std::string> combine_reports_json(const std::string& spectrum_json,
                                                const std::string& evolve_json,
                                                const std::string& resolvent_json, bool pretty) {
  const auto spectrum = parse_optional(spectrum_json, "spectrum");
  const auto evolve = parse_optional(evolve_json, "evolve");
  const auto resolvent = parse_optional(resolvent_json, "resolvent");
  if (!spectrum && !evolve && !resolvent) return std::nullopt;
  Json j;
  j["schema"] = 1;
  j["kind"] = "report";
  if (spectrum) j["spectrum"] = *spectrum;
  if (evolve) j["evolution"] = *evolve;
  if (resolvent) j["resolvent"] = *resolvent;
  return dump(j, pretty);
}

std::optional<std::string> combine_reports_markdown(const std::string& spectrum_json,
                                                    const std::string& evolve_json,
                                                    const std::string& resolvent_json) {
  const auto spectrum = parse_optional(spectrum_json, "spectrum");
  const auto evolve = parse_optional(evolve_json, "evolve");
  const auto resolvent = parse_optional(resolvent_json, "resolvent");
  if (!spectrum && !evolve && !resolvent) return std::nullopt;

  std::ostringstream md;
  md << "# Spectral verification report\n";
  const auto describe_instance = [&md](const Json& j) {
    const auto& p = j["instance"]["p"];
    const auto& g = j["instance"]["gamma"];
    md << "- p = (" << p[0].get<std::int64_t>() << ", " << p[1].get<std::int64_t>() << "), Gamma = "
       << fmt_complex(Complex(g[0].get<double>(), g[1].get<double>())) << "\n";
  };

  if (spectrum) {
    const Json& s = *spectrum;
    md << "\n## Spectrum\n";
    describe_instance(s);
    md << "- kappa = " << s["kappa"].get<int>() << ", off-axis eigenvalue clusters = "
       << s["nonimaginary"].size() << "\n";
    md << "- count bound: " << (s["bound_ok"].get<bool>() ? "ok" : "VIOLATED")
       << "; four-fold symmetry: " << (s["symmetry_ok"].get<bool>() ? "ok" : "VIOLATED")
       << "; converged: " << (s["all_converged"].get<bool>() ? "yes" : "NO") << "\n";
    if (!s["nonimaginary"].empty()) {
      md << "\n| lambda | multiplicity | slice |\n|---|---|---|\n";
      for (const Json& e : s["nonimaginary"]) {
        const Complex lambda(e["lambda"][0].get<double>(), e["lambda"][1].get<double>());
        md << "| " << fmt_complex(lambda) << " | " << e["multiplicity"].get<int>() << " | ("
           << e["qhat"][0].get<std::int64_t>() << ", " << e["qhat"][1].get<std::int64_t>()
           << ") |\n";
      }
    }
  }

  if (evolve) {
    const Json& e = *evolve;
    md << "\n## Evolution\n";
    describe_instance(e);
    md << "- reference rate " << fmt_double(e["reference_rate"].get<double>()) << ", tolerance "
       << fmt_double(e["tolerance"].get<double>()) << "\n";
    md << "- measured rates:";
    for (const Json& rate : e["rates"]) md << " " << fmt_double(rate.get<double>());
    md << "\n- growth consistency: " << (e["ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
  }

  if (resolvent) {
    const Json& r = *resolvent;
    md << "\n## Resolvent\n";
    describe_instance(r);
    double head = 0.0, tail = 0.0;
    const double split = r["split_tau"].get<double>();
    for (std::size_t i = 0; i < r["taus"].size(); ++i) {
      const double tau = r["taus"][i].get<double>();
      const double sample = r["samples"][i].get<double>();
      if (tau < split)
        head = std::max(head, sample);
      else
        tail = std::max(tail, sample);
    }
    md << "- a = " << fmt_double(r["a"].get<double>()) << ", max sample below tau=" << split
       << ": " << fmt_double(head) << ", above: " << fmt_double(tail) << "\n";
    md << "- bounded tail: " << (r["tail_ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
  }

  return md.str();
}

}  // namespace eulerspec
