#include "spex/report.hpp"

#include <charconv>

namespace spex {

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["holds"] = std::string(to_string(r.holds));
  j["dominating_edge"] = r.dominating_edge;
  j["within_hypothesis"] = r.within_hypothesis;
  j["counts"] = {{"certified", r.certified}, {"violated", r.violated}, {"indeterminate", r.indeterminate}};
  nlohmann::ordered_json margins = nlohmann::ordered_json::object();
  for (const auto& m : r.margins) margins[m.name] = m.value;
  j["margins"] = margins;
  j["artifacts"] = r.artifacts;
  return j;
}

nlohmann::ordered_json to_json(const IntervalWitness& w) {
  nlohmann::ordered_json j;
  j["i"] = w.i;
  j["label"] = w.label;
  j["kind"] = w.kind == IntervalKind::a ? "A" : "B";
  j["value"] = w.value;
  j["interval"] = {w.lo, w.hi};
  j["contained"] = w.contained;
  return j;
}

nlohmann::ordered_json to_json(const SpectralResult& r, bool with_vector) {
  nlohmann::ordered_json j;
  j["rho"] = r.rho;
  j["residual"] = r.residual;
  j["iters"] = r.iters;
  if (with_vector) j["x"] = r.x;
  return j;
}

nlohmann::ordered_json to_json(const CycleSpectrum& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int ell = 3; ell <= s.ell_max; ++ell) {
    nlohmann::ordered_json e;
    e["ell"] = ell;
    e["status"] = std::string(to_string(s.status[static_cast<std::size_t>(ell)]));
    if (!s.certificates[static_cast<std::size_t>(ell)].empty()) e["certificate"] = s.certificates[static_cast<std::size_t>(ell)];
    arr.push_back(std::move(e));
  }
  return arr;
}

void write_margin_rows(std::ostream& os, const VerificationReport& r) {
  const std::string params = csv_quote(r.params.dump());
  for (const auto& m : r.margins) {
    os << r.check_id << ',' << params << ',' << m.name << ',' << shortest(m.value) << ',' << to_string(r.holds)
       << '\n';
  }
}

}  // namespace spex
