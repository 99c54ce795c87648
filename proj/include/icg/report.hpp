#pragma once

#include <json.hpp>

#include "icg/extremal.hpp"
#include "icg/oracle.hpp"

namespace icg {

enum class OutputFormat { Text, Json, Csv };

inline const char* to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::All: return "ALL";
    case GraphClass::Connected: return "CONNECTED";
    case GraphClass::ConnectedCoconnected: return "CONNECTED_COCONNECTED";
    case GraphClass::ConnectedExcludingBarDp1: return "CONNECTED_EXCLUDING_BARDP1";
  }
  return "?";
}

inline const char* to_string(Objective o) {
  switch (o) {
    case Objective::MinLeastEig: return "MIN_LEAST_EIG";
    case Objective::MaxSpread: return "MAX_SPREAD";
  }
  return "?";
}

inline const char* to_string(TheoremId t) {
  switch (t) {
    case TheoremId::Lemma1: return "LEMMA1";
    case TheoremId::Thm2: return "THM2";
    case TheoremId::Thm3: return "THM3";
    case TheoremId::Thm4: return "THM4";
    case TheoremId::Thm5: return "THM5";
  }
  return "?";
}

// All JSON goes through dump_json so every emitter shares one canonical
// rendering: two-space indent, keys sorted (nlohmann objects), trailing
// newline. Identical data therefore yields identical bytes.
inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline nlohmann::json to_json(const Achiever& a) {
  return {{"divisors", a.divisors}, {"witness_j", a.witness_j}};
}

inline nlohmann::json to_json(const ExtremalRecord& rec) {
  nlohmann::json j;
  j["n"] = rec.n;
  j["class"] = to_string(rec.cls);
  j["objective"] = to_string(rec.objective);
  j["class_empty"] = rec.class_empty;
  if (!rec.class_empty) j["value"] = rec.value;
  nlohmann::json achievers = nlohmann::json::array();
  for (const Achiever& a : rec.achievers) achievers.push_back(to_json(a));
  j["achievers"] = std::move(achievers);
  return j;
}

inline nlohmann::json to_json(const Failure& f) {
  nlohmann::json j;
  j["n"] = f.n;
  j["what"] = f.what;
  if (!f.divisors.empty()) j["divisors"] = f.divisors;
  if (f.j) j["j"] = *f.j;
  j["expected"] = f.expected;
  j["got"] = f.got;
  return j;
}

// elapsed_ms is wall-clock noise, so it only appears when asked for;
// the default document depends on nothing but the verified mathematics.
inline nlohmann::json to_json(const VerificationReport& rep, bool with_timing = false) {
  nlohmann::json j;
  j["theorem"] = to_string(rep.theorem);
  j["n_from"] = rep.n_from;
  j["n_to"] = rep.n_to;
  j["passed"] = rep.passed;
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : rep.failures) failures.push_back(to_json(f));
  j["failures"] = std::move(failures);
  if (with_timing) j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

inline nlohmann::json spectrum_report_json(const IcgSpec& spec) {
  const Spectrum s = full_spectrum(spec);
  const LeastEigenvalue least = least_eigenvalue(spec);
  nlohmann::json j;
  j["spec"] = to_string(spec);
  j["n"] = spec.n;
  j["divisors"] = spec.divisors;
  j["lambda"] = s.values;
  j["degree"] = s.values[0];
  j["least"] = {{"value", least.value}, {"witness_j", least.witnesses}};
  j["spread"] = spread(spec);
  return j;
}

inline nlohmann::json to_json(const OracleMismatch& mm) {
  nlohmann::json j;
  j["n"] = mm.n;
  j["divisors"] = mm.divisors;
  j["j"] = mm.j;
  j["exact"] = mm.exact;
  j["dft"] = mm.dft;
  j["residual"] = mm.residual;
  j["what"] = mm.what;
  return j;
}

inline nlohmann::json to_json(const OracleSuiteReport& rep) {
  nlohmann::json j;
  j["n_max"] = rep.n_max;
  j["exhaustive_n_max"] = rep.exhaustive_n_max;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["tol"] = rep.tol;
  j["graphs_checked"] = rep.graphs_checked;
  j["max_residual"] = rep.max_residual;
  j["passed"] = rep.passed;
  if (rep.first_failure) j["first_failure"] = to_json(*rep.first_failure);
  return j;
}

// Shortest round-trip representation, same as the JSON emitters use.
inline std::string double_text(double x) { return nlohmann::json(x).dump(); }

inline std::string join_text(const std::vector<i64>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// --- text renderers ---

inline std::string spectrum_report_text(const IcgSpec& spec) {
  const Spectrum s = full_spectrum(spec);
  const LeastEigenvalue least = least_eigenvalue(spec);
  std::string out;
  out += "spec: " + to_string(spec) + "\n";
  out += "n: " + std::to_string(spec.n) + "\n";
  out += "degree: " + std::to_string(s.values[0]) + "\n";
  out += "lambda: " + join_text(s.values, " ") + "\n";
  out += "least: " + std::to_string(least.value) + " at j = {" +
         join_text(least.witnesses) + "}\n";
  out += "spread: " + std::to_string(spread(spec)) + "\n";
  return out;
}

inline std::string record_text(const ExtremalRecord& rec) {
  std::string out;
  out += "n: " + std::to_string(rec.n) + "\n";
  out += "class: " + std::string(to_string(rec.cls)) + "\n";
  out += "objective: " + std::string(to_string(rec.objective)) + "\n";
  if (rec.class_empty) {
    out += "class empty: no graphs in this class\n";
    return out;
  }
  out += "value: " + std::to_string(rec.value) + "\n";
  out += "achievers: " + std::to_string(rec.achievers.size()) + "\n";
  for (const Achiever& a : rec.achievers)
    out += "  D = {" + join_text(a.divisors) + "}  witness j = {" +
           join_text(a.witness_j) + "}\n";
  return out;
}

inline std::string failure_text(const Failure& f) {
  std::string out = "  n = " + std::to_string(f.n) + ": " + f.what;
  if (!f.divisors.empty()) out += "  D = {" + join_text(f.divisors) + "}";
  if (f.j) out += "  j = " + std::to_string(*f.j);
  out += "  expected " + f.expected + ", got " + f.got + "\n";
  return out;
}

inline std::string report_text(const VerificationReport& rep) {
  std::string out = std::string(to_string(rep.theorem)) + " n = " +
                    std::to_string(rep.n_from) + ".." + std::to_string(rep.n_to) +
                    ": " + (rep.passed ? "PASS" : "FAIL") + " (" +
                    std::to_string(rep.failures.size()) + " failures, " +
                    std::to_string(rep.elapsed_ms) + " ms)\n";
  for (const Failure& f : rep.failures) out += failure_text(f);
  return out;
}

inline std::string oracle_report_text(const OracleSuiteReport& rep) {
  std::string out;
  out += "oracle: exhaustive n <= " + std::to_string(rep.exhaustive_n_max);
  if (rep.n_max > rep.exhaustive_n_max)
    out += ", " + std::to_string(rep.samples) + " samples in (" +
           std::to_string(rep.exhaustive_n_max) + ", " + std::to_string(rep.n_max) +
           "], seed " + std::to_string(rep.seed);
  out += ", tol " + double_text(rep.tol) + "\n";
  out += "graphs checked: " + std::to_string(rep.graphs_checked) + "\n";
  out += "max residual: " + double_text(rep.max_residual) + "\n";
  if (rep.first_failure) {
    const OracleMismatch& mm = *rep.first_failure;
    out += "first failure: n = " + std::to_string(mm.n) + " D = {" +
           join_text(mm.divisors) + "} " + mm.what + "\n";
  }
  out += "result: " + std::string(rep.passed ? "PASS" : "FAIL") + "\n";
  return out;
}

// --- csv renderers (header row always present) ---

inline std::string spectrum_report_csv(const IcgSpec& spec) {
  const Spectrum s = full_spectrum(spec);
  std::string out = "j,lambda\n";
  for (i64 j = 0; j < spec.n; ++j)
    out += std::to_string(j) + "," +
           std::to_string(s.values[static_cast<std::size_t>(j)]) + "\n";
  return out;
}

inline std::string record_csv(const ExtremalRecord& rec) {
  std::string out = "n,class,objective,value,divisors,witness_j\n";
  const std::string head = std::to_string(rec.n) + "," + to_string(rec.cls) + "," +
                           to_string(rec.objective) + ",";
  if (rec.class_empty) {
    out += head + ",,\n";
    return out;
  }
  for (const Achiever& a : rec.achievers)
    out += head + std::to_string(rec.value) + "," + join_text(a.divisors, "|") +
           "," + join_text(a.witness_j, "|") + "\n";
  return out;
}

inline std::string report_csv_header() { return "theorem,n_from,n_to,passed,failure_count\n"; }

inline std::string report_csv_row(const VerificationReport& rep) {
  return std::string(to_string(rep.theorem)) + "," + std::to_string(rep.n_from) +
         "," + std::to_string(rep.n_to) + "," + (rep.passed ? "true" : "false") +
         "," + std::to_string(rep.failures.size()) + "\n";
}

inline std::string oracle_report_csv(const OracleSuiteReport& rep) {
  return "n_max,exhaustive_n_max,samples,seed,tol,max_residual,graphs_checked,passed\n" +
         std::to_string(rep.n_max) + "," + std::to_string(rep.exhaustive_n_max) +
         "," + std::to_string(rep.samples) + "," + std::to_string(rep.seed) + "," +
         double_text(rep.tol) + "," + double_text(rep.max_residual) + "," +
         std::to_string(rep.graphs_checked) + "," + (rep.passed ? "true" : "false") +
         "\n";
}

// --- the five checks as one bundle ---

struct VerifySuite {
  i64 n_from = 0;
  i64 n_to = 0;
  bool passed = false;
  std::vector<VerificationReport> reports;  // LEMMA1, THM2, THM3, THM4, THM5
};

inline VerifySuite run_verify_all(i64 n_from, i64 n_to, const VerifyOptions& opts = {}) {
  VerifySuite suite;
  suite.n_from = n_from;
  suite.n_to = n_to;
  for (TheoremId t : {TheoremId::Lemma1, TheoremId::Thm2, TheoremId::Thm3,
                      TheoremId::Thm4, TheoremId::Thm5})
    suite.reports.push_back(verify_theorem(t, n_from, n_to, opts));
  suite.passed = std::all_of(suite.reports.begin(), suite.reports.end(),
                             [](const VerificationReport& r) { return r.passed; });
  return suite;
}

inline nlohmann::json to_json(const VerifySuite& suite, bool with_timing = false) {
  nlohmann::json j;
  j["n_from"] = suite.n_from;
  j["n_to"] = suite.n_to;
  j["passed"] = suite.passed;
  nlohmann::json reports = nlohmann::json::array();
  for (const VerificationReport& r : suite.reports)
    reports.push_back(to_json(r, with_timing));
  j["reports"] = std::move(reports);
  return j;
}

inline std::string suite_text(const VerifySuite& suite) {
  std::string out;
  for (const VerificationReport& r : suite.reports) out += report_text(r);
  out += "overall: " + std::string(suite.passed ? "PASS" : "FAIL") + "\n";
  return out;
}

inline std::string suite_csv(const VerifySuite& suite) {
  std::string out = report_csv_header();
  for (const VerificationReport& r : suite.reports) out += report_csv_row(r);
  return out;
}

}  // namespace icg
