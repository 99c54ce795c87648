#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>

#include "icg/report.hpp"

namespace {

using icg::i64;

// Enumeration guard, overridable through the environment.
i64 max_subsets_limit() {
  const char* raw = std::getenv("ICG_MAX_SUBSETS");
  if (raw == nullptr || *raw == '\0') return icg::kDefaultMaxSubsets;
  i64 value = 0;
  const std::string text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw std::invalid_argument("ICG_MAX_SUBSETS must be a positive integer, got '" +
                                text + "'");
  return value;
}

icg::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return icg::OutputFormat::Json;
  if (name == "csv") return icg::OutputFormat::Csv;
  return icg::OutputFormat::Text;
}

icg::GraphClass parse_class(const std::string& name) {
  if (name == "connected") return icg::GraphClass::Connected;
  if (name == "coconnected") return icg::GraphClass::ConnectedCoconnected;
  if (name == "second") return icg::GraphClass::ConnectedExcludingBarDp1;
  return icg::GraphClass::All;
}

std::optional<icg::TheoremId> parse_theorem(const std::string& name) {
  if (name == "lemma1") return icg::TheoremId::Lemma1;
  if (name == "thm2") return icg::TheoremId::Thm2;
  if (name == "thm3") return icg::TheoremId::Thm3;
  if (name == "thm4") return icg::TheoremId::Thm4;
  if (name == "thm5") return icg::TheoremId::Thm5;
  return std::nullopt;  // "all"
}

int emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  file << doc;
  return file.good() ? 0 : 2;
}

int run_spectrum(const std::string& spec_text, const std::string& fmt) {
  const icg::IcgSpec spec = icg::parse_spec(spec_text);
  switch (parse_format(fmt)) {
    case icg::OutputFormat::Json:
      std::cout << icg::dump_json(icg::spectrum_report_json(spec));
      break;
    case icg::OutputFormat::Csv:
      std::cout << icg::spectrum_report_csv(spec);
      break;
    case icg::OutputFormat::Text:
      std::cout << icg::spectrum_report_text(spec);
      break;
  }
  return 0;
}

int run_search(i64 n, const std::string& cls_name, const std::string& obj_name,
               const std::string& fmt) {
  const icg::GraphClass cls = parse_class(cls_name);
  const icg::Objective obj = obj_name == "max-spread" ? icg::Objective::MaxSpread
                                                      : icg::Objective::MinLeastEig;
  const icg::ExtremalRecord rec = icg::extremal_search(n, cls, obj, max_subsets_limit());
  switch (parse_format(fmt)) {
    case icg::OutputFormat::Json:
      std::cout << icg::dump_json(icg::to_json(rec));
      break;
    case icg::OutputFormat::Csv:
      std::cout << icg::record_csv(rec);
      break;
    case icg::OutputFormat::Text:
      std::cout << icg::record_text(rec);
      break;
  }
  return rec.class_empty ? 3 : 0;
}

int run_verify(const std::string& theorem_name, i64 n_from, i64 n_max,
               const std::string& fmt, const std::string& out_path, int jobs,
               bool progress, bool timing) {
  icg::VerifyOptions opts;
  opts.max_subsets = max_subsets_limit();
  opts.jobs = jobs;
  std::mutex progress_mutex;
  if (progress)
    opts.progress = [&progress_mutex](i64 n) {
      const std::lock_guard<std::mutex> lock(progress_mutex);
      std::cerr << "verify: n = " << n << " done\n";
    };

  const std::optional<icg::TheoremId> theorem = parse_theorem(theorem_name);
  std::string doc;
  bool passed = false;
  if (!theorem) {
    const icg::VerifySuite suite = icg::run_verify_all(n_from, n_max, opts);
    passed = suite.passed;
    switch (parse_format(fmt)) {
      case icg::OutputFormat::Json: doc = icg::dump_json(icg::to_json(suite, timing)); break;
      case icg::OutputFormat::Csv: doc = icg::suite_csv(suite); break;
      case icg::OutputFormat::Text: doc = icg::suite_text(suite); break;
    }
  } else {
    const icg::VerificationReport rep = icg::verify_theorem(*theorem, n_from, n_max, opts);
    passed = rep.passed;
    switch (parse_format(fmt)) {
      case icg::OutputFormat::Json: doc = icg::dump_json(icg::to_json(rep, timing)); break;
      case icg::OutputFormat::Csv: doc = icg::report_csv_header() + icg::report_csv_row(rep); break;
      case icg::OutputFormat::Text: doc = icg::report_text(rep); break;
    }
  }
  const int emit_rc = emit(doc, out_path);
  if (emit_rc != 0) return emit_rc;
  return passed ? 0 : 1;
}

int run_oracle(i64 n_max, int samples, const std::optional<std::uint64_t>& seed,
               double tol, const std::string& fmt) {
  if (samples > 0 && !seed) {
    std::cerr << "error: --seed is required when --samples > 0\n";
    return 2;
  }
  const icg::OracleSuiteReport rep =
      icg::run_oracle_suite(n_max, samples, seed.value_or(0), tol);
  switch (parse_format(fmt)) {
    case icg::OutputFormat::Json:
      std::cout << icg::dump_json(icg::to_json(rep));
      break;
    case icg::OutputFormat::Csv:
      std::cout << icg::oracle_report_csv(rep);
      break;
    case icg::OutputFormat::Text:
      std::cout << icg::oracle_report_text(rep);
      break;
  }
  return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra and extremal eigenvalue search for gcd graphs on Z_n"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json", "csv"};
  int exit_code = 0;

  // spectrum <n:d1,d2,...>
  auto* sc_spectrum = app.add_subcommand("spectrum", "eigenvalues of one graph");
  std::string spectrum_spec;
  std::string spectrum_fmt = "text";
  sc_spectrum->add_option("spec", spectrum_spec, "graph as n:d1,d2,...")->required();
  sc_spectrum->add_option("--format", spectrum_fmt)->check(CLI::IsMember(formats));
  sc_spectrum->callback([&] { exit_code = run_spectrum(spectrum_spec, spectrum_fmt); });

  // search <n>
  auto* sc_search = app.add_subcommand("search", "extremal divisor sets for one n");
  i64 search_n = 0;
  std::string search_class = "all";
  std::string search_obj = "min-least";
  std::string search_fmt = "text";
  sc_search->add_option("n", search_n, "graph order")
      ->required()
      ->check(CLI::Range(i64{2}, i64{1000000000}));
  sc_search->add_option("--class", search_class)
      ->check(CLI::IsMember({"all", "connected", "coconnected", "second"}));
  sc_search->add_option("--objective", search_obj)
      ->check(CLI::IsMember({"min-least", "max-spread"}));
  sc_search->add_option("--format", search_fmt)->check(CLI::IsMember(formats));
  sc_search->callback(
      [&] { exit_code = run_search(search_n, search_class, search_obj, search_fmt); });

  // second <n>: shorthand for search --class second --objective min-least
  auto* sc_second = app.add_subcommand("second", "second level of the least-eigenvalue hierarchy");
  i64 second_n = 0;
  std::string second_fmt = "text";
  sc_second->add_option("n", second_n, "graph order")
      ->required()
      ->check(CLI::Range(i64{2}, i64{1000000000}));
  sc_second->add_option("--format", second_fmt)->check(CLI::IsMember(formats));
  sc_second->callback(
      [&] { exit_code = run_search(second_n, "second", "min-least", second_fmt); });

  // verify <check>
  auto* sc_verify = app.add_subcommand("verify", "exhaustive verification over a range of n");
  std::string verify_theorem = "all";
  i64 verify_from = 2;
  i64 verify_max = 60;
  std::string verify_fmt = "json";
  std::string verify_out;
  int verify_jobs = 1;
  bool verify_progress = false;
  bool verify_timing = false;
  sc_verify->add_option("check", verify_theorem, "lemma1, thm2..thm5, or all")
      ->required()
      ->check(CLI::IsMember({"lemma1", "thm2", "thm3", "thm4", "thm5", "all"}));
  sc_verify->add_option("--n-from", verify_from)->check(CLI::Range(i64{2}, i64{120}));
  sc_verify->add_option("--n-max", verify_max)->check(CLI::Range(i64{2}, i64{120}));
  sc_verify->add_option("--format", verify_fmt)->check(CLI::IsMember(formats));
  sc_verify->add_option("--out", verify_out, "write the report to this file");
  sc_verify->add_option("--jobs", verify_jobs)->check(CLI::Range(1, 64));
  sc_verify->add_flag("--progress", verify_progress, "per-n status on stderr");
  sc_verify->add_flag("--timing", verify_timing, "include elapsed_ms in JSON output");
  sc_verify->callback([&] {
    exit_code = run_verify(verify_theorem, verify_from, verify_max, verify_fmt,
                           verify_out, verify_jobs, verify_progress, verify_timing);
  });

  // oracle
  auto* sc_oracle = app.add_subcommand("oracle", "cosine-sum cross-check of the exact spectra");
  i64 oracle_n_max = 36;
  int oracle_samples = 0;
  std::optional<std::uint64_t> oracle_seed;
  double oracle_tol = 1e-6;
  std::string oracle_fmt = "text";
  sc_oracle->add_option("--n-max", oracle_n_max)->check(CLI::Range(i64{2}, i64{10000}));
  sc_oracle->add_option("--samples", oracle_samples)->check(CLI::Range(0, 1000000));
  sc_oracle->add_option("--seed", oracle_seed, "PRNG seed for the sampled range");
  sc_oracle->add_option("--tol", oracle_tol)->check(CLI::PositiveNumber);
  sc_oracle->add_option("--format", oracle_fmt)->check(CLI::IsMember(formats));
  sc_oracle->callback([&] {
    exit_code = run_oracle(oracle_n_max, oracle_samples, oracle_seed, oracle_tol, oracle_fmt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const icg::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const icg::TooManyDivisorsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
