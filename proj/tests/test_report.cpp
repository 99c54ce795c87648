#include <catch2/catch_amalgamated.hpp>

#include "icg/report.hpp"

using icg::i64;

TEST_CASE("JSON documents round-trip byte-identically") {
  const icg::IcgSpec spec = icg::make_spec(6, {1, 3});
  const std::vector<std::string> docs{
      icg::dump_json(icg::spectrum_report_json(spec)),
      icg::dump_json(icg::to_json(icg::extremal_search(
          12, icg::GraphClass::Connected, icg::Objective::MinLeastEig))),
      icg::dump_json(icg::to_json(icg::verify_theorem(icg::TheoremId::Thm2, 2, 20))),
      icg::dump_json(icg::to_json(icg::run_oracle_suite(20, 0, 0))),
      icg::dump_json(icg::to_json(icg::run_verify_all(2, 12))),
  };
  for (const std::string& doc : docs)
    REQUIRE(icg::dump_json(nlohmann::json::parse(doc)) == doc);
}

TEST_CASE("spectrum JSON carries the documented fields") {
  const nlohmann::json j = icg::spectrum_report_json(icg::make_spec(6, {1, 3}));
  REQUIRE(j["n"] == 6);
  REQUIRE(j["spec"] == "6:1,3");
  REQUIRE(j["divisors"] == nlohmann::json::array({1, 3}));
  REQUIRE(j["lambda"] == nlohmann::json::array({3, 0, 0, -3, 0, 0}));
  REQUIRE(j["degree"] == 3);
  REQUIRE(j["least"]["value"] == -3);
  REQUIRE(j["least"]["witness_j"] == nlohmann::json::array({3}));
  REQUIRE(j["spread"] == 6);
}

TEST_CASE("search record JSON") {
  const nlohmann::json j = icg::to_json(icg::extremal_search(
      12, icg::GraphClass::Connected, icg::Objective::MinLeastEig));
  REQUIRE(j["n"] == 12);
  REQUIRE(j["class"] == "CONNECTED");
  REQUIRE(j["objective"] == "MIN_LEAST_EIG");
  REQUIRE(j["class_empty"] == false);
  REQUIRE(j["value"] == -6);
  REQUIRE(j["achievers"].size() == 1);
  REQUIRE(j["achievers"][0]["divisors"] == nlohmann::json::array({1, 3}));
  REQUIRE(j["achievers"][0]["witness_j"] == nlohmann::json::array({6}));

  const nlohmann::json empty = icg::to_json(icg::extremal_search(
      9, icg::GraphClass::ConnectedCoconnected, icg::Objective::MinLeastEig));
  REQUIRE(empty["class_empty"] == true);
  REQUIRE_FALSE(empty.contains("value"));
  REQUIRE(empty["achievers"].empty());
}

TEST_CASE("verification report JSON") {
  const icg::VerificationReport rep = icg::verify_theorem(icg::TheoremId::Thm2, 2, 20);
  const nlohmann::json j = icg::to_json(rep);
  REQUIRE(j["theorem"] == "THM2");
  REQUIRE(j["n_from"] == 2);
  REQUIRE(j["n_to"] == 20);
  REQUIRE(j["passed"] == true);
  REQUIRE(j["failures"] == nlohmann::json::array());
  REQUIRE_FALSE(j.contains("elapsed_ms"));

  const nlohmann::json timed = icg::to_json(rep, true);
  REQUIRE(timed.contains("elapsed_ms"));
}

TEST_CASE("CSV emitters lead with a header row") {
  const std::string rec_csv = icg::record_csv(icg::extremal_search(
      12, icg::GraphClass::Connected, icg::Objective::MinLeastEig));
  REQUIRE(rec_csv == "n,class,objective,value,divisors,witness_j\n"
                     "12,CONNECTED,MIN_LEAST_EIG,-6,1|3,6\n");

  const std::string spec_csv = icg::spectrum_report_csv(icg::make_spec(6, {1, 3}));
  REQUIRE(spec_csv.rfind("j,lambda\n0,3\n1,0\n", 0) == 0);

  const std::string rep_csv = icg::report_csv_header() +
      icg::report_csv_row(icg::verify_theorem(icg::TheoremId::Thm3, 2, 12));
  REQUIRE(rep_csv == "theorem,n_from,n_to,passed,failure_count\n"
                     "THM3,2,12,true,0\n");
}

TEST_CASE("text emitters name the interesting quantities") {
  const std::string txt = icg::record_text(icg::extremal_search(
      12, icg::GraphClass::Connected, icg::Objective::MinLeastEig));
  REQUIRE(txt.find("value: -6") != std::string::npos);
  REQUIRE(txt.find("D = {1,3}") != std::string::npos);
  REQUIRE(txt.find("witness j = {6}") != std::string::npos);

  const std::string empty_txt = icg::record_text(icg::extremal_search(
      9, icg::GraphClass::ConnectedCoconnected, icg::Objective::MinLeastEig));
  REQUIRE(empty_txt.find("class empty") != std::string::npos);
}
