#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "icg/oracle.hpp"

using icg::i64;

TEST_CASE("adjacency row marks exactly the symbol set") {
  const icg::IcgSpec spec = icg::make_spec(6, {1, 3});
  const std::vector<bool> row = icg::adjacency_row(spec);
  REQUIRE(row == std::vector<bool>{false, true, false, true, false, true});

  for (i64 n : {8, 12, 30}) {
    const std::vector<i64> ds = icg::proper_divisors(n);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ds.size()); ++mask) {
      icg::IcgSpec s;
      s.n = n;
      for (std::size_t i = 0; i < ds.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) s.divisors.push_back(ds[i]);
      const std::vector<bool> r = icg::adjacency_row(s);
      i64 count = 0;
      for (bool b : r) count += b ? 1 : 0;
      REQUIRE(count == icg::degree(s));
      REQUIRE_FALSE(r[0]);
    }
  }
}

TEST_CASE("cosine-sum spectrum lands on the exact integers") {
  const icg::IcgSpec spec = icg::make_spec(6, {1, 3});
  const icg::FloatSpectrum fs = icg::dft_spectrum(spec);
  const std::vector<i64> expect{3, 0, 0, -3, 0, 0};
  for (i64 j = 0; j < 6; ++j)
    REQUIRE(std::abs(fs.values[static_cast<std::size_t>(j)] -
                     static_cast<double>(expect[static_cast<std::size_t>(j)])) < 1e-9);
}

TEST_CASE("ramanujan_direct agrees with the closed form up to n = 300") {
  REQUIRE(std::abs(icg::ramanujan_direct(5, 1) - 1.0) < 1e-12);
  for (i64 n = 1; n <= 300; ++n)
    for (i64 j = 0; j < n; ++j)
      REQUIRE(std::abs(icg::ramanujan_direct(j, n) -
                       static_cast<double>(icg::ramanujan(j, n))) < 1e-6);
}

TEST_CASE("check_spec_against_oracle passes exhaustively at n = 30") {
  const std::vector<i64> ds = icg::proper_divisors(30);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ds.size()); ++mask) {
    icg::IcgSpec s;
    s.n = 30;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) s.divisors.push_back(ds[i]);
    REQUIRE(icg::check_spec_against_oracle(s));
  }
}

TEST_CASE("check_spec_against_oracle reports the first offender") {
  // An impossible tolerance forces the failure path.
  icg::OracleMismatch mm;
  REQUIRE_FALSE(icg::check_spec_against_oracle(icg::make_spec(12, {1, 4}), 0.0, &mm));
  REQUIRE(mm.n == 12);
  REQUIRE(mm.divisors == std::vector<i64>{1, 4});
  REQUIRE(mm.j >= 0);
  REQUIRE_FALSE(mm.what.empty());
}

TEST_CASE("oracle suite: exhaustive count, sampling, determinism") {
  const icg::OracleSuiteReport rep = icg::run_oracle_suite(40, 25, 12345);
  REQUIRE(rep.passed);
  REQUIRE(rep.exhaustive_n_max == 36);
  REQUIRE(rep.max_residual < 1e-6);

  i64 expect_checked = 25;  // the sampled draws
  for (i64 n = 2; n <= 36; ++n)
    expect_checked += (i64{1} << icg::proper_divisors(n).size()) - 1;
  REQUIRE(rep.graphs_checked == expect_checked);

  const icg::OracleSuiteReport again = icg::run_oracle_suite(40, 25, 12345);
  REQUIRE(again.graphs_checked == rep.graphs_checked);
  REQUIRE(again.max_residual == rep.max_residual);

  REQUIRE_THROWS_AS(icg::run_oracle_suite(1, 0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(icg::run_oracle_suite(40, -1, 0), std::invalid_argument);
}
