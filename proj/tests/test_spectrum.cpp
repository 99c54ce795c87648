#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "icg/spectrum.hpp"

using icg::i64;

namespace {

// Every nonempty divisor subset for this n, bitmask order.
std::vector<icg::IcgSpec> all_subsets(i64 n) {
  const std::vector<i64> ds = icg::proper_divisors(n);
  std::vector<icg::IcgSpec> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ds.size()); ++mask) {
    icg::IcgSpec spec;
    spec.n = n;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) spec.divisors.push_back(ds[i]);
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace

TEST_CASE("full spectra of known graphs") {
  REQUIRE(icg::full_spectrum(icg::make_spec(6, {1, 3})).values ==
          std::vector<i64>{3, 0, 0, -3, 0, 0});
  REQUIRE(icg::full_spectrum(icg::make_spec(6, {1})).values ==
          std::vector<i64>{2, 1, -1, -2, -1, 1});
  REQUIRE(icg::full_spectrum(icg::make_spec(6, {1, 2, 3})).values ==
          std::vector<i64>{5, -1, -1, -1, -1, -1});
  REQUIRE(icg::full_spectrum(icg::make_spec(8, {1, 4})).values ==
          std::vector<i64>{5, -1, 1, -1, -3, -1, 1, -1});
}

TEST_CASE("single eigenvalues") {
  REQUIRE(icg::eigenvalue(icg::make_spec(6, {1, 3}), 3) == -3);
  REQUIRE(icg::eigenvalue(icg::make_spec(12, {1, 3}), 6) == -6);
  REQUIRE(icg::eigenvalue(icg::make_spec(12, {1, 3, 6}), 6) == -5);
  REQUIRE(icg::eigenvalue(icg::make_spec(6, {1, 3}), 0) == 3);
  REQUIRE_THROWS_AS(icg::eigenvalue(icg::make_spec(6, {1}), 6), std::out_of_range);
  REQUIRE_THROWS_AS(icg::eigenvalue(icg::make_spec(6, {1}), -1), std::out_of_range);

  // eigenvalue and full_spectrum are the same map.
  for (i64 n : {9, 12, 30}) {
    for (const icg::IcgSpec& spec : all_subsets(n)) {
      const icg::Spectrum s = icg::full_spectrum(spec);
      for (i64 j = 0; j < n; ++j)
        REQUIRE(icg::eigenvalue(spec, j) == s.values[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("least eigenvalue reports every witness") {
  const icg::LeastEigenvalue a = icg::least_eigenvalue(icg::make_spec(6, {1, 3}));
  REQUIRE(a.value == -3);
  REQUIRE(a.witnesses == std::vector<i64>{3});

  const icg::LeastEigenvalue b = icg::least_eigenvalue(icg::make_spec(6, {1, 2, 3}));
  REQUIRE(b.value == -1);
  REQUIRE(b.witnesses == std::vector<i64>{1, 2, 3, 4, 5});

  const icg::LeastEigenvalue c = icg::least_eigenvalue(icg::make_spec(4, {1, 2}));
  REQUIRE(c.value == -1);
  REQUIRE(c.witnesses == std::vector<i64>{1, 2, 3});
}

TEST_CASE("spread of known graphs") {
  REQUIRE(icg::spread(icg::make_spec(6, {1, 3})) == 6);
  REQUIRE(icg::spread(icg::make_spec(6, {1, 2, 3})) == 6);
  REQUIRE(icg::spread(icg::make_spec(12, {1})) == 8);
}

TEST_CASE("complement spectrum: relation route equals divisor route") {
  for (i64 n = 2; n <= 40; ++n) {
    for (const icg::IcgSpec& spec : all_subsets(n)) {
      const icg::Spectrum via_relation = icg::complement_spectrum(spec);
      const icg::Spectrum via_divisors =
          icg::full_spectrum(icg::complement_divisors(spec));
      REQUIRE(via_relation == via_divisors);
    }
  }
}

TEST_CASE("spectrum identities hold for every subset") {
  for (i64 n = 2; n <= 40; ++n) {
    for (const icg::IcgSpec& spec : all_subsets(n)) {
      const icg::Spectrum s = icg::full_spectrum(spec);
      REQUIRE(s.values[0] == icg::degree(spec));
      REQUIRE(std::accumulate(s.values.begin(), s.values.end(), i64{0}) == 0);
      for (i64 j = 1; j < n; ++j)
        REQUIRE(s.values[static_cast<std::size_t>(j)] ==
                s.values[static_cast<std::size_t>(n - j)]);
    }
  }
}

TEST_CASE("empty divisor set gives the zero spectrum") {
  const icg::IcgSpec edgeless =
      icg::complement_divisors(icg::make_spec(6, {1, 2, 3}));
  REQUIRE(edgeless.divisors.empty());
  REQUIRE(icg::full_spectrum(edgeless).values == std::vector<i64>(6, 0));
  REQUIRE(icg::degree(edgeless) == 0);
  REQUIRE(icg::spread(edgeless) == 0);
  const icg::LeastEigenvalue least = icg::least_eigenvalue(edgeless);
  REQUIRE(least.value == 0);
  REQUIRE(least.witnesses == std::vector<i64>{1, 2, 3, 4, 5});
}

TEST_CASE("least eigenvalue never drops below -n/p1") {
  for (i64 n = 2; n <= 60; ++n) {
    const i64 bound = -(n / icg::factorize(n).smallest_prime());
    for (const icg::IcgSpec& spec : all_subsets(n))
      REQUIRE(icg::least_eigenvalue(spec).value >= bound);
  }
}

TEST_CASE("an eigenvalue ties the degree exactly when gcd(D) > 1") {
  for (i64 n = 2; n <= 60; ++n) {
    for (const icg::IcgSpec& spec : all_subsets(n)) {
      const icg::Spectrum s = icg::full_spectrum(spec);
      bool tie = false;
      for (i64 j = 1; j < n; ++j)
        if (s.values[static_cast<std::size_t>(j)] == s.values[0]) tie = true;
      i64 g = 0;
      for (i64 d : spec.divisors) g = std::gcd(g, d);
      REQUIRE(tie == (g > 1));
      if (g > 1) REQUIRE(s.values[static_cast<std::size_t>(n / g)] == s.values[0]);
    }
  }
}
