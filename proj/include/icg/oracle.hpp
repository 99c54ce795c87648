#pragma once

/*
 * Floating-point cross-check for the exact spectra.
 *
 * A circulant matrix with symbol set S has eigenvalues
 *
 *     lambda_j = sum_{s in S} cos(2*pi*j*s / n),   j = 0..n-1
 *
 * (the sine parts cancel because S is closed under negation mod n).  The
 * routines here build S by a direct gcd scan and evaluate these cosine sums
 * with no shared code path: nothing below touches the Ramanujan-sum formula,
 * Moebius, or Euler phi.  Agreement within tolerance is therefore evidence
 * for the closed-form spectrum, not a tautology.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>

#include "icg/spectrum.hpp"

namespace icg {

struct FloatSpectrum {
  i64 n = 0;
  std::vector<double> values;
};

// Bit s is set iff vertex s is adjacent to vertex 0, i.e. gcd(s, n) is in D.
// Bit 0 is always clear (no loops).
inline std::vector<bool> adjacency_row(const IcgSpec& spec) {
  std::vector<bool> row(static_cast<std::size_t>(spec.n), false);
  for (i64 s = 1; s < spec.n; ++s) {
    const i64 g = std::gcd(s, spec.n);
    row[static_cast<std::size_t>(s)] =
        std::binary_search(spec.divisors.begin(), spec.divisors.end(), g);
  }
  return row;
}

inline FloatSpectrum dft_spectrum(const IcgSpec& spec) {
  const std::vector<bool> row = adjacency_row(spec);
  const i64 n = spec.n;
  FloatSpectrum fs{n, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (i64 j = 0; j < n; ++j) {
    double sum = 0.0;
    for (i64 s = 1; s < n; ++s)
      if (row[static_cast<std::size_t>(s)])
        sum += std::cos(w * static_cast<double>((j * s) % n));
    fs.values[static_cast<std::size_t>(j)] = sum;
  }
  return fs;
}

// Ramanujan sum by definition: sum of cos(2*pi*j*k/n) over the units mod n.
// The n = 1 sum has the single term k = 1, giving 1.0.
inline double ramanujan_direct(i64 j, i64 n) {
  if (n <= 0)
    throw std::invalid_argument("ramanujan_direct: n must be a positive integer");
  if (j < 0)
    throw std::invalid_argument("ramanujan_direct: j must be nonnegative");
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  double sum = 0.0;
  for (i64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) sum += std::cos(w * static_cast<double>((j * k) % n));
  return sum;
}

struct OracleMismatch {
  i64 n = 0;
  std::vector<i64> divisors;
  i64 j = -1;              // offending eigenvalue index, -1 for symbol mismatch
  double exact = 0.0;
  double dft = 0.0;
  double residual = 0.0;
  std::string what;
};

// Compares the closed-form spectrum against the cosine-sum spectrum entry by
// entry, and the symbol set against the adjacency row. Residuals must stay
// under tol (default 1e-6); anything at 1e-3 or above is treated as a failure
// regardless of tol. Fills *out with the first offender on failure.
inline bool check_spec_against_oracle(const IcgSpec& spec, double tol = 1e-6,
                                      OracleMismatch* out = nullptr) {
  const std::vector<bool> row = adjacency_row(spec);
  const SymbolSet s = symbol_set(spec);
  std::size_t si = 0;
  for (i64 k = 1; k < spec.n; ++k) {
    const bool in_row = row[static_cast<std::size_t>(k)];
    const bool in_set = si < s.members.size() && s.members[si] == k;
    if (in_set) ++si;
    if (in_row != in_set) {
      if (out)
        *out = {spec.n, spec.divisors, k, 0.0, 0.0, 0.0,
                "symbol set disagrees with adjacency row at s = " + std::to_string(k)};
      return false;
    }
  }

  const Spectrum exact = full_spectrum(spec);
  const FloatSpectrum fs = dft_spectrum(spec);
  const double hard_cap = 1e-3;
  for (i64 j = 0; j < spec.n; ++j) {
    const double e = static_cast<double>(exact.values[static_cast<std::size_t>(j)]);
    const double d = fs.values[static_cast<std::size_t>(j)];
    const double r = std::abs(e - d);
    if (r >= tol || r >= hard_cap) {
      if (out)
        *out = {spec.n, spec.divisors, j, e, d, r,
                "spectrum residual " + std::to_string(r) + " at j = " +
                    std::to_string(j)};
      return false;
    }
  }
  return true;
}

struct OracleSuiteReport {
  i64 n_max = 0;
  i64 exhaustive_n_max = 0;   // every divisor set checked for n up to here
  int samples = 0;            // random (n, D) draws in (exhaustive_n_max, n_max]
  std::uint64_t seed = 0;
  double tol = 1e-6;
  i64 graphs_checked = 0;
  double max_residual = 0.0;
  bool passed = false;
  std::optional<OracleMismatch> first_failure;
};

namespace detail {

inline double spec_max_residual(const IcgSpec& spec) {
  const Spectrum exact = full_spectrum(spec);
  const FloatSpectrum fs = dft_spectrum(spec);
  double worst = 0.0;
  for (i64 j = 0; j < spec.n; ++j)
    worst = std::max(worst,
                     std::abs(static_cast<double>(
                                  exact.values[static_cast<std::size_t>(j)]) -
                              fs.values[static_cast<std::size_t>(j)]));
  return worst;
}

}  // namespace detail

// Exhaustive sweep over every nonempty divisor set for n <= min(36, n_max),
// then `samples` seeded random draws with 36 < n <= n_max. Stops at the first
// failing graph.
inline OracleSuiteReport run_oracle_suite(i64 n_max, int samples,
                                          std::uint64_t seed, double tol = 1e-6) {
  if (n_max < 2) throw std::invalid_argument("run_oracle_suite: n_max must be >= 2");
  if (samples < 0) throw std::invalid_argument("run_oracle_suite: samples must be >= 0");

  OracleSuiteReport rep;
  rep.n_max = n_max;
  rep.exhaustive_n_max = std::min<i64>(36, n_max);
  rep.samples = samples;
  rep.seed = seed;
  rep.tol = tol;

  auto check_one = [&](const IcgSpec& spec) {
    OracleMismatch mm;
    if (!check_spec_against_oracle(spec, tol, &mm)) {
      rep.first_failure = mm;
      return false;
    }
    rep.max_residual = std::max(rep.max_residual, detail::spec_max_residual(spec));
    ++rep.graphs_checked;
    return true;
  };

  for (i64 n = 2; n <= rep.exhaustive_n_max; ++n) {
    const std::vector<i64> ds = proper_divisors(n);
    const std::size_t k = ds.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      IcgSpec spec;
      spec.n = n;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) spec.divisors.push_back(ds[i]);
      if (!check_one(spec)) return rep;
    }
  }

  if (n_max > rep.exhaustive_n_max && samples > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<i64> pick_n(rep.exhaustive_n_max + 1, n_max);
    for (int s = 0; s < samples; ++s) {
      const i64 n = pick_n(rng);
      const std::vector<i64> ds = proper_divisors(n);
      const std::size_t k = ds.size();
      if (k >= 64)
        throw std::invalid_argument("run_oracle_suite: n = " + std::to_string(n) +
                                    " has too many divisors to sample");
      std::uniform_int_distribution<std::uint64_t> pick_mask(
          1, (std::uint64_t{1} << k) - 1);
      const std::uint64_t mask = pick_mask(rng);
      IcgSpec spec;
      spec.n = n;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) spec.divisors.push_back(ds[i]);
      if (!check_one(spec)) return rep;
    }
  }

  rep.passed = true;
  return rep;
}

}  // namespace icg
