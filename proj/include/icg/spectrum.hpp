#pragma once

#include "icg/core.hpp"

namespace icg {

// Eigenvalues indexed by j = 0..n-1, exact integers.
struct Spectrum {
  i64 n = 0;
  std::vector<i64> values;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// lambda_j = sum over d in D of c(j, n/d). The empty divisor set gives 0.
inline i64 eigenvalue(const IcgSpec& spec, i64 j) {
  if (j < 0 || j >= spec.n)
    throw std::out_of_range("eigenvalue: j must lie in [0, " +
                            std::to_string(spec.n - 1) + "], got " +
                            std::to_string(j));
  i64 sum = 0;
  for (i64 d : spec.divisors) sum = detail::add(sum, ramanujan(j, spec.n / d));
  return sum;
}

inline Spectrum full_spectrum(const IcgSpec& spec) {
  Spectrum s{spec.n, std::vector<i64>(static_cast<std::size_t>(spec.n), 0)};
  for (i64 d : spec.divisors) {
    const i64 q = spec.n / d;
    // c(j, q) has period q in j, so one row of q values covers all of 0..n-1.
    std::vector<i64> row(static_cast<std::size_t>(q));
    for (i64 r = 0; r < q; ++r) row[static_cast<std::size_t>(r)] = ramanujan(r, q);
    for (i64 j = 0; j < spec.n; ++j)
      s.values[static_cast<std::size_t>(j)] =
          detail::add(s.values[static_cast<std::size_t>(j)],
                      row[static_cast<std::size_t>(j % q)]);
  }
  return s;
}

// Minimum of lambda_j over 1 <= j <= n-1, together with every j attaining it.
struct LeastEigenvalue {
  i64 value = 0;
  std::vector<i64> witnesses;

  friend bool operator==(const LeastEigenvalue&, const LeastEigenvalue&) = default;
};

inline LeastEigenvalue least_eigenvalue(const IcgSpec& spec) {
  const Spectrum s = full_spectrum(spec);
  LeastEigenvalue least;
  least.value = s.values[1];
  for (i64 j = 1; j < spec.n; ++j) {
    const i64 v = s.values[static_cast<std::size_t>(j)];
    if (v < least.value) {
      least.value = v;
      least.witnesses.clear();
    }
    if (v == least.value) least.witnesses.push_back(j);
  }
  return least;
}

// spread = lambda_0 - min_{j >= 1} lambda_j.
inline i64 spread(const IcgSpec& spec) {
  const Spectrum s = full_spectrum(spec);
  i64 least = s.values[1];
  for (i64 j = 2; j < spec.n; ++j)
    least = std::min(least, s.values[static_cast<std::size_t>(j)]);
  return detail::add(s.values[0], -least);
}

// Spectrum of the complement graph, computed from the complement relation
// mu_0 = n - 1 - lambda_0 and mu_j = -1 - lambda_j (j >= 1), not from the
// complement's own divisor set.
inline Spectrum complement_spectrum(const IcgSpec& spec) {
  const Spectrum s = full_spectrum(spec);
  Spectrum out{spec.n, std::vector<i64>(static_cast<std::size_t>(spec.n), 0)};
  out.values[0] = spec.n - 1 - s.values[0];
  for (i64 j = 1; j < spec.n; ++j)
    out.values[static_cast<std::size_t>(j)] =
        -1 - s.values[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace icg
