#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace icg {

using i64 = std::int64_t;

namespace detail {

// Arithmetic wrappers. With ICG_CHECKED_ARITHMETIC defined every product and
// sum that could conceivably grow is range-checked and aborts on overflow.
inline i64 mul(i64 a, i64 b) {
#ifdef ICG_CHECKED_ARITHMETIC
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    std::fprintf(stderr, "icg: int64 overflow in %lld * %lld\n",
                 static_cast<long long>(a), static_cast<long long>(b));
    std::abort();
  }
  return r;
#else
  return a * b;
#endif
}

inline i64 add(i64 a, i64 b) {
#ifdef ICG_CHECKED_ARITHMETIC
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    std::fprintf(stderr, "icg: int64 overflow in %lld + %lld\n",
                 static_cast<long long>(a), static_cast<long long>(b));
    std::abort();
  }
  return r;
#else
  return a + b;
#endif
}

}  // namespace detail

struct PrimePower {
  i64 prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition, factors ascending by prime. n = 1 has no factors.
struct Factorization {
  i64 n = 1;
  std::vector<PrimePower> factors;

  // Smallest prime factor and its exponent; only meaningful for n >= 2.
  i64 smallest_prime() const {
    if (factors.empty())
      throw std::logic_error("smallest_prime: n = 1 has no prime factors");
    return factors.front().prime;
  }
  int smallest_prime_exponent() const {
    if (factors.empty())
      throw std::logic_error("smallest_prime_exponent: n = 1 has no prime factors");
    return factors.front().exponent;
  }
  bool is_prime_power() const { return factors.size() == 1; }
};

inline Factorization factorize(i64 n) {
  if (n <= 0)
    throw std::invalid_argument("factorize: n must be a positive integer, got " +
                                std::to_string(n));
  Factorization f;
  f.n = n;
  i64 m = n;
  for (i64 p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

inline i64 euler_phi(i64 n) {
  if (n <= 0)
    throw std::invalid_argument("euler_phi: n must be a positive integer, got " +
                                std::to_string(n));
  i64 result = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    i64 pe = 1;
    for (int i = 1; i < e; ++i) pe = detail::mul(pe, p);
    result = detail::mul(result, detail::mul(pe, p - 1));
  }
  return result;
}

inline int moebius(i64 n) {
  if (n <= 0)
    throw std::invalid_argument("moebius: n must be a positive integer, got " +
                                std::to_string(n));
  const Factorization f = factorize(n);
  for (const auto& pp : f.factors)
    if (pp.exponent >= 2) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

// All divisors of n, ascending, including 1 and n.
inline std::vector<i64> divisors(i64 n) {
  if (n <= 0)
    throw std::invalid_argument("divisors: n must be a positive integer, got " +
                                std::to_string(n));
  std::vector<i64> ds{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = ds.size();
    i64 pe = 1;
    for (int i = 0; i < e; ++i) {
      pe = detail::mul(pe, p);
      for (std::size_t k = 0; k < base; ++k) ds.push_back(detail::mul(ds[k], pe));
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Proper divisors: every d | n with 1 <= d < n. Requires n >= 2.
inline std::vector<i64> proper_divisors(i64 n) {
  if (n <= 1)
    throw std::invalid_argument("proper_divisors: requires n >= 2, got " +
                                std::to_string(n));
  std::vector<i64> ds = divisors(n);
  ds.pop_back();
  return ds;
}

inline int p_adic_valuation(i64 p, i64 n) {
  if (!is_prime(p))
    throw std::invalid_argument("p_adic_valuation: p must be prime, got " +
                                std::to_string(p));
  if (n <= 0)
    throw std::invalid_argument("p_adic_valuation: n must be a positive integer, got " +
                                std::to_string(n));
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// t(n, j) = n / gcd(n, j), the order of the j-th character's kernel quotient.
// gcd(n, 0) = n by convention, so t(n, 0) = 1.
inline i64 t_index(i64 n, i64 j) {
  if (n <= 0)
    throw std::invalid_argument("t_index: n must be a positive integer, got " +
                                std::to_string(n));
  if (j < 0)
    throw std::invalid_argument("t_index: j must be nonnegative, got " +
                                std::to_string(j));
  return n / std::gcd(n, j);
}

// Exact Ramanujan sum c(j, n) = mu(t) * phi(n) / phi(t) with t = t(n, j).
// Integer valued; phi(t) divides phi(n) because t | n. j is reduced mod n.
inline i64 ramanujan(i64 j, i64 n) {
  if (n <= 0)
    throw std::invalid_argument("ramanujan: n must be a positive integer, got " +
                                std::to_string(n));
  if (j < 0)
    throw std::invalid_argument("ramanujan: j must be nonnegative, got " +
                                std::to_string(j));
  const i64 t = t_index(n, j % n);
  const int mu = moebius(t);
  if (mu == 0) return 0;
  return mu * (euler_phi(n) / euler_phi(t));
}

}  // namespace icg
