#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "icg/numtheory.hpp"

namespace icg {

enum class SpecErrorKind {
  BadOrder,         // n < 2
  NonDivisor,       // d does not divide n
  OutOfRange,       // d outside [1, n-1]
  EmptyDivisorSet,  // empty D where a graph with edges is required
  ParseError,       // malformed spec string
};

class SpecError : public std::invalid_argument {
 public:
  SpecError(SpecErrorKind kind, i64 offender, const std::string& message)
      : std::invalid_argument(message), kind_(kind), offender_(offender) {}

  SpecErrorKind kind() const { return kind_; }
  // The rejected divisor (or order), 0 when not applicable.
  i64 offender() const { return offender_; }

 private:
  SpecErrorKind kind_;
  i64 offender_;
};

// A graph identity: order n plus an ascending set D of proper divisors of n.
// Vertices are the residues mod n; a and b are adjacent iff gcd(a - b, n) is
// in D. make_spec is the validating entry point. An empty divisor set (the
// edgeless graph) only arises as complement_divisors output.
struct IcgSpec {
  i64 n = 0;
  std::vector<i64> divisors;

  friend bool operator==(const IcgSpec&, const IcgSpec&) = default;
};

inline IcgSpec make_spec(i64 n, std::vector<i64> divisors) {
  if (n < 2)
    throw SpecError(SpecErrorKind::BadOrder, n,
                    "graph order must be at least 2, got " + std::to_string(n));
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  if (divisors.empty())
    throw SpecError(SpecErrorKind::EmptyDivisorSet, 0,
                    "divisor set must not be empty");
  for (i64 d : divisors) {
    if (d < 1 || d >= n)
      throw SpecError(SpecErrorKind::OutOfRange, d,
                      "divisor " + std::to_string(d) + " is outside [1, " +
                          std::to_string(n - 1) + "] for n = " + std::to_string(n));
    if (n % d != 0)
      throw SpecError(SpecErrorKind::NonDivisor, d,
                      "divisor " + std::to_string(d) + " does not divide n = " +
                          std::to_string(n));
  }
  return IcgSpec{n, std::move(divisors)};
}

// Connection symbols: every s in [1, n-1] whose gcd class lies in D.
struct SymbolSet {
  i64 n = 0;
  std::vector<i64> members;
};

// G_n(d) = { k in [1, n-1] : gcd(k, n) = d }, ascending. |G_n(d)| = phi(n/d).
inline std::vector<i64> gcd_class(i64 n, i64 d) {
  if (n < 2)
    throw SpecError(SpecErrorKind::BadOrder, n,
                    "gcd_class: order must be at least 2, got " + std::to_string(n));
  if (d < 1 || d >= n)
    throw SpecError(SpecErrorKind::OutOfRange, d,
                    "gcd_class: divisor " + std::to_string(d) + " is outside [1, " +
                        std::to_string(n - 1) + "]");
  if (n % d != 0)
    throw SpecError(SpecErrorKind::NonDivisor, d,
                    "gcd_class: " + std::to_string(d) + " does not divide " +
                        std::to_string(n));
  std::vector<i64> ks;
  for (i64 k = 1; k <= n - 1; ++k)
    if (std::gcd(k, n) == d) ks.push_back(k);
  return ks;
}

inline SymbolSet symbol_set(const IcgSpec& spec) {
  SymbolSet s{spec.n, {}};
  for (i64 k = 1; k <= spec.n - 1; ++k) {
    const i64 g = std::gcd(k, spec.n);
    if (std::binary_search(spec.divisors.begin(), spec.divisors.end(), g))
      s.members.push_back(k);
  }
  return s;
}

// Vertex degree = |symbol set| = sum of phi(n/d) over d in D.
inline i64 degree(const IcgSpec& spec) {
  i64 deg = 0;
  for (i64 d : spec.divisors) deg = detail::add(deg, euler_phi(spec.n / d));
  return deg;
}

// The graph is connected iff gcd(D) = 1. The edgeless graph is disconnected.
inline bool is_connected(const IcgSpec& spec) {
  i64 g = 0;
  for (i64 d : spec.divisors) {
    g = std::gcd(g, d);
    if (g == 1) return true;
  }
  return false;
}

// Divisor set of the complement graph: all proper divisors of n not in D.
// May be empty (complement of the complete graph).
inline IcgSpec complement_divisors(const IcgSpec& spec) {
  IcgSpec out;
  out.n = spec.n;
  const std::vector<i64> all = proper_divisors(spec.n);
  std::set_difference(all.begin(), all.end(), spec.divisors.begin(),
                      spec.divisors.end(), std::back_inserter(out.divisors));
  return out;
}

inline bool coconnected(const IcgSpec& spec) {
  return is_connected(complement_divisors(spec));
}

// Proper divisors of n not divisible by the smallest prime factor p1.
// Always contains 1, hence a connected graph.
inline IcgSpec p1_free_divisors(i64 n) {
  if (n < 2)
    throw SpecError(SpecErrorKind::BadOrder, n,
                    "p1_free_divisors: order must be at least 2, got " +
                        std::to_string(n));
  const i64 p1 = factorize(n).smallest_prime();
  IcgSpec out;
  out.n = n;
  for (i64 d : proper_divisors(n))
    if (d % p1 != 0) out.divisors.push_back(d);
  return out;
}

// The chain { d0 * p1^b : 0 <= b <= a1 } where p1 is the smallest prime of n
// and a1 its exponent. Requires d0 | n with p1 not dividing d0. The last
// element is n exactly when d0 = n / p1^a1.
inline std::vector<i64> p1_power_chain(i64 n, i64 d0) {
  if (n < 2)
    throw std::invalid_argument("p1_power_chain: requires n >= 2, got " +
                                std::to_string(n));
  if (d0 < 1 || n % d0 != 0)
    throw std::invalid_argument("p1_power_chain: " + std::to_string(d0) +
                                " does not divide " + std::to_string(n));
  const Factorization f = factorize(n);
  const i64 p1 = f.smallest_prime();
  if (d0 % p1 == 0)
    throw std::invalid_argument("p1_power_chain: " + std::to_string(d0) +
                                " must not be divisible by the smallest prime " +
                                std::to_string(p1));
  std::vector<i64> chain;
  i64 d = d0;
  for (int b = 0; b <= f.smallest_prime_exponent(); ++b) {
    chain.push_back(d);
    d = detail::mul(d, p1);
  }
  return chain;
}

// Canonical text form "n:d1,d2,..." with divisors ascending.
inline std::string to_string(const IcgSpec& spec) {
  std::string out = std::to_string(spec.n) + ":";
  for (std::size_t i = 0; i < spec.divisors.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.divisors[i]);
  }
  return out;
}

namespace detail {

inline i64 parse_int(std::string_view text, std::string_view what) {
  i64 value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw SpecError(SpecErrorKind::ParseError, 0,
                    "could not parse " + std::string(what) + " from '" +
                        std::string(text) + "'");
  return value;
}

}  // namespace detail

inline IcgSpec parse_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw SpecError(SpecErrorKind::ParseError, 0,
                    "spec must look like 'n:d1,d2,...', got '" + std::string(text) +
                        "'");
  const i64 n = detail::parse_int(text.substr(0, colon), "order");
  std::vector<i64> ds;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view tok =
        comma == std::string_view::npos ? rest : rest.substr(0, comma);
    ds.push_back(detail::parse_int(tok, "divisor"));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return make_spec(n, std::move(ds));
}

}  // namespace icg
