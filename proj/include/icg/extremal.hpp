#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "icg/parallel.hpp"
#include "icg/spectrum.hpp"

namespace icg {

inline constexpr i64 kDefaultMaxSubsets = i64{1} << 20;

class TooManyDivisorsError : public std::runtime_error {
 public:
  TooManyDivisorsError(i64 n, std::size_t divisor_count, i64 limit)
      : std::runtime_error("n = " + std::to_string(n) + " has " +
                           std::to_string(divisor_count) +
                           " proper divisors; 2^" + std::to_string(divisor_count) +
                           " subsets exceed the limit " + std::to_string(limit) +
                           " (raise via ICG_MAX_SUBSETS)"),
        n_(n),
        divisor_count_(divisor_count),
        limit_(limit) {}

  i64 n() const { return n_; }
  std::size_t divisor_count() const { return divisor_count_; }
  i64 limit() const { return limit_; }

 private:
  i64 n_;
  std::size_t divisor_count_;
  i64 limit_;
};

enum class GraphClass {
  All,                        // every nonempty divisor set
  Connected,                  // gcd(D) = 1
  ConnectedCoconnected,       // gcd(D) = 1 and the complement is connected too
  ConnectedExcludingBarDp1,   // connected, D different from the p1-free set
};

enum class Objective { MinLeastEig, MaxSpread };

enum class TheoremId { Lemma1, Thm2, Thm3, Thm4, Thm5 };

inline bool class_member(const IcgSpec& spec, GraphClass cls) {
  switch (cls) {
    case GraphClass::All:
      return true;
    case GraphClass::Connected:
      return is_connected(spec);
    case GraphClass::ConnectedCoconnected:
      return is_connected(spec) && coconnected(spec);
    case GraphClass::ConnectedExcludingBarDp1:
      return is_connected(spec) &&
             spec.divisors != p1_free_divisors(spec.n).divisors;
  }
  return false;
}

namespace detail {

inline void check_subset_guard(i64 n, std::size_t divisor_count, i64 max_subsets) {
  if (divisor_count >= 63 || (i64{1} << divisor_count) > max_subsets)
    throw TooManyDivisorsError(n, divisor_count, max_subsets);
}

// Precomputed Ramanujan rows for one n: rows[i][j] = c(j, n/ds[i]). The Gray
// code walk in run() keeps the running eigenvalue vector of the current
// subset up to date with one row added or removed per step.
struct SubsetSweep {
  i64 n;
  std::vector<i64> ds;  // proper divisors, ascending; bit i of a mask = ds[i]
  std::vector<std::vector<i64>> rows;
  std::uint64_t full_mask = 0;
  std::uint64_t bar_mask = 0;

  explicit SubsetSweep(i64 n_) : n(n_), ds(proper_divisors(n_)) {
    const i64 p1 = factorize(n).smallest_prime();
    rows.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const i64 q = n / ds[i];
      std::vector<i64> row(static_cast<std::size_t>(n));
      for (i64 r = 0; r < q; ++r) row[static_cast<std::size_t>(r)] = ramanujan(r, q);
      for (i64 j = q; j < n; ++j)
        row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j % q)];
      rows.push_back(std::move(row));
      full_mask |= std::uint64_t{1} << i;
      if (ds[i] % p1 != 0) bar_mask |= std::uint64_t{1} << i;
    }
  }

  i64 mask_gcd(std::uint64_t mask) const {
    i64 g = 0;
    for (std::size_t i = 0; i < ds.size() && g != 1; ++i)
      if (mask & (std::uint64_t{1} << i)) g = std::gcd(g, ds[i]);
    return g;
  }

  bool mask_in_class(std::uint64_t mask, GraphClass cls) const {
    switch (cls) {
      case GraphClass::All:
        return true;
      case GraphClass::Connected:
        return mask_gcd(mask) == 1;
      case GraphClass::ConnectedCoconnected: {
        if (mask_gcd(mask) != 1) return false;
        const std::uint64_t comp = full_mask & ~mask;
        return comp != 0 && mask_gcd(comp) == 1;
      }
      case GraphClass::ConnectedExcludingBarDp1:
        return mask != bar_mask && mask_gcd(mask) == 1;
    }
    return false;
  }

  std::vector<i64> divisors_of(std::uint64_t mask) const {
    std::vector<i64> out;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) out.push_back(ds[i]);
    return out;
  }

  std::vector<i64> lambda_of(std::uint64_t mask) const {
    std::vector<i64> lam(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (mask & (std::uint64_t{1} << i))
        for (i64 j = 0; j < n; ++j)
          lam[static_cast<std::size_t>(j)] = detail::add(
              lam[static_cast<std::size_t>(j)], rows[i][static_cast<std::size_t>(j)]);
    return lam;
  }

  // visit(mask, lambda) for every nonempty subset, each exactly once.
  template <class F>
  void run(F&& visit) const {
    std::vector<i64> cur(static_cast<std::size_t>(n), 0);
    std::uint64_t prev = 0;
    const std::uint64_t end = std::uint64_t{1} << ds.size();
    for (std::uint64_t g = 1; g < end; ++g) {
      const std::uint64_t mask = g ^ (g >> 1);
      const std::uint64_t diff = mask ^ prev;
      const std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
      if (mask & diff)
        for (i64 j = 0; j < n; ++j)
          cur[static_cast<std::size_t>(j)] += rows[bit][static_cast<std::size_t>(j)];
      else
        for (i64 j = 0; j < n; ++j)
          cur[static_cast<std::size_t>(j)] -= rows[bit][static_cast<std::size_t>(j)];
      prev = mask;
      visit(mask, cur);
    }
  }
};

}  // namespace detail

// Visits every class member for this n, in ascending bitmask order over the
// ascending proper-divisor list.
template <class F>
inline void for_each_in_class(i64 n, GraphClass cls, F&& visit,
                              i64 max_subsets = kDefaultMaxSubsets) {
  const std::vector<i64> ds = proper_divisors(n);
  detail::check_subset_guard(n, ds.size(), max_subsets);
  const std::vector<i64> bar = p1_free_divisors(n).divisors;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ds.size()); ++mask) {
    IcgSpec spec;
    spec.n = n;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) spec.divisors.push_back(ds[i]);
    bool keep = true;
    switch (cls) {
      case GraphClass::All:
        break;
      case GraphClass::Connected:
        keep = is_connected(spec);
        break;
      case GraphClass::ConnectedCoconnected:
        keep = is_connected(spec) && coconnected(spec);
        break;
      case GraphClass::ConnectedExcludingBarDp1:
        keep = is_connected(spec) && spec.divisors != bar;
        break;
    }
    if (keep) visit(spec);
  }
}

inline std::vector<IcgSpec> enumerate_class(i64 n, GraphClass cls,
                                            i64 max_subsets = kDefaultMaxSubsets) {
  std::vector<IcgSpec> out;
  for_each_in_class(n, cls, [&](const IcgSpec& s) { out.push_back(s); }, max_subsets);
  return out;
}

// One optimal divisor set together with every index j attaining the optimum.
struct Achiever {
  std::vector<i64> divisors;
  std::vector<i64> witness_j;

  friend bool operator==(const Achiever&, const Achiever&) = default;
};

struct ExtremalRecord {
  i64 n = 0;
  GraphClass cls = GraphClass::All;
  Objective objective = Objective::MinLeastEig;
  bool class_empty = true;
  i64 value = 0;  // meaningful only when !class_empty
  std::vector<Achiever> achievers;  // sorted by divisor list
};

inline ExtremalRecord extremal_search(i64 n, GraphClass cls, Objective objective,
                                      i64 max_subsets = kDefaultMaxSubsets) {
  {
    const std::vector<i64> ds = proper_divisors(n);
    detail::check_subset_guard(n, ds.size(), max_subsets);
  }
  const detail::SubsetSweep sweep(n);

  ExtremalRecord rec;
  rec.n = n;
  rec.cls = cls;
  rec.objective = objective;

  i64 best = 0;
  std::vector<std::uint64_t> best_masks;
  sweep.run([&](std::uint64_t mask, const std::vector<i64>& lam) {
    if (!sweep.mask_in_class(mask, cls)) return;
    i64 least = lam[1];
    for (i64 j = 2; j < n; ++j)
      least = std::min(least, lam[static_cast<std::size_t>(j)]);
    const i64 metric = objective == Objective::MinLeastEig ? least : lam[0] - least;
    const bool improves =
        rec.class_empty ||
        (objective == Objective::MinLeastEig ? metric < best : metric > best);
    if (improves) {
      rec.class_empty = false;
      best = metric;
      best_masks.assign(1, mask);
    } else if (metric == best) {
      best_masks.push_back(mask);
    }
  });

  if (rec.class_empty) return rec;
  rec.value = best;
  for (std::uint64_t mask : best_masks) {
    Achiever a;
    a.divisors = sweep.divisors_of(mask);
    const std::vector<i64> lam = sweep.lambda_of(mask);
    i64 least = lam[1];
    for (i64 j = 2; j < n; ++j)
      least = std::min(least, lam[static_cast<std::size_t>(j)]);
    for (i64 j = 1; j < n; ++j)
      if (lam[static_cast<std::size_t>(j)] == least) a.witness_j.push_back(j);
    rec.achievers.push_back(std::move(a));
  }
  std::sort(rec.achievers.begin(), rec.achievers.end(),
            [](const Achiever& a, const Achiever& b) { return a.divisors < b.divisors; });
  return rec;
}

// Minimum least eigenvalue among connected graphs other than the p1-free one,
// i.e. the second level of the least-eigenvalue hierarchy. Composite n only.
inline ExtremalRecord second_min_least(i64 n, i64 max_subsets = kDefaultMaxSubsets) {
  if (n < 2)
    throw std::invalid_argument("second_min_least: requires n >= 2, got " +
                                std::to_string(n));
  if (is_prime(n))
    throw std::invalid_argument("second_min_least: n must be composite, got prime " +
                                std::to_string(n));
  return extremal_search(n, GraphClass::ConnectedExcludingBarDp1,
                         Objective::MinLeastEig, max_subsets);
}

namespace detail {

inline std::vector<i64> multiples_below(i64 m, i64 n) {
  std::vector<i64> out;
  for (i64 j = m; j <= n - 1; j += m) out.push_back(j);
  return out;
}

}  // namespace detail

// Closed-form optimal divisor sets with their witness indices, for the three
// statements that name explicit optima. Sorted by divisor list.
inline std::vector<Achiever> predicted_achievers(i64 n, TheoremId theorem) {
  if (n < 2)
    throw std::invalid_argument("predicted_achievers: requires n >= 2, got " +
                                std::to_string(n));
  const Factorization f = factorize(n);
  const i64 p1 = f.smallest_prime();

  switch (theorem) {
    case TheoremId::Thm2: {
      Achiever a;
      a.divisors = p1_free_divisors(n).divisors;
      a.witness_j = detail::multiples_below(n / p1, n);
      return {std::move(a)};
    }

    case TheoremId::Thm4: {
      // Empty for prime powers: removing any divisor from the p1-free set
      // cannot keep both the graph and its complement connected there.
      if (f.is_prime_power()) return {};
      const int a1 = f.smallest_prime_exponent();
      i64 p1_to_a1 = 1;
      for (int i = 0; i < a1; ++i) p1_to_a1 = detail::mul(p1_to_a1, p1);
      const i64 n1 = n / p1_to_a1;

      Achiever drop_n1;
      for (i64 d : p1_free_divisors(n).divisors)
        if (d != n1) drop_n1.divisors.push_back(d);
      drop_n1.witness_j = detail::multiples_below(n / p1, n);

      std::vector<Achiever> out{std::move(drop_n1)};
      const bool pow2_times_3 = p1 == 2 && f.factors.size() == 2 &&
                                f.factors[1].prime == 3 &&
                                f.factors[1].exponent == 1;
      if (pow2_times_3) {
        Achiever evens_and_3;
        for (i64 d = 2; d <= n / 3; d *= 2) evens_and_3.divisors.push_back(d);
        evens_and_3.divisors.push_back(3);
        std::sort(evens_and_3.divisors.begin(), evens_and_3.divisors.end());
        for (i64 j = 1; j < n; ++j)
          if (p_adic_valuation(2, j) == a1 - 1 && j % 3 != 0)
            evens_and_3.witness_j.push_back(j);
        out.push_back(std::move(evens_and_3));
      }
      std::sort(out.begin(), out.end(), [](const Achiever& a, const Achiever& b) {
        return a.divisors < b.divisors;
      });
      return out;
    }

    case TheoremId::Thm5: {
      if (is_prime(n))
        throw std::invalid_argument(
            "predicted_achievers: the second-level statement needs composite n");
      if (n == 6) {
        // The one order with extra ties at the second level.
        return {Achiever{{1}, {3}}, Achiever{{1, 2}, {2, 4}}, Achiever{{2, 3}, {1, 5}}};
      }
      const int a1 = f.smallest_prime_exponent();
      const std::vector<i64> bar = p1_free_divisors(n).divisors;
      Achiever a;
      if (a1 > 1) {
        a.divisors = bar;
        a.divisors.push_back(n / p1);
        std::sort(a.divisors.begin(), a.divisors.end());
        if (a.divisors == proper_divisors(n)) {
          // n = p1^2: the optimum is the complete graph, whose nontrivial
          // eigenvalues are all equal, so every index attains it.
          for (i64 j = 1; j < n; ++j) a.witness_j.push_back(j);
        } else {
          a.witness_j = detail::multiples_below(n / p1, n);
        }
      } else {
        for (i64 d : bar)
          if (d != n / p1) a.divisors.push_back(d);
        a.witness_j = detail::multiples_below(n / p1, n);
      }
      return {std::move(a)};
    }

    default:
      throw std::invalid_argument(
          "predicted_achievers: no closed-form achiever list for this check");
  }
}

// One verification counterexample. divisors/j are filled when the failure is
// about a specific subset or eigenvalue index.
struct Failure {
  i64 n = 0;
  std::string what;
  std::vector<i64> divisors;
  std::optional<i64> j;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::Thm2;
  i64 n_from = 0;
  i64 n_to = 0;
  bool passed = false;
  std::vector<Failure> failures;
  i64 elapsed_ms = 0;
};

struct VerifyOptions {
  i64 max_subsets = kDefaultMaxSubsets;
  int jobs = 1;
  std::function<void(i64)> progress;  // called with each completed n
};

namespace detail {

inline std::string join_i64(const std::vector<i64>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

inline void compare_achievers(i64 n, const std::vector<Achiever>& got,
                              const std::vector<Achiever>& want,
                              std::vector<Failure>& out) {
  std::size_t gi = 0;
  std::size_t wi = 0;
  while (gi < got.size() || wi < want.size()) {
    if (wi == want.size() ||
        (gi < got.size() && got[gi].divisors < want[wi].divisors)) {
      out.push_back({n, "achiever outside the predicted set", got[gi].divisors,
                     std::nullopt, "absent", "witness j {" + join_i64(got[gi].witness_j) + "}"});
      ++gi;
    } else if (gi == got.size() || want[wi].divisors < got[gi].divisors) {
      out.push_back({n, "predicted achiever not found", want[wi].divisors,
                     std::nullopt, "witness j {" + join_i64(want[wi].witness_j) + "}", "absent"});
      ++wi;
    } else {
      if (got[gi].witness_j != want[wi].witness_j)
        out.push_back({n, "witness set mismatch", got[gi].divisors, std::nullopt,
                       "{" + join_i64(want[wi].witness_j) + "}",
                       "{" + join_i64(got[gi].witness_j) + "}"});
      ++gi;
      ++wi;
    }
  }
}

inline void compare_divisor_sets(i64 n, std::vector<std::vector<i64>> got,
                                 std::vector<std::vector<i64>> want,
                                 const std::string& extra_what,
                                 const std::string& missing_what,
                                 std::vector<Failure>& out) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::size_t gi = 0;
  std::size_t wi = 0;
  while (gi < got.size() || wi < want.size()) {
    if (wi == want.size() || (gi < got.size() && got[gi] < want[wi])) {
      out.push_back({n, extra_what, got[gi], std::nullopt, "absent", "present"});
      ++gi;
    } else if (gi == got.size() || want[wi] < got[gi]) {
      out.push_back({n, missing_what, want[wi], std::nullopt, "present", "absent"});
      ++wi;
    } else {
      ++gi;
      ++wi;
    }
  }
}

inline void check_thm2(i64 n, i64 max_subsets, std::vector<Failure>& out) {
  const ExtremalRecord rec =
      extremal_search(n, GraphClass::All, Objective::MinLeastEig, max_subsets);
  const i64 expect = -(n / factorize(n).smallest_prime());
  if (rec.class_empty || rec.value != expect) {
    out.push_back({n, "global least-eigenvalue minimum differs from -n/p1", {},
                   std::nullopt, std::to_string(expect),
                   rec.class_empty ? "empty class" : std::to_string(rec.value)});
    return;
  }
  compare_achievers(n, rec.achievers, predicted_achievers(n, TheoremId::Thm2), out);
}

inline void check_thm3(i64 n, i64 max_subsets, std::vector<Failure>& out) {
  {
    const std::vector<i64> ds = proper_divisors(n);
    check_subset_guard(n, ds.size(), max_subsets);
  }
  const SubsetSweep sweep(n);
  bool any = false;
  i64 best = 0;
  std::vector<std::uint64_t> best_masks;
  std::vector<std::uint64_t> predicted_masks;
  sweep.run([&](std::uint64_t mask, const std::vector<i64>& lam) {
    i64 least = lam[1];
    for (i64 j = 2; j < n; ++j)
      least = std::min(least, lam[static_cast<std::size_t>(j)]);
    const i64 sp = lam[0] - least;
    if (sp > n)
      out.push_back({n, "spread exceeds n", sweep.divisors_of(mask), std::nullopt,
                     "<= " + std::to_string(n), std::to_string(sp)});
    if (!any || sp > best) {
      any = true;
      best = sp;
      best_masks.assign(1, mask);
    } else if (sp == best) {
      best_masks.push_back(mask);
    }
    const std::uint64_t comp = sweep.full_mask & ~mask;
    if (comp == 0 || sweep.mask_gcd(comp) > 1) predicted_masks.push_back(mask);
  });
  if (best != n) {
    out.push_back({n, "maximum spread differs from n", {}, std::nullopt,
                   std::to_string(n), std::to_string(best)});
    return;
  }
  std::vector<std::vector<i64>> got;
  got.reserve(best_masks.size());
  for (std::uint64_t m : best_masks) got.push_back(sweep.divisors_of(m));
  std::vector<std::vector<i64>> want;
  want.reserve(predicted_masks.size());
  for (std::uint64_t m : predicted_masks) want.push_back(sweep.divisors_of(m));
  compare_divisor_sets(n, std::move(got), std::move(want),
                       "spread-n graph whose complement divisors have gcd 1",
                       "gcd-characterized graph missing spread n", out);
}

inline void check_thm4(i64 n, i64 max_subsets, std::vector<Failure>& out) {
  const Factorization f = factorize(n);
  const ExtremalRecord rec = extremal_search(n, GraphClass::ConnectedCoconnected,
                                             Objective::MinLeastEig, max_subsets);
  const bool expect_empty = f.is_prime_power();
  if (rec.class_empty != expect_empty) {
    out.push_back({n, "class emptiness disagrees with prime-power rule", {},
                   std::nullopt, expect_empty ? "empty" : "nonempty",
                   rec.class_empty ? "empty" : "nonempty"});
    return;
  }
  if (rec.class_empty) return;
  const i64 p1 = f.smallest_prime();
  i64 p1_to_a1_minus_1 = 1;
  for (int i = 1; i < f.smallest_prime_exponent(); ++i)
    p1_to_a1_minus_1 = mul(p1_to_a1_minus_1, p1);
  const i64 expect = -(n / p1) + p1_to_a1_minus_1;
  if (rec.value != expect) {
    out.push_back({n, "coconnected-class minimum differs from -n/p1 + p1^(a1-1)",
                   {}, std::nullopt, std::to_string(expect), std::to_string(rec.value)});
    return;
  }
  compare_achievers(n, rec.achievers, predicted_achievers(n, TheoremId::Thm4), out);
}

inline void check_thm5(i64 n, i64 max_subsets, std::vector<Failure>& out) {
  if (is_prime(n)) return;
  const Factorization f = factorize(n);
  const ExtremalRecord rec = second_min_least(n, max_subsets);
  if (rec.class_empty) {
    out.push_back({n, "second-level class unexpectedly empty", {}, std::nullopt,
                   "nonempty", "empty"});
    return;
  }
  const i64 p1 = f.smallest_prime();
  const i64 expect = f.smallest_prime_exponent() > 1 ? -(n / p1) + p1 - 1
                                                     : -(n / p1) + 1;
  if (rec.value != expect) {
    out.push_back({n, "second-level minimum differs from the closed form", {},
                   std::nullopt, std::to_string(expect), std::to_string(rec.value)});
    return;
  }
  if (rec.value <= -(n / p1))
    out.push_back({n, "second level not strictly above the global minimum", {},
                   std::nullopt, "> " + std::to_string(-(n / p1)),
                   std::to_string(rec.value)});
  compare_achievers(n, rec.achievers, predicted_achievers(n, TheoremId::Thm5), out);
}

inline void check_lemma1(i64 n, std::vector<Failure>& out) {
  const Factorization f = factorize(n);
  const i64 p1 = f.smallest_prime();
  for (i64 d0 : p1_free_divisors(n).divisors) {
    std::vector<i64> chain = p1_power_chain(n, d0);
    if (chain.back() == n) chain.pop_back();
    const i64 rhs = -euler_phi(n / d0);  // bound is rhs / (p1 - 1)
    const std::size_t k = chain.size();
    std::vector<std::vector<i64>> rows(k);
    for (std::size_t i = 0; i < k; ++i) {
      const i64 q = n / chain[i];
      rows[i].resize(static_cast<std::size_t>(n));
      for (i64 j = 0; j < n; ++j)
        rows[i][static_cast<std::size_t>(j)] = ramanujan(j % q, q);
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      for (i64 j = 0; j < n; ++j) {
        i64 sum = 0;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (std::uint64_t{1} << i))
            sum += rows[i][static_cast<std::size_t>(j)];
        // Cross-multiplied by p1 - 1 > 0 to stay in integers.
        if (sum * (p1 - 1) < rhs) {
          std::vector<i64> subset;
          for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t{1} << i)) subset.push_back(chain[i]);
          out.push_back({n,
                         "chain partial sum below -phi(n/d0)/(p1-1) for d0 = " +
                             std::to_string(d0),
                         subset, j, ">= " + std::to_string(rhs) + " after scaling by " +
                             std::to_string(p1 - 1),
                         std::to_string(sum * (p1 - 1))});
        }
      }
    }
  }
}

}  // namespace detail

inline VerificationReport verify_theorem(TheoremId theorem, i64 n_from, i64 n_to,
                                         const VerifyOptions& opts = {}) {
  if (n_from < 2 || n_to < n_from)
    throw std::invalid_argument("verify_theorem: need 2 <= n_from <= n_to");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t count = static_cast<std::size_t>(n_to - n_from + 1);
  std::vector<std::vector<Failure>> slots(count);
  parallel_for_index(count, opts.jobs, [&](std::size_t i) {
    const i64 n = n_from + static_cast<i64>(i);
    try {
      switch (theorem) {
        case TheoremId::Lemma1:
          detail::check_lemma1(n, slots[i]);
          break;
        case TheoremId::Thm2:
          detail::check_thm2(n, opts.max_subsets, slots[i]);
          break;
        case TheoremId::Thm3:
          detail::check_thm3(n, opts.max_subsets, slots[i]);
          break;
        case TheoremId::Thm4:
          detail::check_thm4(n, opts.max_subsets, slots[i]);
          break;
        case TheoremId::Thm5:
          detail::check_thm5(n, opts.max_subsets, slots[i]);
          break;
      }
    } catch (const std::exception& e) {
      slots[i].push_back({n, "exception during verification", {}, std::nullopt,
                          "no exception", e.what()});
    }
    if (opts.progress) opts.progress(n);
  });

  VerificationReport rep;
  rep.theorem = theorem;
  rep.n_from = n_from;
  rep.n_to = n_to;
  for (std::vector<Failure>& s : slots)
    for (Failure& fl : s) rep.failures.push_back(std::move(fl));
  rep.passed = rep.failures.empty();
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace icg
