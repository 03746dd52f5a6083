#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "avoid321/ballot.hpp"
#include "avoid321/permutation.hpp"
#include "avoid321/polynomial.hpp"
#include "avoid321/tableau.hpp"

namespace avoid321 {

/// Ballot number b(n,k): ballot sequences of length n with k entries +1.
/// Zero whenever 2k - n + 1 <= 0, k > n, or an argument is negative.
std::int64_t ballot_number(int n, int k);

std::int64_t catalan(int n);

/// Desk-scale caps. `allow_large` lifts the soft caps up to the hard ones.
struct EnumerationLimits {
  static constexpr int filter_soft = 9;
  static constexpr int filter_hard = 11;
  static constexpr int ballot_soft = 14;
  static constexpr int ballot_hard = 16;
};

enum class Generator { filter, ballot };

/// Throws LimitExceeded when n is negative or above the applicable cap.
void check_limit(Generator g, int n, bool allow_large);

struct EnumerationOptions {
  int workers = 1;
  bool allow_large = false;
};

/// Visits all of S_n in lexicographic order, keeping the 321-avoiders.
template <class Fn>
void for_each_Tn_filter(int n, Fn&& fn, bool allow_large = false) {
  check_limit(Generator::filter, n, allow_large);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  do {
    Permutation w(v);
    if (is_321_avoiding(w)) fn(w);
  } while (std::next_permutation(v.begin(), v.end()));
}

/// Visits the elements of T_n whose lis is k: every pair (p, q) of ballot
/// sequences with k ones, p outer and q inner, realized by inverse RSK.
template <class Fn>
void for_each_Tn_ballot_slice(int n, int k, Fn&& fn) {
  const auto ballots = ballot_sequences(n, k);
  std::vector<TwoRowTableau> tableaux;
  tableaux.reserve(ballots.size());
  for (const auto& b : ballots) tableaux.push_back(ballot_to_tableau(b));
  for (const auto& p : tableaux) {
    for (const auto& q : tableaux) fn(inverse_rsk({p, q}));
  }
}

/// Visits all of T_n slice by slice, k ascending.
template <class Fn>
void for_each_Tn_ballot(int n, Fn&& fn, bool allow_large = false) {
  check_limit(Generator::ballot, n, allow_large);
  for (int k = 0; k <= n; ++k) for_each_Tn_ballot_slice(n, k, fn);
}

std::vector<Permutation> generate_Tn_filter(int n, bool allow_large = false);
std::vector<Permutation> generate_Tn_ballot(int n, bool allow_large = false);

/// Folds `fn(w, acc)` over T_n. Each lis-slice gets its own accumulator and
/// the slices are merged with `+=` in ascending k, so the result does not
/// depend on the number of workers.
template <class Acc, class Fn>
Acc reduce_Tn(int n, const EnumerationOptions& options, Fn fn) {
  check_limit(Generator::ballot, n, options.allow_large);
  std::vector<Acc> slices(static_cast<std::size_t>(n) + 1);
  auto run_slice = [&](int k) {
    Acc& acc = slices[static_cast<std::size_t>(k)];
    for_each_Tn_ballot_slice(n, k, [&](const Permutation& w) { fn(w, acc); });
  };
  const int workers = std::clamp(options.workers, 1, n + 1);
  if (workers == 1) {
    for (int k = 0; k <= n; ++k) run_slice(k);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int k = next++; k <= n; k = next++) run_slice(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  Acc total{};
  for (const auto& s : slices) total += s;
  return total;
}

enum class Statistic { lis, ldes, lind, sign };

/// Parses "lis", "ldes", "lind" or "sign".
Statistic parse_statistic(std::string_view name);
std::string to_string(Statistic s);

/// Value of the statistic on w. lis is the first-row length of P.
int statistic_value(Statistic s, const Permutation& w);

struct SignCounts {
  std::int64_t even = 0;
  std::int64_t odd = 0;

  std::int64_t difference() const { return even - odd; }
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

/// Even and odd counts of T_n per value of a statistic.
struct SignedDistribution {
  std::map<int, SignCounts> rows;

  std::int64_t total() const;
  /// Sum over rows of (even - odd) * q^value.
  Polynomial signed_polynomial() const;
  SignedDistribution& operator+=(const SignedDistribution& other);
  friend bool operator==(const SignedDistribution&, const SignedDistribution&) = default;
};

SignedDistribution signed_distribution(int n, Statistic s, const EnumerationOptions& options = {});

/// Optional parity constraints (0 = even, 1 = odd) selecting a subset of T_n.
struct ParityFilter {
  std::optional<int> lis_parity;
  std::optional<int> ldes_parity;

  bool accepts(int lis_value, int ldes_value) const;
};

/// Sum over (filtered) T_n of sign(w) * q^stat(w).
Polynomial signed_polynomial(int n, Statistic s, const EnumerationOptions& options = {},
                             const ParityFilter& filter = {});

/// Sum over (filtered) T_n of sign(w) * q^first(w) * t^second(w).
BivariatePolynomial signed_polynomial(int n, Statistic first, Statistic second,
                                      const EnumerationOptions& options = {},
                                      const ParityFilter& filter = {});

/// Unsigned counterpart used on the right-hand sides of the identities:
/// sum over T_n of q^(scale * stat + shift).
Polynomial unsigned_polynomial(int n, Statistic s, int scale, int shift,
                               const EnumerationOptions& options = {});

}  // namespace avoid321
