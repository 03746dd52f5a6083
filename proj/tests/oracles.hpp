#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code with the library routines they check.

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

inline bool has_321(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (w[i] > w[j] && w[j] > w[k]) return true;
  return false;
}

/// Sign from the cycle decomposition: (-1)^(n - #cycles).
inline int sign_by_cycles(const std::vector<int>& w) {
  const std::size_t n = w.size();
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j] - 1)) seen[j] = true;
  }
  return (static_cast<int>(n) - cycles) % 2 == 0 ? 1 : -1;
}

/// Longest increasing subsequence over all 2^n subsets.
inline int lis_by_subsets(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int last = 0;
    int len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ok = w[static_cast<std::size_t>(i)] > last;
      last = w[static_cast<std::size_t>(i)];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

/// All ±1 sequences of length n with nonnegative prefix sums, by filtering 2^n.
inline std::vector<std::vector<int>> ballots_by_filter(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> b(static_cast<std::size_t>(n));
    int h = 0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      b[static_cast<std::size_t>(i)] = (mask >> i & 1u) ? -1 : 1;
      h += b[static_cast<std::size_t>(i)];
      ok = ok && h >= 0;
    }
    if (ok) out.push_back(std::move(b));
  }
  return out;
}

/// All of S_n in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Unrestricted Schensted insertion; rows of P and Q of any shape.
struct Tableaux {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
};

inline Tableaux schensted(const std::vector<int>& w) {
  Tableaux t;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int x = w[pos];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == t.p.size()) {
        t.p.emplace_back();
        t.q.emplace_back();
      }
      auto& r = t.p[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        break;
      }
      std::swap(x, *it);
    }
    t.q[row].push_back(static_cast<int>(pos) + 1);
  }
  return t;
}

}  // namespace oracle
