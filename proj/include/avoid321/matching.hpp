#pragma once

#include <vector>

#include "avoid321/permutation.hpp"

namespace avoid321 {

/// An excedance i matched with an anti-excedance j > i.
struct MatchedPair {
  int excedance;
  int anti_excedance;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  std::vector<MatchedPair> pairs;
};

/// Dot counts in the four regions cut out by a matched pair (i, j).
///   c1: i < l < j,  pi_j < pi_l < pi_i
///   c2: i < l < j,  pi_l > pi_i
///   c3: l > j,      pi_j < pi_l < pi_i
///   c4: l > j,      pi_l > pi_i
struct RegionCounts {
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;
  int c4 = 0;

  int c() const { return c2 + c3; }
};

enum class CheckMode { fast, verify };

/// Two-cursor matching of excedances against anti-excedances. Throws
/// Not321Avoiding for inputs outside T_n.
Matching match_pairs(const Permutation& w);

/// Sum of the second rows of P and Q. In verify mode the value is also
/// computed from the matching and the two must agree.
int srs(const Permutation& w, CheckMode mode = CheckMode::fast);

/// Throws NotAMatchedPair unless (i, j) is one of match_pairs(w).
RegionCounts region_counts(const Permutation& w, int i, int j);

/// (-1)^(srs + n - lis).
int sign_by_srs(const Permutation& w, CheckMode mode = CheckMode::fast);

}  // namespace avoid321
