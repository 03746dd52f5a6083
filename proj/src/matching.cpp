#include "avoid321/matching.hpp"

#include <algorithm>
#include <string>

#include "avoid321/errors.hpp"
#include "avoid321/tableau.hpp"

namespace avoid321 {

namespace {

void require_avoiding(const Permutation& w) {
  if (!is_321_avoiding(w)) throw Not321Avoiding("permutation " + to_string(w) + " contains 321");
}

int second_row_sum(const TwoRowTableau& t) {
  int s = 0;
  for (int v : t.row2) s += v;
  return s;
}

}  // namespace

Matching match_pairs(const Permutation& w) {
  require_avoiding(w);
  const auto exc = excedances(w);
  const auto anti = anti_excedances(w);
  Matching m;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < exc.size() && b < anti.size()) {
    const int i = exc[a];
    const int j = anti[b];
    const bool advance_b = i > j;
    const bool advance_a = w(i) < w(j);
    const bool match = i < j && w(i) > w(j);
    if (advance_b + advance_a + match != 1) {
      throw InternalInconsistency("matching rules not exclusive at excedance " + std::to_string(i) +
                                  ", anti-excedance " + std::to_string(j));
    }
    if (advance_b) {
      ++b;
    } else if (advance_a) {
      ++a;
    } else {
      m.pairs.push_back({i, j});
      ++a;
      ++b;
    }
  }
  return m;
}

int srs(const Permutation& w, CheckMode mode) {
  require_avoiding(w);
  const TableauPair pq = rsk(w);
  const int from_tableaux = second_row_sum(pq.insertion) + second_row_sum(pq.recording);
  if (mode == CheckMode::verify) {
    int from_matching = 0;
    for (const auto& [i, j] : match_pairs(w).pairs) from_matching += w(i) + j;
    if (from_matching != from_tableaux) {
      throw InternalInconsistency("srs mismatch for " + to_string(w) + ": tableaux " +
                                  std::to_string(from_tableaux) + ", matching " +
                                  std::to_string(from_matching));
    }
  }
  return from_tableaux;
}

RegionCounts region_counts(const Permutation& w, int i, int j) {
  const auto m = match_pairs(w);
  const MatchedPair target{i, j};
  if (std::find(m.pairs.begin(), m.pairs.end(), target) == m.pairs.end()) {
    throw NotAMatchedPair("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a matched pair of " +
                          to_string(w));
  }
  RegionCounts r;
  const int top = w(i);
  const int bottom = w(j);
  for (int l = i + 1; l <= w.size(); ++l) {
    if (l == j) continue;
    const int v = w(l);
    const bool between = v > bottom && v < top;
    const bool above = v > top;
    if (l < j) {
      r.c1 += between;
      r.c2 += above;
    } else {
      r.c3 += between;
      r.c4 += above;
    }
  }
  return r;
}

int sign_by_srs(const Permutation& w, CheckMode mode) {
  const int s = srs(w, mode);
  // n - lis is the second-row length of P, i.e. the number of matched pairs.
  const int second_row = static_cast<int>(rsk(w).insertion.row2.size());
  const int exponent = s + second_row;
  return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace avoid321
