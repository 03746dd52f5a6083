#include <doctest.h>

#include <algorithm>

#include "avoid321/enumeration.hpp"
#include "avoid321/errors.hpp"
#include "avoid321/matching.hpp"
#include "avoid321/tableau.hpp"

using namespace avoid321;

namespace {

const Permutation kSample = parse_permutation("4 1 2 5 7 8 3 6 9 12 10 11");

}  // namespace

TEST_CASE("matched pairs") {
  const std::vector<MatchedPair> expected{{1, 2}, {4, 7}, {5, 8}, {10, 11}};
  CHECK(match_pairs(kSample).pairs == expected);
  CHECK(match_pairs(Permutation::identity(5)).pairs.empty());
  CHECK(match_pairs(Permutation({2, 3, 1})).pairs == std::vector<MatchedPair>{{1, 3}});
  CHECK_THROWS_AS(match_pairs(Permutation({3, 2, 1})), Not321Avoiding);
}

TEST_CASE("srs") {
  CHECK(srs(kSample) == 56);
  CHECK(srs(kSample, CheckMode::verify) == 56);
  CHECK(srs(Permutation::identity(4)) == 0);
  CHECK(srs(Permutation({2, 3, 1})) == 5);
  CHECK_THROWS_AS(srs(Permutation({3, 2, 1})), Not321Avoiding);
}

TEST_CASE("region counts") {
  CHECK(region_counts(kSample, 1, 2).c() == 2);
  CHECK(region_counts(kSample, 5, 8).c() == 1);
  const auto r = region_counts(Permutation({2, 3, 1}), 1, 3);
  CHECK(r.c() == 1);
  CHECK(r.c1 == 0);
  CHECK(r.c2 == 1);
  CHECK_THROWS_AS(region_counts(kSample, 1, 3), NotAMatchedPair);
  CHECK_THROWS_AS(region_counts(Permutation({3, 2, 1}), 1, 3), Not321Avoiding);
}

TEST_CASE("sign by srs") {
  CHECK(sign_by_srs(kSample) == 1);
  CHECK(sign_by_srs(Permutation::identity(6)) == 1);
  CHECK(sign_by_srs(Permutation({2, 3, 1})) == 1);
  CHECK(sign_by_srs(Permutation({2, 1})) == -1);
  CHECK(inversion_count(kSample) == 10);
}

TEST_CASE("matching properties over T_n, n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    for_each_Tn_ballot(n, [&](const Permutation& w) {
      const auto pq = rsk(w);
      const auto pairs = match_pairs(w).pairs;
      const int k = static_cast<int>(pq.insertion.row1.size());
      REQUIRE(static_cast<int>(pairs.size()) == n - k);

      std::vector<int> letters;
      std::vector<int> positions;
      int inv = n - k;
      for (const auto& [i, j] : pairs) {
        REQUIRE(i < j);
        letters.push_back(w(i));
        positions.push_back(j);
        const auto r = region_counts(w, i, j);
        REQUIRE(r.c1 == 0);
        REQUIRE((r.c() - (w(i) + j)) % 2 == 0);
        REQUIRE(r.c2 + r.c3 + 2 * r.c4 == (n - w(i)) + (n - j));
        inv += r.c();
      }
      std::sort(letters.begin(), letters.end());
      REQUIRE(letters == pq.insertion.row2);
      REQUIRE(positions == pq.recording.row2);
      REQUIRE(inv == inversion_count(w));
      REQUIRE(sign_by_srs(w, CheckMode::verify) == sign_by_inversions(w));
    });
  }
}
