#include <doctest.h>

#include "avoid321/ballot.hpp"
#include "avoid321/errors.hpp"
#include "avoid321/tableau.hpp"
#include "oracles.hpp"

using namespace avoid321;

namespace {

const Permutation kSample = parse_permutation("4 1 2 5 7 8 3 6 9 12 10 11");

TwoRowTableau tab(std::vector<int> r1, std::vector<int> r2) { return {std::move(r1), std::move(r2)}; }

}  // namespace

TEST_CASE("rsk examples") {
  const auto sample = rsk(kSample);
  CHECK(sample.insertion == tab({1, 2, 3, 6, 8, 9, 10, 11}, {4, 5, 7, 12}));
  CHECK(sample.recording == tab({1, 3, 4, 5, 6, 9, 10, 12}, {2, 7, 8, 11}));

  const auto id = rsk(Permutation::identity(3));
  CHECK(id.insertion == tab({1, 2, 3}, {}));
  CHECK(id.recording == tab({1, 2, 3}, {}));

  const auto small = rsk(Permutation({2, 3, 1}));
  CHECK(small.insertion == tab({1, 3}, {2}));
  CHECK(small.recording == tab({1, 2}, {3}));

  CHECK(rsk(Permutation()).insertion.size() == 0);
  CHECK_THROWS_AS(rsk(Permutation({3, 2, 1})), ThirdRowRequired);
  CHECK_THROWS_AS(rsk(Permutation({1, 5, 2, 4, 3})), ThirdRowRequired);
}

TEST_CASE("inverse rsk examples") {
  CHECK(inverse_rsk({tab({1, 2, 3, 4}, {}), tab({1, 2, 3, 4}, {})}) == Permutation::identity(4));
  CHECK(inverse_rsk({tab({1, 3}, {2}), tab({1, 2}, {3})}) == Permutation({2, 3, 1}));
  CHECK(inverse_rsk({tab({1, 2, 3}, {4, 5}), tab({1, 2, 5}, {3, 4})}) == Permutation({4, 5, 1, 2, 3}));
}

TEST_CASE("inverse rsk rejects malformed pairs") {
  CHECK_THROWS_AS(inverse_rsk({tab({1, 2}, {3}), tab({1, 2, 3}, {})}), MalformedPair);
  CHECK_THROWS_AS(inverse_rsk({tab({2, 1}, {3}), tab({1, 2}, {3})}), MalformedPair);
  CHECK_THROWS_AS(inverse_rsk({tab({1, 3}, {2}), tab({2, 3}, {1})}), MalformedPair);
  CHECK_THROWS_AS(inverse_rsk({tab({1}, {2, 3}), tab({1}, {2, 3})}), MalformedPair);
  CHECK_THROWS_AS(inverse_rsk({tab({1, 2}, {4}), tab({1, 2}, {3})}), MalformedPair);
}

TEST_CASE("standardness") {
  CHECK(is_standard(tab({}, {})));
  CHECK(is_standard(tab({1, 3}, {2})));
  CHECK_FALSE(is_standard(tab({1, 1}, {2})));
  CHECK_FALSE(is_standard(tab({1, 3}, {2, 4, 5})));
  CHECK_FALSE(is_standard(tab({2, 3}, {1})));
}

TEST_CASE("ballot conversions") {
  const auto sample = rsk(kSample);
  CHECK(to_string(tableau_to_ballot(sample.insertion)) == "+++--+-++++-");
  CHECK(to_string(tableau_to_ballot(sample.recording)) == "+-++++--++-+");
  CHECK(tableau_to_ballot(tab({1, 2, 3, 4}, {})) == BallotSequence::all_plus(4));
  CHECK(ballot_to_tableau(BallotSequence::all_plus(3)) == tab({1, 2, 3}, {}));
  CHECK(ballot_to_tableau(parse_ballot("+++--")) == tab({1, 2, 3}, {4, 5}));
  CHECK(ballot_to_tableau(parse_ballot("+-+-+")) == tab({1, 3, 5}, {2, 4}));
  for (int n = 0; n <= 10; ++n) {
    for (const auto& b : ballot_sequences(n)) {
      const auto t = ballot_to_tableau(b);
      REQUIRE(is_standard(t));
      REQUIRE(tableau_to_ballot(t) == b);
    }
  }
}

TEST_CASE("ldes from the recording tableau") {
  CHECK(ldes_from_recording(rsk(kSample).recording) == 10);
  CHECK(ldes_from_recording(tab({1, 2, 3}, {})) == 0);
  CHECK(ldes_from_recording(tab({1, 2}, {3})) == 2);
}

TEST_CASE("text formats") {
  const auto t = tab({1, 3}, {2});
  CHECK(format_tableau(t) == "1 3\n2\n");
  CHECK(parse_tableau(format_tableau(t)) == t);
  CHECK(format_tableau_inline(t) == "1 3 / 2");
  CHECK(format_tableau_inline(tab({1, 2}, {})) == "1 2");
  CHECK(parse_tableau("1 3 / 2") == t);
  CHECK(parse_tableau("1 3\n2") == t);
  CHECK(parse_tableau("1 2 3") == tab({1, 2, 3}, {}));
  CHECK_THROWS_AS(parse_tableau("1 a / 2"), ParseError);
}

TEST_CASE("rsk agrees with unrestricted Schensted on S_8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& v : oracle::all_permutations(n)) {
      const auto ref = oracle::schensted(v);
      const Permutation w(v);
      if (ref.p.size() > 2) {
        REQUIRE_THROWS_AS(rsk(w), ThirdRowRequired);
        continue;
      }
      const auto pair = rsk(w);
      REQUIRE(pair.insertion.row1 == (ref.p.empty() ? std::vector<int>{} : ref.p[0]));
      REQUIRE(pair.recording.row1 == (ref.q.empty() ? std::vector<int>{} : ref.q[0]));
      REQUIRE(pair.insertion.row2 == (ref.p.size() < 2 ? std::vector<int>{} : ref.p[1]));
      REQUIRE(pair.recording.row2 == (ref.q.size() < 2 ? std::vector<int>{} : ref.q[1]));
    }
  }
}

TEST_CASE("properties over T_n, n <= 9") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& v : oracle::all_permutations(n)) {
      const Permutation w(v);
      if (!is_321_avoiding(w)) continue;
      const auto pair = rsk(w);
      REQUIRE(is_standard(pair.insertion));
      REQUIRE(is_standard(pair.recording));
      REQUIRE(inverse_rsk(pair) == w);

      const auto inv = rsk(w.inverse());
      REQUIRE(inv.insertion == pair.recording);
      REQUIRE(inv.recording == pair.insertion);

      REQUIRE(static_cast<int>(pair.insertion.row1.size()) == lis_oracle(w));
      REQUIRE(ldes_from_recording(pair.recording) == ldes(w));

      const auto q = tableau_to_ballot(pair.recording);
      const auto des = descent_set(w);
      for (int i = 1; i < n; ++i) {
        const bool descent = std::find(des.begin(), des.end(), i) != des.end();
        REQUIRE(descent == (q(i) == 1 && q(i + 1) == -1));
      }
    }
  }
}
