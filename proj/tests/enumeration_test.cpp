#include <doctest.h>

#include <set>
#include <stdexcept>

#include "avoid321/enumeration.hpp"
#include "avoid321/errors.hpp"

using namespace avoid321;

TEST_CASE("ballot numbers") {
  CHECK(ballot_number(4, 2) == 2);
  CHECK(ballot_number(4, 3) == 3);
  CHECK(ballot_number(4, 4) == 1);
  CHECK(ballot_number(3, 1) == 0);
  CHECK(ballot_number(0, 0) == 1);
  CHECK(ballot_number(3, 5) == 0);
  CHECK(ballot_number(-1, 0) == 0);
  for (int n = 0; n <= 12; ++n) {
    CHECK(ballot_number(n, n) == 1);
    for (int k = 0; k <= n; ++k) {
      REQUIRE(ballot_number(n, k) == static_cast<std::int64_t>(ballot_sequences(n, k).size()));
    }
  }
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(12) == 208012);
  CHECK(catalan(30) == 3814986502092304LL);
  for (int n = 0; n <= 14; ++n) {
    std::int64_t sum = 0;
    for (int k = 0; k <= n; ++k) sum += ballot_number(n, k) * ballot_number(n, k);
    REQUIRE(sum == catalan(n));
  }
}

TEST_CASE("generators") {
  const auto t3 = generate_Tn_filter(3);
  const std::vector<Permutation> expected{Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
                                          Permutation({2, 3, 1}), Permutation({3, 1, 2})};
  CHECK(t3 == expected);
  CHECK(generate_Tn_filter(0).size() == 1);
  CHECK(generate_Tn_filter(4).size() == 14);
  CHECK(generate_Tn_ballot(1) == std::vector<Permutation>{Permutation({1})});
  CHECK(generate_Tn_ballot(12).size() == 208012);

  for (int n = 0; n <= 8; ++n) {
    const auto a = generate_Tn_filter(n);
    const auto b = generate_Tn_ballot(n);
    REQUIRE(std::set<Permutation>(a.begin(), a.end()) == std::set<Permutation>(b.begin(), b.end()));
    REQUIRE(std::set<Permutation>(b.begin(), b.end()).size() == b.size());
  }
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(generate_Tn_filter(10), LimitExceeded);
  CHECK_NOTHROW(check_limit(Generator::filter, 10, true));
  CHECK_THROWS_AS(check_limit(Generator::filter, 12, true), LimitExceeded);
  CHECK_THROWS_AS(check_limit(Generator::ballot, 15, false), LimitExceeded);
  CHECK_NOTHROW(check_limit(Generator::ballot, 16, true));
  CHECK_THROWS_AS(check_limit(Generator::ballot, 17, true), LimitExceeded);
  CHECK_THROWS_AS(check_limit(Generator::ballot, -1, false), LimitExceeded);
}

TEST_CASE("statistics") {
  CHECK(parse_statistic("ldes") == Statistic::ldes);
  CHECK(to_string(Statistic::lind) == "lind");
  CHECK_THROWS_AS(parse_statistic("maj"), ParseError);
  const Permutation w({2, 3, 1});
  CHECK(statistic_value(Statistic::lis, w) == 2);
  CHECK(statistic_value(Statistic::ldes, w) == 2);
  CHECK(statistic_value(Statistic::lind, w) == 2);
  CHECK(statistic_value(Statistic::sign, w) == 1);
}

TEST_CASE("signed distributions") {
  const auto lis3 = signed_distribution(3, Statistic::lis);
  CHECK(lis3.rows.size() == 2);
  CHECK(lis3.rows.at(3) == SignCounts{1, 0});
  CHECK(lis3.rows.at(2) == SignCounts{2, 2});
  CHECK(lis3.total() == 5);

  const auto lis4 = signed_distribution(4, Statistic::lis);
  CHECK(lis4.rows.at(4).difference() == 1);
  CHECK(lis4.rows.at(3).difference() == -1);
  CHECK(lis4.rows.at(2).difference() == 0);

  const auto ldes2 = signed_distribution(2, Statistic::ldes);
  CHECK(ldes2.rows.at(0) == SignCounts{1, 0});
  CHECK(ldes2.rows.at(1) == SignCounts{0, 1});

  for (int n = 0; n <= 10; ++n) REQUIRE(signed_distribution(n, Statistic::ldes).total() == catalan(n));
}

TEST_CASE("signed polynomials") {
  CHECK(signed_polynomial(3, Statistic::lis) == Polynomial::monomial({3}, 1));
  CHECK(signed_polynomial(5, Statistic::ldes) == Polynomial::monomial({0}, 1) + Polynomial::monomial({2}, 1));
  CHECK(to_string(signed_polynomial(2, Statistic::ldes)) == "-q + 1");

  ParityFilter star_even;
  star_even.lis_parity = 0;
  star_even.ldes_parity = 0;
  const auto biv = signed_polynomial(2, Statistic::lis, Statistic::ldes, {}, star_even) *
                   BivariatePolynomial::monomial({1, 0}, 1);
  CHECK(biv == BivariatePolynomial::monomial({3, 0}, 1));

  CHECK(unsigned_polynomial(2, Statistic::lis, 2, 1) ==
        Polynomial::monomial({5}, 1) + Polynomial::monomial({3}, 1));
}

TEST_CASE("lis and ldes distributions against ballot numbers") {
  for (int n = 1; n <= 10; ++n) {
    const auto lis = signed_distribution(n, Statistic::lis);
    for (int k = 0; k <= n; ++k) {
      const auto b = ballot_number(n, k);
      const auto it = lis.rows.find(k);
      const std::int64_t count = it == lis.rows.end() ? 0 : it->second.even + it->second.odd;
      REQUIRE(count == b * b);
    }
    const auto ldes = signed_distribution(n, Statistic::ldes);
    for (int d = 0; d < n; ++d) {
      const auto it = ldes.rows.find(d);
      const std::int64_t count = it == ldes.rows.end() ? 0 : it->second.even + it->second.odd;
      REQUIRE(count == ballot_number(n + d - 1, n - 1));
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (Statistic s : {Statistic::lis, Statistic::ldes, Statistic::lind}) {
    const auto one = signed_distribution(11, s, {1, false});
    CHECK(signed_distribution(11, s, {3, false}) == one);
    CHECK(signed_distribution(11, s, {12, false}) == one);
  }
}

TEST_CASE("polynomial arithmetic") {
  const auto a = Polynomial::monomial({2}, 3) + Polynomial::monomial({0}, -1);
  const auto b = Polynomial::monomial({1}, 1) - Polynomial::monomial({0}, 1);
  CHECK(to_string(a * b) == "3*q^3 - 3*q^2 - q + 1");
  CHECK((a - a).is_zero());
  CHECK(a.coefficient({2}) == 3);
  CHECK(a.coefficient({7}) == 0);
  CHECK(BivariatePolynomial::key({3, 2}) == "3,2");
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(Polynomial::monomial({0}, INT64_MAX) + Polynomial::monomial({0}, 1), std::overflow_error);
}
