#include "avoid321/verify.hpp"

#include <functional>
#include <map>
#include <set>

#include "avoid321/errors.hpp"
#include "avoid321/involutions.hpp"
#include "avoid321/matching.hpp"

namespace avoid321 {

bool VerificationReport::pass() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

// Per-element predicate results over one size; the earliest failure in
// enumeration order wins when slices are merged.
struct Tally {
  std::int64_t total = 0;
  std::int64_t holds = 0;
  std::optional<std::string> first_failure;

  void record(bool ok, const std::string& witness) {
    ++total;
    if (ok) {
      ++holds;
    } else if (!first_failure) {
      first_failure = witness;
    }
  }

  Tally& operator+=(const Tally& other) {
    total += other.total;
    holds += other.holds;
    if (!first_failure) first_failure = other.first_failure;
    return *this;
  }
};

bool safely(const std::function<bool()>& check) {
  try {
    return check();
  } catch (const Error&) {
    return false;
  } catch (const InternalInconsistency&) {
    return false;
  }
}

VerificationCase tally_case(int n, const Tally& t) {
  VerificationCase c;
  c.n = n;
  c.lhs = {{"elements", t.holds}};
  c.rhs = {{"elements", t.total}};
  c.counterexample = t.first_failure;
  c.pass = t.holds == t.total && !t.first_failure;
  return c;
}

template <class Check>
VerificationCase over_Tn(int n, const EnumerationOptions& options, Check check) {
  const Tally t = reduce_Tn<Tally>(n, options, [&](const Permutation& w, Tally& acc) {
    acc.record(safely([&] { return check(w); }), to_string(w));
  });
  return tally_case(n, t);
}

template <class Check>
VerificationCase over_ballots(int n, Check check) {
  Tally t;
  for (const auto& b : ballot_sequences(n)) t.record(safely([&] { return check(b); }), to_string(b));
  return tally_case(n, t);
}

template <class Map>
ValueMap int_map(const Map& m) {
  ValueMap out;
  for (const auto& [key, value] : m) {
    if (value != 0) out.emplace_back(std::to_string(key), value);
  }
  return out;
}

template <class Lhs, class Rhs>
VerificationCase compare_case(int n, Lhs lhs, Rhs rhs) {
  VerificationCase c;
  c.n = n;
  c.pass = lhs == rhs;
  if constexpr (std::is_same_v<Lhs, ValueMap>) {
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
  } else {
    c.lhs = to_value_map(lhs);
    c.rhs = to_value_map(rhs);
  }
  return c;
}

/// Folds an element-wise tally into a case whose lhs/rhs carry a comparison.
void merge_tally(VerificationCase& c, const Tally& t) {
  if (t.first_failure) {
    c.pass = false;
    if (!c.counterexample) c.counterexample = t.first_failure;
  }
}

struct Ballots {
  BallotSequence p;
  BallotSequence q;
};

Ballots ballots_of(const Permutation& w) {
  const TableauPair pq = rsk(w);
  return {tableau_to_ballot(pq.insertion), tableau_to_ballot(pq.recording)};
}

int lis_of(const Permutation& w) { return static_cast<int>(rsk(w).insertion.row1.size()); }

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

std::int64_t a_star_formula(int n, int k) {
  if (n % 2 == 1) return k % 2 == 1 ? ballot_number((n - 1) / 2, (k - 1) / 2) : 0;
  return ballot_number(n / 2 - 1, floor_div2(k - 1));
}

std::int64_t a_star_count(int n, int k) {
  std::int64_t c = 0;
  for (const auto& b : ballot_sequences(n, k)) c += in_a_star(b);
  return c;
}


// ---------------------------------------------------------------------------

std::vector<VerificationCase> check_cardinality(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto count = reduce_Tn<Polynomial>(n, o, [](const Permutation&, Polynomial& acc) { acc.add({0}, 1); });
    VerificationCase c = compare_case(n, ValueMap{{"count", count.coefficient({0})}},
                                      ValueMap{{"count", catalan(n)}});
    if (n <= EnumerationLimits::filter_soft) {
      const auto by_filter = generate_Tn_filter(n);
      auto by_ballot = generate_Tn_ballot(n);
      const std::set<Permutation> filter_set(by_filter.begin(), by_filter.end());
      Tally t;
      for (const auto& w : by_ballot) t.record(filter_set.count(w) == 1, to_string(w));
      const std::set<Permutation> ballot_set(by_ballot.begin(), by_ballot.end());
      for (const auto& w : by_filter) t.record(ballot_set.count(w) == 1, to_string(w));
      if (ballot_set.size() != by_ballot.size()) t.record(false, "duplicate in ballot generator");
      merge_tally(c, t);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationCase> check_lis_distribution(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, std::int64_t> lhs;
    for (const auto& [k, counts] : signed_distribution(n, Statistic::lis, o).rows) lhs[k] = counts.even + counts.odd;
    std::map<int, std::int64_t> rhs;
    for (int k = 0; k <= n; ++k) rhs[k] = checked_mul(ballot_number(n, k), ballot_number(n, k));
    out.push_back(compare_case(n, int_map(lhs), int_map(rhs)));
  }
  return out;
}

std::vector<VerificationCase> check_ldes_distribution(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, std::int64_t> lhs;
    for (const auto& [d, counts] : signed_distribution(n, Statistic::ldes, o).rows) lhs[d] = counts.even + counts.odd;
    std::map<int, std::int64_t> rhs;
    for (int d = 0; d < n; ++d) rhs[d] = ballot_number(n + d - 1, n - 1);
    out.push_back(compare_case(n, int_map(lhs), int_map(rhs)));
  }
  return out;
}

std::vector<VerificationCase> check_prop21(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(over_Tn(n, o, [](const Permutation& w) {
      return sign_by_srs(w, CheckMode::verify) == sign_by_inversions(w);
    }));
  }
  return out;
}

std::vector<VerificationCase> check_lemma22(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(over_Tn(n, o, [n](const Permutation& w) {
      const auto m = match_pairs(w);
      int sum_c = 0;
      for (const auto& [i, j] : m.pairs) {
        const RegionCounts r = region_counts(w, i, j);
        if (r.c1 != 0) return false;
        if (r.c() % 2 != (w(i) + j) % 2) return false;
        if (r.c2 + r.c3 + 2 * r.c4 != (n - w(i)) + (n - j)) return false;
        sum_c += r.c();
      }
      const int k = lis_oracle(w);
      return static_cast<int>(m.pairs.size()) == n - k && inversion_count(w) == sum_c + (n - k);
    }));
  }
  return out;
}

std::vector<VerificationCase> check_srs_matching(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(over_Tn(n, o, [](const Permutation& w) {
      const TableauPair pq = rsk(w);
      std::vector<int> letters;
      std::vector<int> positions;
      for (const auto& [i, j] : match_pairs(w).pairs) {
        letters.push_back(w(i));
        positions.push_back(j);
      }
      std::sort(letters.begin(), letters.end());
      (void)srs(w, CheckMode::verify);
      return letters == pq.insertion.row2 && positions == pq.recording.row2;
    }));
  }
  return out;
}

std::vector<VerificationCase> check_prop31(int n_max) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, std::int64_t> lhs;
    std::map<int, std::int64_t> rhs;
    for (int k = 0; k <= n; ++k) {
      lhs[k] = a_star_count(n, k);
      rhs[k] = a_star_formula(n, k);
    }
    VerificationCase c = compare_case(n, int_map(lhs), int_map(rhs));
    const VerificationCase structure = over_ballots(n, [n](const BallotSequence& b) {
      bool pairs_equal = true;
      for (int i = 1; 2 * i + 1 <= n; ++i) pairs_equal = pairs_equal && b(2 * i) == b(2 * i + 1);
      if (pairs_equal != in_a_star(b)) return false;
      // Length 2 admits "+-" in A* with delta 1; from length 3 on it is impossible.
      return n < 3 || !(in_a_star(b) && delta(b) == 1);
    });
    if (!structure.pass) {
      c.pass = false;
      c.counterexample = structure.counterexample;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationCase> check_phi_involution(int n_max) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(over_ballots(n, [](const BallotSequence& b) {
      if (epsilon(b) == 0) return true;
      const BallotSequence c = phi(b);
      return phi(c) == b && ballot_sign(c) == -ballot_sign(b) && ones_count(c) == ones_count(b) &&
             epsilon(c) == epsilon(b);
    }));
  }
  return out;
}

std::vector<VerificationCase> check_psi_bijection(int n_max) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(over_ballots(n, [](const BallotSequence& b) {
      const int d = delta(b);
      if (d < 3 || d % 2 == 0 || (b.size() - ones_count(b)) % 2 == 1) return true;
      const BallotClass cls = classify(b);
      if (cls.tag == BallotTag::a_star) {
        int last_minus = 0;
        for (int i = 1; i <= b.size(); ++i) {
          if (b(i) == -1) last_minus = i;
        }
        if (last_minus <= d + 1) return true;
        const BallotSequence image = psi(b, d);
        return classify(image).tag == BallotTag::b_star && delta(image) == d &&
               ballot_sign(image) == -ballot_sign(b) && psi_inverse(image, d) == b;
      }
      if (in_b_star_star(cls)) {
        const BallotSequence image = psi_inverse(b, d);
        return in_a_star(image) && delta(image) == d && psi(image, d) == b;
      }
      return true;
    }));
  }
  return out;
}

std::vector<VerificationCase> check_capital_phi(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, std::int64_t> fixed_per_k;
    std::map<int, std::int64_t> expected;
    for (int k = 0; k <= n; ++k) {
      const auto a = a_star_formula(n, k);
      expected[k] = checked_mul(a, a);
    }
    Tally t;
    check_limit(Generator::ballot, n, o.allow_large);
    for_each_Tn_ballot(n, [&](const Permutation& w) {
      bool ok = safely([&] {
        const MapOutcome m = capital_phi(w);
        const int k = lis_of(w);
        if (lis_of(m.image) != k) return false;
        if (capital_phi(m.image).image != w) return false;
        if (m.fixed) {
          ++fixed_per_k[k];
          const int expected_sign = n % 2 == 1 ? 1 : (k % 2 == 0 ? 1 : -1);
          return sign_by_inversions(w) == expected_sign;
        }
        return sign_by_inversions(m.image) == -sign_by_inversions(w);
      });
      t.record(ok, to_string(w));
    }, o.allow_large);
    VerificationCase c = compare_case(n, int_map(fixed_per_k), int_map(expected));
    merge_tally(c, t);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationCase> check_eo_identities(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int s = 1; s <= n_max; ++s) {
    const Polynomial lhs = signed_distribution(s, Statistic::lis, o).signed_polynomial();
    Polynomial rhs;
    if (s % 2 == 1) {
      const int m = (s - 1) / 2;
      for (int k = 0; k <= m; ++k) {
        const auto b = ballot_number(m, k);
        rhs.add({2 * k + 1}, checked_mul(b, b));
      }
    } else {
      const int m = (s - 2) / 2;
      for (int k = 0; k <= m; ++k) {
        const auto b = ballot_number(m, k);
        rhs.add({2 * k + 1}, -checked_mul(b, b));
        rhs.add({2 * k + 2}, checked_mul(b, b));
      }
    }
    out.push_back(compare_case(s, lhs, rhs));
  }
  return out;
}

std::vector<VerificationCase> check_thm11(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  const Polynomial q_minus_1 = Polynomial::monomial({1}) - Polynomial::monomial({0});
  for (int s = 3; s <= n_max; ++s) {
    const int m = s % 2 == 1 ? (s - 1) / 2 : (s - 2) / 2;
    const Polynomial lhs = signed_polynomial(s, Statistic::lis, o);
    Polynomial rhs = unsigned_polynomial(m, Statistic::lis, 2, 1, o);
    if (s % 2 == 0) rhs = q_minus_1 * rhs;
    out.push_back(compare_case(s, lhs, rhs));
  }
  return out;
}

std::vector<VerificationCase> check_capital_psi(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(over_Tn(n, o, [](const Permutation& w) {
      const MapOutcome m = capital_psi(w);
      if (lis_of(m.image) != lis_of(w) || ldes(m.image) != ldes(w)) return false;
      if (capital_psi(m.image).image != w) return false;
      return m.fixed || sign_by_inversions(m.image) == -sign_by_inversions(w);
    }));
  }
  return out;
}

std::vector<VerificationCase> check_lemma42(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    // Counting halves of parts b) and c), keyed "k,d".
    std::map<std::pair<int, int>, std::int64_t> a_star_by;
    std::map<std::pair<int, int>, std::int64_t> partner_by;
    for (const auto& q : ballot_sequences(n)) {
      const int d = delta(q);
      const int k = ones_count(q);
      // Both parts concern odd d with n - k even.
      if (d % 2 == 0 || (n - k) % 2 == 1) continue;
      const BallotClass cls = classify(q);
      if (cls.tag == BallotTag::a_star) ++a_star_by[{k, d}];
      const bool partner = n % 2 == 1 ? cls.tag == BallotTag::b_star : in_b_star_star(cls);
      if (partner) ++partner_by[{k, d}];
    }
    auto to_map = [](const std::map<std::pair<int, int>, std::int64_t>& m) {
      ValueMap v;
      for (const auto& [key, count] : m) v.emplace_back(std::to_string(key.first) + "," + std::to_string(key.second), count);
      return v;
    };
    // Zero-count keys are dropped so the two maps compare as exact maps.
    for (auto* m : {&a_star_by, &partner_by}) std::erase_if(*m, [](const auto& e) { return e.second == 0; });
    VerificationCase c = compare_case(n, to_map(a_star_by), to_map(partner_by));

    const VerificationCase parity = over_Tn(n, o, [n](const Permutation& w) {
      const Ballots pq = ballots_of(w);
      if (!in_a_star(pq.p)) return true;
      const BallotClass cls = classify(pq.q);
      if (cls.tag == BallotTag::b) return true;
      const int d = ldes(w);
      const int k = ones_count(pq.p);
      const bool even = sign_by_inversions(w) == 1;
      const bool q_a_star = cls.tag == BallotTag::a_star;
      if (d % 2 == 0) return even;
      if (n % 2 == 1) return even == q_a_star;
      return even == (q_a_star && k % 2 == 0);
    });
    if (!parity.pass) {
      c.pass = false;
      c.counterexample = parity.counterexample;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::int64_t prop43_formula(int n, int d) {
  if (n % 2 == 1) return d % 2 == 0 ? ballot_number((n + d - 3) / 2, (n - 3) / 2) : 0;
  return ballot_number(floor_div2(n + d - 2), (n - 2) / 2);
}

std::vector<VerificationCase> check_prop43(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 2; n <= n_max; ++n) {
    std::map<int, std::int64_t> lhs;
    std::map<int, std::int64_t> rhs;
    for (int d = 0; d < n; ++d) rhs[d] = prop43_formula(n, d);
    Tally t;
    check_limit(Generator::ballot, n, o.allow_large);
    for_each_Tn_ballot(n, [&](const Permutation& w) {
      if (!capital_psi(w).fixed) return;
      const int d = ldes(w);
      ++lhs[d];
      const bool odd_expected = n % 2 == 0 && d % 2 == 1;
      t.record((sign_by_inversions(w) == -1) == odd_expected, to_string(w));
    }, o.allow_large);
    VerificationCase c = compare_case(n, int_map(lhs), int_map(rhs));
    if (n % 2 == 0) {
      for (int d = 0; d + 1 < n; d += 2) {
        if (lhs[d] != lhs[d + 1]) c.pass = false;
      }
    }
    merge_tally(c, t);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationCase> check_thm41(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  const Polynomial one_minus_q = Polynomial::monomial({0}) - Polynomial::monomial({1});
  for (int s = 2; s <= n_max; ++s) {
    const int m = s / 2;
    const Polynomial lhs = signed_polynomial(s, Statistic::ldes, o);
    Polynomial rhs = unsigned_polynomial(m, Statistic::ldes, 2, 0, o);
    if (s % 2 == 0) rhs = one_minus_q * rhs;
    out.push_back(compare_case(s, lhs, rhs));
  }
  return out;
}

std::vector<VerificationCase> check_cor44(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  const ParityFilter t_star{1, 0};      // lis odd, ldes even
  const ParityFilter t_star_even{0, 0};  // lis even, ldes even
  for (int s = 2; s <= n_max; ++s) {
    const int m = s / 2;
    const BivariatePolynomial lhs = reduce_Tn<BivariatePolynomial>(
        m, o, [](const Permutation& w, BivariatePolynomial& acc) {
          acc.add({2 * lis_of(w) + 1, 2 * ldes(w)}, 1);
        });
    BivariatePolynomial rhs = signed_polynomial(s, Statistic::lis, Statistic::ldes, o, t_star);
    if (s % 2 == 0) {
      rhs += BivariatePolynomial::monomial({1, 0}) *
             signed_polynomial(s, Statistic::lis, Statistic::ldes, o, t_star_even);
    }
    out.push_back(compare_case(s, lhs, rhs));
  }
  return out;
}

int inverse_descent_mask(const Permutation& w) {
  // D(w^-1) ∩ [n-2]: i such that i+1 appears left of i.
  const Permutation inv = w.inverse();
  int mask = 0;
  for (int i = 1; i <= w.size() - 2; ++i) {
    if (inv(i) > inv(i + 1)) mask |= 1 << (i - 1);
  }
  return mask;
}

std::vector<VerificationCase> check_thm51(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    std::map<std::pair<int, int>, std::int64_t> lind_by;
    std::map<std::pair<int, int>, std::int64_t> ldes_by;
    std::set<Permutation> images;
    std::int64_t size = 0;
    Tally t;
    check_limit(Generator::ballot, n, o.allow_large);
    for_each_Tn_ballot(n, [&](const Permutation& w) {
      ++size;
      const int mask = inverse_descent_mask(w);
      ++lind_by[{mask, lind(w)}];
      ++ldes_by[{mask, ldes(w) + 1}];
      const bool ok = safely([&] {
        const Permutation sigma = ldes_lind_bijection(w);
        images.insert(sigma);
        return is_321_avoiding(sigma) && lind(sigma) == ldes(w) + 1 &&
               inverse_descent_mask(sigma) == mask && ldes_lind_bijection_inverse(sigma) == w;
      });
      t.record(ok, to_string(w));
    }, o.allow_large);
    if (static_cast<std::int64_t>(images.size()) != size) t.record(false, "image is not all of T_n");
    auto to_map = [](const std::map<std::pair<int, int>, std::int64_t>& m) {
      ValueMap v;
      for (const auto& [key, count] : m) v.emplace_back(std::to_string(key.first) + "," + std::to_string(key.second), count);
      return v;
    };
    VerificationCase c = compare_case(n, to_map(lind_by), to_map(ldes_by));
    merge_tally(c, t);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationCase> check_lind_sign_balance(int n_max, const EnumerationOptions& o) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= n_max; ++n) {
    const Polynomial lhs = signed_polynomial(n, Statistic::lind, o);
    const Polynomial rhs = Polynomial::monomial({1}) * signed_polynomial(n, Statistic::ldes, o);
    out.push_back(compare_case(n, lhs, rhs));
  }
  return out;
}

using Checker = std::function<std::vector<VerificationCase>(int, const EnumerationOptions&)>;

const std::vector<std::pair<std::string, Checker>>& registry() {
  static const std::vector<std::pair<std::string, Checker>> table = {
      {"cardinality", check_cardinality},
      {"lis-distribution", check_lis_distribution},
      {"ldes-distribution", check_ldes_distribution},
      {"thm1.1", check_thm11},
      {"prop2.1", check_prop21},
      {"lemma2.2", check_lemma22},
      {"srs-matching-consistency", check_srs_matching},
      {"prop3.1", [](int n, const EnumerationOptions&) { return check_prop31(n); }},
      {"phi-involution", [](int n, const EnumerationOptions&) { return check_phi_involution(n); }},
      {"psi-bijection", [](int n, const EnumerationOptions&) { return check_psi_bijection(n); }},
      {"Phi-map", check_capital_phi},
      {"eo-identities", check_eo_identities},
      {"Psi-map", check_capital_psi},
      {"thm4.1", check_thm41},
      {"lemma4.2-parity", check_lemma42},
      {"prop4.3", check_prop43},
      {"cor4.4", check_cor44},
      {"thm5.1", check_thm51},
      {"lind-sign-balance", check_lind_sign_balance},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& identity_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& [label, fn] : registry()) out.push_back(label);
    return out;
  }();
  return labels;
}

VerificationReport verify(std::string_view label, int n_max, const EnumerationOptions& options) {
  for (const auto& [name, check] : registry()) {
    if (name != label) continue;
    check_limit(Generator::ballot, n_max, options.allow_large);
    return {name, check(n_max, options)};
  }
  throw UnknownIdentity("unknown identity '" + std::string(label) + "'");
}

}  // namespace avoid321
