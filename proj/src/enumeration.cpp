#include "avoid321/enumeration.hpp"

#include <string>

#include "avoid321/errors.hpp"

namespace avoid321 {

namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

wide binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  wide r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw std::overflow_error("binomial exceeds 64-bit range");
  }
  return r;
}

}  // namespace

std::int64_t ballot_number(int n, int k) {
  if (n < 0 || k < 0 || k > n || 2 * k - n + 1 <= 0) return 0;
  return narrow(binomial(n + 1, k + 1) * (2 * k - n + 1) / (n + 1));
}

std::int64_t catalan(int n) {
  if (n < 0) return 0;
  return narrow(binomial(2 * n, n) / (n + 1));
}

void check_limit(Generator g, int n, bool allow_large) {
  const bool filter = g == Generator::filter;
  const int soft = filter ? EnumerationLimits::filter_soft : EnumerationLimits::ballot_soft;
  const int hard = filter ? EnumerationLimits::filter_hard : EnumerationLimits::ballot_hard;
  const std::string name = filter ? "filter" : "ballot";
  if (n < 0) throw LimitExceeded("negative size " + std::to_string(n));
  if (n > hard) {
    throw LimitExceeded(name + " generator is capped at n = " + std::to_string(hard) + ", got " +
                        std::to_string(n));
  }
  if (n > soft && !allow_large) {
    throw LimitExceeded(name + " generator default cap is n = " + std::to_string(soft) + ", got " +
                        std::to_string(n) + " (allow-large lifts it to " + std::to_string(hard) + ")");
  }
}

std::vector<Permutation> generate_Tn_filter(int n, bool allow_large) {
  std::vector<Permutation> out;
  for_each_Tn_filter(n, [&](const Permutation& w) { out.push_back(w); }, allow_large);
  return out;
}

std::vector<Permutation> generate_Tn_ballot(int n, bool allow_large) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(catalan(n)));
  for_each_Tn_ballot(n, [&](const Permutation& w) { out.push_back(w); }, allow_large);
  return out;
}

Statistic parse_statistic(std::string_view name) {
  if (name == "lis") return Statistic::lis;
  if (name == "ldes") return Statistic::ldes;
  if (name == "lind") return Statistic::lind;
  if (name == "sign") return Statistic::sign;
  throw ParseError("unknown statistic '" + std::string(name) + "' (expected lis, ldes, lind or sign)");
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::lis: return "lis";
    case Statistic::ldes: return "ldes";
    case Statistic::lind: return "lind";
    case Statistic::sign: return "sign";
  }
  return "?";
}

int statistic_value(Statistic s, const Permutation& w) {
  switch (s) {
    case Statistic::lis: return static_cast<int>(rsk(w).insertion.row1.size());
    case Statistic::ldes: return ldes(w);
    case Statistic::lind: return lind(w);
    case Statistic::sign: return sign_by_inversions(w);
  }
  return 0;
}

std::int64_t SignedDistribution::total() const {
  std::int64_t t = 0;
  for (const auto& [value, counts] : rows) t = checked_add(t, checked_add(counts.even, counts.odd));
  return t;
}

Polynomial SignedDistribution::signed_polynomial() const {
  Polynomial p;
  for (const auto& [value, counts] : rows) p.add({value}, counts.difference());
  return p;
}

SignedDistribution& SignedDistribution::operator+=(const SignedDistribution& other) {
  for (const auto& [value, counts] : other.rows) {
    auto& mine = rows[value];
    mine.even = checked_add(mine.even, counts.even);
    mine.odd = checked_add(mine.odd, counts.odd);
  }
  return *this;
}

SignedDistribution signed_distribution(int n, Statistic s, const EnumerationOptions& options) {
  return reduce_Tn<SignedDistribution>(n, options, [s](const Permutation& w, SignedDistribution& acc) {
    auto& counts = acc.rows[statistic_value(s, w)];
    if (sign_by_inversions(w) > 0) {
      ++counts.even;
    } else {
      ++counts.odd;
    }
  });
}

bool ParityFilter::accepts(int lis_value, int ldes_value) const {
  if (lis_parity && lis_value % 2 != *lis_parity) return false;
  if (ldes_parity && ldes_value % 2 != *ldes_parity) return false;
  return true;
}

namespace {

bool filtered_out(const ParityFilter& filter, const Permutation& w) {
  if (!filter.lis_parity && !filter.ldes_parity) return false;
  return !filter.accepts(statistic_value(Statistic::lis, w), ldes(w));
}

}  // namespace

Polynomial signed_polynomial(int n, Statistic s, const EnumerationOptions& options,
                             const ParityFilter& filter) {
  return reduce_Tn<Polynomial>(n, options, [&](const Permutation& w, Polynomial& acc) {
    if (filtered_out(filter, w)) return;
    acc.add({statistic_value(s, w)}, sign_by_inversions(w));
  });
}

BivariatePolynomial signed_polynomial(int n, Statistic first, Statistic second,
                                      const EnumerationOptions& options, const ParityFilter& filter) {
  return reduce_Tn<BivariatePolynomial>(n, options, [&](const Permutation& w, BivariatePolynomial& acc) {
    if (filtered_out(filter, w)) return;
    acc.add({statistic_value(first, w), statistic_value(second, w)}, sign_by_inversions(w));
  });
}

Polynomial unsigned_polynomial(int n, Statistic s, int scale, int shift, const EnumerationOptions& options) {
  return reduce_Tn<Polynomial>(n, options, [&](const Permutation& w, Polynomial& acc) {
    acc.add({scale * statistic_value(s, w) + shift}, 1);
  });
}

}  // namespace avoid321
