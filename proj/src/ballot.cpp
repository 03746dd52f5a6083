#include "avoid321/ballot.hpp"

#include <functional>

#include "avoid321/errors.hpp"

namespace avoid321 {

BallotSequence::BallotSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  int height = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != 1 && entries_[i] != -1) {
      throw NotBallot("ballot entry at position " + std::to_string(i + 1) + " is not +1/-1");
    }
    height += entries_[i];
    if (height < 0) {
      throw NotBallot("prefix sum negative at position " + std::to_string(i + 1));
    }
  }
}

BallotSequence BallotSequence::all_plus(int n) {
  return BallotSequence(std::vector<int>(static_cast<std::size_t>(n), 1));
}

BallotSequence parse_ballot(std::string_view text) {
  std::vector<int> entries;
  entries.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      entries.push_back(1);
    } else if (c == '-') {
      entries.push_back(-1);
    } else {
      throw ParseError(std::string("ballot text may only contain '+' and '-', got '") + c + "'");
    }
  }
  return BallotSequence(std::move(entries));
}

std::string to_string(const BallotSequence& b) {
  std::string out;
  out.reserve(static_cast<std::size_t>(b.size()));
  for (int e : b.entries()) out.push_back(e > 0 ? '+' : '-');
  return out;
}

int ones_count(const BallotSequence& b) {
  int k = 0;
  for (int e : b.entries()) k += e > 0;
  return k;
}

int ballot_sign(const BallotSequence& b) {
  int sum = 0;
  for (int i = 1; i <= b.size(); ++i) {
    if (b(i) < 0) sum += i;
  }
  return sum % 2 == 0 ? 1 : -1;
}

int epsilon(const BallotSequence& b) {
  for (int i = 2; i + 1 <= b.size(); i += 2) {
    if (b(i) != b(i + 1)) return i;
  }
  return 0;
}

int delta(const BallotSequence& b) {
  for (int i = b.size() - 1; i >= 1; --i) {
    if (b(i) == 1 && b(i + 1) == -1) return i;
  }
  return 0;
}

std::string BallotClass::label() const {
  switch (tag) {
    case BallotTag::a_star: return "A*";
    case BallotTag::b: return "B";
    case BallotTag::b_star: return ends_plus ? "B*+" : "B*";
    case BallotTag::b_times: return "Bx";
  }
  return "?";
}

BallotClass classify(const BallotSequence& b) {
  const bool ends_plus = b.size() > 0 && b(b.size()) == 1;
  const int e = epsilon(b);
  if (e == 0) return {BallotTag::a_star, ends_plus};
  const int d = delta(b);
  if (e < d - 1) return {BallotTag::b, ends_plus};
  if (e == d - 1) return {BallotTag::b_star, ends_plus};
  return {BallotTag::b_times, ends_plus};
}

namespace {

BallotSequence swapped(const BallotSequence& b, int i, int j) {
  std::vector<int> e = b.entries();
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(j - 1)]);
  return BallotSequence(std::move(e));
}

}  // namespace

BallotSequence phi(const BallotSequence& b) {
  const int j = epsilon(b);
  if (j == 0) throw NotInDomain("phi requires epsilon(b) > 0, got b = " + to_string(b));
  return swapped(b, j, j + 1);
}

BallotSequence psi(const BallotSequence& b, int d) {
  const std::string where = " (b = " + to_string(b) + ", d = " + std::to_string(d) + ")";
  if (d < 3 || d % 2 == 0) throw NotInDomain("psi requires odd d >= 3" + where);
  if (!in_a_star(b)) throw NotInDomain("psi requires b in A*" + where);
  if ((b.size() - ones_count(b)) % 2 != 0) throw NotInDomain("psi requires an even number of -1 entries" + where);
  if (delta(b) != d) throw NotInDomain("psi requires delta(b) = d" + where);
  int last_minus = 0;
  for (int i = b.size(); i >= 1; --i) {
    if (b(i) == -1) {
      last_minus = i;
      break;
    }
  }
  if (last_minus <= d + 1) throw NotInDomain("psi requires a -1 beyond position d+1" + where);
  if (b(d - 1) != 1) throw NotInDomain("psi requires b_{d-1} = +1" + where);
  return swapped(b, d - 1, last_minus);
}

BallotSequence psi_inverse(const BallotSequence& b, int d) {
  const std::string where = " (b = " + to_string(b) + ", d = " + std::to_string(d) + ")";
  if (d < 3 || d % 2 == 0) throw NotInDomain("psi_inverse requires odd d >= 3" + where);
  if (classify(b).tag != BallotTag::b_star) throw NotInDomain("psi_inverse requires b in B*" + where);
  if ((b.size() - ones_count(b)) % 2 != 0) {
    throw NotInDomain("psi_inverse requires an even number of -1 entries" + where);
  }
  if (delta(b) != d) throw NotInDomain("psi_inverse requires delta(b) = d" + where);
  if (b(d - 1) != -1) throw NotInDomain("psi_inverse requires b_{d-1} = -1" + where);
  int first_plus = 0;
  for (int i = d + 1; i <= b.size(); ++i) {
    if (b(i) == 1) {
      first_plus = i;
      break;
    }
  }
  if (first_plus == 0) throw NotInDomain("psi_inverse requires a +1 to the right of position d" + where);
  return swapped(b, d - 1, first_plus);
}

namespace {

void extend(std::vector<int>& prefix, int n, int k, int height, int plus_used,
            std::vector<BallotSequence>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == n) {
    out.emplace_back(prefix);
    return;
  }
  if (k < 0 || plus_used < k) {
    prefix.push_back(1);
    extend(prefix, n, k, height + 1, plus_used + 1, out);
    prefix.pop_back();
  }
  const int minus_used = pos - plus_used;
  if (height > 0 && (k < 0 || minus_used < n - k)) {
    prefix.push_back(-1);
    extend(prefix, n, k, height - 1, plus_used, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BallotSequence> ballot_sequences(int n) {
  std::vector<BallotSequence> out;
  std::vector<int> prefix;
  extend(prefix, n, -1, 0, 0, out);
  return out;
}

std::vector<BallotSequence> ballot_sequences(int n, int k) {
  std::vector<BallotSequence> out;
  if (k < 0 || k > n) return out;
  std::vector<int> prefix;
  extend(prefix, n, k, 0, 0, out);
  return out;
}

}  // namespace avoid321
