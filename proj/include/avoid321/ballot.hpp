#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace avoid321 {

/// A sequence over {+1, -1} whose every prefix sum is nonnegative.
/// Entries are addressed 1-based.
class BallotSequence {
 public:
  BallotSequence() = default;

  /// Throws NotBallot if an entry is not +-1 or a prefix sum goes negative.
  explicit BallotSequence(std::vector<int> entries);

  static BallotSequence all_plus(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const BallotSequence&, const BallotSequence&) = default;
  friend auto operator<=>(const BallotSequence&, const BallotSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// Parses a string over {'+', '-'}.
BallotSequence parse_ballot(std::string_view text);
std::string to_string(const BallotSequence& b);

int ones_count(const BallotSequence& b);

/// +1 if the positions holding -1 sum to an even number.
int ballot_sign(const BallotSequence& b);

/// Smallest even i with b_i != b_{i+1}, or 0.
int epsilon(const BallotSequence& b);

/// Greatest i with b_i = +1 and b_{i+1} = -1, or 0.
int delta(const BallotSequence& b);

enum class BallotTag { a_star, b, b_star, b_times };

struct BallotClass {
  BallotTag tag;
  bool ends_plus;

  /// Report label: "A*", "B", "B*", "B*+" or "Bx".
  std::string label() const;

  friend bool operator==(const BallotClass&, const BallotClass&) = default;
};

BallotClass classify(const BallotSequence& b);

inline bool in_a_star(const BallotSequence& b) { return epsilon(b) == 0; }
inline bool in_b_star_star(const BallotClass& c) {
  return c.tag == BallotTag::b_star && c.ends_plus;
}

/// Swaps the entries at epsilon(b) and epsilon(b)+1. Throws NotInDomain
/// when epsilon(b) = 0.
BallotSequence phi(const BallotSequence& b);

/// Sends b in A* with delta(b) = d (odd, >= 3) into B* by exchanging b_{d-1}
/// with the last -1 of b. Requires n - ones_count(b) even and a -1 beyond
/// position d+1; throws NotInDomain if any precondition fails.
BallotSequence psi(const BallotSequence& b, int d);

/// Inverse of psi: for b in B* with delta(b) = d, exchanges b_{d-1} with the
/// first +1 to the right of position d.
BallotSequence psi_inverse(const BallotSequence& b, int d);

/// All ballot sequences of length n, ordered by the string order of their
/// '+'/'-' text ('+' before '-').
std::vector<BallotSequence> ballot_sequences(int n);
/// Those among ballot_sequences(n) with exactly k entries +1.
std::vector<BallotSequence> ballot_sequences(int n, int k);

}  // namespace avoid321
