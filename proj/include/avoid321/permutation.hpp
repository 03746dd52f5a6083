#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoid321 {

/// A permutation of {1..n} in one-line notation. Positions and letters are
/// 1-based at every public boundary.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ParseError unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Letter at 1-based position i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const { return values_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Parses whitespace- or comma-separated one-line notation.
Permutation parse_permutation(std::string_view text);

/// Space-separated one-line notation; the empty permutation prints as "".
std::string to_string(const Permutation& w);

bool is_321_avoiding(const Permutation& w);
bool is_bi_increasing(const Permutation& w);

int inversion_count(const Permutation& w);
int sign_by_inversions(const Permutation& w);

/// Strictly increasing descent positions in 1..n-1.
std::vector<int> descent_set(const Permutation& w);
/// Maximum descent; 0 when there is none.
int ldes(const Permutation& w);
/// Position of the letter n. Throws DomainError for n = 0.
int lind(const Permutation& w);

std::vector<int> excedances(const Permutation& w);
std::vector<int> anti_excedances(const Permutation& w);
std::vector<int> fixed_points(const Permutation& w);

/// Longest strictly increasing subsequence by patience sorting. Kept
/// independent of the RSK engine so the two can check each other.
int lis_oracle(const Permutation& w);

}  // namespace avoid321
