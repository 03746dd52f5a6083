#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "avoid321/ballot.hpp"
#include "avoid321/permutation.hpp"

namespace avoid321 {

/// Standard Young tableau with at most two rows. An empty second row is an
/// empty vector.
struct TwoRowTableau {
  std::vector<int> row1;
  std::vector<int> row2;

  int size() const { return static_cast<int>(row1.size() + row2.size()); }

  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
};

/// Insertion tableau P and recording tableau Q of the same shape.
struct TableauPair {
  TwoRowTableau insertion;
  TwoRowTableau recording;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// True iff rows increase, columns strictly increase, |row1| >= |row2| and
/// the entries are exactly 1..n.
bool is_standard(const TwoRowTableau& t);

/// Two-row Robinson-Schensted row insertion. Throws ThirdRowRequired when a
/// bump would leave the second row, which happens iff w contains 321.
TableauPair rsk(const Permutation& w);

/// Reverse bumping. Throws MalformedPair if the shapes differ or either
/// tableau is not standard.
Permutation inverse_rsk(const TableauPair& pair);

BallotSequence tableau_to_ballot(const TwoRowTableau& t);
TwoRowTableau ballot_to_tableau(const BallotSequence& b);

/// Largest i in the first row with i+1 in the second row, or 0.
int ldes_from_recording(const TwoRowTableau& q);

/// Two lines, entries space-separated; the second line may be empty.
std::string format_tableau(const TwoRowTableau& t);
/// Single line "1 3 / 2".
std::string format_tableau_inline(const TwoRowTableau& t);
/// Accepts the two-line format or the inline "row1 / row2" format.
TwoRowTableau parse_tableau(std::string_view text);

}  // namespace avoid321
