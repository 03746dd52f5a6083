#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "avoid321/enumeration.hpp"

namespace avoid321 {

/// Ordered (exponent-key, coefficient) entries of an exact map.
using ValueMap = std::vector<std::pair<std::string, std::int64_t>>;

/// Outcome of one identity at one size n.
struct VerificationCase {
  int n = 0;
  bool pass = false;
  ValueMap lhs;
  ValueMap rhs;
  /// First offending permutation (or ballot sequence for ballot-level checks).
  std::optional<std::string> counterexample;
};

struct VerificationReport {
  std::string identity;
  std::vector<VerificationCase> cases;

  bool pass() const;
};

/// Every label accepted by verify(), in a fixed order.
const std::vector<std::string>& identity_labels();

/// Checks one identity exhaustively for every applicable size up to n_max.
/// Throws UnknownIdentity for an unrecognised label and LimitExceeded when
/// n_max is beyond the generator caps.
VerificationReport verify(std::string_view label, int n_max, const EnumerationOptions& options = {});

template <std::size_t Arity>
ValueMap to_value_map(const SignedPolynomial<Arity>& p) {
  ValueMap out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(SignedPolynomial<Arity>::key(e), c);
  return out;
}

}  // namespace avoid321
