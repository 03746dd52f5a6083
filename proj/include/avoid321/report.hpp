#pragma once

#include <string>

#include <json.hpp>

#include "avoid321/enumeration.hpp"
#include "avoid321/verify.hpp"

namespace avoid321 {

/// Array of per-n objects
///   { "identity", "n", "pass", "lhs", "rhs", "counterexample" }
/// with lhs/rhs as exponent-key -> coefficient maps in exponent order.
nlohmann::ordered_json to_json(const VerificationReport& report);

/// Header "identity,n,key,lhs,rhs,pass" and one row per (n, key).
std::string to_csv(const VerificationReport& report);

std::string to_text(const VerificationReport& report);

nlohmann::ordered_json to_json(const SignedDistribution& dist, int n, Statistic s);
/// Header "n,statistic,value,even,odd,difference".
std::string to_csv(const SignedDistribution& dist, int n, Statistic s);
std::string to_text(const SignedDistribution& dist, int n, Statistic s);

}  // namespace avoid321
