#include "avoid321/report.hpp"

#include <map>
#include <sstream>

namespace avoid321 {

namespace {

nlohmann::ordered_json map_json(const ValueMap& m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : m) j[key] = value;
  return j;
}

std::string render(const ValueMap& m) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out << ", ";
    out << m[i].first << ": " << m[i].second;
  }
  out << '}';
  return out.str();
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& report) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["n"] = c.n;
    j["pass"] = c.pass;
    j["lhs"] = map_json(c.lhs);
    j["rhs"] = map_json(c.rhs);
    j["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nullptr;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "identity,n,key,lhs,rhs,pass\n";
  for (const auto& c : report.cases) {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> merged;
    std::vector<std::string> order;
    auto touch = [&](const std::string& key) {
      if (merged.try_emplace(key, 0, 0).second) order.push_back(key);
    };
    for (const auto& [key, value] : c.lhs) {
      touch(key);
      merged[key].first = value;
    }
    for (const auto& [key, value] : c.rhs) {
      touch(key);
      merged[key].second = value;
    }
    for (const auto& key : order) {
      out << report.identity << ',' << c.n << ",\"" << key << "\"," << merged[key].first << ','
          << merged[key].second << ',' << (c.pass ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << report.identity << "  n=" << c.n << "  " << (c.pass ? "PASS" : "FAIL") << '\n';
    out << "  lhs " << render(c.lhs) << '\n';
    out << "  rhs " << render(c.rhs) << '\n';
    if (c.counterexample) out << "  counterexample: " << *c.counterexample << '\n';
  }
  out << report.identity << ": " << (report.pass() ? "all cases pass" : "VIOLATED") << '\n';
  return out.str();
}

nlohmann::ordered_json to_json(const SignedDistribution& dist, int n, Statistic s) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["statistic"] = to_string(s);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [value, counts] : dist.rows) {
    rows.push_back({{"value", value}, {"even", counts.even}, {"odd", counts.odd}, {"difference", counts.difference()}});
  }
  j["rows"] = std::move(rows);
  j["total"] = dist.total();
  return j;
}

std::string to_csv(const SignedDistribution& dist, int n, Statistic s) {
  std::ostringstream out;
  out << "n,statistic,value,even,odd,difference\n";
  for (const auto& [value, counts] : dist.rows) {
    out << n << ',' << to_string(s) << ',' << value << ',' << counts.even << ',' << counts.odd << ','
        << counts.difference() << '\n';
  }
  return out.str();
}

std::string to_text(const SignedDistribution& dist, int n, Statistic s) {
  std::ostringstream out;
  out << "n = " << n << ", by " << to_string(s) << '\n';
  out << "value     even      odd     e-o\n";
  for (const auto& [value, counts] : dist.rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%5d %8lld %8lld %7lld\n", value, static_cast<long long>(counts.even),
                  static_cast<long long>(counts.odd), static_cast<long long>(counts.difference()));
    out << line;
  }
  out << "total " << dist.total() << '\n';
  out << "signed polynomial: " << to_string(dist.signed_polynomial()) << '\n';
  return out.str();
}

}  // namespace avoid321
