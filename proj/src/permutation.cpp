#include "avoid321/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "avoid321/errors.hpp"

namespace avoid321 {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw ParseError("permutation letter " + std::to_string(v) + " outside 1.." +
                       std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError("permutation letter " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("not an integer: '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  // Report gaps by name before the generic range check fires.
  const int n = static_cast<int>(values.size());
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i + 1 < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] == sorted[static_cast<std::size_t>(i + 1)]) {
      throw ParseError("duplicate letter " + std::to_string(sorted[static_cast<std::size_t>(i)]));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i + 1) {
      throw ParseError("letters must be exactly 1.." + std::to_string(n) + "; missing " +
                       std::to_string(i + 1));
    }
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& w) {
  std::ostringstream out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out << ' ';
    out << w(i);
  }
  return out.str();
}

bool is_321_avoiding(const Permutation& w) {
  // For each middle j: some larger letter before it and some smaller after it.
  const int n = w.size();
  int prefix_max = 0;
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
  for (int i = n; i >= 1; --i) {
    suffix_min[static_cast<std::size_t>(i)] = std::min(suffix_min[static_cast<std::size_t>(i + 1)], w(i));
  }
  for (int j = 1; j <= n; ++j) {
    if (prefix_max > w(j) && suffix_min[static_cast<std::size_t>(j + 1)] < w(j)) return false;
    prefix_max = std::max(prefix_max, w(j));
  }
  return true;
}

bool is_bi_increasing(const Permutation& w) {
  int last_exc = 0;
  int last_rest = 0;
  for (int i = 1; i <= w.size(); ++i) {
    int& last = w(i) > i ? last_exc : last_rest;
    if (w(i) < last) return false;
    last = w(i);
  }
  return true;
}

int inversion_count(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) ++count;
    }
  }
  return count;
}

int sign_by_inversions(const Permutation& w) { return inversion_count(w) % 2 == 0 ? 1 : -1; }

std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) out.push_back(i);
  }
  return out;
}

int ldes(const Permutation& w) {
  for (int i = w.size() - 1; i >= 1; --i) {
    if (w(i) > w(i + 1)) return i;
  }
  return 0;
}

int lind(const Permutation& w) {
  if (w.empty()) throw DomainError("lind is undefined for the empty permutation");
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) == w.size()) return i;
  }
  throw InternalInconsistency("letter n missing from a validated permutation");
}

std::vector<int> excedances(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) > i) out.push_back(i);
  }
  return out;
}

std::vector<int> anti_excedances(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) < i) out.push_back(i);
  }
  return out;
}

std::vector<int> fixed_points(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) == i) out.push_back(i);
  }
  return out;
}

int lis_oracle(const Permutation& w) {
  std::vector<int> tails;
  for (int v : w.values()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace avoid321
