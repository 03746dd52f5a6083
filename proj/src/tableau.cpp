#include "avoid321/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "avoid321/errors.hpp"

namespace avoid321 {

bool is_standard(const TwoRowTableau& t) {
  if (t.row2.size() > t.row1.size()) return false;
  auto increasing = [](const std::vector<int>& r) {
    return std::adjacent_find(r.begin(), r.end(), std::greater_equal<>{}) == r.end();
  };
  if (!increasing(t.row1) || !increasing(t.row2)) return false;
  for (std::size_t c = 0; c < t.row2.size(); ++c) {
    if (t.row1[c] >= t.row2[c]) return false;
  }
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto* row : {&t.row1, &t.row2}) {
    for (int v : *row) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return true;
}

TableauPair rsk(const Permutation& w) {
  TableauPair out;
  auto& p = out.insertion;
  auto& q = out.recording;
  for (int i = 1; i <= w.size(); ++i) {
    const int x = w(i);
    auto it = std::upper_bound(p.row1.begin(), p.row1.end(), x);
    if (it == p.row1.end()) {
      p.row1.push_back(x);
      q.row1.push_back(i);
      continue;
    }
    const int bumped = *it;
    *it = x;
    if (!p.row2.empty() && p.row2.back() > bumped) {
      throw ThirdRowRequired("permutation " + to_string(w) + " contains 321; insertion needs a third row");
    }
    p.row2.push_back(bumped);
    q.row2.push_back(i);
  }
  return out;
}

Permutation inverse_rsk(const TableauPair& pair) {
  const auto& p0 = pair.insertion;
  const auto& q = pair.recording;
  if (p0.row1.size() != q.row1.size() || p0.row2.size() != q.row2.size()) {
    throw MalformedPair("insertion and recording tableaux differ in shape");
  }
  if (!is_standard(p0) || !is_standard(q)) throw MalformedPair("tableau is not standard");

  TwoRowTableau p = p0;
  const int n = q.size();
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::size_t q2 = q.row2.size();
  for (int i = n; i >= 1; --i) {
    int letter;
    if (q2 > 0 && q.row2[q2 - 1] == i) {
      --q2;
      const int y = p.row2.back();
      p.row2.pop_back();
      // Evict the largest first-row entry smaller than y.
      auto it = std::lower_bound(p.row1.begin(), p.row1.end(), y);
      --it;
      letter = *it;
      *it = y;
    } else {
      letter = p.row1.back();
      p.row1.pop_back();
    }
    letters[static_cast<std::size_t>(i - 1)] = letter;
  }
  return Permutation(std::move(letters));
}

BallotSequence tableau_to_ballot(const TwoRowTableau& t) {
  std::vector<int> b(static_cast<std::size_t>(t.size()), -1);
  for (int v : t.row1) b[static_cast<std::size_t>(v - 1)] = 1;
  return BallotSequence(std::move(b));
}

TwoRowTableau ballot_to_tableau(const BallotSequence& b) {
  TwoRowTableau t;
  for (int i = 1; i <= b.size(); ++i) (b(i) > 0 ? t.row1 : t.row2).push_back(i);
  return t;
}

int ldes_from_recording(const TwoRowTableau& q) {
  std::vector<bool> in_row2(static_cast<std::size_t>(q.size()) + 2, false);
  for (int v : q.row2) in_row2[static_cast<std::size_t>(v)] = true;
  int best = 0;
  for (int v : q.row1) {
    if (in_row2[static_cast<std::size_t>(v + 1)]) best = std::max(best, v);
  }
  return best;
}

namespace {

std::string join(const std::vector<int>& row) {
  std::ostringstream out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out << ' ';
    out << row[i];
  }
  return out.str();
}

std::vector<int> parse_row(std::string_view line) {
  std::vector<int> row;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    int v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
    if (ec != std::errc{} || ptr != line.data() + end) {
      throw ParseError("not an integer in tableau row: '" + std::string(line.substr(pos, end - pos)) + "'");
    }
    row.push_back(v);
    pos = end;
  }
  return row;
}

}  // namespace

std::string format_tableau(const TwoRowTableau& t) { return join(t.row1) + "\n" + join(t.row2) + "\n"; }

std::string format_tableau_inline(const TwoRowTableau& t) {
  return t.row2.empty() ? join(t.row1) : join(t.row1) + " / " + join(t.row2);
}

TwoRowTableau parse_tableau(std::string_view text) {
  std::size_t split = text.find('/');
  std::size_t skip = 1;
  if (split == std::string_view::npos) split = text.find('\n');
  if (split == std::string_view::npos) {
    split = text.size();
    skip = 0;
  }
  TwoRowTableau t;
  t.row1 = parse_row(text.substr(0, split));
  std::string_view rest = text.substr(std::min(text.size(), split + skip));
  if (rest.find('\n') != std::string_view::npos) {
    const auto tail = rest.substr(rest.find('\n'));
    if (tail.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      throw ParseError("tableau text has more than two rows");
    }
    rest = rest.substr(0, rest.find('\n'));
  }
  t.row2 = parse_row(rest);
  if (!is_standard(t)) throw ParseError("tableau is not a standard two-row tableau");
  return t;
}

}  // namespace avoid321
