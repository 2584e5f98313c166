#include "computads/multiset.hpp"

#include <algorithm>

namespace computads {

namespace {

struct Margin {
  std::vector<Label> labels;
  std::vector<long long> remaining;
};

Margin to_margin(const LabelMultiset& m) {
  Margin out;
  for (const auto& [x, k] : m.counts()) {
    out.labels.push_back(x);
    out.remaining.push_back(k);
  }
  return out;
}

/* Fill matrix cells row-major; a row must be exhausted exactly when its
   last column is decided, and every column must come out empty at the end. */
void reduce(std::size_t i, std::size_t j, Margin& rows, Margin& cols,
            Pairing::Counts& cell, std::vector<Pairing>& out) {
  if (i == rows.labels.size()) {
    for (long long c : cols.remaining)
      if (c != 0) return;
    out.emplace_back(cell);
    return;
  }
  if (j == cols.labels.size()) {
    if (rows.remaining[i] == 0) reduce(i + 1, 0, rows, cols, cell, out);
    return;
  }
  long long cap = std::min(rows.remaining[i], cols.remaining[j]);
  LabelPair key{rows.labels[i], cols.labels[j]};
  for (long long c = 0; c <= cap; ++c) {
    rows.remaining[i] -= c;
    cols.remaining[j] -= c;
    if (c > 0) cell[key] = c;
    reduce(i, j + 1, rows, cols, cell, out);
    rows.remaining[i] += c;
    cols.remaining[j] += c;
  }
  cell.erase(key);
}

}  // namespace

bool pairing_list_less(const Pairing& a, const Pairing& b) {
  return a.expand() < b.expand();
}

std::vector<Pairing> enumerate_pairings(const LabelMultiset& left,
                                        const LabelMultiset& right) {
  if (left.size() != right.size()) return {};
  Margin rows = to_margin(left);
  Margin cols = to_margin(right);
  Pairing::Counts cell;
  std::vector<Pairing> out;
  reduce(0, 0, rows, cols, cell, out);
  std::sort(out.begin(), out.end(), pairing_list_less);
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

LabelMultiset parse_multiset(std::string_view text) {
  LabelMultiset::Counts counts;
  std::string_view rest = text;
  while (true) {
    std::size_t star = rest.find('*');
    std::string_view factor = trim(rest.substr(0, star));
    if (factor.empty())
      throw Error("empty factor in multiset expression '" + std::string(text) + "'");
    for (char c : factor)
      if (is_space(c))
        throw Error("label '" + std::string(factor) + "' contains whitespace");
    if (factor != "1") ++counts[std::string(factor)];
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return LabelMultiset(std::move(counts));
}

std::string print_multiset(const LabelMultiset& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const Label& x : m.expand()) {
    if (!out.empty()) out += " * ";
    out += x;
  }
  return out;
}

}  // namespace computads
