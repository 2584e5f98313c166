#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "computads/errors.hpp"

namespace computads {

using Label = std::string;

/* Finite multiset over an ordered label type; the value of the free
   commutative monoid on L. Immutable after construction, counts > 0. */
template <typename L>
class Multiset {
 public:
  using Counts = std::map<L, long long>;

  Multiset() = default;

  explicit Multiset(Counts counts) : counts_(std::move(counts)) {
    for (auto it = counts_.begin(); it != counts_.end();) {
      if (it->second < 0) throw Error("multiset with negative multiplicity");
      if (it->second == 0)
        it = counts_.erase(it);
      else
        ++it;
    }
  }

  Multiset(std::initializer_list<L> elements) {
    for (const L& x : elements) ++counts_[x];
  }

  long long count(const L& x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }

  bool contains(const L& x) const { return counts_.count(x) > 0; }

  /* total number of elements, multiplicities included */
  long long size() const {
    long long n = 0;
    for (const auto& [x, k] : counts_) n += k;
    return n;
  }

  bool empty() const { return counts_.empty(); }

  const Counts& counts() const { return counts_; }

  std::vector<L> support() const {
    std::vector<L> out;
    out.reserve(counts_.size());
    for (const auto& [x, k] : counts_) out.push_back(x);
    return out;
  }

  /* sorted element list with repetition, e.g. {a:2, b:1} -> [a, a, b] */
  std::vector<L> expand() const {
    std::vector<L> out;
    for (const auto& [x, k] : counts_)
      for (long long i = 0; i < k; ++i) out.push_back(x);
    return out;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  Counts counts_;
};

template <typename L>
Multiset<L> make_multiset(const std::vector<L>& elements) {
  typename Multiset<L>::Counts counts;
  for (const L& x : elements) ++counts[x];
  return Multiset<L>(std::move(counts));
}

/* monoid operation of the free commutative monoid: disjoint-union of counts */
template <typename L>
Multiset<L> monoid_sum(const Multiset<L>& a, const Multiset<L>& b) {
  typename Multiset<L>::Counts counts = a.counts();
  for (const auto& [x, k] : b.counts()) counts[x] += k;
  return Multiset<L>(std::move(counts));
}

/* image under a label map; total on the support, else UnmappedLabel */
template <typename L, typename L2>
Multiset<L2> push_forward(const std::map<L, L2>& f, const Multiset<L>& m) {
  typename Multiset<L2>::Counts counts;
  for (const auto& [x, k] : m.counts()) {
    auto it = f.find(x);
    if (it == f.end()) throw UnmappedLabel(x);
    counts[it->second] += k;
  }
  return Multiset<L2>(std::move(counts));
}

template <typename L, typename R>
Multiset<L> project_left(const Multiset<std::pair<L, R>>& p) {
  typename Multiset<L>::Counts counts;
  for (const auto& [pr, k] : p.counts()) counts[pr.first] += k;
  return Multiset<L>(std::move(counts));
}

template <typename L, typename R>
Multiset<R> project_right(const Multiset<std::pair<L, R>>& p) {
  typename Multiset<R>::Counts counts;
  for (const auto& [pr, k] : p.counts()) counts[pr.second] += k;
  return Multiset<R>(std::move(counts));
}

using LabelMultiset = Multiset<Label>;
using LabelPair = std::pair<Label, Label>;

/* A pairing of S with T: a multiset over pairs whose left projection is S
   and whose right projection is T. Equivalently a non-negative integer
   matrix with row margins S and column margins T. */
using Pairing = Multiset<LabelPair>;

/* All pairings of `left` with `right`, computed by recursive margin
   reduction over the cells of the margin matrix in row-major order.

   Canonical output order: each pairing is keyed by its expanded sorted
   pair list and the list of pairings is sorted lexicographically by that
   key. Note this differs from the (count-map based) operator< of
   Multiset itself. Empty iff left.size() != right.size(). */
std::vector<Pairing> enumerate_pairings(const LabelMultiset& left,
                                        const LabelMultiset& right);

/* `expand()` order for pairings, i.e. the canonical enumeration order */
bool pairing_list_less(const Pairing& a, const Pairing& b);

/* Text syntax for label multisets: labels joined by '*', the bare token
   "1" for the unit. parse accepts arbitrary whitespace around factors;
   print is canonical (sorted, one space around '*'). */
LabelMultiset parse_multiset(std::string_view text);
std::string print_multiset(const LabelMultiset& m);

}  // namespace computads
