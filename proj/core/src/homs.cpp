#include "computads/homs.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dense.hpp"

namespace computads {

std::vector<Morphism> enumerate_homs(const Computad& x, const Computad& y,
                                     long long budget) {
  detail::DenseQuery q = detail::to_query(x);
  detail::DenseTarget t = detail::to_target(y);
  std::vector<Morphism> out;
  detail::for_each_hom(q, t, budget,
                       [&](const std::vector<int>& f2, const std::vector<int>& f3) {
                         out.push_back(detail::materialize(
                             "h" + std::to_string(out.size() + 1), x, y, f2, f3));
                       });
  return out;
}

namespace {

/* boundary degree signature of a 2-cell: for each 3-cell, how often the
   cell occurs in the source and in the target; sorted to be invariant
   under relabelling of 3-cells */
using Signature = std::vector<std::pair<long long, long long>>;

Signature signature_of(const Label& a, const Computad& x) {
  Signature sig;
  sig.reserve(x.cells3().size());
  for (const ThreeCell& e : x.cells3())
    sig.emplace_back(e.src.count(a), e.tgt.count(a));
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct IsoSearch {
  const Computad& x;
  const Computad& y;
  long long budget;
  long long nodes = 0;

  std::vector<std::vector<int>> candidates;  // per x 2-cell id
  std::vector<int> assign2;                  // x 2-cell id -> y 2-cell id
  std::vector<bool> used;

  std::optional<Morphism> found;

  bool leaf() {
    // group 3-cells by boundary; the bijection must match groups exactly
    std::map<Label, Label> map2;
    for (std::size_t i = 0; i < x.cells2().size(); ++i)
      map2[x.cells2()[i]] = y.cells2()[(std::size_t)assign2[i]];
    std::map<std::pair<LabelMultiset, LabelMultiset>, std::vector<Label>> gx, gy;
    for (const ThreeCell& e : x.cells3())
      gx[{push_forward(map2, e.src), push_forward(map2, e.tgt)}].push_back(e.name);
    for (const ThreeCell& e : y.cells3())
      gy[{e.src, e.tgt}].push_back(e.name);
    if (gx.size() != gy.size()) return false;
    Morphism::LabelMap map3;
    auto ix = gx.begin();
    auto iy = gy.begin();
    for (; ix != gx.end(); ++ix, ++iy) {
      if (ix->first != iy->first || ix->second.size() != iy->second.size())
        return false;
      for (std::size_t k = 0; k < ix->second.size(); ++k)
        map3[ix->second[k]] = iy->second[k];
    }
    Morphism iso("iso", x, y, std::move(map2), std::move(map3));
    internal_check(is_valid(iso), "isomorphism witness fails validation");
    found = iso;
    return true;
  }

  bool step(std::size_t depth) {
    if (depth == candidates.size()) return leaf();
    for (int image : candidates[depth]) {
      if (used[(std::size_t)image]) continue;
      if (++nodes > budget)
        throw SearchBudgetExceeded(
            "isomorphism search exceeded budget " + std::to_string(budget));
      assign2[depth] = image;
      used[(std::size_t)image] = true;
      if (step(depth + 1)) return true;
      used[(std::size_t)image] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Morphism> find_isomorphism(const Computad& x, const Computad& y,
                                         long long budget) {
  if (x.cells2().size() != y.cells2().size()) return std::nullopt;
  if (x.cells3().size() != y.cells3().size()) return std::nullopt;

  std::vector<Signature> sig_y;
  sig_y.reserve(y.cells2().size());
  for (const Label& b : y.cells2()) sig_y.push_back(signature_of(b, y));

  IsoSearch search{x, y, budget, 0, {}, {}, {}, std::nullopt};
  for (const Label& a : x.cells2()) {
    Signature sa = signature_of(a, x);
    std::vector<int> cand;
    for (std::size_t j = 0; j < sig_y.size(); ++j)
      if (sig_y[j] == sa) cand.push_back((int)j);
    if (cand.empty()) return std::nullopt;
    search.candidates.push_back(std::move(cand));
  }

  {  // cheap global reject: the multiset of boundary size shapes must agree
    std::vector<std::pair<long long, long long>> sx, sy;
    for (const ThreeCell& e : x.cells3()) sx.emplace_back(e.src.size(), e.tgt.size());
    for (const ThreeCell& e : y.cells3()) sy.emplace_back(e.src.size(), e.tgt.size());
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }

  search.assign2.assign(x.cells2().size(), -1);
  search.used.assign(y.cells2().size(), false);
  search.step(0);
  return search.found;
}

}  // namespace computads
