#pragma once

/* Integer-indexed enumeration core shared by enumerate_homs and the
   universal-property oracles. Not installed; everything here works on
   2-cell/3-cell indices in sorted-label order so that output order is the
   lexicographic order over map tables. */

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "computads/computad.hpp"
#include "computads/errors.hpp"
#include "computads/morphism.hpp"

namespace computads::detail {

/* expanded sorted id lists for (src, tgt) */
using DenseBoundary = std::pair<std::vector<int>, std::vector<int>>;

/* Domain-side 3-cell. `constraints` all have to push forward to the
   boundary of the chosen image; plain homs have a single constraint,
   quotient-style queries one per merged cell. */
struct QueryCell3 {
  std::vector<DenseBoundary> constraints;
  int trigger = -1;  // highest 2-cell id mentioned, -1 when boundaries are empty
};

struct DenseQuery {
  int n2 = 0;
  std::vector<QueryCell3> cells3;
};

struct DenseTarget {
  int n2 = 0;
  long long n3 = 0;
  std::map<DenseBoundary, std::vector<int>> by_boundary;
};

inline constexpr long long kSizeCap = 4'000'000'000'000'000'000LL;

inline long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSizeCap / b) return kSizeCap;
  return a * b;
}

inline long long sat_pow(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

inline std::map<Label, int> label_ids(const std::vector<Label>& sorted) {
  std::map<Label, int> ids;
  for (std::size_t i = 0; i < sorted.size(); ++i) ids[sorted[i]] = (int)i;
  return ids;
}

inline std::vector<int> expand_ids(const LabelMultiset& m,
                                   const std::map<Label, int>& ids) {
  std::vector<int> out;
  for (const auto& [label, k] : m.counts()) {
    auto it = ids.find(label);
    if (it == ids.end()) throw UnmappedLabel(label);
    for (long long i = 0; i < k; ++i) out.push_back(it->second);
  }
  return out;  // already sorted: counts() iterates labels in order
}

inline void finish_trigger(QueryCell3& cell) {
  cell.trigger = -1;
  for (const DenseBoundary& con : cell.constraints) {
    for (int id : con.first) cell.trigger = std::max(cell.trigger, id);
    for (int id : con.second) cell.trigger = std::max(cell.trigger, id);
  }
}

inline DenseQuery to_query(const Computad& x) {
  DenseQuery q;
  q.n2 = (int)x.cells2().size();
  auto ids = label_ids(x.cells2());
  for (const ThreeCell& e : x.cells3()) {
    QueryCell3 cell;
    cell.constraints.push_back({expand_ids(e.src, ids), expand_ids(e.tgt, ids)});
    finish_trigger(cell);
    q.cells3.push_back(std::move(cell));
  }
  return q;
}

inline DenseTarget to_target(const Computad& y) {
  DenseTarget t;
  t.n2 = (int)y.cells2().size();
  t.n3 = (long long)y.cells3().size();
  auto ids = label_ids(y.cells2());
  int id = 0;
  for (const ThreeCell& e : y.cells3())
    t.by_boundary[{expand_ids(e.src, ids), expand_ids(e.tgt, ids)}].push_back(id++);
  return t;
}

/* Backtracking over f2 in id order with per-3-cell feasibility pruning:
   once the highest 2-cell a boundary mentions is assigned, the candidate
   image list (intersection over all constraints) is computed and an empty
   list prunes the branch. Visits exactly the valid morphisms, in
   lexicographic (f2, f3) order. */
template <typename Fn>
void for_each_hom(const DenseQuery& x, const DenseTarget& y, long long budget,
                  Fn&& fn) {
  long long bound = sat_mul(sat_pow(y.n2, x.n2),
                            sat_pow(y.n3, (long long)x.cells3.size()));
  if (bound > budget)
    throw SearchBudgetExceeded("hom search over " + std::to_string(bound) +
                               " candidate maps exceeds budget " +
                               std::to_string(budget));

  const std::size_t m = x.cells3.size();
  std::vector<std::vector<int>> cand(m);
  std::vector<int> f2(x.n2, -1), f3(m, -1);
  std::vector<std::vector<int>> by_trigger(x.n2);
  std::vector<int> pre;
  for (std::size_t c = 0; c < m; ++c) {
    int t = x.cells3[c].trigger;
    if (t < 0)
      pre.push_back((int)c);
    else
      by_trigger[t].push_back((int)c);
  }

  DenseBoundary pushed;
  auto compute_cand = [&](int c) -> bool {
    const QueryCell3& qc = x.cells3[c];
    std::vector<int>& acc = cand[c];
    acc.clear();
    bool first = true;
    for (const DenseBoundary& con : qc.constraints) {
      pushed.first.clear();
      for (int id : con.first) pushed.first.push_back(f2[id]);
      std::sort(pushed.first.begin(), pushed.first.end());
      pushed.second.clear();
      for (int id : con.second) pushed.second.push_back(f2[id]);
      std::sort(pushed.second.begin(), pushed.second.end());
      auto it = y.by_boundary.find(pushed);
      if (it == y.by_boundary.end()) return false;
      if (first) {
        acc = it->second;
        first = false;
      } else {
        std::vector<int> merged;
        std::set_intersection(acc.begin(), acc.end(), it->second.begin(),
                              it->second.end(), std::back_inserter(merged));
        acc = std::move(merged);
        if (acc.empty()) return false;
      }
    }
    return !acc.empty();
  };

  const std::vector<int>& cf2 = f2;
  const std::vector<int>& cf3 = f3;
  auto emit3 = [&](auto&& self, std::size_t c) -> void {
    if (c == m) {
      fn(cf2, cf3);
      return;
    }
    for (int image : cand[c]) {
      f3[c] = image;
      self(self, c + 1);
    }
  };

  auto assign = [&](auto&& self, int depth) -> void {
    if (depth == x.n2) {
      emit3(emit3, 0);
      return;
    }
    for (int image = 0; image < y.n2; ++image) {
      f2[depth] = image;
      bool feasible = true;
      for (int c : by_trigger[depth])
        if (!compute_cand(c)) {
          feasible = false;
          break;
        }
      if (feasible) self(self, depth + 1);
    }
  };

  for (int c : pre)
    if (!compute_cand(c)) return;
  assign(assign, 0);
}

inline Morphism materialize(std::string name, const Computad& x,
                            const Computad& y, const std::vector<int>& f2,
                            const std::vector<int>& f3) {
  Morphism::LabelMap map2, map3;
  for (std::size_t i = 0; i < x.cells2().size(); ++i)
    map2[x.cells2()[i]] = y.cells2()[(std::size_t)f2[i]];
  for (std::size_t c = 0; c < x.cells3().size(); ++c)
    map3[x.cells3()[c].name] = y.cells3()[(std::size_t)f3[c]].name;
  return Morphism(std::move(name), x, y, std::move(map2), std::move(map3));
}

}  // namespace computads::detail
