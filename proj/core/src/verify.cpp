#include "computads/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "dense.hpp"

namespace computads {

namespace {

/* non-decreasing id sequences over n labels, ordered by size then lex */
std::vector<std::vector<std::uint8_t>> multisets_up_to(int n, int maxb) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur;
  for (int s = 0; s <= maxb; ++s) {
    auto fill = [&](auto&& self, int remaining, int from) -> void {
      if (remaining == 0) {
        out.push_back(cur);
        return;
      }
      for (int v = from; v < n; ++v) {
        cur.push_back((std::uint8_t)v);
        self(self, remaining - 1, v);
        cur.pop_back();
      }
    };
    fill(fill, s, 0);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> permutations_of(int n) {
  std::vector<std::uint8_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

LabelMultiset multiset_from_ids(const std::vector<std::uint8_t>& ids) {
  LabelMultiset::Counts counts;
  for (std::uint8_t id : ids) ++counts["c" + std::to_string(id + 1)];
  return LabelMultiset(std::move(counts));
}

constexpr long long kMaxRecordedFailures = 1000;

void record_failure(UPReport& r, std::string test_object, std::string cone,
                    std::string reason) {
  ++r.failures_total;
  if ((long long)r.failures.size() < kMaxRecordedFailures)
    r.failures.push_back(
        {std::move(test_object), std::move(cone), std::move(reason)});
}

std::string tables_text(const Morphism::LabelMap& map2,
                        const Morphism::LabelMap& map3) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : map2) {
    if (!first) out += ",";
    out += k + "->" + v;
    first = false;
  }
  if (!map3.empty()) {
    out += ";";
    first = true;
    for (const auto& [k, v] : map3) {
      if (!first) out += ",";
      out += k + "->" + v;
      first = false;
    }
  }
  return out + "}";
}

std::string tables_key(const Morphism& f) {
  return tables_text(f.map2(), f.map3());
}

}  // namespace

std::vector<Computad> generate_computads(const GeneratorBounds& bounds) {
  if (bounds.max_2cells < 0 || bounds.max_3cells < 0 ||
      bounds.max_boundary_size < 0)
    throw Error("generator bounds must be non-negative");

  std::vector<Computad> out;
  for (int n = 0; n <= bounds.max_2cells; ++n) {
    auto mults = multisets_up_to(n, bounds.max_boundary_size);
    const long long num_mult = (long long)mults.size();
    const long long num_pairs = num_mult * num_mult;

    auto perms = permutations_of(n);
    // action of each permutation on multiset ids
    std::map<std::vector<std::uint8_t>, int> mult_id;
    for (std::size_t i = 0; i < mults.size(); ++i)
      mult_id[mults[i]] = (int)i;
    std::vector<std::vector<int>> act(perms.size(),
                                      std::vector<int>(mults.size()));
    for (std::size_t p = 0; p < perms.size(); ++p)
      for (std::size_t i = 0; i < mults.size(); ++i) {
        std::vector<std::uint8_t> image = mults[i];
        for (std::uint8_t& id : image) id = perms[p][id];
        std::sort(image.begin(), image.end());
        act[p][i] = mult_id.at(image);
      }

    std::vector<long long> seq, mapped;
    auto emit = [&]() {
      // canonical iff no permutation yields a smaller sorted boundary table
      for (std::size_t p = 1; p < perms.size(); ++p) {
        mapped.clear();
        for (long long pid : seq)
          mapped.push_back((long long)act[p][pid / num_mult] * num_mult +
                           act[p][pid % num_mult]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped < seq) return;
      }
      std::vector<Label> cells2;
      for (int i = 0; i < n; ++i) cells2.push_back("c" + std::to_string(i + 1));
      std::vector<ThreeCell> cells3;
      for (std::size_t k = 0; k < seq.size(); ++k)
        cells3.push_back({"e" + std::to_string(k + 1),
                          multiset_from_ids(mults[seq[k] / num_mult]),
                          multiset_from_ids(mults[seq[k] % num_mult])});
      out.emplace_back("g" + std::to_string(out.size() + 1), std::move(cells2),
                       std::move(cells3));
    };

    for (int m = 0; m <= bounds.max_3cells; ++m) {
      auto rec = [&](auto&& self, int k, long long from) -> void {
        if (k == m) {
          emit();
          return;
        }
        for (long long v = from; v < num_pairs; ++v) {
          seq.push_back(v);
          self(self, k + 1, v);
          seq.pop_back();
        }
      };
      rec(rec, 0, 0);
    }
  }
  return out;
}

std::string format_report(const UPReport& r) {
  std::string out;
  out += "subject: " + r.subject + "\n";
  out += "bounds: max2cells=" + std::to_string(r.bounds.max_2cells) +
         " max3cells=" + std::to_string(r.bounds.max_3cells) +
         " maxboundary=" + std::to_string(r.bounds.max_boundary_size) + "\n";
  out += "budget: " + std::to_string(r.budget) + "\n";
  out += "family: " + std::to_string(r.family_size) + " objects\n";
  for (const UPFailure& f : r.failures)
    out += "Y=" + f.test_object + " cone=" + f.cone + " reason=" + f.reason + "\n";
  if (r.failures_total > (long long)r.failures.size())
    out += "(" + std::to_string(r.failures_total - (long long)r.failures.size()) +
           " more failures not listed)\n";
  if (r.passed())
    out += "PASS cones=" + std::to_string(r.cones_checked) + "\n";
  else
    out += "FAIL failures=" + std::to_string(r.failures_total) + "\n";
  return out;
}

UPReport check_product_up(const Computad& a, const Computad& b,
                          const ProductResult& candidate,
                          const GeneratorBounds& bounds, long long budget) {
  UPReport report;
  report.subject = "product(" + a.name() + "," + b.name() + ")";
  report.bounds = bounds;
  report.budget = budget;
  std::vector<Computad> family = generate_computads(bounds);
  report.family_size = (long long)family.size();

  for (const Computad& y : family) {
    std::vector<Morphism> homs_a = enumerate_homs(y, a, budget);
    if (homs_a.empty()) continue;
    std::vector<Morphism> homs_b = enumerate_homs(y, b, budget);
    if (homs_b.empty()) continue;
    std::vector<Morphism> homs_p = enumerate_homs(y, candidate.object, budget);

    std::map<std::string, std::vector<std::size_t>> by_composite;
    for (std::size_t i = 0; i < homs_p.size(); ++i) {
      std::string key = tables_key(compose(candidate.proj_left, homs_p[i])) +
                        "|" + tables_key(compose(candidate.proj_right, homs_p[i]));
      by_composite[std::move(key)].push_back(i);
    }

    for (const Morphism& u : homs_a)
      for (const Morphism& v : homs_b) {
        ++report.cones_checked;
        std::string cone = "u=" + tables_key(u) + " v=" + tables_key(v);
        auto it = by_composite.find(tables_key(u) + "|" + tables_key(v));
        std::size_t count = it == by_composite.end() ? 0 : it->second.size();
        if (count == 0) {
          record_failure(report, y.name(), cone, "no-factorisation");
        } else if (count > 1) {
          record_failure(report, y.name(), cone, "non-unique-factorisation");
        } else {
          try {
            Morphism built = pair_into_product(u, v, candidate);
            if (!(built == homs_p[it->second.front()]))
              record_failure(report, y.name(), cone, "non-commuting");
          } catch (const Error&) {
            record_failure(report, y.name(), cone, "non-commuting");
          }
        }
      }
  }
  return report;
}

namespace {

struct IntUnionFind {
  std::vector<int> parent;
  explicit IntUnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;  // least id stays the root
  }
};

/* class structure of the relation generated by a parallel pair, on ids */
struct PairClasses {
  std::vector<int> class2_of, class3_of;  // cell id -> class id
  std::vector<std::vector<int>> members2, members3;
};

PairClasses classes_of_pair(const Morphism& a1, const Morphism& a2) {
  const Computad& a = a1.cod();
  auto ids2 = detail::label_ids(a.cells2());
  std::map<Label, int> ids3;
  for (std::size_t i = 0; i < a.cells3().size(); ++i)
    ids3[a.cells3()[i].name] = (int)i;

  IntUnionFind uf2((int)a.cells2().size());
  for (const Label& x : a1.dom().cells2())
    uf2.unite(ids2.at(a1.apply2(x)), ids2.at(a2.apply2(x)));
  IntUnionFind uf3((int)a.cells3().size());
  for (const ThreeCell& e : a1.dom().cells3())
    uf3.unite(ids3.at(a1.apply3(e.name)), ids3.at(a2.apply3(e.name)));

  PairClasses out;
  out.class2_of.resize(a.cells2().size());
  out.class3_of.resize(a.cells3().size());
  std::map<int, int> root_to_class2, root_to_class3;
  for (std::size_t i = 0; i < a.cells2().size(); ++i) {
    int root = uf2.find((int)i);
    auto [it, fresh] = root_to_class2.emplace(root, (int)out.members2.size());
    if (fresh) out.members2.emplace_back();
    out.class2_of[i] = it->second;
    out.members2[(std::size_t)it->second].push_back((int)i);
  }
  for (std::size_t i = 0; i < a.cells3().size(); ++i) {
    int root = uf3.find((int)i);
    auto [it, fresh] = root_to_class3.emplace(root, (int)out.members3.size());
    if (fresh) out.members3.emplace_back();
    out.class3_of[i] = it->second;
    out.members3[(std::size_t)it->second].push_back((int)i);
  }
  return out;
}

}  // namespace

UPReport check_coequalizer_up(const Morphism& a1, const Morphism& a2,
                              const CoequalizerResult& candidate,
                              const GeneratorBounds& bounds, long long budget) {
  UPReport report;
  report.subject = "coeq(" + a1.name() + "," + a2.name() + ")";
  report.bounds = bounds;
  report.budget = budget;

  if (!(compose(candidate.q, a1) == compose(candidate.q, a2))) {
    record_failure(report, "-", "q=" + tables_key(candidate.q), "non-commuting");
    return report;
  }

  const Computad& a = a1.cod();
  const Computad& c = candidate.object;
  PairClasses classes = classes_of_pair(a1, a2);

  // the merged query enumerates exactly the u with u.a1 == u.a2
  auto ids2 = detail::label_ids(a.cells2());
  detail::DenseQuery query;
  query.n2 = (int)classes.members2.size();
  for (const std::vector<int>& members : classes.members3) {
    detail::QueryCell3 cell;
    std::set<detail::DenseBoundary> seen;
    for (int id : members) {
      const ThreeCell& e = a.cells3()[(std::size_t)id];
      detail::DenseBoundary con{detail::expand_ids(e.src, ids2),
                                detail::expand_ids(e.tgt, ids2)};
      for (int& v : con.first) v = classes.class2_of[(std::size_t)v];
      std::sort(con.first.begin(), con.first.end());
      for (int& v : con.second) v = classes.class2_of[(std::size_t)v];
      std::sort(con.second.begin(), con.second.end());
      if (seen.insert(con).second) cell.constraints.push_back(std::move(con));
    }
    detail::finish_trigger(cell);
    query.cells3.push_back(std::move(cell));
  }

  // candidate-side tables on ids
  auto cand_ids2 = detail::label_ids(c.cells2());
  std::map<Label, int> cand_ids3;
  for (std::size_t i = 0; i < c.cells3().size(); ++i)
    cand_ids3[c.cells3()[i].name] = (int)i;
  std::vector<int> qf2(a.cells2().size()), qf3(a.cells3().size());
  for (std::size_t i = 0; i < a.cells2().size(); ++i)
    qf2[i] = cand_ids2.at(candidate.q.apply2(a.cells2()[i]));
  for (std::size_t i = 0; i < a.cells3().size(); ++i)
    qf3[i] = cand_ids3.at(candidate.q.apply3(a.cells3()[i].name));
  // members of the candidate's classes, as ids into a's cells
  std::vector<std::vector<int>> cand_members2(c.cells2().size()),
      cand_members3(c.cells3().size());
  std::map<Label, int> a_ids3;
  for (std::size_t i = 0; i < a.cells3().size(); ++i)
    a_ids3[a.cells3()[i].name] = (int)i;
  for (const auto& [label, members] : candidate.classes2)
    for (const Label& m : members)
      cand_members2[(std::size_t)cand_ids2.at(label)].push_back(ids2.at(m));
  for (const auto& [label, members] : candidate.classes3)
    for (const Label& m : members)
      cand_members3[(std::size_t)cand_ids3.at(label)].push_back(a_ids3.at(m));

  detail::DenseQuery cand_query = detail::to_query(c);
  std::vector<Computad> family = generate_computads(bounds);
  report.family_size = (long long)family.size();

  std::vector<int> u2(a.cells2().size()), u3(a.cells3().size());
  std::vector<int> key;
  for (const Computad& y : family) {
    // the budget contract is about Hom(A, Y), not the merged search
    long long literal =
        detail::sat_mul(detail::sat_pow((long long)y.cells2().size(),
                                        (long long)a.cells2().size()),
                        detail::sat_pow((long long)y.cells3().size(),
                                        (long long)a.cells3().size()));
    if (literal > budget)
      throw SearchBudgetExceeded("hom search over " + std::to_string(literal) +
                                 " candidate maps exceeds budget " +
                                 std::to_string(budget));

    detail::DenseTarget target = detail::to_target(y);

    // k-side: all morphisms candidate.object -> Y, keyed by k . q
    std::vector<std::pair<std::vector<int>, std::size_t>> composed;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> ks;
    detail::for_each_hom(
        cand_query, target, budget,
        [&](const std::vector<int>& f2, const std::vector<int>& f3) {
          std::vector<int> ckey;
          ckey.reserve(qf2.size() + qf3.size());
          for (int id : qf2) ckey.push_back(f2[(std::size_t)id]);
          for (int id : qf3) ckey.push_back(f3[(std::size_t)id]);
          composed.emplace_back(std::move(ckey), ks.size());
          ks.emplace_back(f2, f3);
        });
    std::sort(composed.begin(), composed.end());

    auto describe_u = [&]() {
      Morphism::LabelMap m2, m3;
      for (std::size_t i = 0; i < u2.size(); ++i)
        m2[a.cells2()[i]] = y.cells2()[(std::size_t)u2[i]];
      for (std::size_t i = 0; i < u3.size(); ++i)
        m3[a.cells3()[i].name] = y.cells3()[(std::size_t)u3[i]].name;
      return "u=" + tables_text(m2, m3);
    };

    detail::for_each_hom(
        query, target, budget,
        [&](const std::vector<int>& f2, const std::vector<int>& f3) {
          ++report.cones_checked;
          for (std::size_t i = 0; i < u2.size(); ++i)
            u2[i] = f2[(std::size_t)classes.class2_of[i]];
          for (std::size_t i = 0; i < u3.size(); ++i)
            u3[i] = f3[(std::size_t)classes.class3_of[i]];
          key.clear();
          key.insert(key.end(), u2.begin(), u2.end());
          key.insert(key.end(), u3.begin(), u3.end());

          auto lo = std::lower_bound(
              composed.begin(), composed.end(), key,
              [](const auto& entry, const std::vector<int>& k) {
                return entry.first < k;
              });
          auto hi = lo;
          while (hi != composed.end() && hi->first == key) ++hi;
          std::size_t count = (std::size_t)(hi - lo);
          if (count == 0) {
            record_failure(report, y.name(), describe_u(), "no-factorisation");
          } else if (count > 1) {
            record_failure(report, y.name(), describe_u(),
                           "non-unique-factorisation");
          } else {
            // the factorisation must be what coeq_factor produces: constant
            // images across each candidate class, matching k's tables
            const auto& [kf2, kf3] = ks[lo->second];
            bool agrees = true;
            for (std::size_t cell = 0; cell < cand_members2.size() && agrees;
                 ++cell) {
              const std::vector<int>& members = cand_members2[cell];
              if (members.empty()) continue;
              int image = u2[(std::size_t)members.front()];
              for (int m : members)
                if (u2[(std::size_t)m] != image) agrees = false;
              if (kf2[cell] != image) agrees = false;
            }
            for (std::size_t cell = 0; cell < cand_members3.size() && agrees;
                 ++cell) {
              const std::vector<int>& members = cand_members3[cell];
              if (members.empty()) continue;
              int image = u3[(std::size_t)members.front()];
              for (int m : members)
                if (u3[(std::size_t)m] != image) agrees = false;
              if (kf3[cell] != image) agrees = false;
            }
            if (!agrees)
              record_failure(report, y.name(), describe_u(), "non-commuting");
          }
        });
  }
  return report;
}

long long count_pairings_oracle(const LabelMultiset& left,
                                const LabelMultiset& right, long long budget) {
  if (left.size() != right.size()) return 0;
  long long n = left.size();
  long long factorial = 1;
  for (long long i = 2; i <= n; ++i) {
    factorial = detail::sat_mul(factorial, i);
    if (factorial > budget)
      throw OracleBudgetExceeded("bijection sweep needs " + std::to_string(n) +
                                 "! steps, budget " + std::to_string(budget));
  }
  std::vector<Label> ls = left.expand();
  std::vector<Label> rs = right.expand();
  std::vector<std::size_t> perm(ls.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<LabelPair>> seen;
  do {
    std::vector<LabelPair> pairs;
    pairs.reserve(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i)
      pairs.emplace_back(ls[i], rs[perm[i]]);
    std::sort(pairs.begin(), pairs.end());
    seen.insert(std::move(pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (long long)seen.size();
}

std::optional<Computad> find_terminal_in(const std::vector<Computad>& candidates,
                                         const std::vector<Computad>& family,
                                         long long budget) {
  for (const Computad& t : candidates) {
    detail::DenseTarget target = detail::to_target(t);
    bool terminal = true;
    for (const Computad& y : family) {
      long long count = 0;
      detail::for_each_hom(detail::to_query(y), target, budget,
                           [&](const std::vector<int>&, const std::vector<int>&) {
                             ++count;
                           });
      if (count != 1) {
        terminal = false;
        break;
      }
    }
    if (terminal) return t;
  }
  return std::nullopt;
}

std::optional<Computad> find_terminal(const GeneratorBounds& bounds,
                                      long long budget) {
  std::vector<Computad> family = generate_computads(bounds);
  return find_terminal_in(family, family, budget);
}

}  // namespace computads
