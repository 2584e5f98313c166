/* Acceptance sweep for the whole toolkit. Each criterion prints one
   [PASS]/[FAIL] line with its wall time; the process exits nonzero when
   any criterion fails. Criteria carry their own time caps, and running
   over the cap is a failure in itself. */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "computads/counterexample.hpp"
#include "computads/io.hpp"
#include "computads/verify.hpp"

using namespace computads;

namespace {

int g_failures = 0;

void criterion(const std::string& name, long long cap_ms,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  if (ok && elapsed > cap_ms) {
    ok = false;
    detail = "over the " + std::to_string(cap_ms) + " ms time cap";
  }
  if (!ok) ++g_failures;
  std::printf("[%s] %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              (long long)elapsed, detail.empty() ? "" : ": ",
              detail.c_str());
  std::fflush(stdout);
}

bool expect(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

std::string cell_text(const ThreeCell& e) {
  return e.name + " : " + print_multiset(e.src) + " -> " +
         print_multiset(e.tgt);
}

Computad yproof() {
  return Computad("Y", {"y1", "y2", "y3"},
                  {{"e", LabelMultiset{"y1", "y2"}, LabelMultiset{"y3"}}});
}

ProductResult drop_product_cell(const ProductResult& good, const Label& cell,
                                const Computad& a, const Computad& b) {
  std::vector<ThreeCell> cells3;
  for (const ThreeCell& e : good.object.cells3())
    if (e.name != cell) cells3.push_back(e);
  Computad obj(good.object.name() + "_missing", good.object.cells2(), cells3);
  Morphism::LabelMap l3, r3;
  std::map<Label, ProductCellOrigin> cell_index;
  std::map<ProductCellOrigin, Label> by_origin;
  for (const ThreeCell& e : cells3) {
    l3[e.name] = good.proj_left.apply3(e.name);
    r3[e.name] = good.proj_right.apply3(e.name);
    cell_index[e.name] = good.cell_index.at(e.name);
    by_origin[good.cell_index.at(e.name)] = e.name;
  }
  return {obj, Morphism("p", obj, a, good.proj_left.map2(), l3),
          Morphism("q", obj, b, good.proj_right.map2(), r3),
          std::move(cell_index), std::move(by_origin)};
}

ProductResult duplicate_product_cell(const ProductResult& good,
                                     const Label& cell, const Computad& a,
                                     const Computad& b) {
  std::vector<ThreeCell> cells3 = good.object.cells3();
  ThreeCell dup = *good.object.find_cell3(cell);
  dup.name = cell + "dup";
  cells3.push_back(dup);
  Computad obj(good.object.name() + "_dup", good.object.cells2(), cells3);
  Morphism::LabelMap l3 = good.proj_left.map3(), r3 = good.proj_right.map3();
  l3[dup.name] = good.proj_left.apply3(cell);
  r3[dup.name] = good.proj_right.apply3(cell);
  return {obj, Morphism("p", obj, a, good.proj_left.map2(), l3),
          Morphism("q", obj, b, good.proj_right.map2(), r3),
          good.cell_index, good.by_origin};
}

bool object_counts(const PipelineReport& r, const char* key, std::size_t n2,
                   std::size_t n3, std::string& detail) {
  const Computad& x = r.objects.at(key);
  return expect(x.cells2().size() == n2 && x.cells3().size() == n3,
                std::string(key) + " is not " + std::to_string(n2) + "/" +
                    std::to_string(n3) + " but " +
                    std::to_string(x.cells2().size()) + "/" +
                    std::to_string(x.cells3().size()),
                detail);
}

/* every multiset over {a,b,c} of total size <= 5 */
std::vector<LabelMultiset> small_margins() {
  std::vector<LabelMultiset> out;
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; i + j <= 5; ++j)
      for (int k = 0; i + j + k <= 5; ++k) {
        LabelMultiset::Counts counts;
        if (i > 0) counts["a"] = i;
        if (j > 0) counts["b"] = j;
        if (k > 0) counts["c"] = k;
        out.push_back(LabelMultiset(std::move(counts)));
      }
  return out;
}

}  // namespace

int main() {
  criterion("pipeline builds the frozen objects", 1000, [](std::string& d) {
    PipelineReport r = run_counterexample();
    bool ok = object_counts(r, "AxB", 9, 2, d) &&
              object_counts(r, "ExB", 6, 0, d) &&
              object_counts(r, "C", 2, 1, d) &&
              object_counts(r, "CxB", 6, 1, d) &&
              object_counts(r, "P", 6, 2, d);
    if (!ok) return false;
    const Computad& axb = r.objects.at("AxB");
    ok = expect(cell_text(axb.cells3()[0]) ==
                        "(f,g)#1 : (a1,b1) * (a2,b2) -> (a3,b3)" &&
                    cell_text(axb.cells3()[1]) ==
                        "(f,g)#2 : (a1,b2) * (a2,b1) -> (a3,b3)",
                "AxB 3-cell boundaries drifted", d);
    const Computad& p = r.objects.at("P");
    return ok &&
           expect(p.cells3()[0].src == p.cells3()[1].src &&
                      p.cells3()[0].tgt == p.cells3()[1].tgt,
                  "the two 3-cells of P are not parallel", d);
  });

  criterion("P and CxB are not isomorphic, cmp merges the 3-cells", 1000,
            [](std::string& d) {
    PipelineReport r = run_counterexample();
    if (!expect(!r.preserved, "pipeline claims preservation", d)) return false;
    if (!expect(!find_isomorphism(r.objects.at("P"), r.objects.at("CxB"))
                     .has_value(),
                "found an isomorphism P -> CxB", d))
      return false;
    const Morphism& cmp = r.morphisms.at("cmp");
    return expect(cmp.apply3("(f,g)#1") == "(f,g)#1" &&
                      cmp.apply3("(f,g)#2") == "(f,g)#1",
                  "cmp does not merge the two 3-cells of P", d) &&
           expect(r.witness ==
                      "cmp sends (f,g)#1 and (f,g)#2 of P to the single "
                      "3-cell (f,g)#1 of CxB",
                  "witness text drifted", d);
  });

  criterion("product(A,B) is universal over family(3,1,2)", 300000,
            [](std::string& d) {
    PaperObjects po = build_paper_objects();
    ProductResult axb = product(po.a, po.b);
    UPReport r = check_product_up(po.a, po.b, axb, {3, 1, 2});
    if (!expect(r.passed() && r.family_size == 59,
                "sweep failed: " + format_report(r), d))
      return false;
    // the family covers the shape that separates the two product cells
    Computad y = yproof();
    long long hits = 0;
    for (const Computad& x : generate_computads({3, 1, 2}))
      if (find_isomorphism(y, x).has_value()) ++hits;
    if (!expect(hits == 1, "proof shape missing from the family", d))
      return false;
    if (!expect(enumerate_homs(y, po.a).size() == 2 &&
                    enumerate_homs(y, po.b).size() == 2,
                "hom counts from the proof shape drifted", d))
      return false;
    // the four cones split 2/2 over the two product 3-cells
    long long to_first = 0, to_second = 0;
    for (const Morphism& u : enumerate_homs(y, po.a))
      for (const Morphism& v : enumerate_homs(y, po.b)) {
        const Label& cell = pair_into_product(u, v, axb).apply3("e");
        (cell == "(f,g)#1" ? to_first : to_second) += 1;
      }
    return expect(to_first == 2 && to_second == 2,
                  "cone table over the proof shape drifted", d);
  });

  criterion("coequalisers are universal; corrupted candidates are caught",
            600000, [](std::string& d) {
    PaperObjects po = build_paper_objects();
    CoequalizerResult ce = coequalizer(po.alpha1, po.alpha2, "C");
    UPReport cr = check_coequalizer_up(po.alpha1, po.alpha2, ce, {3, 2, 2});
    if (!expect(cr.passed() && cr.family_size == 1382,
                "C sweep failed: " + format_report(cr), d))
      return false;

    ProductResult axb = product(po.a, po.b, "AxB");
    ProductResult exb = product(po.e, po.b, "ExB");
    Morphism a1x1 = product_of_morphisms(po.alpha1, exb, axb, "alpha1x1");
    Morphism a2x1 = product_of_morphisms(po.alpha2, exb, axb, "alpha2x1");
    CoequalizerResult pres = coequalizer(a1x1, a2x1, "P");
    UPReport pr =
        check_coequalizer_up(a1x1, a2x1, pres, {6, 2, 2}, 100'000'000);
    if (!expect(pr.passed() && pr.budget == 100'000'000 &&
                    pr.family_size == 6213,
                "P sweep failed: " + format_report(pr), d))
      return false;

    UPReport missing = check_product_up(
        po.a, po.b, drop_product_cell(axb, "(f,g)#2", po.a, po.b), {3, 1, 2});
    UPReport dup = check_product_up(
        po.a, po.b, duplicate_product_cell(axb, "(f,g)#1", po.a, po.b),
        {3, 1, 2});
    Computad over_obj("C_over", {"[a1|a2|a3]"},
                      {{"f", LabelMultiset{"[a1|a2|a3]", "[a1|a2|a3]"},
                        LabelMultiset{"[a1|a2|a3]"}}});
    Morphism over_q("q", po.a, over_obj,
                    {{"a1", "[a1|a2|a3]"},
                     {"a2", "[a1|a2|a3]"},
                     {"a3", "[a1|a2|a3]"}},
                    {{"f", "f"}});
    CoequalizerResult over{over_obj, over_q,
                           {{"[a1|a2|a3]", {"a1", "a2", "a3"}}},
                           {{"f", {"f"}}},
                           po.alpha1, po.alpha2};
    UPReport oq = check_coequalizer_up(po.alpha1, po.alpha2, over, {3, 2, 2});
    return expect(!missing.passed() && missing.failures_total == 2,
                  "a dropped product 3-cell went unnoticed", d) &&
           expect(!dup.passed() && dup.failures_total == 2,
                  "a duplicated product 3-cell went unnoticed", d) &&
           expect(!oq.passed() && oq.failures_total == 144,
                  "an over-quotiented coequaliser went unnoticed", d);
  });

  criterion("pairing enumeration matches the bijection-sweep oracle", 60000,
            [](std::string& d) {
    std::vector<LabelMultiset> margins = small_margins();
    if (!expect(margins.size() == 56, "margin census drifted", d))
      return false;
    for (const LabelMultiset& s : margins)
      for (const LabelMultiset& t : margins) {
        long long fast = (long long)enumerate_pairings(s, t).size();
        long long slow = count_pairings_oracle(s, t);
        if (!expect(fast == slow,
                    "mismatch at " + print_multiset(s) + " x " +
                        print_multiset(t) + ": " + std::to_string(fast) +
                        " vs " + std::to_string(slow),
                    d))
          return false;
        if (s.size() != t.size() &&
            !expect(fast == 0, "nonempty pairing across unequal sizes", d))
          return false;
      }
    // all-distinct margins: the count is exactly n!
    long long factorial = 1;
    for (int n = 0; n <= 6; ++n) {
      if (n > 0) factorial *= n;
      LabelMultiset::Counts ls, rs;
      for (int i = 0; i < n; ++i) {
        ls["x" + std::to_string(i)] = 1;
        rs["y" + std::to_string(i)] = 1;
      }
      LabelMultiset l(std::move(ls)), r(std::move(rs));
      if (!expect((long long)enumerate_pairings(l, r).size() == factorial &&
                      count_pairings_oracle(l, r) == factorial,
                  "distinct-margin count is not " + std::to_string(n) + "!",
                  d))
        return false;
    }
    return true;
  });

  criterion("empty-target variant reaches the same verdict", 1000,
            [](std::string& d) {
    PipelineReport r = run_counterexample_empty_target_variant();
    bool ok = expect(!r.preserved, "variant claims preservation", d) &&
              object_counts(r, "C", 1, 1, d) &&
              object_counts(r, "AxB", 4, 2, d) &&
              object_counts(r, "ExB", 2, 0, d) &&
              object_counts(r, "CxB", 2, 1, d) &&
              object_counts(r, "P", 2, 2, d);
    if (!ok) return false;
    // re-derive the collapse from the raw pairing counts
    const ThreeCell& cf = r.objects.at("C").cells3().front();
    const ThreeCell& af = r.objects.at("A").cells3().front();
    const ThreeCell& bg = r.objects.at("B").cells3().front();
    return expect(count_pairings_oracle(cf.src, bg.src) == 1 &&
                      count_pairings_oracle(af.src, bg.src) == 2 &&
                      count_pairings_oracle(cf.tgt, bg.tgt) == 1,
                  "pairing collapse counts drifted", d);
  });

  criterion("consecutive CLI pipeline runs are byte-identical", 60000,
            [](std::string& d) {
#ifndef COMPUTADS_CLI_PATH
    return expect(false,
                  "the CLI was not built into this binary; configure with "
                  "COMPUTADS_BUILD_TOOLS=ON",
                  d);
#else
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "computads-acceptance";
    fs::create_directories(dir);
    auto run_once = [&](const std::string& tag) -> std::string {
      fs::path capture = dir / (tag + ".txt");
      std::string cmd = std::string(COMPUTADS_CLI_PATH) + " paper > " +
                        capture.string() + " 2>&1";
      if (std::system(cmd.c_str()) != 0) return "";
      std::ifstream in(capture, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    };
    std::string first = run_once("paper-1");
    std::string second = run_once("paper-2");
    const std::string verdict = "VERDICT: coequaliser NOT preserved by - x B\n";
    return expect(!first.empty(), "CLI run failed", d) &&
           expect(first == second, "two runs differ", d) &&
           expect(first.size() >= verdict.size() &&
                      first.substr(first.size() - verdict.size()) == verdict,
                  "run does not end with the verdict", d);
#endif
  });

  if (g_failures == 0) {
    std::puts("acceptance: all criteria passed");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
