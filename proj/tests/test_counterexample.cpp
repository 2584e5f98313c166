#include <doctest.h>

#include <set>
#include <string>

#include "computads/counterexample.hpp"

using namespace computads;

namespace {

void check_cells(const Computad& x, std::size_t n2, std::size_t n3) {
  INFO(x.name());
  CHECK(x.cells2().size() == n2);
  CHECK(x.cells3().size() == n3);
}

std::set<std::string> keys_of(const std::map<std::string, Computad>& m) {
  std::set<std::string> out;
  for (const auto& [k, v] : m) out.insert(k);
  return out;
}

std::set<std::string> keys_of(const std::map<std::string, Morphism>& m) {
  std::set<std::string> out;
  for (const auto& [k, v] : m) out.insert(k);
  return out;
}

}  // namespace

TEST_CASE("fixture objects are valid and the pair is genuinely parallel") {
  for (PaperObjects po : {build_paper_objects(), build_empty_target_objects()}) {
    CHECK(is_valid(po.a));
    CHECK(is_valid(po.b));
    CHECK(is_valid(po.e));
    CHECK(is_valid(po.alpha1));
    CHECK(is_valid(po.alpha2));
    CHECK(po.alpha1.dom() == po.e);
    CHECK(po.alpha2.dom() == po.e);
    CHECK(po.alpha1.cod() == po.a);
    CHECK(po.alpha2.cod() == po.a);
    CHECK_FALSE(po.alpha1 == po.alpha2);
    CHECK(po.e.cells3().empty());
  }
}

TEST_CASE("the pipeline certifies non-preservation") {
  PipelineReport r = run_counterexample();

  CHECK_FALSE(r.preserved);
  CHECK(r.witness ==
        "cmp sends (f,g)#1 and (f,g)#2 of P to the single 3-cell (f,g)#1 of CxB");

  REQUIRE(r.steps.size() == 9);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    CHECK(r.steps[i].step == (int)i + 1);
    CHECK_FALSE(r.steps[i].title.empty());
    CHECK_FALSE(r.steps[i].produced.empty());
    CHECK_FALSE(r.steps[i].checks.empty());
  }

  CHECK(keys_of(r.objects) ==
        std::set<std::string>{"A", "B", "E", "C", "AxB", "ExB", "CxB", "P"});
  CHECK(keys_of(r.morphisms) ==
        std::set<std::string>{"alpha1", "alpha2", "beta", "alpha1x1",
                              "alpha2x1", "qP", "betax1", "cmp"});
  for (const auto& [k, x] : r.objects) {
    INFO(k);
    CHECK(is_valid(x));
  }
  for (const auto& [k, f] : r.morphisms) {
    INFO(k);
    CHECK(is_valid(f));
  }

  check_cells(r.objects.at("C"), 2, 1);
  check_cells(r.objects.at("AxB"), 9, 2);
  check_cells(r.objects.at("ExB"), 6, 0);
  check_cells(r.objects.at("CxB"), 6, 1);
  check_cells(r.objects.at("P"), 6, 2);

  // the heart of the verdict: P has two parallel 3-cells, CxB one
  const Computad& p = r.objects.at("P");
  REQUIRE(p.cells3().size() == 2);
  CHECK(p.cells3()[0].src == p.cells3()[1].src);
  CHECK(p.cells3()[0].tgt == p.cells3()[1].tgt);

  // the factorization identity cmp . qP == beta x 1 over the stored data
  CHECK(compose(r.morphisms.at("cmp"), r.morphisms.at("qP")) ==
        r.morphisms.at("betax1"));
}

TEST_CASE("the report renders deterministically and ends with the verdict") {
  std::string a = format_report(run_counterexample());
  std::string b = format_report(run_counterexample());
  CHECK(a == b);
  CHECK(a.rfind("coequaliser preservation under - x B\n\n", 0) == 0);
  const std::string verdict = "VERDICT: coequaliser NOT preserved by - x B\n";
  REQUIRE(a.size() >= verdict.size());
  CHECK(a.substr(a.size() - verdict.size()) == verdict);
  CHECK(a.find("witness: cmp sends") != std::string::npos);
  CHECK(a.find("step 9: find_isomorphism(P, CxB)") != std::string::npos);
}

TEST_CASE("the empty-target variant reaches the same verdict") {
  PipelineReport r = run_counterexample_empty_target_variant();
  CHECK_FALSE(r.preserved);
  REQUIRE(r.steps.size() == 9);

  check_cells(r.objects.at("C"), 1, 1);
  check_cells(r.objects.at("AxB"), 4, 2);
  check_cells(r.objects.at("ExB"), 2, 0);
  check_cells(r.objects.at("CxB"), 2, 1);
  check_cells(r.objects.at("P"), 2, 2);

  std::string text = format_report(r);
  const std::string verdict = "VERDICT: coequaliser NOT preserved by - x B\n";
  REQUIRE(text.size() >= verdict.size());
  CHECK(text.substr(text.size() - verdict.size()) == verdict);
  CHECK(format_report(run_counterexample_empty_target_variant()) == text);
}
