#include "computads/counterexample.hpp"

#include <algorithm>

namespace computads {

PaperObjects build_paper_objects() {
  Computad a("A", {"a1", "a2", "a3"},
             {{"f", {"a1", "a2"}, {"a3"}}});
  Computad b("B", {"b1", "b2", "b3"},
             {{"g", {"b1", "b2"}, {"b3"}}});
  Computad e("E", {"x", "y"}, {});
  Morphism alpha1("alpha1", e, a, {{"x", "a1"}, {"y", "a3"}}, {});
  Morphism alpha2("alpha2", e, a, {{"x", "a2"}, {"y", "a3"}}, {});
  internal_check(is_valid(a) && is_valid(b) && is_valid(e) &&
                     is_valid(alpha1) && is_valid(alpha2),
                 "fixture data fails validation");
  return {std::move(e), std::move(a), std::move(b), std::move(alpha1),
          std::move(alpha2)};
}

PaperObjects build_empty_target_objects() {
  Computad a("A", {"a1", "a2"}, {{"f", {"a1", "a2"}, {}}});
  Computad b("B", {"b1", "b2"}, {{"g", {"b1", "b2"}, {}}});
  Computad e("E", {"x"}, {});
  Morphism alpha1("alpha1", e, a, {{"x", "a1"}}, {});
  Morphism alpha2("alpha2", e, a, {{"x", "a2"}}, {});
  internal_check(is_valid(a) && is_valid(b) && is_valid(e) &&
                     is_valid(alpha1) && is_valid(alpha2),
                 "variant fixture data fails validation");
  return {std::move(e), std::move(a), std::move(b), std::move(alpha1),
          std::move(alpha2)};
}

namespace {

std::string plural(long long n, const std::string& stem) {
  return std::to_string(n) + " " + stem + (n == 1 ? "" : "s");
}

std::string describe(const Computad& x) {
  return x.name() + " (" + plural((long long)x.cells2().size(), "2-cell") +
         ", " + plural((long long)x.cells3().size(), "3-cell") + ")";
}

std::string cell_line(const ThreeCell& e) {
  return e.name + " : " + print_multiset(e.src) + " -> " +
         print_multiset(e.tgt);
}

std::vector<std::string> cell_lines(const Computad& x) {
  std::vector<std::string> out;
  for (const ThreeCell& e : x.cells3()) out.push_back(cell_line(e));
  return out;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string map2_text(const Morphism::LabelMap& m) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : m) parts.push_back(k + " -> " + v);
  return join(parts, ", ");
}

/* Expected values for one pipeline run, frozen as literal text. A 3-cell
   golden line is "name : src -> tgt" in the canonical multiset syntax. */
struct Goldens {
  std::vector<std::string> c2;
  std::vector<std::string> c3;
  long long axb2 = 0;
  std::vector<std::string> axb3;
  long long exb2 = 0;
  long long cxb2 = 0;
  std::vector<std::string> cxb3;
  long long p2 = 0;
  std::vector<std::string> p3;
  Morphism::LabelMap a1x1_map2;
  Morphism::LabelMap a2x1_map2;
  std::vector<std::string> notes;
};

struct PipelineRun {
  PipelineReport report;

  StepRecord& step(int n, std::string title) {
    report.steps.push_back({n, std::move(title), "", {}});
    return report.steps.back();
  }

  void check(StepRecord& s, bool ok, std::string text) {
    internal_check(ok, "step " + std::to_string(s.step) + ": " + text);
    s.checks.push_back(std::move(text));
  }

  void check_cells3(StepRecord& s, const Computad& x,
                    const std::vector<std::string>& expected) {
    std::vector<std::string> lines = cell_lines(x);
    check(s, lines.size() == expected.size(),
          "has " + plural((long long)expected.size(), "3-cell"));
    for (std::size_t i = 0; i < expected.size(); ++i)
      check(s, lines[i] == expected[i], "3-cell " + expected[i]);
  }
};

PipelineReport run_pipeline(const PaperObjects& po, const Goldens& g) {
  PipelineRun run;
  PipelineReport& report = run.report;

  CoequalizerResult cres = coequalizer(po.alpha1, po.alpha2, "C");
  Morphism beta = cres.q.renamed("beta");
  {
    StepRecord& s = run.step(1, "C = coequalizer(alpha1, alpha2)");
    s.produced = describe(cres.object) + "; beta : A -> C";
    run.check(s, cres.object.cells2() == g.c2,
              "2-cells of C: " + join(g.c2, ", "));
    run.check_cells3(s, cres.object, g.c3);
    run.check(s, compose(beta, po.alpha1) == compose(beta, po.alpha2),
              "beta . alpha1 == beta . alpha2");
  }

  ProductResult axb = product(po.a, po.b, "AxB");
  {
    StepRecord& s = run.step(2, "AxB = product(A, B)");
    s.produced = describe(axb.object);
    run.check(s, (long long)axb.object.cells2().size() == g.axb2,
              "has " + plural(g.axb2, "2-cell"));
    run.check_cells3(s, axb.object, g.axb3);
  }

  ProductResult exb = product(po.e, po.b, "ExB");
  {
    StepRecord& s = run.step(3, "ExB = product(E, B)");
    s.produced = describe(exb.object);
    run.check(s, (long long)exb.object.cells2().size() == g.exb2,
              "has " + plural(g.exb2, "2-cell"));
    run.check(s, exb.object.cells3().empty(), "has no 3-cells");
  }

  ProductResult cxb = product(cres.object, po.b, "CxB");
  {
    StepRecord& s = run.step(4, "CxB = product(C, B)");
    s.produced = describe(cxb.object);
    run.check(s, (long long)cxb.object.cells2().size() == g.cxb2,
              "has " + plural(g.cxb2, "2-cell"));
    run.check_cells3(s, cxb.object, g.cxb3);
    // the collapse that drives the verdict: after identifying a1 with a2
    // only one pairing of the sources (and of the targets) survives
    const ThreeCell& cf = cres.object.cells3().front();
    const ThreeCell& bg = po.b.cells3().front();
    run.check(s,
              enumerate_pairings(cf.src, bg.src).size() == 1 &&
                  enumerate_pairings(cf.tgt, bg.tgt).size() == 1,
              "exactly one pairing of src(" + cf.name + ") with src(" +
                  bg.name + "), and one of the targets");
  }

  Morphism a1x1 = product_of_morphisms(po.alpha1, exb, axb, "alpha1x1");
  {
    StepRecord& s = run.step(5, "alpha1x1 = alpha1 x B : ExB -> AxB");
    s.produced = "alpha1x1 : ExB -> AxB";
    run.check(s, a1x1.map2() == g.a1x1_map2,
              "2-cell action: " + map2_text(g.a1x1_map2));
    run.check(s, is_valid(a1x1), "alpha1x1 is a valid morphism");
  }

  Morphism a2x1 = product_of_morphisms(po.alpha2, exb, axb, "alpha2x1");
  {
    StepRecord& s = run.step(6, "alpha2x1 = alpha2 x B : ExB -> AxB");
    s.produced = "alpha2x1 : ExB -> AxB";
    run.check(s, a2x1.map2() == g.a2x1_map2,
              "2-cell action: " + map2_text(g.a2x1_map2));
    run.check(s, is_valid(a2x1), "alpha2x1 is a valid morphism");
  }

  CoequalizerResult pres = coequalizer(a1x1, a2x1, "P");
  Morphism qp = pres.q.renamed("qP");
  {
    StepRecord& s = run.step(7, "P = coequalizer(alpha1x1, alpha2x1)");
    s.produced = describe(pres.object) + "; qP : AxB -> P";
    run.check(s, (long long)pres.object.cells2().size() == g.p2,
              "has " + plural(g.p2, "2-cell"));
    run.check_cells3(s, pres.object, g.p3);
    const std::vector<ThreeCell>& pc = pres.object.cells3();
    run.check(s,
              pc.size() == 2 && pc[0].src == pc[1].src &&
                  pc[0].tgt == pc[1].tgt,
              "the two 3-cells of P are parallel");
  }

  Morphism cmp = comparison_map(pres, cxb, beta, "cmp");
  Morphism betax1 = product_of_morphisms(beta, axb, cxb, "betax1");
  {
    StepRecord& s = run.step(8, "cmp : P -> CxB induced by beta x B");
    s.produced = "cmp : P -> CxB";
    run.check(s, is_valid(cmp), "cmp is a valid morphism");
    run.check(s, compose(cmp, pres.q) == betax1, "cmp . qP == beta x B");
    bool surj2 = true, surj3 = true;
    for (const Label& t : cxb.object.cells2()) {
      bool hit = false;
      for (const auto& [k, v] : cmp.map2()) hit = hit || v == t;
      surj2 = surj2 && hit;
    }
    for (const ThreeCell& e : cxb.object.cells3()) {
      bool hit = false;
      for (const auto& [k, v] : cmp.map3()) hit = hit || v == e.name;
      surj3 = surj3 && hit;
    }
    run.check(s, surj2 && surj3, "cmp is surjective on 2-cells and 3-cells");
    std::map<Label, std::vector<Label>> fibers;
    for (const auto& [k, v] : cmp.map3()) fibers[v].push_back(k);
    std::string merged;
    for (const auto& [image, pre] : fibers)
      if (pre.size() > 1)
        merged = "cmp sends " + join(pre, " and ") +
                 " of P to the single 3-cell " + image + " of CxB";
    run.check(s, !merged.empty(), "cmp is not injective on 3-cells");
    report.witness = merged;
  }

  std::optional<Morphism> iso = find_isomorphism(pres.object, cxb.object);
  {
    StepRecord& s = run.step(9, "find_isomorphism(P, CxB)");
    s.produced = iso ? "an isomorphism" : "none";
    run.check(s, !iso.has_value(), "no isomorphism P -> CxB exists");
    run.check(s,
              pres.object.cells3().size() != cxb.object.cells3().size(),
              "3-cell counts differ: P has " +
                  std::to_string(pres.object.cells3().size()) + ", CxB has " +
                  std::to_string(cxb.object.cells3().size()));
  }

  report.preserved = iso.has_value();
  if (report.preserved) report.witness.clear();
  report.notes = g.notes;

  report.objects.emplace("A", po.a);
  report.objects.emplace("B", po.b);
  report.objects.emplace("E", po.e);
  report.objects.emplace("C", cres.object);
  report.objects.emplace("AxB", axb.object);
  report.objects.emplace("ExB", exb.object);
  report.objects.emplace("CxB", cxb.object);
  report.objects.emplace("P", pres.object);
  report.morphisms.emplace("alpha1", po.alpha1);
  report.morphisms.emplace("alpha2", po.alpha2);
  report.morphisms.emplace("beta", beta);
  report.morphisms.emplace("alpha1x1", a1x1);
  report.morphisms.emplace("alpha2x1", a2x1);
  report.morphisms.emplace("qP", qp);
  report.morphisms.emplace("betax1", betax1);
  report.morphisms.emplace("cmp", cmp);
  return report;
}

}  // namespace

PipelineReport run_counterexample() {
  Goldens g;
  g.c2 = {"[a1|a2]", "a3"};
  g.c3 = {"f : [a1|a2] * [a1|a2] -> a3"};
  g.axb2 = 9;
  g.axb3 = {"(f,g)#1 : (a1,b1) * (a2,b2) -> (a3,b3)",
            "(f,g)#2 : (a1,b2) * (a2,b1) -> (a3,b3)"};
  g.exb2 = 6;
  g.cxb2 = 6;
  g.cxb3 = {"(f,g)#1 : ([a1|a2],b1) * ([a1|a2],b2) -> (a3,b3)"};
  g.p2 = 6;
  g.p3 = {"(f,g)#1 : [(a1,b1)|(a2,b1)] * [(a1,b2)|(a2,b2)] -> (a3,b3)",
          "(f,g)#2 : [(a1,b1)|(a2,b1)] * [(a1,b2)|(a2,b2)] -> (a3,b3)"};
  g.a1x1_map2 = {{"(x,b1)", "(a1,b1)"}, {"(x,b2)", "(a1,b2)"},
                 {"(x,b3)", "(a1,b3)"}, {"(y,b1)", "(a3,b1)"},
                 {"(y,b2)", "(a3,b2)"}, {"(y,b3)", "(a3,b3)"}};
  g.a2x1_map2 = {{"(x,b1)", "(a2,b1)"}, {"(x,b2)", "(a2,b2)"},
                 {"(x,b3)", "(a2,b3)"}, {"(y,b1)", "(a3,b1)"},
                 {"(y,b2)", "(a3,b2)"}, {"(y,b3)", "(a3,b3)"}};
  g.notes = {
      "CxB has 6 2-cells, one per pair of a C 2-cell with a B 2-cell; the "
      "pairs (a3,b1), (a3,b2), (a3,b3) are forced by the universal property",
      "identifying a1 with a2 collapses the two source pairings of (f,g) "
      "into one, so CxB keeps a single 3-cell while P keeps two"};
  return run_pipeline(build_paper_objects(), g);
}

PipelineReport run_counterexample_empty_target_variant() {
  Goldens g;
  g.c2 = {"[a1|a2]"};
  g.c3 = {"f : [a1|a2] * [a1|a2] -> 1"};
  g.axb2 = 4;
  g.axb3 = {"(f,g)#1 : (a1,b1) * (a2,b2) -> 1",
            "(f,g)#2 : (a1,b2) * (a2,b1) -> 1"};
  g.exb2 = 2;
  g.cxb2 = 2;
  g.cxb3 = {"(f,g)#1 : ([a1|a2],b1) * ([a1|a2],b2) -> 1"};
  g.p2 = 2;
  g.p3 = {"(f,g)#1 : [(a1,b1)|(a2,b1)] * [(a1,b2)|(a2,b2)] -> 1",
          "(f,g)#2 : [(a1,b1)|(a2,b1)] * [(a1,b2)|(a2,b2)] -> 1"};
  g.a1x1_map2 = {{"(x,b1)", "(a1,b1)"}, {"(x,b2)", "(a1,b2)"}};
  g.a2x1_map2 = {{"(x,b1)", "(a2,b1)"}, {"(x,b2)", "(a2,b2)"}};
  g.notes = {
      "identifying a1 with a2 collapses the two source pairings of (f,g) "
      "into one, so CxB keeps a single 3-cell while P keeps two"};
  return run_pipeline(build_empty_target_objects(), g);
}

std::string format_report(const PipelineReport& r) {
  std::string out = "coequaliser preservation under - x B\n\n";
  for (const StepRecord& s : r.steps) {
    out += "step " + std::to_string(s.step) + ": " + s.title + "\n";
    out += "  produced: " + s.produced + "\n";
    for (const std::string& c : s.checks) out += "  check: " + c + "\n";
  }
  out += "\n";
  if (!r.witness.empty()) out += "witness: " + r.witness + "\n";
  for (const std::string& n : r.notes) out += "note: " + n + "\n";
  out += "\n";
  out += r.preserved ? "VERDICT: coequaliser preserved by - x B\n"
                     : "VERDICT: coequaliser NOT preserved by - x B\n";
  return out;
}

}  // namespace computads
