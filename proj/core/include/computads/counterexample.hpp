#pragma once

#include <map>
#include <string>
#include <vector>

#include "computads/constructions.hpp"
#include "computads/homs.hpp"

namespace computads {

/* Input data for the non-preservation certificate: a parallel pair
   alpha1, alpha2 : E -> A and the right-hand product factor B. */
struct PaperObjects {
  Computad e;
  Computad a;
  Computad b;
  Morphism alpha1;
  Morphism alpha2;
};

/* A: 2-cells a1,a2,a3 and f : a1*a2 -> a3. E: 2-cells x,y, no 3-cells.
   B: same shape as A on b1,b2,b3 with 3-cell g. alpha1: x->a1, y->a3;
   alpha2: x->a2, y->a3. */
PaperObjects build_paper_objects();

/* Smaller variant with empty targets: A has 2-cells a1,a2 and
   f : a1*a2 -> 1; E is the single 2-cell x; alpha1: x->a1, alpha2: x->a2;
   B mirrors A on b1,b2 with 3-cell g. */
PaperObjects build_empty_target_objects();

struct StepRecord {
  int step = 0;
  std::string title;
  std::string produced;
  /* every recorded check passed; a failed check aborts the pipeline
     with InternalInvariantViolation naming the step */
  std::vector<std::string> checks;
};

/* Output of the nine-step pipeline. preserved is false iff
   find_isomorphism(P, CxB) found nothing; witness is non-empty exactly
   when not preserved and names the 3-cells the comparison map merges.
   objects/morphisms hold everything constructed, keyed by name, so the
   whole run can be dumped to files. */
struct PipelineReport {
  std::vector<StepRecord> steps;
  bool preserved = true;
  std::string witness;
  std::vector<std::string> notes;
  std::map<std::string, Computad> objects;
  std::map<std::string, Morphism> morphisms;
};

/* Plain-text rendering, byte-identical across runs; the last line is the
   verdict. */
std::string format_report(const PipelineReport& r);

/* The nine steps, each checked against frozen expected values:
     1. C = coequalizer(alpha1, alpha2), with projection beta
     2. AxB = product(A, B)
     3. ExB = product(E, B)
     4. CxB = product(C, B)
     5. alpha1x1 = alpha1 x B : ExB -> AxB
     6. alpha2x1 = alpha2 x B
     7. P = coequalizer(alpha1x1, alpha2x1), with projection qP
     8. cmp = comparison map P -> CxB, with cmp . qP == beta x 1
     9. find_isomorphism(P, CxB)
   The verdict is not-preserved: P has two 3-cells, CxB only one. */
PipelineReport run_counterexample();

/* The same nine steps on build_empty_target_objects(); the verdict is
   again not-preserved, with 3-cell counts 2 vs 1. */
PipelineReport run_counterexample_empty_target_variant();

}  // namespace computads
