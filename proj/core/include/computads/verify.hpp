#pragma once

#include <optional>
#include <string>
#include <vector>

#include "computads/constructions.hpp"
#include "computads/homs.hpp"

namespace computads {

/* Size box for the exhaustive test family: at most max_2cells 2-cells, at
   most max_3cells 3-cells, and each boundary multiset of size at most
   max_boundary_size. */
struct GeneratorBounds {
  int max_2cells = 0;
  int max_3cells = 0;
  int max_boundary_size = 0;
};

/* Every computad within the bounds, one representative per renaming class
   (canonical labels c1..cn / e1..em), in a fixed deterministic order.
   Representatives are chosen as the least boundary table under all
   permutations of the 2-cell labels, so no two results are isomorphic. */
std::vector<Computad> generate_computads(const GeneratorBounds& bounds);

struct UPFailure {
  std::string test_object;
  std::string cone;
  std::string reason;  // no-factorisation | non-unique-factorisation | non-commuting
};

/* Outcome of a universal-property sweep. bounds/budget record exactly what
   was quantified over, so a green report is a precise claim. */
struct UPReport {
  std::string subject;
  GeneratorBounds bounds;
  long long budget = kDefaultSearchBudget;
  long long family_size = 0;
  long long cones_checked = 0;
  std::vector<UPFailure> failures;  // capped; failures_total has the full count
  long long failures_total = 0;
  bool passed() const { return failures_total == 0; }
};

std::string format_report(const UPReport& r);

/* Checks that `candidate` has the universal property of the product of a
   and b against every cone (Y, u, v) with Y from the bounded family:
   exactly one k : Y -> candidate.object composes to (u, v), and that k is
   what pair_into_product builds. */
UPReport check_product_up(const Computad& a, const Computad& b,
                          const ProductResult& candidate,
                          const GeneratorBounds& bounds,
                          long long budget = kDefaultSearchBudget);

/* Same shape of check for the coequalizer of (a1, a2): for every Y from
   the family and every u with u.a1 == u.a2, exactly one k with k.q == u,
   equal to coeq_factor(candidate, u). */
UPReport check_coequalizer_up(const Morphism& a1, const Morphism& a2,
                              const CoequalizerResult& candidate,
                              const GeneratorBounds& bounds,
                              long long budget = kDefaultSearchBudget);

inline constexpr long long kDefaultOracleBudget = 10'000'000;

/* Independent count of the pairings of left with right: expand both to
   sequences, walk all size! index bijections, collect the induced pair
   multisets into a set. Shares no code with enumerate_pairings; meant to
   cross-check it. OracleBudgetExceeded when size! is over budget. */
long long count_pairings_oracle(const LabelMultiset& left,
                                const LabelMultiset& right,
                                long long budget = kDefaultOracleBudget);

/* First family member T with |Hom(Y, T)| == 1 for every family member Y;
   nullopt when none. Terminality is relative to the bounded family. */
std::optional<Computad> find_terminal(const GeneratorBounds& bounds,
                                      long long budget = kDefaultSearchBudget);
std::optional<Computad> find_terminal_in(const std::vector<Computad>& candidates,
                                         const std::vector<Computad>& family,
                                         long long budget = kDefaultSearchBudget);

}  // namespace computads
