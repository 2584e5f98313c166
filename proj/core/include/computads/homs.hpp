#pragma once

#include <optional>
#include <vector>

#include "computads/morphism.hpp"

namespace computads {

/* Cap on the a-priori candidate count |Y2|^|X2| * |Y3|^|X3| of a map
   search. Overridable per call and, in the CLI, per run. */
inline constexpr long long kDefaultSearchBudget = 10'000'000;

/* Every morphism X -> Y, each exactly once, sorted lexicographically by
   (map2 table, map3 table). Throws SearchBudgetExceeded when the a-priori
   candidate count is over budget. */
std::vector<Morphism> enumerate_homs(const Computad& x, const Computad& y,
                                     long long budget = kDefaultSearchBudget);

/* An isomorphism X -> Y or nullopt. Backtracks over 2-cell bijections
   compatible with per-cell boundary degree signatures; 3-cells then match
   by boundary groups. The witness returned is the least one in assignment
   order. Budget counts attempted partial assignments. */
std::optional<Morphism> find_isomorphism(
    const Computad& x, const Computad& y,
    long long budget = kDefaultSearchBudget);

}  // namespace computads
