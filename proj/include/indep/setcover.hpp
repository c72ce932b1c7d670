// Exact minimum set cover by branch and bound.
//
// Bounds: a greedy cover from above, disjoint-element packing from below.
// Unit elements (covered by a single candidate) are propagated before
// branching.  The node budget guards exactness: past it the solver throws
// BudgetError instead of returning a heuristic answer.

#pragma once

#include <cstdint>
#include <vector>

#include "indep/errors.hpp"

namespace indep {

struct SetCoverInstance {
    int n_elements = 0;
    // candidates[c] lists the elements candidate c covers (sorted, distinct).
    std::vector<std::vector<int>> candidates;
};

struct SetCoverResult {
    int size = 0;
    std::vector<int> chosen;  // candidate indices, sorted
};

constexpr long long kDefaultCoverBudget = 50'000'000;

// Throws InputError when some element is uncoverable.
SetCoverResult min_set_cover(const SetCoverInstance& instance, long long node_budget = kDefaultCoverBudget);

}  // namespace indep
