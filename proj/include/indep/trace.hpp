// Trace sets: realized index-patterns over a finite window, with values in
// {0,..,k} (0 = "no set of the tuple applies").  F_S is the minimal number
// of coordinate-complement products needed to cover all patterns.

#pragma once

#include <vector>

#include "indep/setcover.hpp"
#include "indep/word.hpp"

namespace indep {

struct TraceSet {
    std::vector<Pos> window;              // strictly increasing positions
    int k = 1;                            // values lie in {0,..,k}
    std::vector<std::vector<int>> patterns;  // each of length |window|; sorted, distinct

    void validate() const;
    size_t size() const { return patterns.size(); }
};

TraceSet make_trace_set(std::vector<Pos> window, int k, std::vector<std::vector<int>> patterns);

// Minimal number of products prod_z {i_z}^c (1 <= i_z <= k) covering all
// patterns; a product covers a pattern that avoids i_z at every coordinate.
// 0 for the empty trace set.
long long f_s(const TraceSet& s, long long node_budget = kDefaultCoverBudget);

}  // namespace indep
