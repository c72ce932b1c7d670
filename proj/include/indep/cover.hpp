// Open covers by clopen sets, exact minimal subcovers of iterated join
// covers, combinatorial entropy profiles, and the trace map sending each
// admissible configuration to the tuple-index pattern it realizes.

#pragma once

#include <vector>

#include "indep/subshift.hpp"
#include "indep/trace.hpp"

namespace indep {

struct OpenCover {
    std::vector<ClopenSet> elements;
    SubshiftSpec ambient;
};

bool is_cover(const OpenCover& cover, int window_length);

// Minimal number of elements of the n-fold join of {U_1^c,..,U_k^c} under
// T^-1,..,T^-n needed to cover the subshift; the tuple must be pairwise
// disjoint (which makes the complements a genuine cover).
long long join_min_subcover(const SubshiftSpec& spec, const std::vector<ClopenSet>& tuple, int n,
                            long long node_budget = kDefaultCoverBudget);

struct EntropyRow {
    int n = 0;
    long long subcover = 0;  // N_n, exact
    double value = 0.0;      // (1/n) ln N_n, natural log
};

std::vector<EntropyRow> comb_entropy_profile(const SubshiftSpec& spec, const std::vector<ClopenSet>& tuple,
                                             int n_max, long long node_budget = kDefaultCoverBudget);

// Realized functions position -> {0,..,k}: value i where the configuration
// lies in the i-th shifted tuple set, 0 where it lies in none.
TraceSet trace(const SubshiftSpec& spec, const std::vector<ClopenSet>& tuple, const std::vector<Pos>& positions);

}  // namespace indep
