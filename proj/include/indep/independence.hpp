// Independence sets for tuples of clopen sets: a set J of times is
// independent when every assignment of tuple indices to J is realized by
// some point simultaneously.  Exact membership, exact maximum subsets
// (lexicographically least among maxima), density profiles, the split
// refinement, and the joint meeting time.

#pragma once

#include <optional>
#include <vector>

#include "indep/subshift.hpp"

namespace indep {

struct IndependenceProblem {
    SubshiftSpec spec;
    std::vector<ClopenSet> tuple;  // k >= 1, disjointness not required
};

struct IndependenceBudget {
    long long max_nodes = 10'000'000;            // subset-search nodes
    int max_interval = 256;                      // candidate positions per search
    std::uint64_t max_assignments = 1ull << 22;  // index assignments per membership check
};

// Tuple nonempty and every set nonempty at window scale.
void validate_problem(const IndependenceProblem& p);

bool is_independence_set(const IndependenceProblem& p, const std::vector<Pos>& j,
                         const IndependenceBudget& budget = {});

// Maximum-cardinality independence subset of [a,b); among maxima the
// lexicographically least.
std::vector<Pos> max_independence_subset(const IndependenceProblem& p, Pos a, Pos b,
                                         const IndependenceBudget& budget = {});

// Same search over an explicit candidate position list.
std::vector<Pos> max_independence_in(const IndependenceProblem& p, const std::vector<Pos>& candidates,
                                     const IndependenceBudget& budget = {});

enum class DensityHint { DensityBoundedBelow, UnboundedGrowth, Bounded };

struct DensityProfile {
    struct Row {
        int n = 0;
        int best = 0;
    };
    std::vector<Row> rows;
    DensityHint hint = DensityHint::Bounded;
};

DensityProfile density_profile(const IndependenceProblem& p, int n_max, const IndependenceBudget& budget = {});

struct Decomposition {
    int branch = 1;  // which refinement of the first set kept the subset
    std::vector<Pos> kept;
};

// h must be independent for the unrefined tuple; first_a u first_b must
// contain the first tuple set.  Returns the larger exact refined subset,
// branch 1 on ties.
Decomposition decompose_independence(const IndependenceProblem& p, const ClopenSet& first_a,
                                     const ClopenSet& first_b, const std::vector<Pos>& h,
                                     const IndependenceBudget& budget = {});

// Least s in [lo,hi) with U_i meeting T^-s U_j for every ordered pair.
std::optional<Pos> joint_meeting_time(const SubshiftSpec& spec, const std::vector<ClopenSet>& opens, Pos lo,
                                      Pos hi);

}  // namespace indep
