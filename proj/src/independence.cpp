#include "indep/independence.hpp"

#include <algorithm>

namespace indep {

void validate_problem(const IndependenceProblem& p) {
    if (p.tuple.empty()) throw InputError("independence tuple must be nonempty");
    for (size_t i = 0; i < p.tuple.size(); ++i) {
        if (p.tuple[i].alphabet() != p.spec.alphabet())
            throw InputError("tuple alphabet does not match subshift");
        std::vector<ShiftedSet> one{{&p.tuple[i], 0}};
        if (!p.spec.feasible_sets(one))
            throw InputError("tuple set " + std::to_string(i + 1) + " is empty at window scale");
    }
}

bool is_independence_set(const IndependenceProblem& p, const std::vector<Pos>& j,
                         const IndependenceBudget& budget) {
    if (p.tuple.empty()) throw InputError("independence tuple must be nonempty");
    std::vector<Pos> positions = j;
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    if (positions.empty()) return true;

    size_t k = p.tuple.size();
    std::uint64_t total = 1;
    for (size_t i = 0; i < positions.size(); ++i) {
        total *= static_cast<std::uint64_t>(k);
        if (total > budget.max_assignments)
            throw BudgetError("independence check: assignment family exceeds budget");
    }
    std::vector<ShiftedSet> cs(positions.size());
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (size_t i = 0; i < positions.size(); ++i) {
            cs[i] = ShiftedSet{&p.tuple[c % k], positions[i]};
            c /= k;
        }
        if (!p.spec.feasible_sets(cs)) return false;
    }
    return true;
}

namespace {

struct MaxSearch {
    const IndependenceProblem& p;
    const IndependenceBudget& budget;
    const std::vector<Pos>& candidates;
    long long nodes = 0;
    std::vector<Pos> best;
    std::vector<Pos> cur;

    // Include-first order over sorted candidates: the first subset reaching
    // each size is the lexicographically least, so improving only on strict
    // growth keeps the least maximum.
    void dfs(size_t idx) {
        if (cur.size() + (candidates.size() - idx) <= best.size()) return;
        if (idx == candidates.size()) return;
        if (++nodes > budget.max_nodes) throw BudgetError("independence subset search exceeded node budget");
        cur.push_back(candidates[idx]);
        if (is_independence_set(p, cur, budget)) {
            if (cur.size() > best.size()) best = cur;
            dfs(idx + 1);
        }
        cur.pop_back();
        dfs(idx + 1);
    }
};

}  // namespace

std::vector<Pos> max_independence_in(const IndependenceProblem& p, const std::vector<Pos>& candidates,
                                     const IndependenceBudget& budget) {
    validate_problem(p);
    std::vector<Pos> sorted = candidates;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (static_cast<int>(sorted.size()) > budget.max_interval)
        throw BudgetError("independence search interval exceeds budget");
    MaxSearch search{p, budget, sorted, 0, {}, {}};
    search.dfs(0);
    return search.best;
}

std::vector<Pos> max_independence_subset(const IndependenceProblem& p, Pos a, Pos b,
                                         const IndependenceBudget& budget) {
    if (b < a) throw InputError("interval [a,b) must have a <= b");
    if (b - a > budget.max_interval) throw BudgetError("independence search interval exceeds budget");
    std::vector<Pos> candidates;
    for (Pos s = a; s < b; ++s) candidates.push_back(s);
    return max_independence_in(p, candidates, budget);
}

DensityProfile density_profile(const IndependenceProblem& p, int n_max, const IndependenceBudget& budget) {
    if (n_max < 1) throw InputError("density profile needs n_max >= 1");
    DensityProfile prof;
    prof.rows.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Pos> best = max_independence_subset(p, 0, n, budget);
        prof.rows.push_back(DensityProfile::Row{n, static_cast<int>(best.size())});
    }
    int last = prof.rows.back().best;
    double ratio = static_cast<double>(last) / static_cast<double>(n_max);
    bool stable = true;
    for (int n = (n_max + 1) / 2; n <= n_max; ++n)
        if (prof.rows[static_cast<size_t>(n - 1)].best != last) stable = false;
    if (ratio >= 0.05)
        prof.hint = DensityHint::DensityBoundedBelow;
    else if (stable)
        prof.hint = DensityHint::Bounded;
    else
        prof.hint = DensityHint::UnboundedGrowth;
    return prof;
}

Decomposition decompose_independence(const IndependenceProblem& p, const ClopenSet& first_a,
                                     const ClopenSet& first_b, const std::vector<Pos>& h,
                                     const IndependenceBudget& budget) {
    validate_problem(p);
    if (!is_independence_set(p, h, budget))
        throw InputError("h is not an independence set for the unrefined tuple");
    if (!p.tuple.front().subset_of(first_a.union_with(first_b)))
        throw InputError("refinement does not cover the first tuple set");

    auto refined = [&](const ClopenSet& first) {
        IndependenceProblem q{p.spec, p.tuple};
        q.tuple[0] = first;
        return q;
    };
    IndependenceProblem pa = refined(first_a);
    IndependenceProblem pb = refined(first_b);

    std::vector<Pos> sorted = h;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto max_for = [&](const IndependenceProblem& q) -> std::vector<Pos> {
        // An empty refinement admits only the empty independence set.
        std::vector<ShiftedSet> one{{&q.tuple[0], 0}};
        if (!q.spec.feasible_sets(one)) return {};
        MaxSearch search{q, budget, sorted, 0, {}, {}};
        search.dfs(0);
        return search.best;
    };
    std::vector<Pos> ia = max_for(pa);
    std::vector<Pos> ib = max_for(pb);
    if (ia.size() >= ib.size()) return Decomposition{1, std::move(ia)};
    return Decomposition{2, std::move(ib)};
}

std::optional<Pos> joint_meeting_time(const SubshiftSpec& spec, const std::vector<ClopenSet>& opens, Pos lo,
                                      Pos hi) {
    if (opens.empty()) throw InputError("joint meeting time needs a nonempty collection");
    for (size_t i = 0; i < opens.size(); ++i) {
        std::vector<ShiftedSet> one{{&opens[i], 0}};
        if (!spec.feasible_sets(one))
            throw InputError("open set " + std::to_string(i + 1) + " is empty at window scale");
    }
    for (Pos s = lo; s < hi; ++s) {
        bool all = true;
        for (size_t i = 0; i < opens.size() && all; ++i)
            for (size_t j = 0; j < opens.size() && all; ++j) {
                std::vector<ShiftedSet> cs{{&opens[i], 0}, {&opens[j], s}};
                if (!spec.feasible_sets(cs)) all = false;
            }
        if (all) return s;
    }
    return std::nullopt;
}

}  // namespace indep
