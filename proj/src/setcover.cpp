#include "indep/setcover.hpp"

#include <algorithm>

namespace indep {

namespace {

struct Bitset {
    std::vector<std::uint64_t> w;
    int nbits = 0;

    explicit Bitset(int n = 0) : w((static_cast<size_t>(n) + 63) / 64, 0), nbits(n) {}
    void set(int i) { w[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return w[static_cast<size_t>(i) >> 6] & (1ull << (i & 63)); }
    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool none() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    void operator|=(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    void operator&=(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    Bitset and_not(const Bitset& o) const {
        Bitset r(nbits);
        for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    int intersect_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }
    int first_set() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + static_cast<size_t>(__builtin_ctzll(w[i])));
        return -1;
    }
};

struct Solver {
    int n;
    std::vector<Bitset> sets;           // candidate -> elements
    std::vector<std::vector<int>> covers;  // element -> candidates covering it
    long long budget;
    long long nodes = 0;

    int best_size = 0;
    std::vector<int> best;

    int greedy(const Bitset& uncovered_in, std::vector<int>* pick) const {
        Bitset uncovered = uncovered_in;
        int used = 0;
        while (!uncovered.none()) {
            int best_c = -1, best_gain = 0;
            for (size_t c = 0; c < sets.size(); ++c) {
                int gain = sets[c].intersect_count(uncovered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = static_cast<int>(c);
                }
            }
            if (best_c < 0) return -1;  // uncoverable
            uncovered = uncovered.and_not(sets[static_cast<size_t>(best_c)]);
            if (pick) pick->push_back(best_c);
            ++used;
        }
        return used;
    }

    // Pairwise-disjoint uncovered elements give a lower bound.
    int packing_bound(const Bitset& uncovered) const {
        Bitset blocked(n);
        int lb = 0;
        for (int e = 0; e < n; ++e) {
            if (!uncovered.test(e) || blocked.test(e)) continue;
            ++lb;
            for (int c : covers[static_cast<size_t>(e)]) blocked |= sets[static_cast<size_t>(c)];
        }
        return lb;
    }

    void dfs(Bitset uncovered, std::vector<int>& chosen) {
        if (++nodes > budget) throw BudgetError("set-cover search exceeded node budget");

        // Elements with a single candidate force their pick.
        size_t mark = chosen.size();
        for (int e = 0; e < n; ++e) {
            if (!uncovered.test(e)) continue;
            if (covers[static_cast<size_t>(e)].size() == 1) {
                int c = covers[static_cast<size_t>(e)][0];
                chosen.push_back(c);
                uncovered = uncovered.and_not(sets[static_cast<size_t>(c)]);
            }
        }

        if (uncovered.none()) {
            if (static_cast<int>(chosen.size()) < best_size) {
                best_size = static_cast<int>(chosen.size());
                best = chosen;
            }
        } else if (static_cast<int>(chosen.size()) + packing_bound(uncovered) < best_size) {
            // Branch on the uncovered element with fewest candidates.
            int pivot = -1;
            size_t fewest = SIZE_MAX;
            for (int e = 0; e < n; ++e) {
                if (!uncovered.test(e)) continue;
                size_t deg = covers[static_cast<size_t>(e)].size();
                if (deg < fewest) {
                    fewest = deg;
                    pivot = e;
                }
            }
            std::vector<int> order = covers[static_cast<size_t>(pivot)];
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                int ga = sets[static_cast<size_t>(a)].intersect_count(uncovered);
                int gb = sets[static_cast<size_t>(b)].intersect_count(uncovered);
                if (ga != gb) return ga > gb;
                return a < b;
            });
            for (int c : order) {
                chosen.push_back(c);
                dfs(uncovered.and_not(sets[static_cast<size_t>(c)]), chosen);
                chosen.pop_back();
            }
        }
        chosen.resize(mark);
    }
};

}  // namespace

SetCoverResult min_set_cover(const SetCoverInstance& instance, long long node_budget) {
    int n = instance.n_elements;
    if (n == 0) return SetCoverResult{0, {}};

    Solver s;
    s.n = n;
    s.budget = node_budget;
    s.sets.reserve(instance.candidates.size());
    for (const auto& cand : instance.candidates) {
        Bitset b(n);
        for (int e : cand) {
            if (e < 0 || e >= n) throw InputError("set-cover candidate element out of range");
            b.set(e);
        }
        s.sets.push_back(std::move(b));
    }
    s.covers.assign(static_cast<size_t>(n), {});
    for (size_t c = 0; c < s.sets.size(); ++c)
        for (int e : instance.candidates[c]) s.covers[static_cast<size_t>(e)].push_back(static_cast<int>(c));
    for (int e = 0; e < n; ++e)
        if (s.covers[static_cast<size_t>(e)].empty()) throw InputError("set-cover element has no covering candidate");

    Bitset all(n);
    for (int e = 0; e < n; ++e) all.set(e);
    std::vector<int> seed;
    int ub = s.greedy(all, &seed);
    s.best_size = ub;
    s.best = seed;

    std::vector<int> chosen;
    s.dfs(all, chosen);

    std::sort(s.best.begin(), s.best.end());
    return SetCoverResult{s.best_size, s.best};
}

}  // namespace indep
