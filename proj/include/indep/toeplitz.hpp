// Toeplitz construction data: a tower of periods n_1 | n_2 | ... with a
// coherent residue system per level, block-translation structure, and a
// 0/1 value table whose level-j blocks enumerate every map {1..j} -> {0,1}.
//
// Level j stores j*2^j + 1 residues y[j][0..j*2^j] mod n_j.  Residue y[j][0]
// is the coherent anchor: deeper-level residues all lie in its class, so a
// position congruent to the deepest stored anchor cannot be decided from a
// truncated tower (the "uncertain" class); everything else is decided.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indep/word.hpp"

namespace indep {

struct ToeplitzSpec {
    int levels = 0;
    std::vector<long long> periods;                    // n_1 .. n_J
    std::vector<std::vector<long long>> residues;      // residues[j-1][k], 0 <= k <= j*2^j, values in [0, n_j)
    std::vector<std::vector<long long>> translations;  // translations[j-1][t-1] = z_{j,t}, 1 <= t < 2^j
    std::vector<std::vector<int>> values;              // values[j-1][k-1] = f(y_{j,k}), 1 <= k <= j*2^j
};

struct ToeplitzReport {
    bool ok = true;
    std::vector<std::string> violations;
};

struct ToeplitzBuildBudget {
    long long max_nodes = 20'000'000;   // residue-search backtracking nodes
    long long max_period = 10'000'000;  // give up past this period size
};

// Deterministic canonical search: smallest period multiplier first, smallest
// residues first, blocks as translates by the smallest valid step.
ToeplitzSpec build_toeplitz(int levels, const ToeplitzBuildBudget& budget = {});

ToeplitzReport verify_toeplitz(const ToeplitzSpec& spec);

// Value table over one deepest period: value[r] in {0,1}, certain[r] flag.
struct ToeplitzTable {
    long long period = 1;
    std::vector<std::int8_t> value;    // -1 where uncertain
    std::vector<int> level;            // value-carrying level, 0 elsewhere
    std::vector<long long> res_index;  // k with r = y_{level,k} mod n_level, 0 elsewhere

    int cell(Pos s) const {
        long long r = static_cast<long long>(s % period);
        if (r < 0) r += period;
        return value[static_cast<size_t>(r)];
    }
    bool certain(Pos s) const {
        long long r = static_cast<long long>(s % period);
        if (r < 0) r += period;
        return value[static_cast<size_t>(r)] >= 0;
    }
};

ToeplitzTable toeplitz_table(const ToeplitzSpec& spec, int truncation);

// x over [a,b) plus a per-position certainty mask.
std::pair<Word, std::vector<bool>> toeplitz_window(const ToeplitzSpec& spec, Pos a, Pos b);

// The stored (j,k) with s = y_{j,k} mod n_j, defined when x(s)=1 is certain.
std::optional<std::pair<int, long long>> toeplitz_jk(const ToeplitzSpec& spec, Pos s);

struct ToeplitzLemmaReport {
    long long shift_instances = 0;   // J-transport under a shift with x(s1+a)=0, x(s2+a)=1
    long long shift_failures = 0;
    long long triple_instances = 0;  // independent triples of certain ones share a level
    long long triple_failures = 0;
    long long split_instances = 0;   // split independence pushes levels up
    long long split_failures = 0;
    long long independent_sets = 0;
    bool ok() const { return shift_failures == 0 && triple_failures == 0 && split_failures == 0; }
};

ToeplitzLemmaReport check_toeplitz_lemmas(const ToeplitzSpec& spec, Pos window_lo, Pos window_hi,
                                          long long max_sets = 2'000'000);

}  // namespace indep
