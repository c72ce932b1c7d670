// Shattering combinatorics on trace sets: fully shattered windows, the count
// H_S of nonempty shattered subsets, exact largest shattered subsets, the
// constants of the counting lemma, hypothesis-checked witnesses, and the
// two-valued decomposition.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/rational.hpp"
#include "indep/trace.hpp"

namespace indep {

struct ShatterBudget {
    int max_window = 24;
    long long max_checks = 5'000'000;  // subset containment verifications
};

// Every map w -> {1..k} appears among the restrictions of s to w.
// Vacuously true for empty w.
bool is_fully_shattered(const TraceSet& s, const std::vector<Pos>& w);

// Maximum-cardinality fully shattered subset of the window, lexicographically
// least among maxima; empty when no coordinate is shattered.
std::vector<Pos> largest_shattered(const TraceSet& s, const ShatterBudget& budget = {});

// Number of nonempty fully shattered subsets (H_S).
long long count_shattered(const TraceSet& s, const ShatterBudget& budget = {});

struct KeyLemmaConstants {
    int k = 2;
    Rational b;
    Rational lambda;         // in (0,1/3), canonical 1/4 when feasible
    double b1 = 0, b2 = 0, t = 0;
    Rational c;              // sum_{1<=j<=cn} C(n,j) < 2^{tn} for all n
    std::vector<std::string> enforced;
};

KeyLemmaConstants key_lemma_constants(int k, const Rational& b);

struct KeyLemmaWitness {
    bool holds_hypothesis = false;  // F_S >= k^{b|Z|}, exact
    long long f_value = 0;
    std::vector<Pos> w;
    int window_size = 0;
};

KeyLemmaWitness key_lemma_witness(const TraceSet& s, const Rational& b, const ShatterBudget& budget = {},
                                  long long cover_budget = kDefaultCoverBudget);

// Karpovsky-Milman style extraction: when |S| >= ((k-1)*lambda)^n on a
// {1..k}-valued trace, a fully shattered subset of the window is returned.
std::optional<std::vector<Pos>> km_witness(const TraceSet& s, const Rational& lambda,
                                           const ShatterBudget& budget = {});

struct TwoValuedResult {
    int branch = 1;
    std::vector<Pos> positions;
};

// s lives over z_alphabet u {1,2} and collapses injectively onto
// (z_alphabet u {3})^window under 1,2 -> 3; returns the larger subset I with
// s|_I containing (z_alphabet u {branch})^I, branch 1 on ties.
TwoValuedResult two_valued_decompose(const TraceSet& s, const std::vector<int>& z_alphabet,
                                     const ShatterBudget& budget = {});

}  // namespace indep
