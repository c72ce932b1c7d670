// Shared test utilities: seeded generators, naive reference oracles, and a
// small process-capture helper for CLI checks.

#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "indep/clopen.hpp"
#include "indep/independence.hpp"
#include "indep/setcover.hpp"
#include "indep/subshift.hpp"

namespace testutil {

using indep::ClopenSet;
using indep::Pos;
using indep::SubshiftSpec;
using indep::Word;

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline int pick(std::mt19937_64& g, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(g() % static_cast<unsigned long long>(hi - lo + 1));
}

// Random nonempty SFT: retries until the essential part is nonempty.
inline SubshiftSpec random_sft(std::mt19937_64& g, int alphabet, int memory, int max_forbidden) {
    for (;;) {
        int nf = pick(g, 0, max_forbidden);
        std::vector<Word> forbidden;
        for (int i = 0; i < nf; ++i) {
            Word w(static_cast<size_t>(memory));
            for (auto& s : w) s = pick(g, 0, alphabet - 1);
            forbidden.push_back(std::move(w));
        }
        SubshiftSpec spec = SubshiftSpec::sft(alphabet, memory, forbidden);
        if (!spec.empty_shift()) return spec;
    }
}

// Exponential-time reference: smallest cover by trying all candidate subsets
// in increasing cardinality.
inline int naive_min_cover(const indep::SetCoverInstance& inst) {
    size_t c = inst.candidates.size();
    std::vector<std::uint64_t> sets(c, 0);
    for (size_t i = 0; i < c; ++i)
        for (int e : inst.candidates[i]) sets[i] |= 1ull << e;
    std::uint64_t all = inst.n_elements == 64 ? ~0ull : (1ull << inst.n_elements) - 1;
    for (size_t size = 0; size <= c; ++size) {
        std::vector<int> idx(size);
        // enumerate all subsets of this cardinality
        std::vector<size_t> comb(size);
        for (size_t i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            std::uint64_t got = 0;
            for (size_t i = 0; i < size; ++i) got |= sets[comb[i]];
            if ((got & all) == all) return static_cast<int>(size);
            // next combination
            size_t i = size;
            while (i > 0) {
                --i;
                if (comb[i] + (size - i) < c) {
                    ++comb[i];
                    for (size_t j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
            if (size == 0) break;
        }
    next_size:;
    }
    return -1;
}

// Membership by brute force over admissible span words.
inline bool enum_feasible(const SubshiftSpec& spec, const std::vector<indep::Constraint>& cs) {
    if (cs.empty()) return !spec.empty_shift();
    Pos lo = cs.front().pos, hi = cs.front().pos;
    for (const auto& c : cs) {
        lo = std::min(lo, c.pos);
        hi = std::max(hi, c.pos);
    }
    auto words = spec.language(static_cast<int>(hi - lo + 1));
    for (const auto& w : words) {
        bool ok = true;
        for (const auto& c : cs)
            if (w[static_cast<size_t>(c.pos - lo)] != c.sym) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

// All-subsets maximum independence oracle (lexicographically least maximum).
inline std::vector<Pos> oracle_max_independent(const indep::IndependenceProblem& p, Pos a, Pos b) {
    int n = static_cast<int>(b - a);
    std::vector<Pos> best;
    std::vector<std::vector<Pos>> by_size;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<Pos> j;
        for (int i = 0; i < n; ++i)
            if (mask & (1ull << i)) j.push_back(a + i);
        if (j.size() < best.size()) continue;
        if (indep::is_independence_set(p, j)) {
            if (j.size() > best.size() || (j.size() == best.size() && (best.empty() || j < best)))
                best = j;
        }
    }
    return best;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run_cli(const std::string& cmdline) {
    std::string cmd = cmdline + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

inline ClopenSet sym_at(int alphabet, Pos pos, int sym) {
    return ClopenSet::cylinder(alphabet, pos, Word{sym});
}

}  // namespace testutil
