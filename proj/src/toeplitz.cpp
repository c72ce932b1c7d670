#include "indep/toeplitz.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "indep/errors.hpp"

namespace indep {

namespace {

long long value_count(int j) { return static_cast<long long>(j) << j; }

void check_shape(const ToeplitzSpec& spec) {
    if (spec.levels < 1) throw InputError("Toeplitz spec must store at least one level");
    size_t J = static_cast<size_t>(spec.levels);
    if (spec.periods.size() != J || spec.residues.size() != J || spec.translations.size() != J ||
        spec.values.size() != J)
        throw InputError("Toeplitz spec arrays disagree with level count");
    for (int j = 1; j <= spec.levels; ++j) {
        size_t cnt = static_cast<size_t>(value_count(j));
        if (spec.residues[static_cast<size_t>(j - 1)].size() != cnt + 1)
            throw InputError("level " + std::to_string(j) + " must store " + std::to_string(cnt + 1) + " residues");
        if (spec.translations[static_cast<size_t>(j - 1)].size() != (1ull << j) - 1)
            throw InputError("level " + std::to_string(j) + " translation count mismatch");
        if (spec.values[static_cast<size_t>(j - 1)].size() != cnt)
            throw InputError("level " + std::to_string(j) + " value count mismatch");
    }
}

long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

ToeplitzTable toeplitz_table(const ToeplitzSpec& spec, int truncation) {
    check_shape(spec);
    if (truncation < 1 || truncation > spec.levels) throw InputError("Toeplitz truncation out of range");
    ToeplitzTable t;
    t.period = spec.periods[static_cast<size_t>(truncation - 1)];
    if (t.period < 1) throw InputError("Toeplitz period must be positive");
    t.value.assign(static_cast<size_t>(t.period), 0);
    t.level.assign(static_cast<size_t>(t.period), 0);
    t.res_index.assign(static_cast<size_t>(t.period), 0);
    for (int j = 1; j <= truncation; ++j) {
        long long nj = spec.periods[static_cast<size_t>(j - 1)];
        if (nj < 1 || t.period % nj != 0) throw InputError("Toeplitz periods must divide the deepest period");
        for (long long k = 1; k <= value_count(j); ++k) {
            long long y = mod_pos(spec.residues[static_cast<size_t>(j - 1)][static_cast<size_t>(k)], nj);
            int f = spec.values[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
            for (long long r = y; r < t.period; r += nj) {
                if (t.level[static_cast<size_t>(r)] != 0)
                    throw InputError("value-carrying residue classes collide; spec is inconsistent");
                t.value[static_cast<size_t>(r)] = static_cast<std::int8_t>(f);
                t.level[static_cast<size_t>(r)] = j;
                t.res_index[static_cast<size_t>(r)] = k;
            }
        }
    }
    long long anchor = mod_pos(spec.residues[static_cast<size_t>(truncation - 1)][0], t.period);
    if (t.level[static_cast<size_t>(anchor)] != 0)
        throw InputError("anchor residue collides with a value class; spec is inconsistent");
    t.value[static_cast<size_t>(anchor)] = -1;
    return t;
}

std::pair<Word, std::vector<bool>> toeplitz_window(const ToeplitzSpec& spec, Pos a, Pos b) {
    if (b <= a) throw InputError("window [a,b) must be nonempty");
    ToeplitzTable t = toeplitz_table(spec, spec.levels);
    Word w;
    std::vector<bool> certain;
    w.reserve(static_cast<size_t>(b - a));
    certain.reserve(static_cast<size_t>(b - a));
    for (Pos s = a; s < b; ++s) {
        int c = t.cell(s);
        w.push_back(c < 0 ? 0 : c);
        certain.push_back(c >= 0);
    }
    return {std::move(w), std::move(certain)};
}

std::optional<std::pair<int, long long>> toeplitz_jk(const ToeplitzSpec& spec, Pos s) {
    ToeplitzTable t = toeplitz_table(spec, spec.levels);
    long long r = mod_pos(s, t.period);
    if (t.value[static_cast<size_t>(r)] == 1 && t.level[static_cast<size_t>(r)] > 0)
        return std::make_pair(t.level[static_cast<size_t>(r)], t.res_index[static_cast<size_t>(r)]);
    return std::nullopt;
}

// ---------------------------------------------------------------- verifier

ToeplitzReport verify_toeplitz(const ToeplitzSpec& spec) {
    ToeplitzReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    try {
        check_shape(spec);
    } catch (const InputError& e) {
        fail(std::string("shape: ") + e.what());
        return rep;
    }

    for (int j = 1; j <= spec.levels; ++j) {
        long long nj = spec.periods[static_cast<size_t>(j - 1)];
        const auto& ys = spec.residues[static_cast<size_t>(j - 1)];
        if (nj < 1) fail("level " + std::to_string(j) + ": period must be positive");
        if (j >= 2) {
            long long prev = spec.periods[static_cast<size_t>(j - 2)];
            if (!(prev < nj)) fail("periods must be strictly increasing at level " + std::to_string(j));
            if (nj % prev != 0) fail("period divisibility fails at level " + std::to_string(j));
        }
        std::set<long long> seen;
        for (long long y : ys) {
            if (y < 0 || y >= nj) fail("level " + std::to_string(j) + ": residue out of range [0,n_j)");
            if (!seen.insert(mod_pos(y, nj)).second) fail("level " + std::to_string(j) + ": residues not distinct");
        }
        for (int f : spec.values[static_cast<size_t>(j - 1)])
            if (f != 0 && f != 1) fail("level " + std::to_string(j) + ": values must be 0/1");
    }
    if (!rep.ok) return rep;

    // (i): every deeper residue is congruent to the previous anchor.
    for (int j = 1; j < spec.levels; ++j) {
        long long nj = spec.periods[static_cast<size_t>(j - 1)];
        long long anchor = spec.residues[static_cast<size_t>(j - 1)][0];
        const auto& deeper = spec.residues[static_cast<size_t>(j)];
        for (size_t k = 0; k < deeper.size(); ++k) {
            if (mod_pos(deeper[k] - anchor, nj) != 0) {
                std::ostringstream os;
                os << "(i): y[" << j + 1 << "," << k << "] is not congruent to y[" << j << ",0] mod n_" << j;
                fail(os.str());
            }
        }
    }

    // (ii): consecutive blocks are translates.
    for (int j = 1; j <= spec.levels; ++j) {
        long long nj = spec.periods[static_cast<size_t>(j - 1)];
        const auto& ys = spec.residues[static_cast<size_t>(j - 1)];
        auto block = [&](long long tt) {  // 1-based block index
            std::set<long long> b;
            for (long long k = (tt - 1) * j + 1; k <= tt * j; ++k)
                b.insert(mod_pos(ys[static_cast<size_t>(k)], nj));
            return b;
        };
        for (long long tt = 1; tt < (1ll << j); ++tt) {
            long long z = spec.translations[static_cast<size_t>(j - 1)][static_cast<size_t>(tt - 1)];
            std::set<long long> shifted;
            for (long long y : block(tt)) shifted.insert(mod_pos(y + z, nj));
            if (shifted != block(tt + 1)) {
                std::ostringstream os;
                os << "(ii): Y[" << j << "," << tt + 1 << "] is not Y[" << j << "," << tt << "] + z";
                fail(os.str());
            }
        }
    }

    // (iv): y_{k1} - y_0 never equals y_{k3} - y_{k2}.
    for (int j = 1; j <= spec.levels; ++j) {
        long long nj = spec.periods[static_cast<size_t>(j - 1)];
        const auto& ys = spec.residues[static_cast<size_t>(j - 1)];
        long long cnt = value_count(j);
        bool bad = false;
        for (long long k1 = 1; k1 <= cnt && !bad; ++k1)
            for (long long k2 = 1; k2 <= cnt && !bad; ++k2)
                for (long long k3 = 0; k3 <= cnt && !bad; ++k3)
                    if (mod_pos(ys[static_cast<size_t>(k1)] - ys[0], nj) ==
                        mod_pos(ys[static_cast<size_t>(k3)] - ys[static_cast<size_t>(k2)], nj)) {
                        std::ostringstream os;
                        os << "(iv): level " << j << " difference collision at (k1,k2,k3)=(" << k1 << "," << k2
                           << "," << k3 << ")";
                        fail(os.str());
                        bad = true;
                    }
    }

    // f-enumeration: the blocks of level j spell out all of {0,1}^j.
    for (int j = 1; j <= spec.levels; ++j) {
        const auto& fs = spec.values[static_cast<size_t>(j - 1)];
        std::set<std::uint64_t> seen;
        for (long long tt = 1; tt <= (1ll << j); ++tt) {
            std::uint64_t pat = 0;
            for (int p = 1; p <= j; ++p) {
                long long k = (tt - 1) * j + p;
                if (fs[static_cast<size_t>(k - 1)]) pat |= 1ull << (p - 1);
            }
            seen.insert(pat);
        }
        if (seen.size() != (1ull << j))
            fail("f-enumeration: level " + std::to_string(j) + " blocks do not spell out all binary patterns");
    }

    // (iii) finite surrogate: anchors strictly increase and stay below n_j/2,
    // so no single integer can agree with every anchor class.
    for (int j = 1; j <= spec.levels; ++j) {
        long long nj = spec.periods[static_cast<size_t>(j - 1)];
        long long anchor = spec.residues[static_cast<size_t>(j - 1)][0];
        if (!(2 * anchor < nj)) fail("(iii) surrogate: anchor at level " + std::to_string(j) + " is not < n_j/2");
        if (j >= 2 && !(spec.residues[static_cast<size_t>(j - 2)][0] < anchor))
            fail("(iii) surrogate: anchors are not strictly increasing at level " + std::to_string(j));
    }

    // Cross-level consistency of the value table.
    if (rep.ok) {
        try {
            toeplitz_table(spec, spec.levels);
        } catch (const InputError& e) {
            fail(std::string("table: ") + e.what());
        }
    }
    return rep;
}

// ---------------------------------------------------------------- builder

namespace {

// Residue search in the quotient Z_M: choose `cnt` distinct nonzero steps E
// (grouped into `blocks` translate-structured blocks of size `bsize`) with
// (E+E) mod M disjoint from E and from {0}.  This is exactly condition (iv)
// after dividing out the previous period.
struct QuotientSearch {
    long long M;
    int bsize;
    int blocks;
    long long m0;  // slot already taken by the anchor
    long long* nodes;
    long long node_budget;

    std::vector<char> in_e;     // element present
    std::vector<int> sum_mult;  // multiplicity of each value as a pairwise sum
    std::vector<long long> chosen;

    QuotientSearch(long long M_, int bsize_, int blocks_, long long m0_, long long* nodes_, long long budget)
        : M(M_), bsize(bsize_), blocks(blocks_), m0(m0_), nodes(nodes_), node_budget(budget),
          in_e(static_cast<size_t>(M_), 0), sum_mult(static_cast<size_t>(M_), 0) {}

    bool can_add(long long e) const {
        if (e == 0 || in_e[static_cast<size_t>(e)]) return false;
        if (sum_mult[static_cast<size_t>(e)] > 0) return false;  // e is an existing sum
        // New sums must avoid 0, the old elements, and e itself.
        long long twice = (e + e) % M;
        if (twice == 0 || in_e[static_cast<size_t>(twice)] || twice == e) return false;
        for (long long d : chosen) {
            long long s = (e + d) % M;
            if (s == 0 || in_e[static_cast<size_t>(s)] || s == e) return false;
        }
        return true;
    }

    void add(long long e) {
        for (long long d : chosen) ++sum_mult[static_cast<size_t>((e + d) % M)];
        ++sum_mult[static_cast<size_t>((e + e) % M)];
        in_e[static_cast<size_t>(e)] = 1;
        chosen.push_back(e);
    }

    void remove() {
        long long e = chosen.back();
        chosen.pop_back();
        in_e[static_cast<size_t>(e)] = 0;
        --sum_mult[static_cast<size_t>((e + e) % M)];
        for (long long d : chosen) --sum_mult[static_cast<size_t>((e + d) % M)];
    }

    // Slot order: anchors come from ascending residues, i.e. ascending m with
    // e = (m - m0) mod M.
    long long slot_to_e(long long m) const { return mod_pos(m - m0, M); }

    bool search_first_block(long long from_slot, int depth, std::vector<long long>& zetas) {
        if (depth == bsize) return search_blocks(1, zetas);
        for (long long m = from_slot; m < M; ++m) {
            if (m == m0) continue;
            if (++*nodes > node_budget) throw BudgetError("Toeplitz residue search exceeded node budget");
            long long e = slot_to_e(m);
            if (!can_add(e)) continue;
            add(e);
            if (search_first_block(m + 1, depth + 1, zetas)) return true;
            remove();
        }
        return false;
    }

    bool search_blocks(int done, std::vector<long long>& zetas) {
        if (done == blocks) return true;
        size_t base = static_cast<size_t>((done - 1) * bsize);
        for (long long zeta = 1; zeta < M; ++zeta) {
            if (++*nodes > node_budget) throw BudgetError("Toeplitz residue search exceeded node budget");
            int added = 0;
            bool ok = true;
            for (int p = 0; p < bsize; ++p) {
                long long e = (chosen[base + static_cast<size_t>(p)] + zeta) % M;
                if (mod_pos(e + m0, M) == m0 || !can_add(e)) {  // e == 0 is the anchor slot
                    ok = false;
                    break;
                }
                add(e);
                ++added;
            }
            if (ok) {
                zetas.push_back(zeta);
                if (search_blocks(done + 1, zetas)) return true;
                zetas.pop_back();
            }
            for (int p = 0; p < added; ++p) remove();
        }
        return false;
    }
};

}  // namespace

ToeplitzSpec build_toeplitz(int levels, const ToeplitzBuildBudget& budget) {
    if (levels < 1) throw InputError("Toeplitz levels must be >= 1");
    ToeplitzSpec spec;
    spec.levels = levels;
    long long nodes = 0;
    long long prev_period = 1;
    long long prev_anchor = 0;

    for (int j = 1; j <= levels; ++j) {
        long long cnt = value_count(j);
        int blocks = 1 << j;
        long long m0 = (j == 1) ? 0 : 1;  // anchor slot: y_{j,0} = y_{j-1,0} + n_{j-1} for j >= 2
        bool found = false;
        for (long long M = cnt + 2; !found; ++M) {
            if (prev_period * M > budget.max_period)
                throw BudgetError("Toeplitz build: no residue system below the period cap (violated: quotient "
                                  "difference condition at level " + std::to_string(j) + ")");
            QuotientSearch qs(M, j, blocks, m0, &nodes, budget.max_nodes);
            std::vector<long long> zetas;
            if (qs.search_first_block(0, 0, zetas)) {
                long long nj = prev_period * M;
                long long anchor = (j == 1) ? 0 : prev_anchor + prev_period;
                std::vector<long long> ys;
                ys.push_back(anchor);
                for (long long e : qs.chosen) ys.push_back(mod_pos(anchor + e * prev_period, nj));
                std::vector<long long> zs;
                for (long long zeta : zetas) zs.push_back(mod_pos(zeta * prev_period, nj));
                std::vector<int> fs;
                for (long long tt = 1; tt <= blocks; ++tt)
                    for (int p = 1; p <= j; ++p) fs.push_back(static_cast<int>(((tt - 1) >> (p - 1)) & 1));

                spec.periods.push_back(nj);
                spec.residues.push_back(std::move(ys));
                spec.translations.push_back(std::move(zs));
                spec.values.push_back(std::move(fs));
                prev_period = nj;
                prev_anchor = anchor;
                found = true;
            }
        }
    }
    ToeplitzReport rep = verify_toeplitz(spec);
    if (!rep.ok) throw BudgetError("Toeplitz build produced an invalid spec: " + rep.violations.front());
    return spec;
}

// ---------------------------------------------------------------- lemma checks

namespace {

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(size_t i) { w[i >> 6] |= 1ull << (i & 63); }
    bool any() const {
        for (std::uint64_t x : w)
            if (x) return true;
        return false;
    }
    static bool and_any(const Bits& a, const Bits& b) {
        for (size_t i = 0; i < a.w.size(); ++i)
            if (a.w[i] & b.w[i]) return true;
        return false;
    }
    void and_into(const Bits& a, const Bits& b) {
        w.resize(a.w.size());
        for (size_t i = 0; i < a.w.size(); ++i) w[i] = a.w[i] & b.w[i];
    }
};

struct LemmaContext {
    ToeplitzTable table;
    std::vector<Pos> window;
    std::vector<Bits> one, zero, cert_one, cert_zero;  // by window index, over alignments
    std::vector<std::vector<Bits>> level_gt;           // level_gt[j][i]: certain one with level > j
    int max_level = 0;

    int level_of(Pos s) const {
        long long r = mod_pos(s, table.period);
        return table.level[static_cast<size_t>(r)];
    }
};

LemmaContext build_context(const ToeplitzSpec& spec, Pos lo, Pos hi) {
    LemmaContext cx{toeplitz_table(spec, spec.levels), {}, {}, {}, {}, {}, {}, spec.levels};
    long long P = cx.table.period;
    if (hi - lo > P) throw HorizonError("lemma window exceeds the certainty horizon (one deepest period)");
    size_t n = static_cast<size_t>(hi - lo);
    size_t words_budget = (static_cast<size_t>(P) / 64 + 1) * n * (static_cast<size_t>(spec.levels) + 5);
    if (words_budget > (1ull << 26)) throw BudgetError("lemma window too large for alignment masks");
    for (Pos s = lo; s < hi; ++s) cx.window.push_back(s);
    cx.one.assign(n, Bits(static_cast<size_t>(P)));
    cx.zero.assign(n, Bits(static_cast<size_t>(P)));
    cx.cert_one.assign(n, Bits(static_cast<size_t>(P)));
    cx.cert_zero.assign(n, Bits(static_cast<size_t>(P)));
    cx.level_gt.assign(static_cast<size_t>(spec.levels) + 1, {});
    for (int j = 0; j <= spec.levels; ++j) cx.level_gt[static_cast<size_t>(j)].assign(n, Bits(static_cast<size_t>(P)));
    for (size_t i = 0; i < n; ++i) {
        Pos s = cx.window[i];
        for (long long a = 0; a < P; ++a) {
            long long r = mod_pos(s + a, P);
            int v = cx.table.value[static_cast<size_t>(r)];
            int lv = cx.table.level[static_cast<size_t>(r)];
            if (v != 0) cx.one[i].set(static_cast<size_t>(a));    // 1 or undecided
            if (v != 1) cx.zero[i].set(static_cast<size_t>(a));   // 0 or undecided
            if (v == 1) {
                cx.cert_one[i].set(static_cast<size_t>(a));
                for (int j = 0; j < lv; ++j) cx.level_gt[static_cast<size_t>(j)][i].set(static_cast<size_t>(a));
            }
            if (v == 0) cx.cert_zero[i].set(static_cast<size_t>(a));
        }
    }
    return cx;
}

// Enumerate independence sets of window positions for the value/complement
// pair, by depth-first extension; downward closure makes every independent
// set reachable through its prefix chain.
struct IndepEnumerator {
    const LemmaContext& cx;
    long long max_sets;
    long long visited = 0;
    std::vector<std::vector<char>> pair_ok;  // pairwise independence prefilter

    explicit IndepEnumerator(const LemmaContext& c, long long cap) : cx(c), max_sets(cap) {
        size_t n = cx.window.size();
        pair_ok.assign(n, std::vector<char>(n, 0));
        for (size_t i = 0; i < n; ++i) {
            for (size_t l = i + 1; l < n; ++l) {
                bool ok = Bits::and_any(cx.one[i], cx.one[l]) && Bits::and_any(cx.one[i], cx.zero[l]) &&
                          Bits::and_any(cx.zero[i], cx.one[l]) && Bits::and_any(cx.zero[i], cx.zero[l]);
                pair_ok[i][l] = pair_ok[l][i] = ok ? 1 : 0;
            }
        }
    }

    // visit(indices, pattern_masks) is called for every independent set of
    // size >= 1; pattern masks are indexed by the bits of the assignment
    // (bit b set = position indices[b] takes value 1).
    template <typename Visit>
    void run(Visit&& visit) {
        size_t n = cx.window.size();
        std::vector<size_t> idx;
        std::vector<Bits> masks;
        for (size_t i = 0; i < n; ++i) {
            if (!(cx.one[i].any() && cx.zero[i].any())) continue;
            idx.assign(1, i);
            masks.assign(2, Bits());
            masks[0] = cx.zero[i];
            masks[1] = cx.one[i];
            if (++visited > max_sets) throw BudgetError("independent-set enumeration exceeded budget");
            visit(idx, masks);
            extend(idx, masks, visit);
        }
    }

    template <typename Visit>
    void extend(std::vector<size_t>& idx, std::vector<Bits>& masks, Visit&& visit) {
        size_t n = cx.window.size();
        for (size_t cand = idx.back() + 1; cand < n; ++cand) {
            bool compatible = true;
            for (size_t i : idx)
                if (!pair_ok[i][cand]) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            std::vector<Bits> next(masks.size() * 2);
            bool indep = true;
            for (size_t p = 0; p < masks.size() && indep; ++p) {
                next[p].and_into(masks[p], cx.zero[cand]);
                if (!next[p].any()) indep = false;
                next[p + masks.size()].and_into(masks[p], cx.one[cand]);
                if (!next[p + masks.size()].any()) indep = false;
            }
            if (!indep) continue;
            if (++visited > max_sets) throw BudgetError("independent-set enumeration exceeded budget");
            idx.push_back(cand);
            visit(idx, next);
            extend(idx, next, visit);
            idx.pop_back();
        }
    }
};

}  // namespace

ToeplitzLemmaReport check_toeplitz_lemmas(const ToeplitzSpec& spec, Pos window_lo, Pos window_hi,
                                          long long max_sets) {
    if (window_hi <= window_lo) throw InputError("lemma window must be nonempty");
    LemmaContext cx = build_context(spec, window_lo, window_hi);
    long long P = cx.table.period;
    size_t n = cx.window.size();
    ToeplitzLemmaReport rep;

    // Certain ones inside the window, with their levels.
    std::vector<size_t> ones;
    for (size_t i = 0; i < n; ++i)
        if (cx.table.value[static_cast<size_t>(mod_pos(cx.window[i], P))] == 1) ones.push_back(i);

    // Shift transport: x(s1)=x(s2)=1 with J(s1)<J(s2), and a shift a turning
    // s1 off while keeping s2 on, forces J(s2+a)=J(s1).
    for (size_t i1 : ones) {
        for (size_t i2 : ones) {
            int j1 = cx.level_of(cx.window[i1]);
            int j2 = cx.level_of(cx.window[i2]);
            if (!(j1 < j2)) continue;
            Bits cand;
            cand.and_into(cx.cert_zero[i1], cx.cert_one[i2]);
            for (size_t wi = 0; wi < cand.w.size(); ++wi) {
                std::uint64_t bits = cand.w[wi];
                while (bits) {
                    long long a = static_cast<long long>(wi * 64 + static_cast<size_t>(__builtin_ctzll(bits)));
                    bits &= bits - 1;
                    ++rep.shift_instances;
                    if (cx.level_of(cx.window[i2] + a) != j1) ++rep.shift_failures;
                }
            }
        }
    }

    // Independent triples of certain ones share one level.
    for (size_t a = 0; a < ones.size(); ++a)
        for (size_t b = a + 1; b < ones.size(); ++b)
            for (size_t c = b + 1; c < ones.size(); ++c) {
                size_t i1 = ones[a], i2 = ones[b], i3 = ones[c];
                bool indep = true;
                for (int pat = 0; pat < 8 && indep; ++pat) {
                    Bits t1;
                    t1.and_into((pat & 1) ? cx.one[i1] : cx.zero[i1], (pat & 2) ? cx.one[i2] : cx.zero[i2]);
                    Bits t2;
                    t2.and_into(t1, (pat & 4) ? cx.one[i3] : cx.zero[i3]);
                    if (!t2.any()) indep = false;
                }
                if (!indep) continue;
                ++rep.triple_instances;
                int j1 = cx.level_of(cx.window[i1]);
                int j2 = cx.level_of(cx.window[i2]);
                int j3 = cx.level_of(cx.window[i3]);
                if (!(j1 == j2 && j2 == j3)) ++rep.triple_failures;
            }

    // Split independence: for every independent K and bipartition K = H u H'
    // with |H| >= j(2^j+1), some shift sends H' u (H minus at most j
    // positions) to certain ones of level > j.
    IndepEnumerator en(cx, max_sets);
    en.run([&](const std::vector<size_t>& idx, const std::vector<Bits>&) {
        ++rep.independent_sets;
        size_t sz = idx.size();
        if (sz < 2) return;
        if (sz > 20) throw BudgetError("independent set too large for split bookkeeping");

        // j = 0 asks for a shift sending the whole set to certain ones; one
        // alignment certifies every bipartition at once.
        {
            Bits acc = cx.level_gt[0][idx[0]];
            for (size_t b = 1; b < sz && acc.any(); ++b) {
                Bits next;
                next.and_into(acc, cx.level_gt[0][idx[b]]);
                acc = std::move(next);
            }
            std::uint64_t splits = (1ull << sz) - 2;
            rep.split_instances += static_cast<long long>(splits);
            if (!acc.any()) rep.split_failures += static_cast<long long>(splits);
        }

        for (int j = 1; j <= cx.max_level; ++j) {
            long long need = static_cast<long long>(j) * ((1ll << j) + 1);
            if (need + 1 > static_cast<long long>(sz)) break;
            // bad(a) = positions not sent to a certain one of level > j.
            std::vector<std::uint32_t> bad(static_cast<size_t>(P), 0);
            for (size_t b = 0; b < sz; ++b) {
                const Bits& good = cx.level_gt[static_cast<size_t>(j)][idx[b]];
                for (long long a = 0; a < P; ++a)
                    if (!(good.w[static_cast<size_t>(a) >> 6] & (1ull << (a & 63))))
                        bad[static_cast<size_t>(a)] |= 1u << b;
            }
            // Distinct witness bad-sets of size <= j.
            std::set<std::uint32_t> witnesses;
            for (long long a = 0; a < P; ++a)
                if (__builtin_popcount(bad[static_cast<size_t>(a)]) <= j)
                    witnesses.insert(bad[static_cast<size_t>(a)]);
            // All bipartitions (H = set bits of hmask).
            for (std::uint32_t hmask = 1; hmask + 1 < (1u << sz); ++hmask) {
                if (__builtin_popcount(hmask) < need) continue;
                ++rep.split_instances;
                bool okay = false;
                for (std::uint32_t wset : witnesses)
                    if ((wset & ~hmask) == 0) {
                        okay = true;
                        break;
                    }
                if (!okay) ++rep.split_failures;
            }
        }
    });
    return rep;
}

}  // namespace indep
