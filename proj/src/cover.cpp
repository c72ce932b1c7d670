#include "indep/cover.hpp"

#include <algorithm>
#include <cmath>

namespace indep {

namespace {

void check_tuple(const SubshiftSpec& spec, const std::vector<ClopenSet>& tuple) {
    for (const ClopenSet& u : tuple)
        if (u.alphabet() != spec.alphabet()) throw InputError("tuple alphabet does not match subshift");
}

void check_disjoint(const std::vector<ClopenSet>& tuple) {
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (!tuple[i].disjoint_with(tuple[j]))
                throw InputError("tuple sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " are not disjoint");
}

// Window hull of the shifted tuple copies; degenerate sets contribute nothing.
bool shifted_hull(const std::vector<ClopenSet>& tuple, const std::vector<Pos>& shifts, Pos& lo, Pos& hi) {
    bool seen = false;
    for (const ClopenSet& u : tuple) {
        if (u.is_empty() || u.is_whole()) continue;
        for (Pos s : shifts) {
            Pos a = u.window_start() + s;
            Pos b = u.window_end() + s;
            if (!seen) {
                lo = a;
                hi = b;
                seen = true;
            } else {
                lo = std::min(lo, a);
                hi = std::max(hi, b);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_cover(const OpenCover& cover, int window_length) {
    if (window_length < 1) throw InputError("cover window length must be >= 1");
    check_tuple(cover.ambient, cover.elements);
    std::vector<Word> words = cover.ambient.language(window_length);
    ClopenSet word_set = ClopenSet::whole(cover.ambient.alphabet());
    for (const Word& w : words) {
        ClopenSet cyl = ClopenSet::cylinder(cover.ambient.alphabet(), 0, w);
        bool covered = false;
        for (const ClopenSet& e : cover.elements) {
            if (e.is_empty()) continue;
            std::vector<ShiftedSet> cs{{&cyl, 0}, {&e, 0}};
            if (cover.ambient.feasible_sets(cs)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

long long join_min_subcover(const SubshiftSpec& spec, const std::vector<ClopenSet>& tuple, int n,
                            long long node_budget) {
    if (n < 1) throw InputError("join depth must be >= 1");
    if (tuple.size() < 2) throw InputError("join cover needs at least two disjoint sets");
    check_tuple(spec, tuple);
    check_disjoint(tuple);
    int k = static_cast<int>(tuple.size());

    std::vector<Pos> shifts;
    for (int i = 1; i <= n; ++i) shifts.push_back(i);
    Pos lo = 1, hi = 1 + n;
    if (!shifted_hull(tuple, shifts, lo, hi)) {
        // All tuple sets degenerate: the only candidate information is
        // whether whole-space sets appear; disjointness leaves at most one.
        lo = 1;
        hi = 2;
    }
    int span = static_cast<int>(hi - lo);
    std::vector<Word> words = spec.language(span);

    std::uint64_t n_sigma = checked_pow(k, n, 1ull << 22, "join candidate family");
    SetCoverInstance inst;
    inst.n_elements = static_cast<int>(words.size());
    std::vector<int> sigma(static_cast<size_t>(n));
    for (std::uint64_t code = 0; code < n_sigma; ++code) {
        std::uint64_t c = code;
        for (int i = n - 1; i >= 0; --i) {
            sigma[static_cast<size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(k));
            c /= static_cast<std::uint64_t>(k);
        }
        std::vector<int> covered;
        for (size_t e = 0; e < words.size(); ++e) {
            bool inside = true;  // word avoids U_{sigma(i)} at every shift i
            for (int i = 1; i <= n && inside; ++i) {
                const ClopenSet& u = tuple[static_cast<size_t>(sigma[static_cast<size_t>(i - 1)])];
                if (u.is_whole()) {
                    inside = false;
                } else if (!u.is_empty() && u.shift_preimage(i).matches(words[e], lo)) {
                    inside = false;
                }
            }
            if (inside) covered.push_back(static_cast<int>(e));
        }
        if (!covered.empty()) inst.candidates.push_back(std::move(covered));
    }
    return min_set_cover(inst, node_budget).size;
}

std::vector<EntropyRow> comb_entropy_profile(const SubshiftSpec& spec, const std::vector<ClopenSet>& tuple,
                                             int n_max, long long node_budget) {
    if (n_max < 1) throw InputError("entropy profile needs n_max >= 1");
    std::vector<EntropyRow> rows;
    rows.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        long long nn = join_min_subcover(spec, tuple, n, node_budget);
        double v = nn > 0 ? std::log(static_cast<double>(nn)) / static_cast<double>(n) : 0.0;
        rows.push_back(EntropyRow{n, nn, v});
    }
    return rows;
}

TraceSet trace(const SubshiftSpec& spec, const std::vector<ClopenSet>& tuple, const std::vector<Pos>& positions) {
    check_tuple(spec, tuple);
    check_disjoint(tuple);
    std::vector<Pos> window = positions;
    std::sort(window.begin(), window.end());
    window.erase(std::unique(window.begin(), window.end()), window.end());
    if (window.empty()) throw InputError("trace needs at least one position");

    Pos lo = 0, hi = 0;
    if (!shifted_hull(tuple, window, lo, hi)) {
        lo = window.front();
        hi = window.front() + 1;
    }
    int span = static_cast<int>(hi - lo);
    std::vector<Word> words = spec.language(span);

    std::vector<std::vector<int>> patterns;
    std::vector<int> pat(window.size());
    for (const Word& w : words) {
        for (size_t p = 0; p < window.size(); ++p) {
            pat[p] = 0;
            for (size_t i = 0; i < tuple.size(); ++i) {
                const ClopenSet& u = tuple[i];
                if (u.is_empty()) continue;
                if (u.is_whole() || u.shift_preimage(window[p]).matches(w, lo)) {
                    pat[p] = static_cast<int>(i) + 1;
                    break;
                }
            }
        }
        patterns.push_back(pat);
    }
    return make_trace_set(std::move(window), static_cast<int>(tuple.size()), std::move(patterns));
}

}  // namespace indep
