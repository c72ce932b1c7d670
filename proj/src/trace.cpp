#include "indep/trace.hpp"

#include <algorithm>

namespace indep {

void TraceSet::validate() const {
    if (k < 1) throw InputError("trace alphabet bound k must be >= 1");
    for (size_t i = 1; i < window.size(); ++i)
        if (!(window[i - 1] < window[i])) throw InputError("trace window positions must be strictly increasing");
    for (const auto& p : patterns) {
        if (p.size() != window.size()) throw InputError("trace pattern length differs from window size");
        for (int v : p)
            if (v < 0 || v > k) throw InputError("trace pattern value outside {0,..,k}");
    }
    for (size_t i = 1; i < patterns.size(); ++i)
        if (!(patterns[i - 1] < patterns[i])) throw InputError("trace patterns must be sorted and distinct");
}

TraceSet make_trace_set(std::vector<Pos> window, int k, std::vector<std::vector<int>> patterns) {
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    TraceSet s{std::move(window), k, std::move(patterns)};
    s.validate();
    return s;
}

long long f_s(const TraceSet& s, long long node_budget) {
    s.validate();
    if (s.patterns.empty()) return 0;
    int n = static_cast<int>(s.window.size());
    std::uint64_t n_products = checked_pow(s.k, n, 1ull << 22, "f_s product family");

    SetCoverInstance inst;
    inst.n_elements = static_cast<int>(s.patterns.size());
    inst.candidates.reserve(static_cast<size_t>(n_products));
    std::vector<int> sigma(static_cast<size_t>(n));
    for (std::uint64_t code = 0; code < n_products; ++code) {
        std::uint64_t c = code;
        for (int z = n - 1; z >= 0; --z) {
            sigma[static_cast<size_t>(z)] = static_cast<int>(c % static_cast<std::uint64_t>(s.k)) + 1;
            c /= static_cast<std::uint64_t>(s.k);
        }
        std::vector<int> covered;
        for (size_t e = 0; e < s.patterns.size(); ++e) {
            bool avoid = true;
            for (int z = 0; z < n; ++z)
                if (s.patterns[e][static_cast<size_t>(z)] == sigma[static_cast<size_t>(z)]) {
                    avoid = false;
                    break;
                }
            if (avoid) covered.push_back(static_cast<int>(e));
        }
        if (!covered.empty()) inst.candidates.push_back(std::move(covered));
    }
    return min_set_cover(inst, node_budget).size;
}

}  // namespace indep
