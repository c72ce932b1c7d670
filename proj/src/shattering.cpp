#include "indep/shattering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace indep {

namespace {

// Compare a^p against b^q exactly via little-endian base-2^32 bignums.
using Big = std::vector<std::uint32_t>;

Big big_from(unsigned long long v) {
    Big b;
    while (v) {
        b.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
    return b;
}

Big big_mul(const Big& a, const Big& b) {
    Big r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        r[i + b.size()] += static_cast<std::uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Big big_pow(unsigned long long base, int exp) {
    Big r = big_from(1);
    Big b = big_from(base);
    while (exp > 0) {
        if (exp & 1) r = big_mul(r, b);
        b = big_mul(b, b);
        exp >>= 1;
    }
    return r;
}

int big_cmp(const Big& a, const Big& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// Shared subset scan: a mask W is "spanning" for the value list V when the
// restrictions of the patterns to W realize every V-valued tuple on W.
// Spanning masks are downward closed, so levels are generated from their
// sub-masks.
struct SpanScan {
    long long count = 0;                 // nonempty spanning masks
    std::vector<std::uint32_t> largest;  // maximum-size masks (all of them)
    int best_size = 0;
};

SpanScan span_scan(const TraceSet& s, const std::vector<int>& values, const ShatterBudget& budget) {
    int n = static_cast<int>(s.window.size());
    if (n > budget.max_window) throw BudgetError("window larger than shattering search bound");
    size_t v = values.size();
    std::vector<int> value_index(static_cast<size_t>(s.k) + 1, -1);
    for (size_t i = 0; i < v; ++i) {
        int val = values[i];
        if (val < 0 || val > s.k) throw InputError("span value outside trace range");
        value_index[static_cast<size_t>(val)] = static_cast<int>(i);
    }

    long long checks = 0;
    auto spanning = [&](std::uint32_t mask) {
        if (++checks > budget.max_checks) throw BudgetError("shattering search exceeded check budget");
        int bits[32];
        int nb = 0;
        for (int z = 0; z < n; ++z)
            if (mask & (1u << z)) bits[nb++] = z;
        std::uint64_t need = 1;
        for (int i = 0; i < nb; ++i) {
            if (need > (1ull << 62) / v) return false;  // target exceeds any stored trace
            need *= v;
        }
        if (s.patterns.size() < need) return false;
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(static_cast<size_t>(need) * 2);
        for (const auto& pat : s.patterns) {
            std::uint64_t code = 0;
            bool in_range = true;
            for (int i = 0; i < nb && in_range; ++i) {
                int idx = value_index[static_cast<size_t>(pat[static_cast<size_t>(bits[i])])];
                if (idx < 0)
                    in_range = false;
                else
                    code = code * v + static_cast<std::uint64_t>(idx);
            }
            if (in_range && seen.insert(code).second && seen.size() == need) return true;
        }
        return seen.size() == need;
    };

    SpanScan out;
    std::vector<std::uint32_t> level;
    for (int z = 0; z < n; ++z) {
        std::uint32_t m = 1u << z;
        if (spanning(m)) level.push_back(m);
    }
    std::set<std::uint32_t> prev(level.begin(), level.end());
    while (!level.empty()) {
        out.count += static_cast<long long>(level.size());
        out.best_size = __builtin_popcount(level.front());
        out.largest = level;
        std::vector<std::uint32_t> next;
        std::set<std::uint32_t> next_seen;
        for (std::uint32_t m : level) {
            int top = 31 - __builtin_clz(m);
            for (int z = top + 1; z < n; ++z) {
                std::uint32_t cand = m | (1u << z);
                if (next_seen.count(cand)) continue;
                bool closed = true;
                for (int y = 0; y < n && closed; ++y)
                    if (cand & (1u << y))
                        if (!prev.count(cand & ~(1u << y))) closed = false;
                if (!closed) continue;
                if (spanning(cand)) {
                    next.push_back(cand);
                    next_seen.insert(cand);
                }
            }
        }
        std::sort(next.begin(), next.end());
        prev = std::set<std::uint32_t>(next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::vector<Pos> mask_to_positions(const TraceSet& s, std::uint32_t mask) {
    std::vector<Pos> out;
    for (size_t z = 0; z < s.window.size(); ++z)
        if (mask & (1u << z)) out.push_back(s.window[z]);
    return out;
}

// Lexicographically least position set among equal-size masks.
std::uint32_t lex_least_mask(const TraceSet& s, const std::vector<std::uint32_t>& masks) {
    std::uint32_t best = masks.front();
    std::vector<Pos> best_pos = mask_to_positions(s, best);
    for (size_t i = 1; i < masks.size(); ++i) {
        std::vector<Pos> pos = mask_to_positions(s, masks[i]);
        if (pos < best_pos) {
            best = masks[i];
            best_pos = std::move(pos);
        }
    }
    return best;
}

std::vector<int> one_to_k(int k) {
    std::vector<int> v;
    for (int i = 1; i <= k; ++i) v.push_back(i);
    return v;
}

}  // namespace

bool is_fully_shattered(const TraceSet& s, const std::vector<Pos>& w) {
    s.validate();
    if (w.empty()) return true;
    std::vector<Pos> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> idx;
    for (Pos pos : sorted) {
        auto it = std::lower_bound(s.window.begin(), s.window.end(), pos);
        if (it == s.window.end() || *it != pos) throw InputError("subset position outside trace window");
        idx.push_back(static_cast<int>(it - s.window.begin()));
    }
    std::uint64_t need = checked_pow(s.k, static_cast<int>(idx.size()), 1ull << 26, "shattering target");
    std::unordered_set<std::uint64_t> seen;
    for (const auto& pat : s.patterns) {
        std::uint64_t code = 0;
        bool in_range = true;
        for (int z : idx) {
            int val = pat[static_cast<size_t>(z)];
            if (val < 1 || val > s.k) {
                in_range = false;
                break;
            }
            code = code * static_cast<std::uint64_t>(s.k) + static_cast<std::uint64_t>(val - 1);
        }
        if (in_range && seen.insert(code).second && seen.size() == need) return true;
    }
    return seen.size() == need;
}

std::vector<Pos> largest_shattered(const TraceSet& s, const ShatterBudget& budget) {
    s.validate();
    if (s.patterns.empty() || s.window.empty()) return {};
    SpanScan scan = span_scan(s, one_to_k(s.k), budget);
    if (scan.largest.empty()) return {};
    return mask_to_positions(s, lex_least_mask(s, scan.largest));
}

long long count_shattered(const TraceSet& s, const ShatterBudget& budget) {
    s.validate();
    if (s.patterns.empty() || s.window.empty()) return 0;
    return span_scan(s, one_to_k(s.k), budget).count;
}

KeyLemmaConstants key_lemma_constants(int k, const Rational& b) {
    if (k < 2) throw InputError("key-lemma constants need k >= 2");
    if (b.num <= 0) throw InputError("violated inequality: b1 = b + log_k(1-lambda) > 0 needs b > 0");
    KeyLemmaConstants out;
    out.k = k;
    out.b = b;

    double bval = b.value();
    double lk = std::log(static_cast<double>(k));
    // Feasible lambda: 0 < lambda < min(1/3, 1 - k^{-b}).
    double upper = std::min(1.0 / 3.0, 1.0 - std::exp(-bval * lk));
    if (!(upper > 0)) throw InputError("violated inequality: b1 = b + log_k(1-lambda) > 0 has no feasible lambda");
    double quarter_b1 = bval + std::log(0.75) / lk;
    if (quarter_b1 > 0 && 0.25 < 1.0 / 3.0) {
        out.lambda = Rational(1, 4);
        out.enforced.push_back("lambda = 1/4 (canonical; b1 > 0 holds there)");
    } else {
        long long num = static_cast<long long>(std::floor((upper / 2.0) * 4096.0));
        if (num < 1) num = 1;
        out.lambda = Rational(num, 4096);
        out.enforced.push_back("lambda = midpoint of feasible interval, rounded down to a multiple of 1/4096");
    }
    double lam = out.lambda.value();
    out.b1 = bval + std::log(1.0 - lam) / lk;
    out.b2 = std::log((1.0 - lam) / lam) / lk;
    out.t = out.b1 * std::log2(static_cast<double>(k + 1) / static_cast<double>(k)) / (2.0 * out.b2);
    if (!(out.b1 > 0)) throw InputError("violated inequality: b1 = b + log_k(1-lambda) > 0");
    out.enforced.push_back("b1 = b + log_k(1-lambda) > 0");
    out.enforced.push_back("b2 = log_k((1-lambda)/lambda) > 0");
    out.enforced.push_back("t = b1 * log2((k+1)/k) / (2 b2)");

    // Largest grid rational c with binary entropy H(c) <= t; then
    // sum_{1<=j<=cn} C(n,j) <= 2^{H(c) n} - 1 < 2^{tn} for every n.
    // Grid denominators double from 64 until some numerator fits.
    auto entropy = [](double x) { return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x); };
    Rational c(0, 1);
    for (long long q = 64; q <= (1ll << 20) && c.num == 0; q *= 2) {
        for (long long a = q / 2; a >= 1; --a) {
            double x = static_cast<double>(a) / static_cast<double>(q);
            if (x > 0.5) continue;
            if (entropy(x) <= out.t) {
                c = Rational(a, q);
                break;
            }
        }
    }
    if (c.num == 0) throw InputError("violated inequality: no grid rational c has H(c) <= t");
    // Finite-range double check of the strict counting inequality.
    for (int n = 1; n <= 512; ++n) {
        long long cap = (c.num * n) / c.den;
        double log2sum = -1;  // log2 of an empty sum
        double log2binom = 0;
        for (long long j = 1; j <= cap; ++j) {
            log2binom += std::log2(static_cast<double>(n - j + 1)) - std::log2(static_cast<double>(j));
            log2sum = log2sum < 0 ? log2binom
                                  : std::max(log2sum, log2binom) +
                                        std::log2(1.0 + std::exp2(-std::abs(log2sum - log2binom)));
        }
        if (log2sum >= 0 && log2sum >= out.t * n + 1e-9)
            throw InputError("violated inequality: counting bound fails in the verified range");
    }
    out.c = c;
    out.enforced.push_back("H(c) <= t (entropy tail bound) and direct check for n <= 512");
    return out;
}

KeyLemmaWitness key_lemma_witness(const TraceSet& s, const Rational& b, const ShatterBudget& budget,
                                  long long cover_budget) {
    s.validate();
    if (b.num <= 0) throw InputError("hypothesis exponent b must be positive");
    KeyLemmaWitness out;
    out.window_size = static_cast<int>(s.window.size());
    out.f_value = f_s(s, cover_budget);
    // F_S >= k^{b|Z|}  <=>  F_S^den >= k^{num |Z|}, exactly.
    Big lhs = big_pow(static_cast<unsigned long long>(out.f_value), static_cast<int>(b.den));
    Big rhs = big_pow(static_cast<unsigned long long>(s.k),
                      static_cast<int>(b.num) * static_cast<int>(s.window.size()));
    out.holds_hypothesis = big_cmp(lhs, rhs) >= 0;
    if (out.holds_hypothesis) out.w = largest_shattered(s, budget);
    return out;
}

std::optional<std::vector<Pos>> km_witness(const TraceSet& s, const Rational& lambda,
                                           const ShatterBudget& budget) {
    s.validate();
    for (const auto& pat : s.patterns)
        for (int v : pat)
            if (v < 1 || v > s.k) throw InputError("km witness needs a {1..k}-valued trace");
    if (!(lambda.num > lambda.den)) throw InputError("km witness needs lambda > 1");
    int n = static_cast<int>(s.window.size());
    // |S| >= ((k-1) lambda)^n  <=>  |S| * den^n >= ((k-1) num)^n.
    Big lhs = big_mul(big_from(static_cast<unsigned long long>(s.patterns.size())),
                      big_pow(static_cast<unsigned long long>(lambda.den), n));
    Big rhs = big_pow(static_cast<unsigned long long>(s.k - 1) * static_cast<unsigned long long>(lambda.num), n);
    if (big_cmp(lhs, rhs) < 0) return std::nullopt;
    std::vector<Pos> w = largest_shattered(s, budget);
    if (!is_fully_shattered(s, w)) throw std::logic_error("km witness failed its own shattering check");
    return w;
}

TwoValuedResult two_valued_decompose(const TraceSet& s, const std::vector<int>& z_alphabet,
                                     const ShatterBudget& budget) {
    s.validate();
    std::set<int> z(z_alphabet.begin(), z_alphabet.end());
    if (z.size() != z_alphabet.size()) throw InputError("z alphabet has repeated values");
    for (int v : z)
        if (v == 1 || v == 2 || v == 3) throw InputError("z alphabet must avoid {1,2,3}");
    for (const auto& pat : s.patterns)
        for (int v : pat)
            if (v != 1 && v != 2 && !z.count(v)) throw InputError("trace value outside z alphabet and {1,2}");

    // Collapse 1,2 -> 3; the map must be a bijection onto (z u {3})^window.
    std::set<std::vector<int>> collapsed;
    for (const auto& pat : s.patterns) {
        std::vector<int> c = pat;
        for (int& v : c)
            if (v == 1 || v == 2) v = 3;
        if (!collapsed.insert(std::move(c)).second)
            throw InputError("collapse map is not injective on the trace set");
    }
    std::uint64_t full = 1;
    bool oversized = false;
    for (size_t i = 0; i < s.window.size() && !oversized; ++i) {
        if (full > (1ull << 62) / (z.size() + 1))
            oversized = true;
        else
            full *= z.size() + 1;
    }
    if (oversized || collapsed.size() != full)
        throw InputError("collapse map is not onto (z u {3})^window");

    TwoValuedResult best{1, {}};
    bool have = false;
    for (int branch = 1; branch <= 2; ++branch) {
        std::vector<int> values(z_alphabet.begin(), z_alphabet.end());
        values.push_back(branch);
        std::vector<Pos> positions;
        if (!s.patterns.empty() && !s.window.empty()) {
            SpanScan scan = span_scan(s, values, budget);
            if (!scan.largest.empty()) positions = mask_to_positions(s, lex_least_mask(s, scan.largest));
        }
        if (!have || positions.size() > best.positions.size()) {
            best = TwoValuedResult{branch, std::move(positions)};
            have = true;
        }
    }
    return best;
}

}  // namespace indep
