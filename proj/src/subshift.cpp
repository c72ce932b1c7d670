#include "indep/subshift.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace indep {
namespace detail {

namespace {
constexpr std::uint64_t kStateBudget = 1ull << 20;
constexpr std::uint64_t kLanguageBudget = 1ull << 22;
}  // namespace

// Window constraint in engine form: pattern of the point on
// [start, start+len) must be one of `allowed` (sorted codes).
struct WindowConstraint {
    Pos start = 0;
    int len = 0;
    std::vector<std::uint64_t> allowed;
};

class Engine {
public:
    virtual ~Engine() = default;
    virtual int alphabet() const = 0;
    virtual Pos horizon() const = 0;
    virtual bool empty_shift() const = 0;
    virtual std::vector<Word> language(int n) const = 0;
    virtual bool feasible_windows(const std::vector<WindowConstraint>& wcs) const = 0;
};

void check_span(const std::vector<WindowConstraint>& wcs, Pos horizon) {
    if (wcs.empty()) return;
    Pos lo = wcs.front().start;
    Pos hi = wcs.front().start + wcs.front().len;
    for (const auto& wc : wcs) {
        lo = std::min(lo, wc.start);
        hi = std::max(hi, wc.start + wc.len);
    }
    if (hi - lo > horizon)
        throw HorizonError("constraint span " + std::to_string(hi - lo) + " exceeds exact horizon " +
                           std::to_string(horizon));
}

// ---------------------------------------------------------------- finite type

class SftEngine : public Engine {
public:
    SftEngine(int alphabet, int memory, std::vector<Word> forbidden) : k_(alphabet), m_(memory) {
        if (k_ < 1 || k_ > kMaxAlphabet) throw InputError("alphabet size out of range");
        if (m_ < 1) throw InputError("SFT memory must be >= 1");
        for (const Word& f : forbidden) {
            check_word_alphabet(f, k_);
            if (f.empty()) throw InputError("forbidden word must be nonempty");
            if (static_cast<int>(f.size()) > m_) throw InputError("forbidden word longer than memory");
        }
        std::uint64_t total = checked_pow(k_, m_, kStateBudget, "SFT memory window");
        allowed_.assign(static_cast<size_t>(total), 1);
        for (std::uint64_t code = 0; code < total; ++code) {
            Word w = code_word(code, k_, m_);
            for (const Word& f : forbidden) {
                if (contains_subword(w, f)) {
                    allowed_[static_cast<size_t>(code)] = 0;
                    break;
                }
            }
        }
    }

    int alphabet() const override { return k_; }
    Pos horizon() const override { return kUnboundedHorizon; }

    bool empty_shift() const override { return graph(base_order()).count == 0; }

    // True when every length-m_ subword of w is allowed.
    bool word_ok(const Word& w) const {
        if (static_cast<int>(w.size()) < m_) return true;
        std::uint64_t mod = 1;
        for (int i = 0; i < m_; ++i) mod *= static_cast<std::uint64_t>(k_);
        std::uint64_t code = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            code = (code * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(w[i])) % mod;
            if (i + 1 >= static_cast<size_t>(m_) && !allowed_[static_cast<size_t>(code)]) return false;
        }
        return true;
    }

    std::vector<Word> language(int n) const override {
        if (n < 1) throw InputError("language length must be >= 1");
        int L = base_order();
        const Graph& g = graph(L);
        std::vector<Word> out;
        if (n <= L) {
            std::uint64_t mod = 1;
            for (int i = 0; i < n; ++i) mod *= static_cast<std::uint64_t>(k_);
            std::vector<std::uint64_t> codes;
            for (std::uint64_t u = 0; u < g.alive.size(); ++u)
                if (g.alive[static_cast<size_t>(u)]) codes.push_back(u % mod);
            std::sort(codes.begin(), codes.end());
            codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
            for (std::uint64_t c : codes) out.push_back(code_word(c, k_, n));
            return out;
        }
        Word w(static_cast<size_t>(n));
        for (std::uint64_t u = 0; u < g.alive.size(); ++u) {
            if (!g.alive[static_cast<size_t>(u)]) continue;
            Word head = code_word(u, k_, L);
            std::copy(head.begin(), head.end(), w.begin());
            extend(g, L, u, w, static_cast<size_t>(L), out);
        }
        return out;
    }

    bool feasible_windows(const std::vector<WindowConstraint>& wcs) const override {
        int need = 1;
        for (const auto& wc : wcs) need = std::max(need, wc.len);
        int L = std::max(need, base_order());
        const Graph& g = graph(L);
        if (g.count == 0) return false;
        if (wcs.empty()) return true;

        Pos lo = wcs.front().start;
        Pos hi = wcs.front().start + wcs.front().len;
        for (const auto& wc : wcs) {
            lo = std::min(lo, wc.start);
            hi = std::max(hi, wc.start + wc.len);
        }
        // filters[i]: constraints whose window ends at position lo+i.
        std::vector<std::vector<const WindowConstraint*>> filters(static_cast<size_t>(hi - lo));
        for (const auto& wc : wcs) {
            if (wc.allowed.empty()) return false;
            filters[static_cast<size_t>(wc.start + wc.len - 1 - lo)].push_back(&wc);
        }

        std::vector<char> cur = g.alive, next(g.alive.size());
        std::vector<std::uint64_t> pow(static_cast<size_t>(L) + 1, 1);
        for (int i = 1; i <= L; ++i) pow[static_cast<size_t>(i)] = pow[static_cast<size_t>(i - 1)] * static_cast<std::uint64_t>(k_);
        for (Pos p = lo; p < hi; ++p) {
            std::fill(next.begin(), next.end(), 0);
            bool any = false;
            for (std::uint64_t u = 0; u < cur.size(); ++u) {
                if (!cur[static_cast<size_t>(u)]) continue;
                for (int s = 0; s < k_; ++s) {
                    std::uint64_t v;
                    if (!step(g, L, u, s, v)) continue;
                    if (next[static_cast<size_t>(v)]) continue;
                    bool ok = true;
                    for (const WindowConstraint* wc : filters[static_cast<size_t>(p - lo)]) {
                        std::uint64_t code = v % pow[static_cast<size_t>(wc->len)];
                        if (!std::binary_search(wc->allowed.begin(), wc->allowed.end(), code)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        next[static_cast<size_t>(v)] = 1;
                        any = true;
                    }
                }
            }
            if (!any) return false;
            cur.swap(next);
        }
        return true;
    }

private:
    struct Graph {
        int L = 1;
        std::vector<char> alive;
        std::uint64_t count = 0;
    };

    int base_order() const { return std::max(m_ - 1, 1); }

    static bool contains_subword(const Word& w, const Word& f) {
        if (f.size() > w.size()) return false;
        for (size_t i = 0; i + f.size() <= w.size(); ++i)
            if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(i))) return true;
        return false;
    }

    // Edge u -> v by emitting symbol s; valid only between alive nodes.
    bool step(const Graph& g, int L, std::uint64_t u, int s, std::uint64_t& v) const {
        std::uint64_t tail_mod = g.alive.size() / static_cast<std::uint64_t>(k_);
        v = (u % tail_mod) * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(s);
        if (!g.alive[static_cast<size_t>(v)]) return false;
        if (L == m_ - 1) {
            // The traversed m-word is u extended by s.
            std::uint64_t mw = u * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(s);
            if (!allowed_[static_cast<size_t>(mw)]) return false;
        }
        return true;
    }

    const Graph& graph(int L) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = graphs_.find(L);
        if (it != graphs_.end()) return it->second;

        Graph g;
        g.L = L;
        std::uint64_t total = checked_pow(k_, L, kStateBudget, "de Bruijn order");
        g.alive.assign(static_cast<size_t>(total), 1);
        if (L >= m_) {
            for (std::uint64_t u = 0; u < total; ++u)
                if (!word_ok(code_word(u, k_, L))) g.alive[static_cast<size_t>(u)] = 0;
        }
        // Keep only nodes on bi-infinite admissible paths.
        std::uint64_t tail_mod = total / static_cast<std::uint64_t>(k_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint64_t u = 0; u < total; ++u) {
                if (!g.alive[static_cast<size_t>(u)]) continue;
                bool has_out = false;
                for (int s = 0; s < k_ && !has_out; ++s) {
                    std::uint64_t v = (u % tail_mod) * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(s);
                    if (!g.alive[static_cast<size_t>(v)]) continue;
                    if (L == m_ - 1 && !allowed_[static_cast<size_t>(u * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(s))]) continue;
                    has_out = true;
                }
                bool has_in = false;
                for (int a = 0; a < k_ && !has_in; ++a) {
                    std::uint64_t w = static_cast<std::uint64_t>(a) * tail_mod + u / static_cast<std::uint64_t>(k_);
                    if (!g.alive[static_cast<size_t>(w)]) continue;
                    if (L == m_ - 1 && !allowed_[static_cast<size_t>(w * static_cast<std::uint64_t>(k_) + u % static_cast<std::uint64_t>(k_))]) continue;
                    has_in = true;
                }
                if (!has_out || !has_in) {
                    g.alive[static_cast<size_t>(u)] = 0;
                    changed = true;
                }
            }
        }
        g.count = 0;
        for (char c : g.alive) g.count += static_cast<std::uint64_t>(c);
        return graphs_.emplace(L, std::move(g)).first->second;
    }

    void extend(const Graph& g, int L, std::uint64_t u, Word& w, size_t at, std::vector<Word>& out) const {
        if (at == w.size()) {
            if (out.size() >= kLanguageBudget) throw BudgetError("language enumeration exceeds budget");
            out.push_back(w);
            return;
        }
        for (int s = 0; s < k_; ++s) {
            std::uint64_t v;
            if (!step(g, L, u, s, v)) continue;
            w[at] = s;
            extend(g, L, v, w, at + 1, out);
        }
    }

    int k_;
    int m_;
    std::vector<char> allowed_;
    mutable std::mutex mu_;
    mutable std::map<int, Graph> graphs_;
};

// ---------------------------------------------------------------- products

// Product with an oracle factor: exact answers by enumerating factor words
// over the constrained span.  Finite-type pairs compile to an SftEngine
// instead (see make_product).
class EnumProductEngine : public Engine {
public:
    EnumProductEngine(std::shared_ptr<const Engine> a, std::shared_ptr<const Engine> b)
        : a_(std::move(a)), b_(std::move(b)) {
        if (a_->alphabet() * b_->alphabet() > kMaxAlphabet)
            throw InputError("product alphabet exceeds digit range");
    }

    int alphabet() const override { return a_->alphabet() * b_->alphabet(); }
    Pos horizon() const override { return std::min(a_->horizon(), b_->horizon()); }
    bool empty_shift() const override { return a_->empty_shift() || b_->empty_shift(); }

    std::vector<Word> language(int n) const override {
        std::vector<Word> la = a_->language(n);
        std::vector<Word> lb = b_->language(n);
        if (la.size() * lb.size() > kLanguageBudget) throw BudgetError("product language exceeds budget");
        int kb = b_->alphabet();
        std::vector<Word> out;
        out.reserve(la.size() * lb.size());
        for (const Word& u : la)
            for (const Word& v : lb) {
                Word w(u.size());
                for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] * kb + v[i];
                out.push_back(std::move(w));
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool feasible_windows(const std::vector<WindowConstraint>& wcs) const override {
        check_span(wcs, horizon());
        if (wcs.empty()) return !empty_shift();
        Pos lo = wcs.front().start;
        Pos hi = wcs.front().start + wcs.front().len;
        for (const auto& wc : wcs) {
            if (wc.allowed.empty()) return false;
            lo = std::min(lo, wc.start);
            hi = std::max(hi, wc.start + wc.len);
        }
        int span = static_cast<int>(hi - lo);
        std::vector<Word> la = a_->language(span);
        std::vector<Word> lb = b_->language(span);
        if (la.size() * lb.size() > kLanguageBudget) throw BudgetError("product feasibility exceeds budget");
        int kb = b_->alphabet();
        int kk = alphabet();
        for (const Word& u : la) {
            for (const Word& v : lb) {
                bool ok = true;
                for (const auto& wc : wcs) {
                    std::uint64_t code = 0;
                    for (int i = 0; i < wc.len; ++i) {
                        size_t idx = static_cast<size_t>(wc.start - lo + i);
                        code = code * static_cast<std::uint64_t>(kk) + static_cast<std::uint64_t>(u[idx] * kb + v[idx]);
                    }
                    if (!std::binary_search(wc.allowed.begin(), wc.allowed.end(), code)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return true;
            }
        }
        return false;
    }

private:
    std::shared_ptr<const Engine> a_, b_;
};

// ---------------------------------------------------------------- Toeplitz

class ToeplitzEngine : public Engine {
public:
    ToeplitzEngine(const ToeplitzSpec& spec, int truncation) : table_(toeplitz_table(spec, truncation)) {}

    int alphabet() const override { return 2; }
    Pos horizon() const override { return table_.period; }
    bool empty_shift() const override { return false; }

    std::vector<Word> language(int n) const override {
        if (n < 1) throw InputError("language length must be >= 1");
        if (n > table_.period) throw HorizonError("window length exceeds Toeplitz oracle horizon");
        std::set<Word> words;
        Word w(static_cast<size_t>(n));
        for (long long t = 0; t < table_.period; ++t) {
            int open = -1;  // at most one undecided position per window
            for (int i = 0; i < n; ++i) {
                int c = table_.cell(t + i);
                if (c < 0) {
                    open = i;
                    w[static_cast<size_t>(i)] = 0;
                } else {
                    w[static_cast<size_t>(i)] = c;
                }
            }
            if (open < 0) {
                words.insert(w);
            } else {
                w[static_cast<size_t>(open)] = 0;
                words.insert(w);
                w[static_cast<size_t>(open)] = 1;
                words.insert(w);
            }
            if (words.size() > kLanguageBudget) throw BudgetError("language enumeration exceeds budget");
        }
        return {words.begin(), words.end()};
    }

    bool feasible_windows(const std::vector<WindowConstraint>& wcs) const override {
        check_span(wcs, table_.period);
        for (const auto& wc : wcs)
            if (wc.allowed.empty()) return false;
        if (wcs.empty()) return true;
        for (long long t = 0; t < table_.period; ++t) {
            // Find the undecided constrained position, if any.
            bool has_open = false;
            for (const auto& wc : wcs) {
                for (int i = 0; i < wc.len && !has_open; ++i)
                    if (!table_.certain(wc.start + i + t)) has_open = true;
                if (has_open) break;
            }
            int completions = has_open ? 2 : 1;
            for (int fill = 0; fill < completions; ++fill) {
                bool ok = true;
                for (const auto& wc : wcs) {
                    std::uint64_t code = 0;
                    for (int i = 0; i < wc.len; ++i) {
                        int c = table_.cell(wc.start + i + t);
                        if (c < 0) c = fill;
                        code = code * 2u + static_cast<std::uint64_t>(c);
                    }
                    if (!std::binary_search(wc.allowed.begin(), wc.allowed.end(), code)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return true;
            }
        }
        return false;
    }

private:
    ToeplitzTable table_;
};

// ---------------------------------------------------------------- WAP

class WapEngine : public Engine {
public:
    WapEngine(const WapSpec& spec, int truncation) {
        if (truncation < 1 || truncation > spec.levels) throw InputError("WAP truncation out of range");
        for (int j = 1; j <= truncation; ++j) supports_.push_back(wap_block_support(spec, j));
        int top = spec.partial_sums[static_cast<size_t>(truncation - 1)];
        // Deeper levels keep at most one support point inside any window
        // shorter than their minimal gap 2^(S_trunc + 1).
        horizon_ = 1;
        for (int i = 0; i < top + 1 && horizon_ < kUnboundedHorizon / 2; ++i) horizon_ *= 2;
    }

    int alphabet() const override { return 2; }
    Pos horizon() const override { return horizon_; }
    bool empty_shift() const override { return false; }

    std::vector<Word> language(int n) const override {
        if (n < 1) throw InputError("language length must be >= 1");
        if (n > horizon_) throw HorizonError("window length exceeds WAP oracle horizon");
        std::set<std::vector<Pos>> one_sets;
        one_sets.insert({});
        for (Pos p = 0; p < n; ++p) one_sets.insert({p});
        for (const auto& sup : supports_) {
            for (long long anchor : sup) {
                for (Pos p = 0; p < n; ++p) {
                    long long t = anchor - p;  // support point `anchor` lands on window offset p
                    std::vector<Pos> in_window;
                    for (long long m : sup) {
                        long long q = m - t;
                        if (q >= 0 && q < n) in_window.push_back(q);
                    }
                    size_t subsets = 1ull << in_window.size();
                    for (size_t mask = 0; mask < subsets; ++mask) {
                        std::vector<Pos> s;
                        for (size_t b = 0; b < in_window.size(); ++b)
                            if (mask & (1ull << b)) s.push_back(in_window[b]);
                        one_sets.insert(std::move(s));
                    }
                }
            }
        }
        std::vector<Word> out;
        out.reserve(one_sets.size());
        for (const auto& s : one_sets) {
            Word w(static_cast<size_t>(n), 0);
            for (Pos p : s) w[static_cast<size_t>(p)] = 1;
            out.push_back(std::move(w));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool feasible_windows(const std::vector<WindowConstraint>& wcs) const override {
        check_span(wcs, horizon_);
        if (wcs.empty()) return true;
        std::vector<Pos> positions;
        for (const auto& wc : wcs) {
            if (wc.allowed.empty()) return false;
            for (int i = 0; i < wc.len; ++i) positions.push_back(wc.start + i);
        }
        std::sort(positions.begin(), positions.end());
        positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

        // Candidate visible supports: empty, singletons, and subsets of any
        // aligned level-support restricted to the constrained positions.
        std::set<std::vector<Pos>> candidates;
        candidates.insert({});
        for (Pos p : positions) candidates.insert({p});
        for (const auto& sup : supports_) {
            std::set<long long> sup_set(sup.begin(), sup.end());
            for (long long anchor : sup) {
                for (Pos p : positions) {
                    long long t = anchor - p;
                    std::vector<Pos> visible;
                    for (Pos q : positions)
                        if (sup_set.count(q + t)) visible.push_back(q);
                    size_t subsets = 1ull << visible.size();
                    for (size_t mask = 0; mask < subsets; ++mask) {
                        std::vector<Pos> s;
                        for (size_t b = 0; b < visible.size(); ++b)
                            if (mask & (1ull << b)) s.push_back(visible[b]);
                        candidates.insert(std::move(s));
                    }
                }
            }
        }
        for (const auto& support : candidates) {
            bool ok = true;
            for (const auto& wc : wcs) {
                std::uint64_t code = 0;
                for (int i = 0; i < wc.len; ++i) {
                    bool one = std::binary_search(support.begin(), support.end(), wc.start + i);
                    code = code * 2u + (one ? 1u : 0u);
                }
                if (!std::binary_search(wc.allowed.begin(), wc.allowed.end(), code)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }

private:
    std::vector<std::vector<long long>> supports_;
    Pos horizon_ = 1;
};

}  // namespace detail

// ---------------------------------------------------------------- wrapper

namespace {

using detail::Engine;
using detail::SftEngine;
using detail::WindowConstraint;

// A product of finite-type factors is itself finite type: lift both factors
// to a common memory and forbid the pair words whose projections fail.
std::shared_ptr<const Engine> compile_product(const std::shared_ptr<const Engine>& ea,
                                              const std::shared_ptr<const Engine>& eb, int ma, int mb) {
    auto sa = std::dynamic_pointer_cast<const SftEngine>(ea);
    auto sb = std::dynamic_pointer_cast<const SftEngine>(eb);
    if (!sa || !sb) return nullptr;
    int ka = sa->alphabet();
    int kb = sb->alphabet();
    int m = std::max(ma, mb);
    if (ka * kb > kMaxAlphabet) throw InputError("product alphabet exceeds digit range");
    std::uint64_t total = checked_pow(ka * kb, m, 1ull << 20, "product memory window");
    std::vector<Word> forbidden;
    Word u(static_cast<size_t>(m)), v(static_cast<size_t>(m));
    for (std::uint64_t code = 0; code < total; ++code) {
        Word w = code_word(code, ka * kb, m);
        for (int i = 0; i < m; ++i) {
            u[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / kb;
            v[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] % kb;
        }
        if (!sa->word_ok(u) || !sb->word_ok(v)) forbidden.push_back(w);
    }
    return std::make_shared<SftEngine>(ka * kb, m, std::move(forbidden));
}

std::vector<WindowConstraint> to_windows(const std::vector<ShiftedSet>& constraints, int alphabet) {
    std::vector<WindowConstraint> wcs;
    wcs.reserve(constraints.size());
    for (const ShiftedSet& sc : constraints) {
        if (sc.set == nullptr) throw InputError("null clopen constraint");
        if (sc.set->alphabet() != alphabet) throw InputError("clopen alphabet does not match subshift");
        if (sc.set->is_whole()) continue;
        WindowConstraint wc;
        wc.start = sc.set->window_start() + sc.shift;
        wc.len = sc.set->window_len();
        wc.allowed = sc.set->patterns();
        if (sc.set->is_empty()) {
            wc.len = 1;
            wc.start = sc.shift;
            wc.allowed.clear();
        }
        wcs.push_back(std::move(wc));
    }
    return wcs;
}

}  // namespace

SubshiftSpec SubshiftSpec::full_shift(int alphabet) {
    SubshiftSpec s;
    s.kind_ = Kind::Full;
    s.memory_ = 1;
    s.engine_ = std::make_shared<SftEngine>(alphabet, 1, std::vector<Word>{});
    return s;
}

SubshiftSpec SubshiftSpec::sft(int alphabet, int memory, std::vector<Word> forbidden) {
    SubshiftSpec s;
    s.kind_ = Kind::Sft;
    int m = std::max(memory, 1);
    for (const Word& f : forbidden) m = std::max(m, static_cast<int>(f.size()));
    s.memory_ = m;
    s.forbidden_ = forbidden;
    s.engine_ = std::make_shared<SftEngine>(alphabet, m, std::move(forbidden));
    return s;
}

SubshiftSpec SubshiftSpec::product_of(const SubshiftSpec& a, const SubshiftSpec& b) {
    SubshiftSpec s;
    s.kind_ = Kind::Product;
    s.left_ = std::make_shared<SubshiftSpec>(a);
    s.right_ = std::make_shared<SubshiftSpec>(b);
    s.memory_ = std::max(a.memory_, b.memory_);
    auto compiled = compile_product(a.engine_, b.engine_, a.memory_, b.memory_);
    s.engine_ = compiled ? compiled : std::make_shared<detail::EnumProductEngine>(a.engine_, b.engine_);
    return s;
}

SubshiftSpec SubshiftSpec::toeplitz_oracle(ToeplitzSpec spec, int truncation) {
    SubshiftSpec s;
    s.kind_ = Kind::Toeplitz;
    s.toeplitz_ = std::make_shared<ToeplitzSpec>(std::move(spec));
    s.truncation_ = truncation;
    s.engine_ = std::make_shared<detail::ToeplitzEngine>(*s.toeplitz_, truncation);
    return s;
}

SubshiftSpec SubshiftSpec::wap_oracle(WapSpec spec, int truncation) {
    SubshiftSpec s;
    s.kind_ = Kind::Wap;
    s.wap_ = std::make_shared<WapSpec>(std::move(spec));
    s.truncation_ = truncation;
    s.engine_ = std::make_shared<detail::WapEngine>(*s.wap_, truncation);
    return s;
}

int SubshiftSpec::alphabet() const { return engine_->alphabet(); }

Pos SubshiftSpec::horizon() const { return engine_->horizon(); }

bool SubshiftSpec::empty_shift() const { return engine_->empty_shift(); }

std::vector<Word> SubshiftSpec::language(int n) const {
    if (n < 1) throw InputError("language length must be >= 1");
    if (n > engine_->horizon()) throw HorizonError("window length exceeds exact horizon");
    return engine_->language(n);
}

bool SubshiftSpec::feasible(const std::vector<Constraint>& constraints) const {
    std::map<Pos, Symbol> merged;
    for (const Constraint& c : constraints) {
        if (c.sym < 0 || c.sym >= alphabet()) throw InputError("constraint symbol outside alphabet");
        auto [it, inserted] = merged.emplace(c.pos, c.sym);
        if (!inserted && it->second != c.sym) return false;
    }
    std::vector<WindowConstraint> wcs;
    wcs.reserve(merged.size());
    for (auto [pos, sym] : merged)
        wcs.push_back(WindowConstraint{pos, 1, {static_cast<std::uint64_t>(sym)}});
    return engine_->feasible_windows(wcs);
}

bool SubshiftSpec::feasible_sets(const std::vector<ShiftedSet>& constraints) const {
    return engine_->feasible_windows(to_windows(constraints, alphabet()));
}

}  // namespace indep
