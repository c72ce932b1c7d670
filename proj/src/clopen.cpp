#include "indep/clopen.hpp"

#include <algorithm>

namespace indep {

namespace {

constexpr std::uint64_t kPatternBudget = 1ull << 22;

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

ClopenSet::ClopenSet(int alphabet, const std::vector<Cylinder>& cylinders) {
    if (alphabet < 1 || alphabet > kMaxAlphabet)
        throw InputError("alphabet size must be in [1," + std::to_string(kMaxAlphabet) + "]");
    alphabet_ = alphabet;
    for (const Cylinder& c : cylinders) check_word_alphabet(c.word, alphabet);

    // The empty word denotes the whole space; it absorbs everything.
    for (const Cylinder& c : cylinders) {
        if (c.word.empty()) {
            start_ = 0;
            len_ = 0;
            patterns_ = {0};
            return;
        }
    }
    if (cylinders.empty()) {
        start_ = 0;
        len_ = 0;
        patterns_ = {};
        return;
    }

    Pos lo = cylinders.front().offset;
    Pos hi = lo;
    for (const Cylinder& c : cylinders) {
        lo = std::min(lo, c.offset);
        hi = std::max(hi, c.offset + static_cast<Pos>(c.word.size()));
    }
    start_ = lo;
    len_ = static_cast<int>(hi - lo);
    std::uint64_t total = checked_pow(alphabet, len_, kPatternBudget, "clopen window");

    Word pat(static_cast<size_t>(len_));
    for (std::uint64_t code = 0; code < total; ++code) {
        pat = code_word(code, alphabet, len_);
        for (const Cylinder& c : cylinders) {
            bool hit = true;
            for (size_t i = 0; i < c.word.size(); ++i) {
                if (pat[static_cast<size_t>(c.offset - lo) + i] != c.word[i]) {
                    hit = false;
                    break;
                }
            }
            if (hit) {
                patterns_.push_back(code);
                break;
            }
        }
    }
}

ClopenSet ClopenSet::whole(int alphabet) {
    return cylinder(alphabet, 0, Word{});
}

ClopenSet ClopenSet::empty_set(int alphabet) {
    return ClopenSet(alphabet, {});
}

ClopenSet ClopenSet::cylinder(int alphabet, Pos offset, const Word& word) {
    return ClopenSet(alphabet, {Cylinder{offset, word}});
}

ClopenSet ClopenSet::from_patterns(int alphabet, Pos window_start, int window_len,
                                   std::vector<std::uint64_t> pattern_codes) {
    if (alphabet < 1 || alphabet > kMaxAlphabet) throw InputError("alphabet size out of range");
    std::uint64_t total = checked_pow(alphabet, window_len, kPatternBudget, "clopen window");
    ClopenSet s;
    s.alphabet_ = alphabet;
    s.start_ = window_start;
    s.len_ = window_len;
    s.patterns_ = sorted_unique(std::move(pattern_codes));
    if (!s.patterns_.empty() && s.patterns_.back() >= total)
        throw InputError("pattern code exceeds window capacity");
    if (s.patterns_.empty()) {
        s.start_ = 0;
        s.len_ = 0;
    }
    return s;
}

bool ClopenSet::contains_code(std::uint64_t code) const {
    return std::binary_search(patterns_.begin(), patterns_.end(), code);
}

bool ClopenSet::matches(const Word& w, Pos offset) const {
    if (patterns_.empty()) return false;
    if (len_ == 0) return true;
    if (start_ < offset || window_end() > offset + static_cast<Pos>(w.size()))
        throw InputError("word does not cover clopen window");
    std::uint64_t code = 0;
    size_t base = static_cast<size_t>(start_ - offset);
    for (int i = 0; i < len_; ++i)
        code = code * static_cast<std::uint64_t>(alphabet_) + static_cast<std::uint64_t>(w[base + static_cast<size_t>(i)]);
    return contains_code(code);
}

ClopenSet ClopenSet::shift_preimage(Pos s) const {
    ClopenSet out = *this;
    if (!out.is_whole() && !out.is_empty()) out.start_ += s;
    return out;
}

ClopenSet ClopenSet::expanded(Pos new_start, int new_len) const {
    if (is_empty()) {
        ClopenSet out = *this;
        out.start_ = new_start;
        out.len_ = new_len;
        return out;
    }
    // A whole-space set sits at every window.
    Pos cur_start = is_whole() ? new_start : start_;
    Pos cur_end = is_whole() ? new_start : window_end();
    if (new_start > cur_start || new_start + new_len < cur_end)
        throw InputError("expansion window must contain the current window");
    checked_pow(alphabet_, new_len, kPatternBudget, "clopen expansion");
    std::uint64_t k = static_cast<std::uint64_t>(alphabet_);
    int left = static_cast<int>(cur_start - new_start);
    int right = static_cast<int>((new_start + new_len) - cur_end);
    std::uint64_t left_count = 1;
    for (int i = 0; i < left; ++i) left_count *= k;
    std::uint64_t right_count = 1;
    for (int i = 0; i < right; ++i) right_count *= k;

    std::vector<std::uint64_t> out_patterns;
    out_patterns.reserve(patterns_.size() * static_cast<size_t>(left_count * right_count));
    for (std::uint64_t lhs = 0; lhs < left_count; ++lhs) {
        std::uint64_t lhs_base = lhs;
        for (int i = 0; i < len_; ++i) lhs_base *= k;
        for (std::uint64_t mid : patterns_) {
            std::uint64_t base = (lhs_base + mid) * right_count;
            for (std::uint64_t rhs = 0; rhs < right_count; ++rhs) out_patterns.push_back(base + rhs);
        }
    }
    return from_patterns(alphabet_, new_start, new_len, std::move(out_patterns));
}

namespace {

// Common refinement window of two sets (empty sets keep their peer's window).
void common_window(const ClopenSet& a, const ClopenSet& b, Pos& start, int& len) {
    bool a_real = !a.is_empty() && !a.is_whole();
    bool b_real = !b.is_empty() && !b.is_whole();
    if (!a_real && !b_real) {
        start = 0;
        len = 0;
        return;
    }
    if (!a_real) {
        start = b.window_start();
        len = b.window_len();
        return;
    }
    if (!b_real) {
        start = a.window_start();
        len = a.window_len();
        return;
    }
    start = std::min(a.window_start(), b.window_start());
    Pos end = std::max(a.window_end(), b.window_end());
    len = static_cast<int>(end - start);
}

}  // namespace

ClopenSet ClopenSet::complement() const {
    std::uint64_t total = checked_pow(alphabet_, len_, kPatternBudget, "clopen complement");
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<size_t>(total - patterns_.size()));
    size_t idx = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (idx < patterns_.size() && patterns_[idx] == code) {
            ++idx;
        } else {
            out.push_back(code);
        }
    }
    return from_patterns(alphabet_, start_, len_, std::move(out));
}

ClopenSet ClopenSet::union_with(const ClopenSet& other) const {
    if (alphabet_ != other.alphabet_) throw InputError("alphabet mismatch in clopen union");
    if (is_empty()) return other;
    if (other.is_empty()) return *this;
    if (is_whole() || other.is_whole()) return whole(alphabet_);
    Pos s;
    int l;
    common_window(*this, other, s, l);
    ClopenSet a = expanded(s, l);
    ClopenSet b = other.expanded(s, l);
    std::vector<std::uint64_t> merged = a.patterns_;
    merged.insert(merged.end(), b.patterns_.begin(), b.patterns_.end());
    return from_patterns(alphabet_, s, l, std::move(merged));
}

ClopenSet ClopenSet::intersect(const ClopenSet& other) const {
    if (alphabet_ != other.alphabet_) throw InputError("alphabet mismatch in clopen intersection");
    if (is_empty() || other.is_empty()) return empty_set(alphabet_);
    Pos s;
    int l;
    common_window(*this, other, s, l);
    ClopenSet a = expanded(s, l);
    ClopenSet b = other.expanded(s, l);
    std::vector<std::uint64_t> out;
    std::set_intersection(a.patterns_.begin(), a.patterns_.end(), b.patterns_.begin(), b.patterns_.end(),
                          std::back_inserter(out));
    return from_patterns(alphabet_, s, l, std::move(out));
}

bool ClopenSet::disjoint_with(const ClopenSet& other) const {
    return intersect(other).is_empty();
}

bool ClopenSet::subset_of(const ClopenSet& other) const {
    return intersect(other).same_set(*this);
}

bool ClopenSet::same_set(const ClopenSet& other) const {
    if (alphabet_ != other.alphabet_) return false;
    if (is_empty() || other.is_empty()) return is_empty() == other.is_empty();
    Pos s;
    int l;
    common_window(*this, other, s, l);
    ClopenSet a = expanded(s, l);
    ClopenSet b = other.expanded(s, l);
    return a.patterns_ == b.patterns_;
}

ClopenSet ClopenSet::canonical() const {
    if (is_empty()) return empty_set(alphabet_);
    ClopenSet cur = *this;
    auto coordinate_free = [&](const ClopenSet& c, bool leftmost) {
        if (c.len_ == 0) return false;
        // Free coordinate: the pattern set is (patterns on the shrunk window) x (all symbols).
        std::uint64_t k = static_cast<std::uint64_t>(c.alphabet_);
        std::uint64_t high = 1;
        for (int i = 0; i < c.len_ - 1; ++i) high *= k;
        std::vector<std::uint64_t> shrunk;
        shrunk.reserve(c.patterns_.size());
        for (std::uint64_t p : c.patterns_) shrunk.push_back(leftmost ? p % high : p / k);
        shrunk = sorted_unique(std::move(shrunk));
        return shrunk.size() * static_cast<size_t>(k) == c.patterns_.size();
    };
    for (;;) {
        if (coordinate_free(cur, true)) {
            std::uint64_t k = static_cast<std::uint64_t>(cur.alphabet_);
            std::uint64_t high = 1;
            for (int i = 0; i < cur.len_ - 1; ++i) high *= k;
            std::vector<std::uint64_t> shrunk;
            for (std::uint64_t p : cur.patterns_) shrunk.push_back(p % high);
            cur = from_patterns(cur.alphabet_, cur.start_ + 1, cur.len_ - 1, std::move(shrunk));
            if (cur.len_ == 0) break;
            continue;
        }
        if (coordinate_free(cur, false)) {
            std::uint64_t k = static_cast<std::uint64_t>(cur.alphabet_);
            std::vector<std::uint64_t> shrunk;
            for (std::uint64_t p : cur.patterns_) shrunk.push_back(p / k);
            cur = from_patterns(cur.alphabet_, cur.start_, cur.len_ - 1, std::move(shrunk));
            if (cur.len_ == 0) break;
            continue;
        }
        break;
    }
    if (cur.len_ == 0 && !cur.patterns_.empty()) return whole(cur.alphabet_);
    return cur;
}

std::vector<Cylinder> ClopenSet::to_cylinders() const {
    std::vector<Cylinder> out;
    out.reserve(patterns_.size());
    for (std::uint64_t p : patterns_) out.push_back(Cylinder{start_, code_word(p, alphabet_, len_)});
    return out;
}

ClopenSet product_clopen(const ClopenSet& a, const ClopenSet& b) {
    int ka = a.alphabet();
    int kb = b.alphabet();
    if (a.is_empty() || b.is_empty()) return ClopenSet::empty_set(ka * kb);
    if (a.is_whole() && b.is_whole()) return ClopenSet::whole(ka * kb);
    Pos start;
    Pos end;
    if (a.is_whole()) {
        start = b.window_start();
        end = b.window_end();
    } else if (b.is_whole()) {
        start = a.window_start();
        end = a.window_end();
    } else {
        start = std::min(a.window_start(), b.window_start());
        end = std::max(a.window_end(), b.window_end());
    }
    int len = static_cast<int>(end - start);
    ClopenSet ea = a.is_whole() ? ClopenSet::from_patterns(ka, start, 0, {0}).expanded(start, len) : a.expanded(start, len);
    ClopenSet eb = b.is_whole() ? ClopenSet::from_patterns(kb, start, 0, {0}).expanded(start, len) : b.expanded(start, len);
    std::vector<std::uint64_t> out;
    out.reserve(ea.patterns().size() * eb.patterns().size());
    for (std::uint64_t pa : ea.patterns()) {
        Word wa = code_word(pa, ka, len);
        for (std::uint64_t pb : eb.patterns()) {
            Word wb = code_word(pb, kb, len);
            Word pair(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i)
                pair[static_cast<size_t>(i)] = wa[static_cast<size_t>(i)] * kb + wb[static_cast<size_t>(i)];
            out.push_back(word_code(pair, ka * kb));
        }
    }
    return ClopenSet::from_patterns(ka * kb, start, len, std::move(out));
}

}  // namespace indep
