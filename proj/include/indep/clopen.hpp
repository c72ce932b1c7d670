// Cylinders and clopen sets of a full shift.
//
// A Cylinder fixes a word at an offset: [w@a] = { x : x(a+i) = w[i] }.
// A ClopenSet is a finite union of cylinders over one alphabet, normalized
// to an explicit set of admissible patterns on the minimal spanning window;
// membership, equality, disjointness and complement are all decided on that
// window.  The empty word at any offset denotes the whole space.

#pragma once

#include <cstdint>
#include <vector>

#include "indep/word.hpp"

namespace indep {

struct Cylinder {
    Pos offset = 0;
    Word word;
};

class ClopenSet {
public:
    ClopenSet(int alphabet, const std::vector<Cylinder>& cylinders);

    static ClopenSet whole(int alphabet);
    static ClopenSet empty_set(int alphabet);
    // One-cylinder conveniences.
    static ClopenSet cylinder(int alphabet, Pos offset, const Word& word);
    static ClopenSet from_patterns(int alphabet, Pos window_start, int window_len,
                                   std::vector<std::uint64_t> pattern_codes);

    int alphabet() const { return alphabet_; }
    Pos window_start() const { return start_; }
    int window_len() const { return len_; }
    Pos window_end() const { return start_ + len_; }
    const std::vector<std::uint64_t>& patterns() const { return patterns_; }

    bool is_empty() const { return patterns_.empty(); }
    bool is_whole() const { return len_ == 0 && !patterns_.empty(); }

    bool contains_code(std::uint64_t code) const;
    // Membership of the window pattern carried by `w` placed at `offset`;
    // the word must cover the window.
    bool matches(const Word& w, Pos offset) const;

    // {x : T^s x in this} ; concretely the window moves right by s.
    ClopenSet shift_preimage(Pos s) const;

    ClopenSet expanded(Pos new_start, int new_len) const;
    ClopenSet complement() const;
    ClopenSet union_with(const ClopenSet& other) const;
    ClopenSet intersect(const ClopenSet& other) const;
    bool disjoint_with(const ClopenSet& other) const;
    bool subset_of(const ClopenSet& other) const;
    bool same_set(const ClopenSet& other) const;

    // Drop free boundary coordinates so equal sets serialize identically.
    ClopenSet canonical() const;

    // Normalized form as one cylinder per pattern (canonical serialization).
    std::vector<Cylinder> to_cylinders() const;

private:
    ClopenSet() = default;

    int alphabet_ = 2;
    Pos start_ = 0;
    int len_ = 0;
    std::vector<std::uint64_t> patterns_;  // sorted, distinct, big-endian codes
};

// Pairing of clopen sets over a product alphabet ka*kb; pair symbol = a*kb + b.
ClopenSet product_clopen(const ClopenSet& a, const ClopenSet& b);

}  // namespace indep
