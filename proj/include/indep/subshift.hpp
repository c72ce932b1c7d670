// Subshift presentations over Z with exact finite-window semantics.
//
// Variants: full shift, SFT by forbidden words, product, and the two
// truncated construction oracles (Toeplitz tower, sparse WAP system).  Every
// variant answers two exact questions inside its declared horizon:
//
//   language(n)        the admissible words of length n
//   feasible(...)      is some point compatible with a finite constraint set
//
// Feasibility for finite-type variants runs by dynamic programming over the
// de Bruijn graph restricted to its bi-extendable part, never by word
// enumeration.  Oracle variants answer from their truncated data and throw
// HorizonError past the span they can certify.

#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "indep/clopen.hpp"
#include "indep/toeplitz.hpp"
#include "indep/wap.hpp"
#include "indep/word.hpp"

namespace indep {

struct Constraint {
    Pos pos = 0;
    Symbol sym = 0;
};

// Membership constraint "T^shift(x) lies in *set".
struct ShiftedSet {
    const ClopenSet* set = nullptr;
    Pos shift = 0;
};

constexpr Pos kUnboundedHorizon = std::numeric_limits<Pos>::max() / 4;

namespace detail {
class Engine;
}

class SubshiftSpec {
public:
    enum class Kind { Full, Sft, Product, Toeplitz, Wap };

    static SubshiftSpec full_shift(int alphabet);
    static SubshiftSpec sft(int alphabet, int memory, std::vector<Word> forbidden);
    static SubshiftSpec product_of(const SubshiftSpec& a, const SubshiftSpec& b);
    static SubshiftSpec toeplitz_oracle(ToeplitzSpec spec, int truncation);
    static SubshiftSpec wap_oracle(WapSpec spec, int truncation);

    Kind kind() const { return kind_; }
    int alphabet() const;
    // Largest window span answerable exactly.
    Pos horizon() const;
    bool empty_shift() const;

    // Admissible words of length n, sorted; the same set is admissible on
    // every length-n window (shift invariance).
    std::vector<Word> language(int n) const;

    bool feasible(const std::vector<Constraint>& constraints) const;
    bool feasible_sets(const std::vector<ShiftedSet>& constraints) const;

    // Descriptive accessors (serialization); only valid for their kind.
    int sft_memory() const { return memory_; }
    const std::vector<Word>& sft_forbidden() const { return forbidden_; }
    const SubshiftSpec& left() const { return *left_; }
    const SubshiftSpec& right() const { return *right_; }
    const ToeplitzSpec& toeplitz_spec() const { return *toeplitz_; }
    const WapSpec& wap_spec() const { return *wap_; }
    int truncation() const { return truncation_; }

private:
    SubshiftSpec() = default;

    Kind kind_ = Kind::Full;
    int memory_ = 1;
    std::vector<Word> forbidden_;
    std::shared_ptr<const SubshiftSpec> left_, right_;
    std::shared_ptr<const ToeplitzSpec> toeplitz_;
    std::shared_ptr<const WapSpec> wap_;
    int truncation_ = 0;
    std::shared_ptr<const detail::Engine> engine_;
};

}  // namespace indep
