#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "indep/clopen.hpp"

using namespace indep;
using testutil::sym_at;

TEST_CASE("cylinder shift preimage moves the window right") {
    Word w{1, 0};
    ClopenSet a = ClopenSet::cylinder(2, 0, w);
    CHECK(a.shift_preimage(0).same_set(a));
    ClopenSet b = a.shift_preimage(3);
    CHECK(b.window_start() == 3);
    CHECK(b.patterns() == a.patterns());
    ClopenSet c = ClopenSet::cylinder(2, -2, w).shift_preimage(-2);
    CHECK(c.window_start() == -4);
}

TEST_CASE("shift preimage composes additively") {
    auto g = testutil::rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        int alphabet = testutil::pick(g, 2, 4);
        std::vector<Cylinder> cyls;
        int nc = testutil::pick(g, 1, 3);
        for (int i = 0; i < nc; ++i) {
            Word w(static_cast<size_t>(testutil::pick(g, 1, 3)));
            for (auto& s : w) s = testutil::pick(g, 0, alphabet - 1);
            cyls.push_back(Cylinder{testutil::pick(g, -3, 3), std::move(w)});
        }
        ClopenSet a(alphabet, cyls);
        Pos s = testutil::pick(g, -5, 5), t = testutil::pick(g, -5, 5);
        CHECK(a.shift_preimage(s).shift_preimage(t).same_set(a.shift_preimage(s + t)));
    }
}

TEST_CASE("normalization decides equality and complement") {
    ClopenSet zero = sym_at(2, 0, 0);
    ClopenSet one = sym_at(2, 0, 1);
    CHECK(zero.union_with(one).same_set(ClopenSet::whole(2)));
    CHECK(zero.complement().same_set(one));
    CHECK(zero.disjoint_with(one));
    CHECK_FALSE(zero.same_set(one));
    CHECK(zero.intersect(one).is_empty());
    CHECK(zero.subset_of(ClopenSet::whole(2)));

    // Same set described on different windows.
    ClopenSet padded(2, {Cylinder{0, Word{0, 0}}, Cylinder{0, Word{0, 1}}});
    CHECK(padded.same_set(zero));
    CHECK(padded.canonical().window_len() == 1);
}

TEST_CASE("whole and empty edge cases") {
    ClopenSet whole = ClopenSet::whole(3);
    ClopenSet empty = ClopenSet::empty_set(3);
    CHECK(whole.is_whole());
    CHECK(empty.is_empty());
    CHECK(whole.complement().is_empty());
    CHECK(whole.intersect(empty).is_empty());
    CHECK(whole.union_with(empty).is_whole());
    CHECK(empty.subset_of(empty));
    CHECK(empty.subset_of(whole));
    // The empty word denotes the whole space.
    CHECK(ClopenSet(3, {Cylinder{5, Word{}}}).is_whole());
}

TEST_CASE("canonical form round trips through cylinders") {
    auto g = testutil::rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int alphabet = testutil::pick(g, 2, 3);
        std::vector<Cylinder> cyls;
        int nc = testutil::pick(g, 0, 3);
        for (int i = 0; i < nc; ++i) {
            Word w(static_cast<size_t>(testutil::pick(g, 1, 3)));
            for (auto& s : w) s = testutil::pick(g, 0, alphabet - 1);
            cyls.push_back(Cylinder{testutil::pick(g, -2, 2), std::move(w)});
        }
        ClopenSet a(alphabet, cyls);
        ClopenSet b(alphabet, a.canonical().to_cylinders());
        CHECK(a.same_set(b));
    }
}

TEST_CASE("product clopen pairs patterns") {
    ClopenSet a = sym_at(2, 0, 1);
    ClopenSet b = sym_at(2, 1, 0);
    ClopenSet p = product_clopen(a, b);
    CHECK(p.alphabet() == 4);
    CHECK(p.window_start() == 0);
    CHECK(p.window_len() == 2);
    // pair symbol = left*2 + right; left=1 at 0, right=0 at 1
    // patterns: position 0 in {10,11} (=2,3), position 1 in {00,10} (=0,2)
    CHECK(p.patterns().size() == 4);
    for (std::uint64_t code : p.patterns()) {
        Word w = code_word(code, 4, 2);
        CHECK(w[0] / 2 == 1);
        CHECK(w[1] % 2 == 0);
    }
}
