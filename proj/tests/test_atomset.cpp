#include "facelatt/atomset.hpp"
#include "facelatt/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace facelatt;

TEST_CASE("construction and membership") {
    AtomSet e(5);
    CHECK(e.empty());
    CHECK(e.count() == 0);
    CHECK(e.capacity() == 5);
    CHECK_FALSE(e.contains(1));

    AtomSet s = AtomSet::from_indices(5, {2, 4, 4});
    CHECK(s.count() == 2);  // duplicate collapses
    CHECK(s.contains(2));
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(3));
    CHECK(s.indices() == std::vector<int>{2, 4});
    CHECK(s.to_string() == "{2,4}");

    CHECK(AtomSet::full(3).indices() == std::vector<int>{1, 2, 3});
    CHECK(AtomSet::full(0).empty());
}

TEST_CASE("out-of-range index is rejected") {
    CHECK_THROWS_AS(AtomSet::from_indices(3, {0}), InputError);
    CHECK_THROWS_AS(AtomSet::from_indices(3, {4}), InputError);
    CHECK_THROWS_AS(AtomSet::from_indices(0, {1}), InputError);
}

TEST_CASE("set algebra") {
    AtomSet a = AtomSet::from_indices(6, {1, 2, 5});
    AtomSet b = AtomSet::from_indices(6, {2, 5, 6});
    CHECK((a & b).indices() == std::vector<int>{2, 5});
    CHECK((a | b).indices() == std::vector<int>{1, 2, 5, 6});
    CHECK(a.is_subset_of(a | b));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(AtomSet(6).is_subset_of(a));  // empty set under everything

    std::vector<AtomSet> fam = {b, AtomSet::from_indices(6, {1, 2})};
    CHECK(AtomSet::from_indices(6, {1, 2}).is_subset_of_any(fam));
    CHECK_FALSE(a.is_subset_of_any(fam));
}

TEST_CASE("capacity mismatch throws") {
    AtomSet a(3), b(4);
    CHECK_THROWS_AS((void)(a & b), InputError);
    CHECK_THROWS_AS((void)(a | b), InputError);
    CHECK_THROWS_AS((void)a.is_subset_of(b), InputError);
    CHECK_FALSE(a == b);
}

TEST_CASE("equality and hashing are padding-safe") {
    // same set built two ways, crossing the 64-bit word boundary
    AtomSet a = AtomSet::from_indices(70, {1, 64, 65, 70});
    AtomSet b(70);
    b = b | a;
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    AtomSet c = AtomSet::from_indices(70, {1, 64, 65});
    CHECK_FALSE(a == c);
}

TEST_CASE("lex order matches the sorted index sequences") {
    // oracle: compare indices() vectors directly
    auto oracle = [](const AtomSet& a, const AtomSet& b) {
        return a.indices() < b.indices();
    };
    std::mt19937 rng(20240817);
    for (int cap : {1, 5, 63, 64, 65, 130}) {
        for (int trial = 0; trial < 300; ++trial) {
            AtomSet a(cap), b(cap);
            std::vector<int> ia, ib;
            std::uniform_int_distribution<int> coin(0, 3), pick(1, cap);
            for (int i = 0; i < cap; ++i) {
                if (coin(rng) == 0) ia.push_back(pick(rng));
                if (coin(rng) == 0) ib.push_back(pick(rng));
            }
            a = AtomSet::from_indices(cap, ia);
            b = AtomSet::from_indices(cap, ib);
            CAPTURE(a.to_string());
            CAPTURE(b.to_string());
            REQUIRE(lex_less(a, b) == oracle(a, b));
            REQUIRE(lex_less(b, a) == oracle(b, a));
            REQUIRE_FALSE(lex_less(a, a));
        }
    }
}

TEST_CASE("lex order pinned examples") {
    const int n = 5;
    auto s = [&](std::initializer_list<int> ix) { return AtomSet::from_indices(n, ix); };
    CHECK(lex_less(s({1, 2}), s({1, 2, 3})));  // prefix first
    CHECK(lex_less(s({1, 2, 3}), s({1, 4})));
    CHECK(lex_less(s({1, 4}), s({2})));
    CHECK(lex_less(s({}), s({1})));  // empty set first
    CHECK_FALSE(lex_less(s({2}), s({1, 4})));
}

TEST_CASE("words round-trip through the internal constructor") {
    AtomSet a = AtomSet::from_indices(130, {1, 64, 128, 130});
    AtomSet b = atomset_from_words(130, a.words());
    CHECK(a == b);
    CHECK(b.word_count() == AtomSet::words_for(130));
}
