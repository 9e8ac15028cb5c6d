#include <doctest.h>

#include "qgr/positroid.hpp"
#include "qgr/verify.hpp"

#include <algorithm>

using namespace qgr;

namespace {

HPrimeKey key_of(int m, int n, std::vector<int> gamma, std::set<Box> black) {
    IndexSet g(std::move(gamma));
    Partition shape = gamma_to_partition(m, n, g);
    return make_hprime_key(m, n, g, LeDiagram(shape, std::move(black)));
}

HPrimeKey all_white_key(int m, int n, std::vector<int> gamma) {
    return key_of(m, n, std::move(gamma), {});
}

HPrimeKey all_black_key(int m, int n, std::vector<int> gamma) {
    IndexSet g(gamma);
    Partition shape = gamma_to_partition(m, n, g);
    std::vector<Box> boxes = shape.boxes();
    std::set<Box> black(boxes.begin(), boxes.end());
    return key_of(m, n, std::move(gamma), std::move(black));
}

}  // namespace

TEST_SUITE("positroid") {

TEST_CASE("alpha_decompose") {
    auto d = alpha_decompose(IndexSet({1, 3, 5}), IndexSet({2, 4, 5}));
    CHECK(d.removed == std::vector<int>{1, 3});
    CHECK(d.added == std::vector<int>{2, 4});

    auto d2 = alpha_decompose(IndexSet({1, 3, 5}), IndexSet({4, 5, 6}));
    CHECK(d2.removed == std::vector<int>{1, 3});
    CHECK(d2.added == std::vector<int>{4, 6});

    CHECK_THROWS_AS(alpha_decompose(IndexSet({1, 3, 5}), IndexSet({1, 3, 5})),
                    std::invalid_argument);
    CHECK_THROWS_AS(alpha_decompose(IndexSet({2, 3}), IndexSet({1, 4})), std::invalid_argument);
}

TEST_CASE("membership basics") {
    // all-black: everything except gamma itself is in the ideal
    HPrimeKey black24 = all_black_key(2, 4, {1, 2});
    for (const IndexSet& alpha : all_index_sets(2, 4))
        CHECK(member(black24, alpha) == !(alpha == black24.gamma));

    // all-white on gamma = [1..m]: the zero ideal
    HPrimeKey white24 = all_white_key(2, 4, {1, 2});
    for (const IndexSet& alpha : all_index_sets(2, 4)) CHECK_FALSE(member(white24, alpha));

    // all-white keys on any gamma: paths always exist for alpha > gamma,
    // cross-checked against the backtracking enumeration
    for (const IndexSet& gamma : all_index_sets(2, 4)) {
        HPrimeKey key = all_white_key(2, 4, gamma.elems());
        for (const IndexSet& alpha : all_index_sets(2, 4)) {
            if (!leq_componentwise(gamma, alpha)) {
                CHECK(member(key, alpha));  // Pi_gamma is always inside
            } else {
                CHECK_FALSE(member(key, alpha));
            }
        }
        CHECK_FALSE(member(key, gamma));
    }

    CHECK_THROWS_AS(member(white24, IndexSet({1, 5})), std::invalid_argument);
}

TEST_CASE("plucker_set and positroid_bases") {
    HPrimeKey white = all_white_key(2, 4, {1, 2});
    CHECK(plucker_set(white).empty());
    CHECK(positroid_bases(white).size() == 6);  // the uniform positroid

    HPrimeKey black = all_black_key(2, 4, {1, 3});
    PluckerSet pset = plucker_set(black);
    CHECK(pset.size() == 5);
    CHECK_FALSE(pset.contains(IndexSet({1, 3})));
    Positroid bases = positroid_bases(black);
    CHECK(bases == Positroid{IndexSet({1, 3})});

    // double computation: complement counts across Gr(2,4)
    for (const HPrimeKey& key : enumerate_hprime_keys(2, 4)) {
        PluckerSet p = plucker_set(key);
        long members = 0;
        for (const IndexSet& alpha : all_index_sets(2, 4))
            if (member(key, alpha)) ++members;
        CHECK(static_cast<long>(p.size()) == members);
        CHECK(p.size() + positroid_bases(key).size() == 6);
    }
}

TEST_CASE("is_matroid") {
    CHECK(is_matroid(Positroid{IndexSet({1, 3})}));
    Positroid uniform;
    for (const IndexSet& s : all_index_sets(2, 4)) uniform.insert(s);
    CHECK(is_matroid(uniform));
    CHECK_FALSE(is_matroid(Positroid{IndexSet({1, 2}), IndexSet({3, 4})}));
    CHECK_THROWS_AS(is_matroid(Positroid{}), std::invalid_argument);
    CHECK_THROWS_AS(is_matroid(Positroid{IndexSet({1}), IndexSet({1, 2})}),
                    std::invalid_argument);
}

TEST_CASE("every Gr(2,4) positroid passes the exchange axiom") {
    for (const HPrimeKey& key : enumerate_hprime_keys(2, 4))
        CHECK(is_matroid(positroid_bases(key)));
}

TEST_CASE("i_leq") {
    CHECK(i_leq(1, IndexSet({1, 3}), IndexSet({1, 4}), 4));
    CHECK(i_leq(3, IndexSet({3, 4}), IndexSet({1, 2}), 4));  // shifted keys (0,1) vs (2,3)
    CHECK_FALSE(i_leq(1, IndexSet({1, 4}), IndexSet({1, 3}), 4));

    auto sets = all_index_sets(2, 4);
    for (int i = 1; i <= 4; ++i) {
        for (const IndexSet& a : sets) {
            CHECK(i_leq(i, a, a, 4));  // reflexive
            for (const IndexSet& b : sets)
                if (i_leq(i, a, b, 4) && i_leq(i, b, a, 4)) CHECK(a == b);  // antisymmetric
        }
    }
}

TEST_CASE("necklaces") {
    HPrimeKey zero = all_white_key(2, 4, {1, 2});
    GrassmannNecklace neck = necklace_of(zero);
    GrassmannNecklace expected = {IndexSet({1, 2}), IndexSet({2, 3}), IndexSet({3, 4}),
                                  IndexSet({1, 4})};
    CHECK(neck == expected);
    CHECK(necklace_axiom_holds(neck, 4));

    HPrimeKey black = all_black_key(2, 4, {1, 3});
    GrassmannNecklace constant = necklace_of(black);
    for (const IndexSet& entry : constant) CHECK(entry == IndexSet({1, 3}));
    CHECK(necklace_axiom_holds(constant, 4));

    for (const HPrimeKey& key : enumerate_hprime_keys(2, 4))
        CHECK(necklace_axiom_holds(necklace_of(key), 4));

    // the irrelevant ideal has no necklace
    PluckerSet everything;
    for (const IndexSet& s : all_index_sets(2, 4)) everything.insert(s);
    CHECK_THROWS_AS(necklace(everything, 2, 4), std::logic_error);
}

TEST_CASE("necklace_leq matches Pluecker set inclusion on Gr(2,4)") {
    auto keys = enumerate_hprime_keys(2, 4);
    std::vector<PluckerSet> psets;
    std::vector<GrassmannNecklace> necks;
    for (const HPrimeKey& key : keys) {
        psets.push_back(plucker_set(key));
        necks.push_back(necklace_of(key));
    }
    GrassmannNecklace zero_neck = necklace(PluckerSet{}, 2, 4);
    for (size_t a = 0; a < keys.size(); ++a) {
        CHECK(necklace_leq(zero_neck, necks[a], 4));  // zero ideal below everything
        CHECK(necklace_leq(necks[a], necks[a], 4));   // reflexive
        for (size_t b = 0; b < keys.size(); ++b) {
            bool incl = std::includes(psets[b].begin(), psets[b].end(), psets[a].begin(),
                                      psets[a].end());
            CHECK(necklace_leq(necks[a], necks[b], 4) == incl);
        }
    }
}

TEST_CASE("hprime_poset on Gr(1,2)") {
    HPrimePoset poset = hprime_poset(1, 2);
    CHECK(poset.keys.size() == 3);
    CHECK(poset.top_index == 3);

    // the three keys: gamma=[1] white, gamma=[1] black, gamma=[2] empty
    std::vector<PluckerSet> psets;
    for (const HPrimeKey& key : poset.keys) psets.push_back(plucker_set(key));
    int bottom = -1, mid1 = -1, mid2 = -1;
    for (int k = 0; k < 3; ++k) {
        if (psets[k].empty()) bottom = k;
        else if (psets[k] == PluckerSet{IndexSet({2})}) mid1 = k;
        else if (psets[k] == PluckerSet{IndexSet({1})}) mid2 = k;
    }
    REQUIRE(bottom >= 0);
    REQUIRE(mid1 >= 0);
    REQUIRE(mid2 >= 0);
    // the two middle ideals are incomparable: bottom < {mid1, mid2} < top
    std::vector<std::pair<int, int>> expected = {
        {bottom, mid1}, {bottom, mid2}, {mid1, 3}, {mid2, 3}};
    std::sort(expected.begin(), expected.end());
    auto hasse = poset.hasse_edges;
    std::sort(hasse.begin(), hasse.end());
    CHECK(hasse == expected);
}

TEST_CASE("poset suite on Gr(2,4)") {
    SuiteResult r = verify_poset(2, 4);
    INFO(r.summary());
    CHECK(r.ok());
}

TEST_CASE("labeling consistency suite on Gr(2,4)") {
    SuiteResult r = verify_labeling(2, 4);
    INFO(r.summary());
    CHECK(r.ok());
}

TEST_CASE("separating sets") {
    HPrimeKey zero = all_white_key(2, 4, {1, 2});
    auto entries = separating_set(zero);
    CHECK(entries == std::vector<IndexSet>{IndexSet({1, 2}), IndexSet({2, 3}), IndexSet({3, 4}),
                                           IndexSet({1, 4})});
    PluckerSet pset = plucker_set(zero);
    for (const IndexSet& entry : entries) CHECK_FALSE(pset.contains(entry));
    // entries are exactly the necklace entries
    GrassmannNecklace neck = necklace_of(zero);
    CHECK(std::equal(neck.begin(), neck.end(), entries.begin()));
}

TEST_CASE("polynormal sequences") {
    HPrimeKey zero = all_white_key(2, 4, {1, 2});
    CHECK(polynormal_sequence(zero, false).empty());

    HPrimeKey black = all_black_key(2, 4, {1, 3});
    auto seq = polynormal_sequence(black, false);
    PluckerSet unions(seq.begin(), seq.end());
    CHECK(unions == plucker_set(black));

    auto deduped = polynormal_sequence(black, true);
    std::set<IndexSet> dedup_set(deduped.begin(), deduped.end());
    CHECK(dedup_set.size() == deduped.size());
    CHECK(PluckerSet(deduped.begin(), deduped.end()) == plucker_set(black));
    CHECK(deduped.size() <= seq.size());

    for (const HPrimeKey& key : enumerate_hprime_keys(2, 4)) {
        auto s = polynormal_sequence(key, false);
        CHECK(PluckerSet(s.begin(), s.end()) == plucker_set(key));
    }
}

TEST_CASE("the Gr(2,4) obstruction") {
    // no H-prime contains [12] and [23] without [13] or [24]
    for (const HPrimeKey& key : enumerate_hprime_keys(2, 4)) {
        PluckerSet p = plucker_set(key);
        if (p.contains(IndexSet({1, 2})) && p.contains(IndexSet({2, 3})))
            CHECK((p.contains(IndexSet({1, 3})) || p.contains(IndexSet({2, 4}))));
    }
}

}  // TEST_SUITE
