#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "wha/wreath.hpp"

using namespace wha;

TEST_CASE("wreath multiplication against the permutation model") {
    auto G = FiniteGroup::cyclic(2);
    const int n = 2;
    auto all = wreath_all(G, n);
    CHECK(all.size() == 8);
    for (const auto& a : all)
        for (const auto& b : all) {
            auto c = wreath_mul(G, a, b);
            auto pc = perm_mul(wreath_perm_model(G, n, a), wreath_perm_model(G, n, b));
            CHECK(pc == wreath_perm_model(G, n, c));
        }
    // identity and inverses from the product formula
    for (const auto& a : all) {
        CHECK(wreath_mul(G, a, wreath_identity(G, n)) == a);
        CHECK(wreath_mul(G, a, wreath_inv(G, a)) == wreath_identity(G, n));
    }
    // the spec'd example: ((x,e),(1 2)) * ((e,x),(1 2)) has trivial permutation
    WreathElement a{{1, 0}, perm_simple(2, 0)};
    WreathElement b{{0, 1}, perm_simple(2, 0)};
    auto c = wreath_mul(G, a, b);
    CHECK(perm_is_identity(c.w));
    CHECK(c.g == std::vector<int>{0, 0});  // x*x = e in C_2 coordinatewise after the twist
}

TEST_CASE("perm model is faithful for S_3 wreath") {
    auto G = FiniteGroup::symmetric(3);
    auto all = wreath_all(G, 2);
    std::set<Perm> images;
    for (const auto& a : all) images.insert(wreath_perm_model(G, 2, a));
    CHECK(images.size() == all.size());
}

TEST_CASE("type_of basics") {
    auto G = FiniteGroup::cyclic(2);
    auto id = wreath_identity(G, 3);
    auto ty = type_of(G, id);
    CHECK(ty.per_class[G->class_of(0)] == Partition{1, 1, 1});
    CHECK(ty.per_class[G->class_of(1)].empty());

    WreathElement a{{1, 0}, perm_simple(2, 0)};
    auto tya = type_of(G, a);
    CHECK(tya.per_class[G->class_of(1)] == Partition{2});
    CHECK(tya.per_class[G->class_of(0)].empty());
}

TEST_CASE("equal types exactly for conjugate pairs") {
    for (auto G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
        for (int n = 1; n <= (G->order() > 3 ? 2 : 3); ++n) {
            auto all = wreath_all(G, n);
            // partition into conjugacy classes by brute-force conjugation
            std::map<WreathElement, int> idx;
            for (size_t i = 0; i < all.size(); ++i) idx[all[i]] = static_cast<int>(i);
            std::vector<int> cls(all.size(), -1);
            int nc = 0;
            for (size_t s = 0; s < all.size(); ++s) {
                if (cls[s] >= 0) continue;
                for (const auto& x : all) {
                    int j = idx.at(wreath_conj(G, x, all[s]));
                    cls[j] = nc;
                }
                ++nc;
            }
            // same class <=> same type
            std::map<WreathType, std::set<int>> type_to_classes;
            for (size_t i = 0; i < all.size(); ++i)
                type_to_classes[type_of(G, all[i])].insert(cls[i]);
            for (const auto& [ty, classes] : type_to_classes) CHECK(classes.size() == 1);
            // distinct types give distinct classes by construction of the map
            size_t total_classes = 0;
            for (const auto& [ty, classes] : type_to_classes) total_classes += classes.size();
            CHECK(total_classes == static_cast<size_t>(nc));
        }
    }
}

TEST_CASE("type is a conjugation invariant on samples") {
    auto G = FiniteGroup::symmetric(3);
    auto all = wreath_all(G, 2);
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto& a = all[rng.next(all.size())];
        const auto& x = all[rng.next(all.size())];
        CHECK(type_of(G, wreath_conj(G, x, a)) == type_of(G, a));
    }
}

TEST_CASE("p-regular counting: C_2 at p=2 gives odd-part partitions") {
    auto G = FiniteGroup::cyclic(2);
    auto series = class_count_series(G, 2, 5);
    CHECK(series == std::vector<long>{1, 1, 1, 2, 2, 3});
    for (int n = 0; n <= 5; ++n) CHECK(p_regular_type_count(G, 2, n) == series[n]);
    for (int n = 1; n <= 4; ++n) CHECK(p_regular_class_count_brute(G, 2, n) == series[n]);
}

TEST_CASE("three-way class count agreement") {
    for (auto G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
        for (long p : {2L, 3L, 5L}) {
            auto series = class_count_series(G, p, 8);
            for (int n = 0; n <= 8; ++n) CHECK(p_regular_type_count(G, p, n) == series[n]);
            int nmax = G->order() > 3 ? 2 : 3;
            for (int n = 1; n <= nmax; ++n)
                CHECK(p_regular_class_count_brute(G, p, n) == series[n]);
        }
    }
}

TEST_CASE("jucys-murphy elements") {
    auto F = FieldSpec::prime_field(3);
    auto G = FiniteGroup::cyclic(2);

    CHECK(jucys_murphy(G, 2, 1, F).is_zero());
    CHECK_THROWS_AS(jucys_murphy(G, 2, 3, F), index_out_of_range);

    // G = C_2, n = 2: xi_2 has 2 terms and is central in FG_2
    auto xi2 = jucys_murphy(G, 2, 2, F);
    CHECK(xi2.terms().size() == 2);
    for (const auto& x : wreath_all(G, 2)) {
        auto gx = ga_of(G, 2, F, x);
        CHECK(gx * xi2 == xi2 * gx);
    }

    // trivial G: classical Jucys-Murphy, sum of transpositions (i,k)
    auto T = FiniteGroup::trivial();
    auto xi3 = jucys_murphy(T, 3, 3, F);
    CHECK(xi3.terms().size() == 2);
    for (const auto& [x, c] : xi3.terms()) {
        CHECK(c.is_one());
        bool is_transposition_with_3 =
            x.w == perm_transposition(3, 0, 2) || x.w == perm_transposition(3, 1, 2);
        CHECK(is_transposition_with_3);
    }
}

TEST_CASE("JM identity reports") {
    auto F3 = FieldSpec::prime_field(3);
    CHECK(verify_jm_identities(FiniteGroup::trivial(), 3, F3).all());
    CHECK(verify_jm_identities(FiniteGroup::cyclic(2), 2, F3).all());
    // p | |G| explicitly allowed here
    CHECK(verify_jm_identities(FiniteGroup::symmetric(3), 2, FieldSpec::prime_field(2)).all());
    CHECK(verify_jm_identities(FiniteGroup::cyclic(2), 3, FieldSpec::prime_field(2)).all());
}

TEST_CASE("xi_2..xi_n pairwise commute for |G|=6, n=3") {
    auto F = FieldSpec::prime_field(5);
    auto G = FiniteGroup::symmetric(3);
    std::vector<GroupAlgebraElement> xi;
    for (int k = 1; k <= 3; ++k) xi.push_back(jucys_murphy(G, 3, k, F));
    for (const auto& a : xi)
        for (const auto& b : xi) CHECK(a * b == b * a);
}
