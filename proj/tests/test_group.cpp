#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wha/group.hpp"

using namespace wha;

TEST_CASE("builtin families") {
    CHECK(FiniteGroup::cyclic(1)->order() == 1);
    CHECK(FiniteGroup::symmetric(3)->order() == 6);
    CHECK(FiniteGroup::symmetric(3)->classes().size() == 3);
    CHECK(FiniteGroup::dihedral(3)->order() == 6);
    CHECK(FiniteGroup::dihedral(3)->classes().size() == 3);
    CHECK(FiniteGroup::dihedral(4)->classes().size() == 5);
    CHECK(FiniteGroup::cyclic(6)->exponent() == 6);
}

TEST_CASE("invalid tables rejected") {
    // non-associative magma on 3 elements with 0 as two-sided identity
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 2}, {2, 2, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(t), invalid_table);
    // identity not at index 0
    std::vector<std::vector<int>> t2 = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(t2), invalid_table);
}

TEST_CASE("p-regular classes") {
    auto triv = FiniteGroup::trivial();
    CHECK(triv->p_regular_classes(2).size() == 1);
    CHECK(triv->p_regular_classes(5).size() == 1);

    // cyclic(4), p=2: orders are 1,2,4; only the identity class survives
    auto c4 = FiniteGroup::cyclic(4);
    CHECK(c4->p_regular_classes(2).size() == 1);
    CHECK(c4->p_regular_classes(3).size() == 4);

    // symmetric(3), p=3: classes of orders 1,2,3; two survive
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3->p_regular_classes(3).size() == 2);
    CHECK(s3->p_regular_classes(2).size() == 2);  // orders 1 and 3
    CHECK(s3->p_regular_classes(5).size() == 3);
}

TEST_CASE("all classes p-regular when p does not divide |G|") {
    for (auto G : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)}) {
        for (long p : {2L, 3L, 5L, 7L}) {
            if (G->order() % p == 0) continue;
            CHECK(G->p_regular_classes(p).size() == G->classes().size());
        }
    }
}

TEST_CASE("classes are conjugation-closed with constant order") {
    auto G = FiniteGroup::dihedral(4);
    for (const auto& cls : G->classes()) {
        for (int a : cls.members) {
            CHECK(G->element_order(a) == cls.element_order);
            for (int x = 0; x < G->order(); ++x)
                CHECK(G->class_of(G->conjugate(x, a)) == G->class_of(a));
        }
    }
}
