#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "wha/rep.hpp"

using namespace wha;

static FieldPtr splitting_field_for(const GroupPtr& G, long p) {
    std::vector<long> orders;
    for (const auto& c : G->classes()) orders.push_back(c.element_order);
    return find_splitting_field(p, orders);
}

TEST_CASE("cyclic(2) over GF(3): two linear characters 1 and -1") {
    auto G = FiniteGroup::cyclic(2);
    auto F = splitting_field_for(G, 3);
    auto list = irreps(G, F);
    REQUIRE(list.size() == 2);
    CHECK(list[0].dim == 1);
    CHECK(list[1].dim == 1);
    std::set<long> vals;
    for (const auto& v : list) vals.insert(v.rho[1].at(0, 0).as_int());
    CHECK(vals == std::set<long>{1, 2});  // 1 and -1 mod 3
}

TEST_CASE("symmetric(3) over GF(5): dims 1,1,2") {
    auto G = FiniteGroup::symmetric(3);
    auto F = splitting_field_for(G, 5);
    auto list = irreps(G, F);
    REQUIRE(list.size() == 3);
    CHECK(list[0].dim == 1);
    CHECK(list[1].dim == 1);
    CHECK(list[2].dim == 2);
    int total = 0;
    for (const auto& v : list) total += v.dim * v.dim;
    CHECK(total == 6);
    // hand catalog: trivial, sign, standard; compare character multisets on
    // classes ordered by element order (1, 2, 3 for this construction order)
    // trivial: (1,1,1); sign: (1,-1,1); standard: (2,0,-1)
    std::set<std::vector<long>> got, want;
    for (const auto& v : list) {
        std::vector<long> chi;
        for (const auto& c : v.character) chi.push_back(c.as_int());
        got.insert(chi);
    }
    auto cls = G->classes();
    REQUIRE(cls.size() == 3);
    std::vector<long> ords;
    for (auto& c : cls) ords.push_back(c.element_order);
    // build expected tuples keyed on class element orders
    std::vector<long> triv, sign, stan;
    for (long o : ords) {
        triv.push_back(1);
        sign.push_back(o == 2 ? 4 : 1);
        stan.push_back(o == 1 ? 2 : (o == 2 ? 0 : 4));
    }
    want = {triv, sign, stan};
    CHECK(got == want);
}

TEST_CASE("trivial group: one 1-dim irrep") {
    auto G = FiniteGroup::trivial();
    auto list = irreps(G, FieldSpec::prime_field(7));
    REQUIRE(list.size() == 1);
    CHECK(list[0].dim == 1);
}

TEST_CASE("modular order rejected") {
    auto G = FiniteGroup::symmetric(3);
    CHECK_THROWS_AS(irreps(G, FieldSpec::prime_field(3)), modular_group_order);
}

TEST_CASE("irrep lists: sum of squares, multiplicativity, Schur") {
    for (auto G : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
                   FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)}) {
        for (long p : {2L, 3L, 5L, 7L}) {
            if (G->order() % p == 0) continue;
            auto F = splitting_field_for(G, p);
            auto list = irreps(G, F);
            int total = 0;
            for (const auto& v : list) total += v.dim * v.dim;
            CHECK(total == G->order());
            for (const auto& v : list) {
                GroupModule M{G, F, v.rho};
                CHECK(is_group_module(M));
                CHECK(end_dim(M) == 1);
            }
            // pairwise Hom spaces vanish
            for (size_t i = 0; i < list.size(); ++i)
                for (size_t j = i + 1; j < list.size(); ++j) {
                    GroupModule A{G, F, list[i].rho}, B{G, F, list[j].rho};
                    CHECK(hom_space(A, B).empty());
                }
        }
    }
}

TEST_CASE("central idempotents are orthogonal and sum to 1") {
    auto G = FiniteGroup::symmetric(3);
    auto F = splitting_field_for(G, 5);
    auto list = irreps(G, F);
    auto mulGA = [&](const std::vector<Gf>& a, const std::vector<Gf>& b) {
        std::vector<Gf> out(G->order(), Gf::zero(F));
        for (int x = 0; x < G->order(); ++x)
            for (int y = 0; y < G->order(); ++y) out[G->mul(x, y)] += a[x] * b[y];
        return out;
    };
    std::vector<std::vector<Gf>> es;
    for (const auto& v : list) es.push_back(central_idempotent(G, F, v));
    std::vector<Gf> sum(G->order(), Gf::zero(F));
    for (const auto& e : es)
        for (int g = 0; g < G->order(); ++g) sum[g] += e[g];
    CHECK(sum[0].is_one());
    for (int g = 1; g < G->order(); ++g) CHECK(sum[g].is_zero());
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            auto prod = mulGA(es[i], es[j]);
            if (i == j)
                CHECK(prod == es[i]);
            else
                for (const auto& c : prod) CHECK(c.is_zero());
        }
}
