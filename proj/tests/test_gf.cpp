#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wha/gf.hpp"
#include "wha/util.hpp"

using namespace wha;

TEST_CASE("embed_int and characteristic") {
    auto F5 = FieldSpec::prime_field(5);
    CHECK(Gf::from_int(F5, 0).is_zero());
    CHECK(Gf::from_int(F5, 5).is_zero());
    CHECK(Gf::from_int(F5, 7) == Gf::from_int(F5, 2));
    // ring homomorphism on a sweep of pairs
    for (long a = -7; a <= 7; ++a)
        for (long b = -7; b <= 7; ++b) {
            CHECK(Gf::from_int(F5, a + b) == Gf::from_int(F5, a) + Gf::from_int(F5, b));
            CHECK(Gf::from_int(F5, a * b) == Gf::from_int(F5, a) * Gf::from_int(F5, b));
        }
}

TEST_CASE("GF(4) generator arithmetic") {
    // modulus x^2 + x + 1 over GF(2); x * x = x + 1
    auto F4 = FieldSpec::make(2, {1, 1, 1});
    Gf x = Gf::gen(F4);
    Gf xx = x * x;
    CHECK(xx == x + Gf::one(F4));
    CHECK((x * x * x).is_one());  // multiplicative order 3
    CHECK(x.mult_order() == 3);
}

TEST_CASE("field axioms on random triples, exact") {
    for (auto [p, mod] : {std::pair<long, std::vector<long>>{3, {1, 0, 1}},
                          {2, {1, 1, 0, 1}},
                          {5, {2, 1, 1}},
                          {7, {0, 1}}}) {
        auto F = FieldSpec::make(p, mod);
        Rng rng(42);
        for (int t = 0; t < 200; ++t) {
            Gf a = Gf::from_index(F, rng.next(F->q()));
            Gf b = Gf::from_index(F, rng.next(F->q()));
            Gf c = Gf::from_index(F, rng.next(F->q()));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("inversion of zero throws") {
    auto F3 = FieldSpec::prime_field(3);
    CHECK_THROWS_AS(Gf::zero(F3).inv(), inversion_of_zero);
}

TEST_CASE("find_splitting_field examples") {
    CHECK(find_splitting_field(3, {2})->m() == 1);
    CHECK(find_splitting_field(2, {3})->m() == 2);  // 3 | 2^2-1, not 2-1
    CHECK(find_splitting_field(5, {1})->m() == 1);
    CHECK(find_splitting_field(5, {6})->m() == 2);  // 6 | 24
    CHECK_THROWS_AS(find_splitting_field(3, {6}), order_divisible_by_p);
    // deterministic modulus: smallest irreducible for GF(4) is x^2+x+1
    auto F4 = find_splitting_field(2, {3});
    CHECK(F4->modulus() == std::vector<long>{1, 1, 1});
    // every requested order has a root of unity of that exact order
    auto F = find_splitting_field(3, {4, 5});
    bool found4 = false, found5 = false;
    for (std::uint64_t e = 1; e < F->q(); ++e) {
        auto o = Gf::from_index(F, e).mult_order();
        found4 |= (o == 4);
        found5 |= (o == 5);
    }
    CHECK(found4);
    CHECK(found5);
}

TEST_CASE("irreducibility test agrees with brute force over GF(2), GF(3)") {
    for (long p : {2L, 3L}) {
        for (int d = 2; d <= 4; ++d) {
            std::uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(p);
            for (std::uint64_t e = 0; e < total; ++e) {
                std::vector<long> poly(d + 1, 0);
                poly[d] = 1;
                std::uint64_t t = e;
                for (int i = 0; i < d; ++i) {
                    poly[i] = static_cast<long>(t % p);
                    t /= static_cast<std::uint64_t>(p);
                }
                // brute force: reducible iff some monic factor of degree 1..d/2 divides
                auto divides = [&](const std::vector<long>& f) {
                    std::vector<long> r = poly;
                    while (r.size() >= f.size()) {
                        long c = r.back();
                        if (c != 0) {
                            size_t off = r.size() - f.size();
                            for (size_t i = 0; i < f.size(); ++i)
                                r[off + i] = ((r[off + i] - c * f[i]) % p + p) % p;
                        }
                        r.pop_back();
                        while (!r.empty() && r.back() == 0) r.pop_back();
                    }
                    return r.empty();
                };
                bool red = false;
                for (int df = 1; df <= d / 2 && !red; ++df) {
                    std::uint64_t tf = 1;
                    for (int i = 0; i < df; ++i) tf *= static_cast<std::uint64_t>(p);
                    for (std::uint64_t ef = 0; ef < tf && !red; ++ef) {
                        std::vector<long> f(df + 1, 0);
                        f[df] = 1;
                        std::uint64_t u = ef;
                        for (int i = 0; i < df; ++i) {
                            f[i] = static_cast<long>(u % p);
                            u /= static_cast<std::uint64_t>(p);
                        }
                        if (divides(f)) red = true;
                    }
                }
                CHECK(gfpoly::is_irreducible_mod_p(poly, p) == !red);
            }
        }
    }
}
