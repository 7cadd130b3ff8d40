#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyint/poly.hpp"
#include "polyint/zfactor.hpp"

#include <random>

using namespace polyint;

namespace {

Poly<Constant> cp(std::initializer_list<long> cs) {
    Poly<Constant> p;
    for (long c : cs) p.push_back(Constant(c));
    ptrim(p);
    return p;
}

Poly<Constant> random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<long> dc(-6, 6);
    int d = dd(rng);
    Poly<Constant> p(d + 1, Constant(0));
    for (int i = 0; i <= d; ++i) p[i] = Constant(dc(rng));
    ptrim(p);
    return p;
}

} // namespace

TEST_CASE("divmod and gcd") {
    auto a = cp({-1, 0, 1});    // x^2 - 1
    auto b = cp({-1, 1});       // x - 1
    Poly<Constant> q, r;
    pdivmod(a, b, q, r);
    CHECK(q == cp({1, 1}));
    CHECK(pis_zero(r));
    CHECK(pgcd(a, b) == cp({-1, 1}));
    CHECK(pgcd(cp({1, 2, 1}), cp({1, 1})) == cp({1, 1}));
}

TEST_CASE("extended gcd identity on random inputs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        auto a = random_poly(rng, 5);
        auto b = random_poly(rng, 4);
        if (pis_zero(a) || pis_zero(b)) continue;
        Poly<Constant> s, t;
        auto g = pextgcd(a, b, s, t);
        auto lhs = padd(pmul(s, a), pmul(t, b));
        CHECK(lhs == g);
    }
}

TEST_CASE("resultant agrees with root products") {
    // res(x^2-1, x-2) = (2^2 - 1) = 3 with sign conventions
    auto a = cp({-1, 0, 1});
    auto b = cp({-2, 1});
    Constant r = presultant(a, b);
    CHECK(r == Constant(3));
    // res(f, g) = 0 iff common root
    CHECK(presultant(cp({-1, 0, 1}), cp({-1, 1})) == Constant(0));
}

TEST_CASE("squarefree decomposition") {
    // (x-1)^2 (x+2)
    auto f = pmul(pmul(cp({-1, 1}), cp({-1, 1})), cp({2, 1}));
    auto sq = psquarefree(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == cp({2, 1}));
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == cp({-1, 1}));
    CHECK(sq[1].second == 2);
}

TEST_CASE("rational polynomial factorization") {
    SUBCASE("splits a product of linears") {
        auto f = pmul(pmul(cp({-1, 1}), cp({1, 1})), cp({-2, 1}));
        auto qf = factor_rational_poly(f);
        CHECK(qf.factors.size() == 3);
        Poly<Constant> prod = pconst(Constant(1));
        for (auto& [fac, m] : qf.factors) {
            CHECK(m == 1);
            CHECK(pdeg(fac) == 1);
            prod = pmul(prod, fac);
        }
        CHECK(prod == f);
    }
    SUBCASE("keeps irreducibles whole") {
        auto f = cp({1, 0, 1}); // x^2+1
        auto qf = factor_rational_poly(f);
        REQUIRE(qf.factors.size() == 1);
        CHECK(qf.factors[0].first == f);
    }
    SUBCASE("x^4 - 1") {
        auto f = cp({-1, 0, 0, 0, 1});
        auto qf = factor_rational_poly(f);
        REQUIRE(qf.factors.size() == 3); // (x-1)(x+1)(x^2+1)
    }
    SUBCASE("nonmonic with content") {
        // 6x^2 - 6 = 6(x-1)(x+1)
        auto f = cp({-6, 0, 6});
        auto qf = factor_rational_poly(f);
        CHECK(qf.content == Constant(6));
        REQUIRE(qf.factors.size() == 2);
    }
    SUBCASE("high degree with repeated factors") {
        // (x^2+x+1)^2 (x-3)
        auto g = cp({1, 1, 1});
        auto f = pmul(pmul(g, g), cp({-3, 1}));
        auto qf = factor_rational_poly(f);
        REQUIRE(qf.factors.size() == 2);
        bool saw_quad = false;
        for (auto& [fac, m] : qf.factors) {
            if (pdeg(fac) == 2) {
                CHECK(m == 2);
                CHECK(fac == g);
                saw_quad = true;
            }
        }
        CHECK(saw_quad);
    }
    SUBCASE("random products recombine") {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 25; ++it) {
            Poly<Constant> f = pconst(Constant(1));
            int nf = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < nf; ++i) {
                auto g = random_poly(rng, 3);
                if (pdeg(g) < 1) continue;
                f = pmul(f, g);
            }
            if (pdeg(f) < 1) continue;
            auto qf = factor_rational_poly(f);
            Poly<Constant> prod = pconst(qf.content);
            for (auto& [fac, m] : qf.factors)
                for (int i = 0; i < m; ++i) prod = pmul(prod, fac);
            CHECK(prod == f);
        }
    }
}

TEST_CASE("rational roots") {
    // roots of (x - 2/3)(x + 5)(x^2 + 1)
    auto f = pmul(pmul(cp({-2, 3}), cp({5, 1})), cp({1, 0, 1}));
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == Rat(2, 3) && roots[1] == Rat(-5)) ||
           (roots[1] == Rat(2, 3) && roots[0] == Rat(-5))));
}
