#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyint/places.hpp"
#include "polyint/tower.hpp"

#include <random>

using namespace polyint;

namespace {

struct Setup {
    TowerPtr tw;
    Elem x;
    Setup() : tw(Tower::base()), x(tw->gen_elem(0)) {}

    Place fin(std::initializer_list<long> cs) const {
        Poly<Elem> p;
        for (long c : cs) p.push_back(Elem(c));
        ptrim(p);
        return Place::at(0, p);
    }
};

Elem random_ratfun(const Setup& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-5, 5);
    auto rp = [&]() {
        Elem e(0);
        int d = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i <= d; ++i) e = e * s.x + Elem(c(rng));
        return e;
    };
    Elem num = rp(), den = rp();
    while (num.is_zero()) num = rp();
    while (den.is_zero()) den = rp();
    return num / den;
}

} // namespace

TEST_CASE("order_at basics") {
    Setup s;
    Elem f = s.x * s.x / (s.x - Elem(1));
    CHECK(order_at(f, s.fin({0, 1})) == 2);
    CHECK(order_at(f, Place::infinity(0)) == -1);
    CHECK(order_at(f, s.fin({-1, 1})) == -1);
    Elem g = Elem(1) / (s.x * s.x + Elem(1));
    CHECK(order_at(g, s.fin({1, 0, 1})) == -1);
    CHECK_THROWS_AS(order_at(Elem(0), s.fin({0, 1})), domain_error);
}

TEST_CASE("divisor_of examples") {
    Setup s;
    SUBCASE("x/(x+1)") {
        Divisor d = divisor_of(s.x / (s.x + Elem(1)), 0);
        CHECK(d.size() == 2);
        CHECK(d[s.fin({0, 1})] == 1);
        CHECK(d[s.fin({1, 1})] == -1);
    }
    SUBCASE("constants have empty divisor") {
        CHECK(divisor_of(Elem(5), 0).empty());
    }
    SUBCASE("x^2 - 1") {
        Divisor d = divisor_of(s.x * s.x - Elem(1), 0);
        CHECK(d[s.fin({-1, 1})] == 1);
        CHECK(d[s.fin({1, 1})] == 1);
        CHECK(d[Place::infinity(0)] == -2);
        CHECK(d.size() == 3);
    }
}

TEST_CASE("divisor properties on random elements") {
    Setup s;
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        Elem f = random_ratfun(s, rng);
        Elem g = random_ratfun(s, rng);
        Divisor df = divisor_of(f, 0), dg = divisor_of(g, 0), dfg = divisor_of(f * g, 0);
        // additivity
        Divisor sum = df;
        for (auto& [p, o] : dg) {
            sum[p] += o;
            if (sum[p] == 0) sum.erase(p);
        }
        CHECK(sum == dfg);
        // degree zero
        CHECK(divisor_degree(df) == 0);
        CHECK(divisor_degree(dfg) == 0);
    }
}

TEST_CASE("ord additivity at a fixed place on random elements") {
    Setup s;
    std::mt19937_64 rng(17);
    Place p = s.fin({0, 1});
    for (int it = 0; it < 25; ++it) {
        Elem f = random_ratfun(s, rng);
        Elem g = random_ratfun(s, rng);
        CHECK(order_at(f * g, p) == order_at(f, p) + order_at(g, p));
    }
}

TEST_CASE("leading coefficients") {
    Setup s;
    // 2x/(x-1) at (x): evaluate 2/(x-1) at 0 -> -2
    LeadingCoeff lc = leading_coeff(Elem(2) * s.x / (s.x - Elem(1)), s.fin({0, 1}));
    CHECK(lc.as_elem() == Elem(-2));
    CHECK(leading_coeff(s.x - Elem(1), Place::infinity(0)).as_elem() == Elem(1));
    CHECK(leading_coeff(Elem(3), s.fin({0, 1})).as_elem() == Elem(3));
    // multiplicativity at a place
    std::mt19937_64 rng(23);
    Place p = s.fin({-2, 1});
    for (int it = 0; it < 20; ++it) {
        Elem f = random_ratfun(s, rng);
        Elem g = random_ratfun(s, rng);
        Elem a = leading_coeff(f, p).as_elem();
        Elem b = leading_coeff(g, p).as_elem();
        Elem c = leading_coeff(f * g, p).as_elem();
        CHECK(a * b == c);
    }
    // degree-2 place: residue of x at (x^2+1) is the class of x
    LeadingCoeff l2 = leading_coeff(s.x, s.fin({1, 0, 1}));
    REQUIRE(pdeg(l2.rep) == 1);
    CHECK(l2.rep[1] == Elem(1));
}

TEST_CASE("hnf basics") {
    auto h = hnf_rows({{2, 4}, {1, 3}});
    REQUIRE(h.H.size() == 2);
    CHECK(h.H[0] == std::vector<Int>{1, 1});
    CHECK(h.H[1] == std::vector<Int>{0, 2});
    auto h2 = hnf_rows({{2, 0}, {0, 0}, {4, 2}});
    REQUIRE(h2.H.size() == 2);
    CHECK(h2.H[0][0] == 2);
}

TEST_CASE("independent_basis examples") {
    Setup s;
    SUBCASE("x, x+1, x(x+1)") {
        auto ib = independent_basis({s.x, s.x + Elem(1), s.x * (s.x + Elem(1))}, 0);
        REQUIRE(ib.psi.size() == 2);
        CHECK(ib.exponents[0] == std::vector<Int>{1, 0});
        CHECK(ib.exponents[1] == std::vector<Int>{0, 1});
        CHECK(ib.exponents[2] == std::vector<Int>{1, 1});
        for (const auto& c : ib.consts) CHECK(c.is_constant());
    }
    SUBCASE("x, 2x collapse with constants") {
        auto ib = independent_basis({s.x, Elem(2) * s.x}, 0);
        REQUIRE(ib.psi.size() == 1);
        CHECK(ib.consts[0] * ib.psi[0].pow(ib.exponents[0][0].get_si()) == s.x);
        CHECK(ib.consts[1] * ib.psi[0].pow(ib.exponents[1][0].get_si()) == Elem(2) * s.x);
        CHECK(!ib.consts[1].is_one());
    }
    SUBCASE("x^2 is kept whole") {
        auto ib = independent_basis({s.x * s.x}, 0);
        REQUIRE(ib.psi.size() == 1);
        CHECK(ib.psi[0] == s.x * s.x);
        CHECK(ib.exponents[0] == std::vector<Int>{1});
    }
}

TEST_CASE("independent_basis reconstruction on random families") {
    Setup s;
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        std::vector<Elem> fs;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) fs.push_back(random_ratfun(s, rng));
        auto ib = independent_basis(fs, 0);
        for (size_t i = 0; i < fs.size(); ++i) {
            Elem prod = ib.consts[i];
            for (size_t j = 0; j < ib.psi.size(); ++j)
                prod *= ib.psi[j].pow(ib.exponents[i][j].get_si());
            CHECK(prod == fs[i]);
            CHECK(ib.consts[i].is_constant());
        }
        // psi divisor rows have full rank by HNF construction: check no zero row
        for (const auto& row : ib.psi_divisors) {
            bool nz = false;
            for (const auto& v : row) nz = nz || v != 0;
            CHECK(nz);
        }
    }
}

TEST_CASE("independent_basis at an exponential level") {
    auto tw = Tower::base();
    Elem x = tw->gen_elem(0);
    Monomial e;
    e.kind = MonKind::Exp;
    e.arg = x;
    tw->append(e);
    Elem th = tw->gen_elem(1);
    // theta and x*theta^2: group modulo F* is generated by theta
    auto ib = independent_basis({th, x * th * th}, 1);
    REQUIRE(ib.psi.size() == 1);
    CHECK(ib.exponents[0] == std::vector<Int>{1});
    CHECK(ib.exponents[1] == std::vector<Int>{2});
    CHECK(ib.consts[1] == x);
}
