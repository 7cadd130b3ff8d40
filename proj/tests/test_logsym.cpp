#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyint/logsym.hpp"
#include "polyint/tower.hpp"

#include <random>

using namespace polyint;

namespace {

struct Setup {
    TowerPtr tw;
    Elem x;
    LogRegistry reg;
    Setup() : tw(Tower::base()), x(tw->gen_elem(0)) {}
};

} // namespace

TEST_CASE("log_of splits products and powers") {
    Setup s;
    // log(2 x^2 (x+1)) = 2 log(x) + log(x+1) + log(2)
    LogCombination c = s.reg.log_of(Elem(2) * s.x * s.x * (s.x + Elem(1)));
    CHECK(c.remainder.is_zero());
    REQUIRE(c.coeffs.size() == 3);
    int idx = s.reg.find_symbol(s.x);
    REQUIRE(idx >= 0);
    CHECK(c.coeffs.at(idx) == Constant(2));
    int idp1 = s.reg.find_symbol(s.x + Elem(1));
    REQUIRE(idp1 >= 0);
    CHECK(c.coeffs.at(idp1) == Constant(1));
    int id2 = s.reg.find_symbol(Elem(2));
    REQUIRE(id2 >= 0);
    CHECK(c.coeffs.at(id2) == Constant(1));
}

TEST_CASE("log(-f) = log(f) and log(1) = 0") {
    Setup s;
    CHECK(s.reg.log_of(-s.x) == s.reg.log_of(s.x));
    CHECK(s.reg.log_of(Elem(1)).is_zero());
    CHECK(s.reg.log_of(Elem(-1)).is_zero());
    CHECK(s.reg.log_of(-(s.x - Elem(3))) == s.reg.log_of(s.x - Elem(3)));
}

TEST_CASE("log_of is additive on random products") {
    Setup s;
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> c(-5, 5);
    auto rnd = [&]() {
        Elem e(0);
        int d = static_cast<int>(rng() % 3);
        for (int i = 0; i <= d; ++i) e = e * s.x + Elem(c(rng));
        if (e.is_zero()) e = s.x + Elem(1);
        return e;
    };
    for (int it = 0; it < 30; ++it) {
        Elem f = rnd() / rnd();
        Elem g = rnd() / rnd();
        LogCombination lf = s.reg.log_of(f);
        LogCombination lg2 = s.reg.log_of(g);
        LogCombination lfg = s.reg.log_of(f * g);
        LogCombination sum = s.reg.resolve(lf + lg2);
        CHECK(s.reg.resolve(lfg) == sum);
    }
}

TEST_CASE("registry refines earlier atoms against newcomers") {
    Setup s;
    // first see x^2-1 whole at level >= 1 analog: here level 0 factors fully,
    // so exercise refinement with an irreducible-over-Q but alpha-split case
    LogCombination c1 = s.reg.log_of(s.x * s.x - Elem(1));
    CHECK(c1.coeffs.size() == 2); // true factorization at level 0
}

TEST_CASE("exp generator logs fold into the remainder") {
    Setup s;
    Monomial e;
    e.kind = MonKind::Exp;
    e.arg = s.x;
    s.tw->append(e);
    Elem th = s.tw->gen_elem(1);
    LogCombination c = s.reg.log_of(th);
    CHECK(c.coeffs.empty());
    CHECK(c.remainder == s.x);
    // log(x * theta^2) = log x + 2x
    LogCombination c2 = s.reg.log_of(s.x * th * th);
    CHECK(c2.remainder == Elem(2) * s.x);
    CHECK(c2.coeffs.size() == 1);
    // denominator: log(1/theta) = -x
    LogCombination c3 = s.reg.log_of(Elem(1) / th);
    CHECK(c3.remainder == -s.x);
    CHECK(c3.coeffs.empty());
}

TEST_CASE("log generator appears as a fresh symbol") {
    Setup s;
    Monomial l;
    l.kind = MonKind::Log;
    l.arg = s.x;
    s.tw->append(l);
    Elem th = s.tw->gen_elem(1);
    // log(log(x)) is a new symbol with the generator as its argument
    LogCombination c = s.reg.log_of(th);
    REQUIRE(c.coeffs.size() == 1);
    CHECK(c.remainder.is_zero());
    CHECK(s.reg.sym(c.coeffs.begin()->first).arg == th);
}

TEST_CASE("linear relations") {
    Setup s;
    SUBCASE("log x + log(x+1) - log(x(x+1)) = 0") {
        std::vector<LogCombination> logs{
            s.reg.log_of(s.x),
            s.reg.log_of(s.x + Elem(1)),
            s.reg.log_of(s.x * (s.x + Elem(1))),
        };
        auto rel = s.reg.linear_relation(logs);
        REQUIRE(rel.has_value());
        CHECK(rel->coeffs == std::vector<Rat>{1, 1, -1});
        CHECK(rel->remainder.is_zero());
    }
    SUBCASE("log x, log(x+1) independent") {
        std::vector<LogCombination> logs{s.reg.log_of(s.x), s.reg.log_of(s.x + Elem(1))};
        CHECK(!s.reg.linear_relation(logs).has_value());
    }
    SUBCASE("log 4 = 2 log 2") {
        std::vector<LogCombination> logs{s.reg.log_of(Elem(4)), s.reg.log_of(Elem(2))};
        auto rel = s.reg.linear_relation(logs);
        REQUIRE(rel.has_value());
        CHECK(rel->coeffs == std::vector<Rat>{1, -2});
        CHECK(rel->remainder.is_zero());
    }
}

TEST_CASE("relation derivatives vanish exactly") {
    // every returned relation satisfies D(sum c_i log v_i - g) = 0, checked
    // through the log-derivative identity D log v = Dv/v
    Setup s;
    std::vector<Elem> vs{s.x, s.x + Elem(1), s.x * s.x * (s.x + Elem(1))};
    std::vector<LogCombination> logs;
    for (const auto& v : vs) logs.push_back(s.reg.log_of(v));
    auto rel = s.reg.linear_relation(logs);
    REQUIRE(rel.has_value());
    Elem total(0);
    for (size_t i = 0; i < vs.size(); ++i)
        total += Elem(Constant(rel->coeffs[i])) * vs[i].derive() / vs[i];
    CHECK(total == rel->remainder.derive());
}
