#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyint/tower.hpp"

#include <random>

using namespace polyint;

namespace {

struct Setup {
    TowerPtr tw;
    Elem x, lg, ex; // x, log(x), exp(x)

    Setup() {
        tw = Tower::base();
        x = tw->gen_elem(0);
        Monomial l;
        l.kind = MonKind::Log;
        l.arg = x;
        l.name = "log(x)";
        tw->append(l);
        lg = tw->gen_elem(1);
        Monomial e;
        e.kind = MonKind::Exp;
        e.arg = x;
        e.name = "exp(x)";
        tw->append(e);
        ex = tw->gen_elem(2);
    }
};

Elem random_elem(const Setup& s, std::mt19937_64& rng, int depth = 2) {
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<long> c(-4, 4);
    switch (pick(rng)) {
        case 0: return Elem(c(rng));
        case 1: return s.x;
        case 2: return s.lg;
        case 3: return s.ex;
        case 4:
            if (depth <= 0) return s.x + Elem(c(rng));
            return random_elem(s, rng, depth - 1) + random_elem(s, rng, depth - 1);
        case 5:
            if (depth <= 0) return s.x * Elem(c(rng));
            return random_elem(s, rng, depth - 1) * random_elem(s, rng, depth - 1);
        default: {
            if (depth <= 0) return s.x;
            Elem d = random_elem(s, rng, depth - 1);
            if (d.is_zero()) return Elem(1);
            return random_elem(s, rng, depth - 1) / d;
        }
    }
}

} // namespace

TEST_CASE("canonical forms") {
    Setup s;
    // (x^2 - 1)/(x - 1) = x + 1
    Elem e = (s.x * s.x - Elem(1)) / (s.x - Elem(1));
    CHECK(e == s.x + Elem(1));
    // (2x)/4 = x/2
    CHECK((Elem(2) * s.x / Elem(4)) == (s.x / Elem(2)));
    // theta*x/theta = x with theta = exp(x)
    CHECK((s.ex * s.x / s.ex) == s.x);
    // level minimality
    CHECK((s.lg - s.lg).is_zero());
    CHECK((s.lg / s.lg).is_one());
    CHECK(((s.lg + s.x) - s.lg) == s.x);
}

TEST_CASE("division by zero") {
    Setup s;
    CHECK_THROWS_AS(s.x / (s.x - s.x), domain_error);
}

TEST_CASE("derivation basics") {
    Setup s;
    CHECK(s.x.derive() == Elem(1));
    CHECK(Elem(Constant(Rat(7, 3))).derive().is_zero());
    // D log(x) = 1/x
    CHECK(s.lg.derive() == Elem(1) / s.x);
    // D exp(x) = exp(x)
    CHECK(s.ex.derive() == s.ex);
    // D(log(x)^2) = 2 log(x)/x
    CHECK((s.lg * s.lg).derive() == Elem(2) * s.lg / s.x);
    // quotient with exp in the denominator
    Elem f = s.x / s.ex;
    CHECK(f.derive() == (Elem(1) - s.x) / s.ex);
}

TEST_CASE("derive exp(x^2) chain rule") {
    auto tw = Tower::base();
    Elem x = tw->gen_elem(0);
    Monomial e;
    e.kind = MonKind::Exp;
    e.arg = x * x;
    tw->append(e);
    Elem th = tw->gen_elem(1);
    CHECK(th.derive() == Elem(2) * x * th);
}

TEST_CASE("is_constant") {
    Setup s;
    CHECK(Elem(5).is_constant());
    CHECK(!s.x.is_constant());
    CHECK((s.lg * Elem(0) + Elem(2)).is_constant());
}

TEST_CASE("Leibniz and additivity on random elements") {
    Setup s;
    std::mt19937_64 rng(2024);
    int done = 0;
    for (int it = 0; it < 60 && done < 25; ++it) {
        Elem f, g;
        try {
            f = random_elem(s, rng);
            g = random_elem(s, rng);
        } catch (const domain_error&) {
            continue;
        }
        CHECK((f * g).derive() == f.derive() * g + f * g.derive());
        CHECK((f + g).derive() == f.derive() + g.derive());
        ++done;
    }
    CHECK(done >= 25);
}

TEST_CASE("pow and inverse") {
    Setup s;
    Elem f = (s.x + Elem(1)) / (s.x * s.x + Elem(3));
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(-2) == (f * f).inverse());
    CHECK((f * f.inverse()).is_one());
    CHECK(f.pow(0).is_one());
}
