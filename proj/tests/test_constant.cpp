#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyint/constant.hpp"
#include "polyint/zfactor.hpp"

using namespace polyint;

TEST_CASE("rational constants") {
    Constant a(Rat(2, 3)), b(Rat(1, 6));
    CHECK((a + b) == Constant(Rat(5, 6)));
    CHECK((a * b) == Constant(Rat(1, 9)));
    CHECK((a / b) == Constant(4));
    CHECK((a - a).is_zero());
    CHECK(Constant(1).is_one());
    CHECK(Constant(Rat(7)).is_rational());
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Constant(1) / Constant(0), domain_error);
}

TEST_CASE("quadratic extension arithmetic") {
    // alpha^2 + 1 = 0
    auto ctx = std::make_shared<AlgebraicContext>();
    ctx->name = "@i";
    ctx->minpoly = {Rat(1), Rat(0), Rat(1)};
    Constant i = Constant::algebraic(ctx, {Rat(0), Rat(1)});
    CHECK((i * i) == Constant(-1));
    Constant z = Constant(1) + i; // 1 + i
    Constant w = z * z;           // 2i
    CHECK(w == Constant::algebraic(ctx, {Rat(0), Rat(2)}));
    CHECK((z * z.inverse()).is_one());
    CHECK(i.is_root_of_unity());
    CHECK(!z.is_root_of_unity());
    CHECK(!(Constant(2)).is_root_of_unity());
    CHECK(Constant(-1).is_root_of_unity());
}

TEST_CASE("sqrt in field") {
    Rat r;
    CHECK(rat_sqrt(Rat(9, 4), r));
    CHECK(r == Rat(3, 2));
    CHECK(!rat_sqrt(Rat(2), r));

    auto ctx = std::make_shared<AlgebraicContext>();
    ctx->name = "@s";
    ctx->minpoly = {Rat(-2), Rat(0), Rat(1)}; // alpha^2 = 2
    auto s = sqrt_in_quadratic(Constant(2), ctx);
    REQUIRE(s.has_value());
    CHECK((*s) * (*s) == Constant(2));
    auto t = sqrt_in_quadratic(Constant(8), ctx); // 2*sqrt2 squared
    REQUIRE(t.has_value());
    CHECK((*t) * (*t) == Constant(8));
    CHECK(!sqrt_in_quadratic(Constant(3), ctx).has_value());
}

TEST_CASE("rational factorization") {
    auto f = factor_rat(Rat(-12, 35));
    CHECK(f.sign == -1);
    // 12/35 = 2^2 3 / (5 7)
    REQUIRE(f.primes.size() == 4);
    CHECK(f.primes[0] == std::make_pair(Int(2), 2L));
    CHECK(f.primes[1] == std::make_pair(Int(3), 1L));
    CHECK(f.primes[2] == std::make_pair(Int(5), -1L));
    CHECK(f.primes[3] == std::make_pair(Int(7), -1L));
}
