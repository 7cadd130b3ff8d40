#ifndef POLYINT_INTEGRAL_EXPR_HPP
#define POLYINT_INTEGRAL_EXPR_HPP

#include "polyint/logpoly.hpp"
#include "polyint/tower.hpp"

#include <memory>
#include <string>
#include <vector>

namespace polyint {

// One polylogarithmic summand of an integral: denotes the antiderivative of
//   d * (D(1-h)/(1-h)) * log(h)^k
// with h a tower element outside {0,1} and k >= 1.
struct DilogTerm {
    Constant d;
    Elem h;
    int k = 1;
};

struct NewConstant {
    std::string name;
    std::vector<Rat> minpoly;
};

// Elementary part (field element + constant-coefficient logs + a polynomial
// in log symbols) plus dilog/polylog terms.
struct IntegralExpr {
    Elem rational;
    LogCombination logs;   // constant coefficients only
    LogPoly logpoly;       // field-coefficient log polynomial
    std::vector<DilogTerm> terms;
    std::vector<NewConstant> new_constants;
};

// Shared mutable state for one integration problem: the tower, the log
// symbol registry and the lazily grown constant field.  Single writer.
struct Workspace {
    TowerPtr tower;
    LogRegistry registry;
    AlgCtxPtr alg;
    std::vector<NewConstant> introduced;

    explicit Workspace(TowerPtr t = nullptr) : tower(std::move(t)) {}

    // adjoins a root of the given monic irreducible rational polynomial;
    // only one simple extension is supported per workspace
    Constant adjoin_root(const std::vector<Rat>& minpoly);
};

} // namespace polyint

#endif
