#ifndef POLYINT_LICONV_HPP
#define POLYINT_LICONV_HPP

#include "polyint/tower.hpp"

#include <map>
#include <string>
#include <vector>

namespace polyint {

// Formal layer for the Li/I conversion identities in one variable z.
// Expressions are polynomials in the formal symbols I_2, ..., I_maxm,
// log(z), log(1-z) with coefficients in Q(z); Li_m is always expanded into
// these.  The operator z d/dz acts exactly.
class FormalLayer {
public:
    explicit FormalLayer(int maxm);

    // monomial exponents: (I_2, ..., I_maxm, log z, log(1-z))
    using Mono = std::vector<int>;
    struct Expr {
        std::map<Mono, Elem> t;
        bool is_zero() const { return t.empty(); }
        bool operator==(const Expr& o) const { return t == o.t; }
    };

    Expr zero() const { return Expr{}; }
    Expr from_elem(const Elem& c) const;
    Expr I(int m) const;      // 2 <= m <= maxm; I_1 = -log(1-z)
    Expr logz() const;
    Expr log1mz() const;
    Expr z() const { return from_elem(zvar_); }

    Expr add(const Expr& a, const Expr& b) const;
    Expr sub(const Expr& a, const Expr& b) const;
    Expr mul(const Expr& a, const Expr& b) const;
    Expr scale(const Expr& a, const Rat& c) const;
    Expr pow(const Expr& a, int n) const;

    // Li_m expanded into the I basis via
    //   Li_m = (-1)^(m-1)/(m-1)! I_m - sum_{k=1}^{m-1} (-1)^k/k! Li_{m-k} log(z)^k
    Expr li(int m) const;

    // z d/dz, exact
    Expr zdz(const Expr& e) const;

    std::string str(const Expr& e) const;

private:
    int maxm_;
    TowerPtr tower_;
    Elem zvar_;
    Elem one_minus_z_;
    mutable std::map<int, Expr> li_cache_;
};

enum class LiConvDirection { LiToI, IToLi };

// printable rewrite rule for Li_m <-> I_m; m >= 1
std::string li_I_convert(int m, LiConvDirection dir);

} // namespace polyint

#endif
