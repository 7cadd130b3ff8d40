#ifndef POLYINT_ZFACTOR_HPP
#define POLYINT_ZFACTOR_HPP

#include "polyint/constant.hpp"
#include "polyint/poly.hpp"

#include <utility>
#include <vector>

namespace polyint {

// p = content * prod factors[i]^mult[i], factors monic irreducible over Q
struct QFactorization {
    Constant content;
    std::vector<std::pair<Poly<Constant>, int>> factors;
};

// Requires all coefficients rational (no algebraic part).
QFactorization factor_rational_poly(const Poly<Constant>& p);

// r = sign * prod primes[i].first ^ primes[i].second, exponents nonzero
// (negative exponents from the denominator)
struct RatFactorization {
    int sign = 1;
    std::vector<std::pair<Int, long>> primes;
};
RatFactorization factor_rat(const Rat& r);

// roots of p lying in Q, with multiplicity collapsed away
std::vector<Rat> rational_roots(const Poly<Constant>& p);

// sqrt of d = d0 + d1*alpha inside Q(alpha) for quadratic alpha, if any
std::optional<Constant> sqrt_in_quadratic(const Constant& d, const AlgCtxPtr& ctx);

} // namespace polyint

#endif
