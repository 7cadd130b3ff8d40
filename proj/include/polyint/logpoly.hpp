#ifndef POLYINT_LOGPOLY_HPP
#define POLYINT_LOGPOLY_HPP

#include "polyint/logsym.hpp"

#include <map>

namespace polyint {

// monomial in log symbols: symbol id -> positive exponent
using LogMono = std::map<int, int>;

// Polynomial in log symbols with tower-element coefficients.  The
// canonical comparison space for integrands and derivatives: coefficients
// carry the field part, symbols stay formal.
struct LogPoly {
    std::map<LogMono, Elem> t;

    bool is_zero() const { return t.empty(); }
    int total_degree() const;

    void add_term(const LogMono& m, const Elem& c);
    LogPoly& operator+=(const LogPoly& o);
    LogPoly& operator-=(const LogPoly& o);
    friend LogPoly operator+(LogPoly a, const LogPoly& b) { a += b; return a; }
    friend LogPoly operator-(LogPoly a, const LogPoly& b) { a -= b; return a; }
    LogPoly operator-() const;
    LogPoly scaled(const Elem& c) const;

    static LogPoly from_elem(const Elem& e);
    static LogPoly from_comb(const LogCombination& c);
    static LogPoly one() { return from_elem(Elem(1)); }

    bool operator==(const LogPoly& o) const { return t == o.t; }
};

LogPoly lp_mul(const LogPoly& a, const LogPoly& b);
LogPoly lp_pow(const LogPoly& a, int n);

// expand decomposed registry symbols inside monomials
LogPoly lp_resolve(const LogRegistry& reg, const LogPoly& p);

// rational function in log symbols; the comparison space for verification
struct RatLogPoly {
    LogPoly num;
    LogPoly den; // nonzero

    static RatLogPoly from_lp(LogPoly p) { return {std::move(p), LogPoly::one()}; }
    bool is_zero() const { return num.is_zero(); }
    RatLogPoly& operator+=(const RatLogPoly& o);
    RatLogPoly& operator-=(const RatLogPoly& o);
    bool equals(const LogRegistry& reg, const RatLogPoly& o) const;
};

// rewrite every log generator of the tower through the registry, yielding
// a rational function in log symbols whose coefficients are log-free
RatLogPoly flatten(LogRegistry& reg, const Elem& e);

// derivative of a log polynomial as a rational log polynomial (the
// coefficients' derivatives are flattened through the registry)
RatLogPoly lp_derive(LogRegistry& reg, const LogPoly& p);

// true when no log generator occurs inside e
bool log_free(const Elem& e);

// flatten when e is polynomial in the tower's log generators: fails (returns
// false) when a log generator occurs in a denominator
bool flatten_poly(LogRegistry& reg, const Elem& e, LogPoly& out);

} // namespace polyint

#endif
