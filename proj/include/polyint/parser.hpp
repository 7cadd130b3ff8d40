#ifndef POLYINT_PARSER_HPP
#define POLYINT_PARSER_HPP

#include "polyint/integral_expr.hpp"

#include <string>

namespace polyint {

struct ParseError {
    std::string message;
    size_t offset = 0;
};

// A parsed integrand: the minimal tower containing every log/exp subterm
// plus the element itself.  Li(k,.)/I(k,.) at the top level of an
// integrand parse into dilog-term claims instead (see parse_claim).
struct Parsed {
    Elem value;
};

// Parses `text` into ws.tower / ws.registry (which must start empty or
// compatible); throws ParseError or domain_error on invalid input.
Parsed parse_expression(Workspace& ws, const std::string& text,
                        const std::string& var = "x");

// Parses an integral claim: an expression optionally containing top-level
// Li(k, u) / I(k, u) summands, returned as an IntegralExpr.
IntegralExpr parse_claim(Workspace& ws, const std::string& text,
                         const std::string& var = "x");

// ---- rendering ----------------------------------------------------------

std::string render_elem(const Elem& e);
std::string render_comb(const Workspace& ws, const LogCombination& c);
std::string render_logpoly(const Workspace& ws, const LogPoly& p);
std::string render_expr(const Workspace& ws, const IntegralExpr& e);
std::string render_expr_json(const Workspace& ws, const IntegralExpr& e,
                             const std::string& status);

} // namespace polyint

#endif
