#ifndef POLYINT_ENGINE_HPP
#define POLYINT_ENGINE_HPP

#include "polyint/integral_expr.hpp"
#include "polyint/tensor2.hpp"

#include <optional>
#include <variant>

namespace polyint {

// ---- tower construction with dependency checks -------------------------

struct TowerRejection {
    std::string reason;
};

// Builds the tower, rejecting dependent generators: a Log whose argument's
// log already lies in the span of existing symbols plus the field, an Exp
// whose argument is a constant-linear combination of existing log arguments
// plus an element with an elementary rational antiderivative.
std::variant<TowerPtr, TowerRejection> build_tower(const std::vector<MonomialSpec>& spec,
                                                   Workspace& ws);

// single checked step of build_tower; appends on success
std::optional<TowerRejection> append_gen_checked(Workspace& ws, MonKind kind, const Elem& arg);

// ---- derivatives of integral expressions --------------------------------

// d * (D(1-h)/(1-h)) * log(h)^k expanded over the registry
LogPoly d_dilog_term(Workspace& ws, const DilogTerm& t);

RatLogPoly derive_expr(Workspace& ws, const IntegralExpr& e);

// exact certification: derivative of expr equals f
bool verify(Workspace& ws, const IntegralExpr& expr, const Elem& f);
bool verify_lp(Workspace& ws, const IntegralExpr& expr, const RatLogPoly& f);

// ---- elementary integration ---------------------------------------------

struct IntegrationFailure {
    std::string obstruction;
};

using ElementaryResult = std::variant<IntegralExpr, IntegrationFailure>;

// Hermite reduction + Rothstein-Trager on the rational part, degree
// descent on the polynomial-in-logs part.  Terms always empty on success.
ElementaryResult integrate_elementary(Workspace& ws, const LogPoly& f);
ElementaryResult integrate_elementary_elem(Workspace& ws, const Elem& f);

// ---- dilog integration ---------------------------------------------------

ElementaryResult integrate_dilog(Workspace& ws, const Elem& f);
ElementaryResult integrate_dilog_lp(Workspace& ws, const LogPoly& f);

// ---- prep-ext -------------------------------------------------------------

enum class CaseTag { OneMinus, Negated, UIsOne, VIsOne };

struct PrepExtData {
    std::vector<Elem> h;                 // inputs
    Place p;                             // normalization place
    std::vector<Elem> psi;               // independent basis, leading coeff 1 at p
    std::vector<std::vector<Int>> m;     // h_i    = u_i prod psi_j^{m[i][j]}
    std::vector<std::vector<Int>> n;     // 1-h_i  = v_i prod psi_j^{n[i][j]}
    std::vector<Elem> u, v;
    std::vector<CaseTag> tags;
    std::vector<Place> A;                // zeros/poles of h_i, 1-h_i
    std::vector<std::vector<Int>> ord_h;      // ord(h_i, a)
    std::vector<std::vector<Int>> ord_1mh;    // ord(1-h_i, a)
    std::vector<std::vector<Int>> ord_psi;    // ord(psi_j, a)

    // gamma[j][b] = -log(leading coeff of psi_j at A[b]) as a V-space vector
    // beta[a][b] = T~_b(delta_a), rational combinations of the gamma symbols
    std::vector<std::vector<SymComb>> gamma;
    std::vector<std::vector<SymComb>> beta;
    // V-space representations of log(u_i), log(v_i) after relation reduction
    std::vector<SymComb> log_u, log_v;

    int delta_dim() const { return static_cast<int>(A.size()); }
};

struct PrepExtFailure {
    std::string reason;
};

// The iota/delta/beta construction of the preparation lemma.  When `place`
// is empty the smallest admissible rational place theta - c is scanned.
std::variant<PrepExtData, PrepExtFailure>
prep_ext(Workspace& ws, const std::vector<Elem>& hs, int level,
         std::optional<Place> place = std::nullopt);

// checks the five conclusion equations; returns a diagnostic on failure
std::optional<std::string> check_prep_ext(const PrepExtData& d);

// residual tensor of the tensor identity instantiated on term i of the
// preparation data; symmetric on every valid instance
Tensor2 tenseq_bridge(const PrepExtData& d, size_t i);

// ---- descent --------------------------------------------------------------

struct DescentFailure {
    std::string reason;
    bool internal = false; // true: inputs claimed-valid but verification failed
};

using DescentResult = std::variant<IntegralExpr, DescentFailure>;

// Rewrites an integral over K = F(theta), theta a log/primitive generator,
// into one whose dilog-term arguments live one level down (possibly in a
// recorded algebraic extension).  Requires all k_i = 1.
DescentResult descend_prim(Workspace& ws, const IntegralExpr& expr);

// Exponential counterpart; the integrand must be defined over F (its
// flattened coefficients and log arguments stay below theta).
DescentResult descend_exp(Workspace& ws, const IntegralExpr& expr);

// ---- membership oracle -----------------------------------------------------

// true iff sum a_i D(psi_i)/psi_i + D(s) lies in the subfield of elements of
// level < base_level (level -1 = constants)
bool check_log_deriv_membership(const std::vector<Elem>& a, const std::vector<Elem>& psi,
                                const Elem& s, int base_level);

} // namespace polyint

#endif
