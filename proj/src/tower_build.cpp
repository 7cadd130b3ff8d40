#include "polyint/tower.hpp"
#include "polyint/engine.hpp"
#include "polyint/logsym.hpp"
#include "polyint/logpoly.hpp"
#include "polyint/parser.hpp"

#include <algorithm>

namespace polyint {

// ---- checked construction -------------------------------------------------

namespace {

// solve sum_g x_g * vec_g = target over the constant field; vectors are
// symbol-coefficient maps
bool solve_in_span(const std::vector<LogCombination>& gens, const LogCombination& target,
                   std::vector<Constant>& x) {
    std::vector<int> ids;
    auto note = [&ids](const LogCombination& c) {
        for (const auto& [id, co] : c.coeffs) {
            (void)co;
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        }
    };
    for (const auto& g : gens) note(g);
    note(target);
    size_t rows = ids.size(), cols = gens.size();
    // augmented system A x = b
    std::vector<std::vector<Constant>> A(rows, std::vector<Constant>(cols + 1, Constant(0)));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            auto it = gens[c].coeffs.find(ids[r]);
            if (it != gens[c].coeffs.end()) A[r][c] = it->second;
        }
        auto it = target.coeffs.find(ids[r]);
        if (it != target.coeffs.end()) A[r][cols] = it->second;
    }
    // Gaussian elimination
    size_t rank = 0;
    std::vector<int> pivot_of_col(cols, -1);
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && A[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        Constant inv = A[rank][c].inverse();
        for (size_t j = c; j <= cols; ++j) A[rank][j] = A[rank][j] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][c].is_zero()) continue;
            Constant f = A[r][c];
            for (size_t j = c; j <= cols; ++j) A[r][j] = A[r][j] - f * A[rank][j];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    // consistency: no row with zero coefficients and nonzero rhs
    for (size_t r = 0; r < rows; ++r) {
        bool allz = true;
        for (size_t c = 0; c < cols; ++c)
            if (!A[r][c].is_zero()) { allz = false; break; }
        if (allz && !A[r][cols].is_zero()) return false;
    }
    x.assign(cols, Constant(0));
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) x[c] = A[pivot_of_col[c]][cols];
    return true;
}

std::string relation_report(const Workspace& ws, const Elem& arg,
                            const std::vector<Constant>& x,
                            const std::vector<int>& loggens) {
    std::string s = "log(" + render_elem(arg) + ") = ";
    bool first = true;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        s += x[i].str() + "*log(" + render_elem(ws.tower->gen(loggens[i]).arg) + ")";
    }
    if (first) s += "0";
    s += " modulo the field and constants";
    return s;
}

} // namespace

std::optional<TowerRejection> append_gen_checked(Workspace& ws, MonKind kind, const Elem& arg) {
    Tower* tw = ws.tower.get();
    switch (kind) {
        case MonKind::BaseVar:
            return TowerRejection{"base variable occurs twice"};
        case MonKind::Primitive: {
            Monomial m;
            m.kind = kind;
            m.arg = arg;
            m.name = "P" + std::to_string(tw->size());
            tw->append(std::move(m));
            return std::nullopt;
        }
        case MonKind::Log: {
            if (arg.is_zero()) throw domain_error("log of zero");
            if (arg.is_constant())
                return TowerRejection{"log argument is constant: log(" + render_elem(arg) +
                                      ") adds a constant, not a monomial"};
            LogCombination target = ws.registry.resolve(ws.registry.log_of(arg));
            // drop constant-argument symbols: they only shift by a constant
            for (auto it = target.coeffs.begin(); it != target.coeffs.end();) {
                if (ws.registry.sym(it->first).level < 0) it = target.coeffs.erase(it);
                else ++it;
            }
            std::vector<LogCombination> gen_combs;
            std::vector<int> loggens;
            for (int i = 1; i < tw->size(); ++i) {
                if (tw->gen(i).kind != MonKind::Log) continue;
                LogCombination c = ws.registry.resolve(ws.registry.log_of(tw->gen(i).arg));
                for (auto it = c.coeffs.begin(); it != c.coeffs.end();) {
                    if (ws.registry.sym(it->first).level < 0) it = c.coeffs.erase(it);
                    else ++it;
                }
                gen_combs.push_back(std::move(c));
                loggens.push_back(i);
            }
            std::vector<Constant> x;
            if (solve_in_span(gen_combs, target, x))
                return TowerRejection{relation_report(ws, arg, x, loggens)};
            Monomial m;
            m.kind = kind;
            m.arg = arg;
            m.name = "log(" + render_elem(arg) + ")";
            tw->append(std::move(m));
            return std::nullopt;
        }
        case MonKind::Exp: {
            if (arg.is_constant())
                return TowerRejection{"exp argument is constant"};
            // split arg into a linear part in existing log generators with
            // constant coefficients plus a log-free rest
            Elem rest = arg;
            std::vector<std::pair<int, Constant>> linear;
            for (int i = tw->size() - 1; i >= 1; --i) {
                if (tw->gen(i).kind != MonKind::Log) continue;
                // coefficient of theta_i when arg is linear in it
                Poly<Elem> n, d;
                if (rest.level() != i) continue;
                rest.as_fraction(i, n, d);
                if (pdeg(d) != 0 || pdeg(n) > 1) {
                    // nonlinear in a log generator: cannot match the
                    // dependence pattern, treat whole rest as the remainder
                    continue;
                }
                if (n.size() == 2 && n[1].is_constant_value()) {
                    linear.push_back({i, n[1].constant()});
                    rest = rest - Elem(n[1].constant()) * tw->gen_elem(i);
                }
            }
            bool linear_rational = true;
            for (const auto& [i, c] : linear) {
                (void)i;
                if (!c.is_rational()) linear_rational = false;
            }
            bool log_gen_left = false;
            {
                // any log generator still inside rest blocks the pattern
                for (int i = 1; i < tw->size(); ++i)
                    if (tw->gen(i).kind == MonKind::Log && rest.level() >= i) log_gen_left = true;
            }
            if (linear_rational && !log_gen_left) {
                auto res = integrate_elementary_elem(ws, rest);
                if (auto* ok = std::get_if<IntegralExpr>(&res)) {
                    bool rational_logs = ok->logpoly.is_zero();
                    for (const auto& [id, co] : ok->logs.coeffs) {
                        (void)id;
                        if (!co.is_rational()) rational_logs = false;
                    }
                    if (rational_logs && ok->rational.is_constant()) {
                        std::string why = "exp argument is a constant-linear combination of "
                                          "logarithms plus a derivative of logarithms: exp(" +
                                          render_elem(arg) + ") is not a new monomial";
                        return TowerRejection{why};
                    }
                }
            }
            Monomial m;
            m.kind = kind;
            m.arg = arg;
            m.name = "exp(" + render_elem(arg) + ")";
            tw->append(std::move(m));
            return std::nullopt;
        }
    }
    return TowerRejection{"bad monomial kind"};
}

std::variant<TowerPtr, TowerRejection> build_tower(const std::vector<MonomialSpec>& spec,
                                                   Workspace& ws) {
    if (spec.empty() || spec[0].kind != MonKind::BaseVar)
        return TowerRejection{"tower must start with the base variable"};
    if (!ws.tower) ws.tower = Tower::base();
    for (size_t i = 1; i < spec.size(); ++i) {
        auto rej = append_gen_checked(ws, spec[i].kind, spec[i].arg);
        if (rej) return *rej;
    }
    return ws.tower;
}

} // namespace polyint
