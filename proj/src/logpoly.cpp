#include "polyint/logpoly.hpp"
#include "polyint/tower.hpp"

namespace polyint {

int LogPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : t) {
        (void)c;
        int s = 0;
        for (const auto& [id, e] : m) {
            (void)id;
            s += e;
        }
        d = std::max(d, s);
    }
    return d;
}

void LogPoly::add_term(const LogMono& m, const Elem& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
        t[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

LogPoly& LogPoly::operator+=(const LogPoly& o) {
    for (const auto& [m, c] : o.t) add_term(m, c);
    return *this;
}

LogPoly& LogPoly::operator-=(const LogPoly& o) {
    for (const auto& [m, c] : o.t) add_term(m, -c);
    return *this;
}

LogPoly LogPoly::operator-() const {
    LogPoly r;
    for (const auto& [m, c] : t) r.t[m] = -c;
    return r;
}

LogPoly LogPoly::scaled(const Elem& c) const {
    LogPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : t) r.t[m] = v * c;
    return r;
}

LogPoly LogPoly::from_elem(const Elem& e) {
    LogPoly r;
    if (!e.is_zero()) r.t[LogMono{}] = e;
    return r;
}

LogPoly LogPoly::from_comb(const LogCombination& c) {
    LogPoly r;
    if (!c.remainder.is_zero()) r.t[LogMono{}] = c.remainder;
    for (const auto& [id, co] : c.coeffs) {
        LogMono m;
        m[id] = 1;
        r.add_term(m, Elem(co));
    }
    return r;
}

LogPoly lp_mul(const LogPoly& a, const LogPoly& b) {
    LogPoly r;
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            LogMono m = ma;
            for (const auto& [id, e] : mb) m[id] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

LogPoly lp_pow(const LogPoly& a, int n) {
    LogPoly r = LogPoly::one();
    for (int i = 0; i < n; ++i) r = lp_mul(r, a);
    return r;
}

LogPoly lp_resolve(const LogRegistry& reg, const LogPoly& p) {
    LogPoly out;
    for (const auto& [m, c] : p.t) {
        LogPoly term = LogPoly::from_elem(c);
        for (const auto& [id, e] : m) {
            if (!reg.sym(id).decomposed) {
                LogMono single;
                single[id] = e;
                LogPoly s;
                s.t[single] = Elem(1);
                term = lp_mul(term, s);
            } else {
                LogCombination rw;
                rw.coeffs[id] = Constant(1);
                LogPoly sub = LogPoly::from_comb(reg.resolve(rw));
                term = lp_mul(term, lp_pow(sub, e));
            }
        }
        out += term;
    }
    return out;
}

bool log_free(const Elem& e) {
    if (e.level() < 0) return true;
    const Tower* tw = e.tower();
    for (int i = 1; i <= e.level(); ++i)
        if (tw->gen(i).kind == MonKind::Log) {
            // conservative: check actual occurrence level by level
            break;
        }
    // walk the representation
    if (tw->gen(e.level()).kind == MonKind::Log) return false;
    for (const auto& c : e.num())
        if (!log_free(c)) return false;
    for (const auto& c : e.den())
        if (!log_free(c)) return false;
    return true;
}

RatLogPoly& RatLogPoly::operator+=(const RatLogPoly& o) {
    if (den == o.den) {
        num += o.num;
        return *this;
    }
    num = lp_mul(num, o.den) + lp_mul(o.num, den);
    den = lp_mul(den, o.den);
    return *this;
}

RatLogPoly& RatLogPoly::operator-=(const RatLogPoly& o) {
    RatLogPoly neg{-o.num, o.den};
    return *this += neg;
}

bool RatLogPoly::equals(const LogRegistry& reg, const RatLogPoly& o) const {
    LogPoly a = lp_mul(lp_resolve(reg, num), lp_resolve(reg, o.den));
    LogPoly b = lp_mul(lp_resolve(reg, o.num), lp_resolve(reg, den));
    return a == b;
}

RatLogPoly flatten(LogRegistry& reg, const Elem& e) {
    if (e.level() < 0 || log_free(e))
        return RatLogPoly::from_lp(LogPoly::from_elem(e));
    const Tower* tw = e.tower();
    int L = e.level();
    // flatten a polynomial in generator L
    auto flatten_poly_level = [&](const Poly<Elem>& p) -> RatLogPoly {
        RatLogPoly theta;
        if (tw->gen(L).kind == MonKind::Log)
            theta = RatLogPoly::from_lp(LogPoly::from_comb(reg.log_of(tw->gen(L).arg)));
        else
            theta = RatLogPoly::from_lp(LogPoly::from_elem(tw->gen_elem(L)));
        RatLogPoly acc; // Horner
        acc.num = LogPoly();
        acc.den = LogPoly::one();
        for (size_t i = p.size(); i-- > 0;) {
            // acc = acc * theta + flatten(p[i])
            RatLogPoly prod;
            prod.num = lp_mul(acc.num, theta.num);
            prod.den = lp_mul(acc.den, theta.den);
            prod += flatten(reg, p[i]);
            acc = std::move(prod);
        }
        return acc;
    };
    RatLogPoly n = flatten_poly_level(e.num());
    RatLogPoly d = flatten_poly_level(e.den());
    RatLogPoly r;
    r.num = lp_mul(n.num, d.den);
    r.den = lp_mul(n.den, d.num);
    return r;
}

bool flatten_poly(LogRegistry& reg, const Elem& e, LogPoly& out) {
    RatLogPoly r = flatten(reg, e);
    LogPoly den = lp_resolve(reg, r.den);
    if (den.t.size() != 1 || den.t.begin()->first != LogMono{}) return false;
    Elem dinv = den.t.begin()->second.inverse();
    out = lp_resolve(reg, r.num).scaled(dinv);
    return true;
}

RatLogPoly lp_derive(LogRegistry& reg, const LogPoly& p) {
    RatLogPoly out = RatLogPoly::from_lp(LogPoly());
    for (const auto& [m, c] : p.t) {
        LogPoly mono;
        mono.t[m] = Elem(1);
        // coefficient derivative (flattened: c may contain log generators)
        RatLogPoly dc = flatten(reg, c.derive());
        RatLogPoly term;
        term.num = lp_mul(dc.num, mono);
        term.den = dc.den;
        out += term;
        // monomial derivative
        for (const auto& [id, e] : m) {
            Elem dl = reg.d_log(id);
            if (dl.is_zero()) continue;
            LogMono lower = m;
            if (lower[id] == 1) lower.erase(id);
            else --lower[id];
            LogPoly lmono;
            lmono.t[lower] = Elem(static_cast<long>(e));
            RatLogPoly dflat = flatten(reg, c * dl);
            RatLogPoly t2;
            t2.num = lp_mul(dflat.num, lmono);
            t2.den = dflat.den;
            out += t2;
        }
    }
    return out;
}

} // namespace polyint
