#include "polyint/logsym.hpp"
#include "polyint/tower.hpp"
#include "polyint/zfactor.hpp"

#include <algorithm>

namespace polyint {

LogCombination& LogCombination::operator+=(const LogCombination& o) {
    for (const auto& [id, c] : o.coeffs) {
        auto it = coeffs.find(id);
        if (it == coeffs.end()) {
            if (!c.is_zero()) coeffs[id] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    remainder += o.remainder;
    return *this;
}

LogCombination& LogCombination::operator-=(const LogCombination& o) {
    LogCombination neg = o;
    for (auto& [id, c] : neg.coeffs) c = -c;
    neg.remainder = -o.remainder;
    return *this += neg;
}

LogCombination& LogCombination::scale(const Constant& c) {
    if (c.is_zero()) {
        coeffs.clear();
        remainder = Elem();
        return *this;
    }
    for (auto& [id, co] : coeffs) co *= c;
    remainder *= Elem(c);
    return *this;
}

bool LogCombination::operator==(const LogCombination& o) const {
    return coeffs == o.coeffs && remainder == o.remainder;
}

int LogRegistry::find_symbol(const Elem& arg) const {
    auto it = index_.find(arg);
    return it == index_.end() ? -1 : it->second;
}

int LogRegistry::intern_arg(const Elem& arg, int level) {
    auto it = index_.find(arg);
    if (it != index_.end()) return it->second;
    LogSymbolInfo info;
    info.arg = arg;
    info.level = level;
    int id = static_cast<int>(syms_.size());
    syms_.push_back(std::move(info));
    index_[arg] = id;
    if (level >= 0) live_[level].push_back(id);
    return id;
}

void LogRegistry::split_atom(int id, const Poly<Elem>& g, const Tower* tw) {
    Poly<Elem> apoly, aden;
    syms_[id].arg.as_fraction(syms_[id].level, apoly, aden);
    Poly<Elem> h = pquo(apoly, g);
    int lvl = syms_[id].level;
    int gid = intern_arg(Elem::from_poly(tw, lvl, g), lvl);
    int hid = intern_arg(Elem::from_poly(tw, lvl, h), lvl);
    syms_[id].decomposed = true;
    syms_[id].rewrite.coeffs = {{gid, Constant(1)}, {hid, Constant(1)}};
    auto& lv = live_[lvl];
    lv.erase(std::remove(lv.begin(), lv.end(), id), lv.end());
}

std::vector<int> LogRegistry::intern_monic(int level, Poly<Elem> s0, const Tower* tw) {
    std::vector<int> ids;
    std::vector<Poly<Elem>> work{std::move(s0)};
    while (!work.empty()) {
        Poly<Elem> s = work.back();
        work.pop_back();
        if (pdeg(s) < 1) continue;
        Elem key = Elem::from_poly(tw, level, s);
        auto it = index_.find(key);
        if (it != index_.end()) {
            int id = it->second;
            if (!syms_[id].decomposed) {
                ids.push_back(id);
            } else {
                LogCombination leaf = resolve(syms_[id].rewrite);
                for (const auto& [cid, co] : leaf.coeffs) {
                    if (!(co.is_rational() && co.rat() == 1))
                        throw std::logic_error("atom rewrite with nonunit coefficient");
                    ids.push_back(cid);
                }
            }
            continue;
        }
        bool placed = false;
        for (int aid : live_[level]) {
            Poly<Elem> apoly, aden;
            syms_[aid].arg.as_fraction(level, apoly, aden);
            Poly<Elem> g = pgcd(s, apoly);
            if (pdeg(g) < 1) continue;
            if (pdeg(g) < pdeg(apoly)) split_atom(aid, g, tw);
            int gid = index_.at(Elem::from_poly(tw, level, g));
            ids.push_back(gid);
            if (pdeg(g) < pdeg(s)) work.push_back(pquo(s, g));
            placed = true;
            break;
        }
        if (!placed) ids.push_back(intern_arg(key, level));
    }
    return ids;
}

void LogRegistry::decompose(const Elem& f, const Constant& mult, LogCombination& out) {
    if (f.is_zero()) throw domain_error("log of zero");
    if (mult.is_zero()) return;
    if (f.is_constant_value()) {
        const Constant& c = f.constant();
        if (c.is_rational()) {
            RatFactorization rf = factor_rat(c.rat());
            for (const auto& [p, e] : rf.primes) {
                int id = intern_arg(Elem(Constant(Rat(p))), -1);
                auto it = out.coeffs.find(id);
                Constant add = mult * Constant(static_cast<long>(e));
                if (it == out.coeffs.end()) out.coeffs[id] = add;
                else {
                    it->second += add;
                    if (it->second.is_zero()) out.coeffs.erase(it);
                }
            }
            return;
        }
        if (c.is_root_of_unity()) return;
        Constant cc = c;
        Constant nc = -c;
        if (nc.cmp(cc) < 0) cc = nc; // log(-x) = log(x)
        int id = intern_arg(Elem(cc), -1);
        auto it = out.coeffs.find(id);
        if (it == out.coeffs.end()) out.coeffs[id] = mult;
        else {
            it->second += mult;
            if (it->second.is_zero()) out.coeffs.erase(it);
        }
        return;
    }
    int L = f.level();
    const Tower* tw = f.tower();
    Poly<Elem> num, den;
    f.as_fraction(L, num, den);
    auto process = [&](Poly<Elem> poly, const Constant& m) {
        if (pdeg(poly) < 0) throw domain_error("log of zero");
        Elem lead = plc(poly);
        if (!lead.is_one()) decompose(lead, m, out);
        Poly<Elem> monic = pmonic(std::move(poly));
        // exponential generator: log(theta^t * rest) = t*arg + log(rest)
        if (tw->gen(L).kind == MonKind::Exp) {
            long t = 0;
            while (pdeg(monic) >= 1 && monic[0].is_zero()) {
                monic.erase(monic.begin());
                ++t;
            }
            if (t > 0) out.remainder += Elem(m) * Elem(Constant(t)) * tw->gen(L).arg;
        }
        if (pdeg(monic) < 1) return;
        for (const auto& [s, k] : presplit_monic(L, monic, alg_)) {
            for (int id : intern_monic(L, s, tw)) {
                Constant add = m * Constant(static_cast<long>(k));
                auto it = out.coeffs.find(id);
                if (it == out.coeffs.end()) out.coeffs[id] = add;
                else {
                    it->second += add;
                    if (it->second.is_zero()) out.coeffs.erase(it);
                }
            }
        }
    };
    process(num, mult);
    process(den, -mult);
}

LogCombination LogRegistry::log_of(const Elem& f) {
    LogCombination out;
    decompose(f, Constant(1), out);
    return resolve(std::move(out));
}

LogCombination LogRegistry::resolve(LogCombination c) const {
    bool again = true;
    while (again) {
        again = false;
        LogCombination next;
        next.remainder = c.remainder;
        for (const auto& [id, co] : c.coeffs) {
            if (!syms_[id].decomposed) {
                auto it = next.coeffs.find(id);
                if (it == next.coeffs.end()) next.coeffs[id] = co;
                else {
                    it->second += co;
                    if (it->second.is_zero()) next.coeffs.erase(it);
                }
                continue;
            }
            again = true;
            for (const auto& [cid, cco] : syms_[id].rewrite.coeffs) {
                Constant add = co * cco;
                auto it = next.coeffs.find(cid);
                if (it == next.coeffs.end()) next.coeffs[cid] = add;
                else {
                    it->second += add;
                    if (it->second.is_zero()) next.coeffs.erase(it);
                }
            }
        }
        c = std::move(next);
    }
    return c;
}

Elem LogRegistry::d_log(int id) const {
    const LogSymbolInfo& s = syms_[id];
    if (s.level < 0) return Elem();
    return s.arg.derive() / s.arg;
}

std::string LogRegistry::sym_name(int id) const { return "L" + std::to_string(id); }

std::optional<LogLinearRelation> LogRegistry::linear_relation(
        std::vector<LogCombination> combos) const {
    if (combos.empty()) return std::nullopt;
    for (auto& c : combos) c = resolve(std::move(c));
    std::vector<int> ids;
    for (const auto& c : combos)
        for (const auto& [id, co] : c.coeffs) {
            (void)co;
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        }
    // coordinates over Q: each Constant contributes its rational coordinates
    int adim = 1;
    for (const auto& c : combos)
        for (const auto& [id, co] : c.coeffs)
            adim = std::max(adim, static_cast<int>(co.coords().size()));
    size_t rows = ids.size() * adim;
    size_t cols = combos.size();
    std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols, Rat(0)));
    for (size_t j = 0; j < cols; ++j)
        for (const auto& [id, co] : combos[j].coeffs) {
            size_t base = static_cast<size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin()) * adim;
            for (size_t k = 0; k < co.coords().size(); ++k) M[base + k][j] = co.coords()[k];
        }
    // rational kernel
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        Rat inv = 1 / M[rank][c];
        for (size_t j = c; j < cols; ++j) M[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            Rat f = M[r][c];
            for (size_t j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    // first free column gives the canonical kernel vector
    int free_col = -1;
    for (size_t c = 0; c < cols; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end()) {
            free_col = static_cast<int>(c);
            break;
        }
    if (free_col < 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    x[free_col] = 1;
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -M[r][free_col];
    // clear denominators, normalize content and sign
    Int den(1);
    for (const auto& v : x) {
        Int d = v.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    Int g(0);
    for (auto& v : x) {
        v *= Rat(den);
        Int n = v.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g > 1)
        for (auto& v : x) v /= Rat(g);
    for (const auto& v : x) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : x) w = -w;
        break;
    }
    LogLinearRelation rel;
    rel.coeffs = x;
    Elem rem;
    for (size_t j = 0; j < cols; ++j)
        if (x[j] != 0) rem += Elem(Constant(x[j])) * combos[j].remainder;
    rel.remainder = rem;
    return rel;
}

} // namespace polyint
