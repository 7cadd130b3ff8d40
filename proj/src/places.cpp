#include "polyint/places.hpp"
#include "polyint/tower.hpp"
#include "polyint/zfactor.hpp"

#include <algorithm>
#include <sstream>

namespace polyint {

int Place::cmp(const Place& o) const {
    if (level != o.level) return level < o.level ? -1 : 1;
    if (infinite != o.infinite) return infinite ? 1 : -1; // finite first
    if (infinite) return 0;
    if (poly.size() != o.poly.size()) return poly.size() < o.poly.size() ? -1 : 1;
    for (size_t i = poly.size(); i-- > 0;) {
        int c = poly[i].cmp(o.poly[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Place::str() const {
    if (infinite) return "inf@" + std::to_string(level);
    std::ostringstream os;
    os << "(";
    for (size_t i = poly.size(); i-- > 0;) {
        os << poly[i].str();
        if (i) os << "*t^" << i << " + ";
    }
    os << ")@" << level;
    return os.str();
}

Place Place::linear(const Tower*, int level, const Rat& c) {
    Poly<Elem> p(2, Elem(0));
    p[0] = Elem(Constant(-c));
    p[1] = Elem(1);
    return Place::at(level, std::move(p));
}

namespace {

// multiplicity of the monic q inside p (exact divisions)
long multiplicity(Poly<Elem>& p, const Poly<Elem>& q) {
    long m = 0;
    while (pdeg(p) >= pdeg(q)) {
        Poly<Elem> quo, rem;
        pdivmod(p, q, quo, rem);
        if (!pis_zero(rem)) break;
        p = quo;
        ++m;
    }
    return m;
}

bool all_rational(const Poly<Elem>& p) {
    for (const auto& c : p)
        if (!(c.is_constant_value() && c.constant().is_rational())) return false;
    return true;
}

Poly<Constant> to_cpoly(const Poly<Elem>& p) {
    Poly<Constant> r(p.size(), Constant(0));
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i].constant();
    return r;
}

Poly<Elem> to_epoly(const Poly<Constant>& p) {
    Poly<Elem> r(p.size(), Elem(0));
    for (size_t i = 0; i < p.size(); ++i) r[i] = Elem(p[i]);
    return r;
}

// split a monic squarefree level-0 quadratic over Q(alpha) when possible
bool split_quadratic(const Poly<Elem>& s, const AlgCtxPtr& alg,
                     Poly<Elem>& f1, Poly<Elem>& f2) {
    if (pdeg(s) != 2) return false;
    if (!s[0].is_constant_value() || !s[1].is_constant_value()) return false;
    Constant b = s[1].constant(), c = s[0].constant();
    Constant disc = b * b - Constant(4) * c;
    auto sq = sqrt_in_quadratic(disc, alg);
    if (!sq) return false;
    Constant half = Constant(Rat(1, 2));
    Constant r1 = (-b + *sq) * half;
    Constant r2 = (-b - *sq) * half;
    if (r1 == r2) return false; // not squarefree then
    f1 = {Elem(-r1), Elem(1)};
    f2 = {Elem(-r2), Elem(1)};
    return true;
}

} // namespace

std::vector<std::pair<Poly<Elem>, int>> presplit_monic(int level, const Poly<Elem>& monic,
                                                       const AlgCtxPtr& alg) {
    std::vector<std::pair<Poly<Elem>, int>> out;
    if (level == 0 && all_rational(monic)) {
        auto qf = factor_rational_poly(to_cpoly(monic));
        for (const auto& [fac, mult] : qf.factors) {
            Poly<Elem> fe = to_epoly(fac);
            Poly<Elem> f1, f2;
            if (alg && split_quadratic(fe, alg, f1, f2)) {
                out.push_back({f1, mult});
                out.push_back({f2, mult});
            } else {
                out.push_back({fe, mult});
            }
        }
        return out;
    }
    for (const auto& [s, mult] : psquarefree(monic)) {
        Poly<Elem> f1, f2;
        if (level == 0 && split_quadratic(s, alg, f1, f2)) {
            out.push_back({f1, mult});
            out.push_back({f2, mult});
        } else {
            out.push_back({s, mult});
        }
    }
    return out;
}

long order_at(const Elem& f, const Place& p) {
    if (f.is_zero()) throw domain_error("valuation of zero");
    if (f.level() < p.level) return 0;
    Poly<Elem> num, den;
    f.as_fraction(p.level, num, den);
    if (p.infinite) return pdeg(den) - pdeg(num);
    long a = multiplicity(num, p.poly);
    long b = multiplicity(den, p.poly);
    return a - b;
}

Divisor divisor_of(const Elem& f, int level) {
    if (f.is_zero()) throw domain_error("divisor of zero");
    Divisor d;
    if (f.level() < level) return d;
    Poly<Elem> num, den;
    f.as_fraction(level, num, den);
    AlgCtxPtr alg;
    for (const auto& c : num)
        if (c.is_constant_value() && c.constant().context()) alg = c.constant().context();
    auto add = [&](const Poly<Elem>& poly, int sgn) {
        if (pdeg(poly) < 1) return;
        for (const auto& [fac, mult] : presplit_monic(level, pmonic(poly), alg)) {
            Place pl = Place::at(level, fac);
            d[pl] += sgn * mult;
            if (d[pl] == 0) d.erase(pl);
        }
    };
    add(num, 1);
    add(den, -1);
    Int inf = pdeg(den) - pdeg(num);
    if (inf != 0) d[Place::infinity(level)] = inf;
    return d;
}

Int divisor_degree(const Divisor& d) {
    Int s = 0;
    for (const auto& [p, ord] : d) s += ord * p.degree();
    return s;
}

Poly<Elem> residue_mul(const Poly<Elem>& a, const Poly<Elem>& b, const Place& p) {
    return prem(pmul(a, b), p.poly);
}

Poly<Elem> residue_inverse(const Poly<Elem>& a, const Place& p) {
    Poly<Elem> s, t;
    Poly<Elem> g = pextgcd(a, p.poly, s, t);
    if (pdeg(g) != 0)
        throw domain_error("residue not invertible (reducible place)");
    return prem(s, p.poly);
}

Poly<Elem> residue_pow(const Poly<Elem>& a, long n, const Place& p) {
    if (n < 0) return residue_pow(residue_inverse(a, p), -n, p);
    Poly<Elem> r = pconst(Elem(1));
    Poly<Elem> base = prem(a, p.poly);
    while (n > 0) {
        if (n & 1) r = residue_mul(r, base, p);
        base = residue_mul(base, base, p);
        n >>= 1;
    }
    return r;
}

bool residue_is_root_of_unity(const Poly<Elem>& a, const Place& p, int max_order) {
    if (pis_zero(a)) return false;
    Poly<Elem> one = pconst(Elem(1));
    Poly<Elem> pw = prem(a, p.poly);
    for (int n = 1; n <= max_order; ++n) {
        if (pw == one) return true;
        pw = residue_mul(pw, a, p);
    }
    return false;
}

Elem LeadingCoeff::as_elem() const {
    if (pis_zero(rep)) return Elem();
    if (pdeg(rep) > 0)
        throw domain_error("leading coefficient lives in a proper residue extension");
    return rep[0];
}

LeadingCoeff leading_coeff(const Elem& f, const Place& p) {
    if (f.is_zero()) throw domain_error("leading coefficient of zero");
    LeadingCoeff lc;
    lc.place = p;
    if (f.level() < p.level) {
        lc.rep = pconst(f);
        return lc;
    }
    Poly<Elem> num, den;
    f.as_fraction(p.level, num, den);
    if (p.infinite) {
        lc.rep = pconst(plc(num) / plc(den));
        return lc;
    }
    Poly<Elem> n0 = num, d0 = den;
    multiplicity(n0, p.poly);
    multiplicity(d0, p.poly);
    Poly<Elem> nr = prem(n0, p.poly);
    Poly<Elem> dr = prem(d0, p.poly);
    lc.rep = residue_mul(nr, residue_inverse(dr, p), p);
    return lc;
}

// ---- Hermite normal form ---------------------------------------------------

namespace {
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
} // namespace

HnfResult hnf_rows(std::vector<std::vector<Int>> A) {
    size_t n = A.size();
    size_t m = n ? A[0].size() : 0;
    std::vector<std::vector<Int>> U(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;
    size_t r = 0;
    for (size_t col = 0; col < m && r < n; ++col) {
        while (true) {
            size_t best = n;
            for (size_t i = r; i < n; ++i) {
                if (A[i][col] == 0) continue;
                if (best == n || abs(A[i][col]) < abs(A[best][col])) best = i;
            }
            if (best == n) break;
            std::swap(A[r], A[best]);
            std::swap(U[r], U[best]);
            bool clean = true;
            for (size_t i = r + 1; i < n; ++i) {
                if (A[i][col] == 0) continue;
                Int q = fdiv(A[i][col], A[r][col]);
                if (q != 0) {
                    for (size_t j = 0; j < m; ++j) A[i][j] -= q * A[r][j];
                    for (size_t j = 0; j < n; ++j) U[i][j] -= q * U[r][j];
                }
                if (A[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (A[r][col] == 0) continue;
        if (A[r][col] < 0) {
            for (size_t j = 0; j < m; ++j) A[r][j] = -A[r][j];
            for (size_t j = 0; j < n; ++j) U[r][j] = -U[r][j];
        }
        for (size_t i = 0; i < r; ++i) {
            Int q = fdiv(A[i][col], A[r][col]);
            if (q != 0) {
                for (size_t j = 0; j < m; ++j) A[i][j] -= q * A[r][j];
                for (size_t j = 0; j < n; ++j) U[i][j] -= q * U[r][j];
            }
        }
        ++r;
    }
    HnfResult res;
    for (size_t i = 0; i < r; ++i) {
        res.H.push_back(A[i]);
        res.U.push_back(U[i]);
    }
    return res;
}

// ---- atom refinement and the independent basis ------------------------------

std::vector<Poly<Elem>> atom_refine(int level, const std::vector<Poly<Elem>>& polys,
                                    const AlgCtxPtr& alg) {
    std::vector<Poly<Elem>> atoms;
    auto insert = [&](const Poly<Elem>& piece) {
        std::vector<Poly<Elem>> work{piece};
        while (!work.empty()) {
            Poly<Elem> s = work.back();
            work.pop_back();
            if (pdeg(s) < 1) continue;
            bool placed = false;
            for (size_t i = 0; i < atoms.size() && !placed; ++i) {
                Poly<Elem> g = pgcd(s, atoms[i]);
                if (pdeg(g) < 1) continue;
                if (pdeg(g) < pdeg(atoms[i])) {
                    Poly<Elem> rest = pquo(atoms[i], g);
                    atoms[i] = g;
                    atoms.push_back(rest);
                }
                if (pdeg(g) < pdeg(s)) work.push_back(pquo(s, g));
                placed = true;
            }
            if (!placed) atoms.push_back(s);
        }
    };
    for (const auto& p : polys) {
        if (pis_zero(p) || pdeg(p) < 1) continue;
        for (const auto& [piece, mult] : presplit_monic(level, pmonic(p), alg)) {
            (void)mult;
            insert(piece);
        }
    }
    std::sort(atoms.begin(), atoms.end(), [](const Poly<Elem>& a, const Poly<Elem>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;) {
            int c = a[i].cmp(b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return atoms;
}

IndependentBasis independent_basis(const std::vector<Elem>& fs, int level,
                                   const AlgCtxPtr& alg) {
    IndependentBasis out;
    std::vector<Poly<Elem>> polys;
    std::vector<std::pair<Poly<Elem>, Poly<Elem>>> fracs;
    for (const auto& f : fs) {
        if (f.is_zero()) throw domain_error("independent_basis: zero element");
        Poly<Elem> num, den;
        f.as_fraction(level, num, den);
        polys.push_back(num);
        polys.push_back(den);
        fracs.push_back({num, den});
    }
    std::vector<Poly<Elem>> atoms = atom_refine(level, polys, alg);
    for (const auto& a : atoms) out.atoms.push_back(Place::at(level, a));
    out.atoms.push_back(Place::infinity(level));
    size_t m = out.atoms.size();

    std::vector<std::vector<Int>> A;
    for (const auto& [num, den] : fracs) {
        std::vector<Int> row(m, 0);
        for (size_t j = 0; j < atoms.size(); ++j) {
            Poly<Elem> n = num, d = den;
            row[j] = multiplicity(n, atoms[j]) - multiplicity(d, atoms[j]);
        }
        row[m - 1] = pdeg(den) - pdeg(num);
        A.push_back(std::move(row));
    }
    HnfResult hnf = hnf_rows(A);
    out.psi_divisors = hnf.H;

    for (size_t r = 0; r < hnf.H.size(); ++r) {
        Elem psi(1);
        for (size_t i = 0; i < fs.size(); ++i) {
            if (hnf.U[r][i] == 0) continue;
            psi *= fs[i].pow(hnf.U[r][i].get_si());
        }
        out.psi.push_back(psi);
    }

    // pivot columns of H
    std::vector<size_t> pivots;
    for (const auto& row : hnf.H) {
        size_t c = 0;
        while (c < m && row[c] == 0) ++c;
        pivots.push_back(c);
    }
    for (size_t i = 0; i < fs.size(); ++i) {
        std::vector<Int> a = A[i];
        std::vector<Int> e(hnf.H.size(), 0);
        for (size_t r = 0; r < hnf.H.size(); ++r) {
            size_t c = pivots[r];
            if (a[c] == 0) continue;
            if (a[c] % hnf.H[r][c] != 0)
                throw std::logic_error("divisor not in the basis lattice");
            Int q = a[c] / hnf.H[r][c];
            e[r] = q;
            for (size_t j = 0; j < m; ++j) a[j] -= q * hnf.H[r][j];
        }
        for (size_t j = 0; j < m; ++j)
            if (a[j] != 0) throw std::logic_error("divisor reduction left a remainder");
        Elem c = fs[i];
        for (size_t r = 0; r < out.psi.size(); ++r)
            if (e[r] != 0) c *= out.psi[r].pow(-e[r].get_si());
        if (!(c.level() < level))
            throw std::logic_error("lattice constant has full level");
        out.exponents.push_back(std::move(e));
        out.consts.push_back(c);
    }
    return out;
}

} // namespace polyint
