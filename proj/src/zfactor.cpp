#include "polyint/zfactor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <functional>

namespace polyint {

namespace {

using ZPoly = std::vector<Int>; // dense, no trailing zeros

void ztrim(ZPoly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); }

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

// exact division test in Z[x]; quotient returned when it divides
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    // does b divide a?
    q.clear();
    ZPoly r = a;
    if (b.empty()) return false;
    if (r.empty()) return true;
    if (r.size() < b.size()) return false;
    q.assign(r.size() - b.size() + 1, Int(0));
    while (r.size() >= b.size()) {
        Int c = r.back(), d = b.back();
        if (c % d != 0) return false;
        Int f = c / d;
        size_t k = r.size() - b.size();
        q[k] = f;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= f * b[i];
        ztrim(r);
        if (r.empty()) break;
        if (r.size() < b.size()) return false;
    }
    ztrim(q);
    return r.empty();
}

Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// ---- arithmetic mod a word-sized prime -------------------------------

long lmod(const Int& a, long p) {
    Int r = a % p;
    long v = static_cast<long>(r.get_si());
    if (v < 0) v += p;
    return v;
}

long mulmod(long a, long b, long p) {
    return static_cast<long>((static_cast<unsigned long long>(a) * b) % p);
}

long invmod(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t, newt); newt -= q * t;
        std::swap(r, newr); newr -= q * r;
    }
    if (t < 0) t += p;
    return t;
}

using MPoly = std::vector<long>;

void mtrim(MPoly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); }

MPoly mmul(const MPoly& a, const MPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned long long>(a[i]) * b[j]) % p;
    mtrim(r);
    return r;
}

void mdivmod(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r, long p) {
    q.clear();
    r = a;
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    long inv = invmod(b.back(), p);
    while (r.size() >= b.size()) {
        long c = mulmod(r.back(), inv, p);
        size_t k = r.size() - b.size();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            r[i + k] = (r[i + k] - mulmod(c, b[i], p)) % p;
            if (r[i + k] < 0) r[i + k] += p;
        }
        mtrim(r);
        if (r.empty()) break;
    }
    mtrim(q);
}

MPoly mrem(const MPoly& a, const MPoly& b, long p) {
    MPoly q, r;
    mdivmod(a, b, q, r, p);
    return r;
}

MPoly mmonic(MPoly a, long p) {
    if (a.empty()) return a;
    long inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

MPoly mgcd(MPoly a, MPoly b, long p) {
    while (!b.empty()) {
        MPoly r = mrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(std::move(a), p);
}

MPoly mderiv(const MPoly& a, long p) {
    if (a.size() <= 1) return {};
    MPoly r(a.size() - 1, 0);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<long>((a[i] * (i % p)) % p);
    mtrim(r);
    return r;
}

MPoly msub(const MPoly& a, const MPoly& b, long p) {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) { r[i] -= b[i]; if (r[i] < 0) r[i] += p; }
    mtrim(r);
    return r;
}

// x^p^i mod f powers for the Berlekamp matrix
MPoly mpowmod(const MPoly& base, Int e, const MPoly& f, long p) {
    MPoly r{1}, b = base;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mrem(mmul(r, b, p), f, p);
        b = mrem(mmul(b, b, p), f, p);
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod p
std::vector<MPoly> berlekamp(const MPoly& f, long p) {
    int n = zdeg(ZPoly()) , d = static_cast<int>(f.size()) - 1;
    (void)n;
    if (d <= 1) return {f};
    // Q[i] = x^{p*i} mod f as coefficient row
    MPoly xp = mpowmod(MPoly{0, 1}, Int(p), f, p);
    std::vector<MPoly> rows(d);
    MPoly cur{1};
    for (int i = 0; i < d; ++i) {
        rows[i] = cur;
        rows[i].resize(d, 0);
        cur = mrem(mmul(cur, xp, p), f, p);
    }
    // kernel of (Q - I)^T acting on coefficient vectors v: v(x)^p == v(x) mod f
    // build matrix M with M[j][i] = rows[i][j] - delta(i,j)
    std::vector<std::vector<long>> M(d, std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            long v = rows[i][j] - (i == j ? 1 : 0);
            v %= p; if (v < 0) v += p;
            M[j][i] = v;
        }
    // Gaussian elimination, collect kernel basis
    std::vector<int> pivot_col(d, -1);
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int piv = -1;
        for (int r = rank; r < d; ++r)
            if (M[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        long inv = invmod(M[rank][col], p);
        for (int j = 0; j < d; ++j) M[rank][j] = mulmod(M[rank][j], inv, p);
        for (int r = 0; r < d; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            long c = M[r][col];
            for (int j = 0; j < d; ++j) {
                M[r][j] = (M[r][j] - mulmod(c, M[rank][j], p)) % p;
                if (M[r][j] < 0) M[r][j] += p;
            }
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<MPoly> kernel;
    std::vector<bool> is_pivot(d, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < d; ++col) {
        if (is_pivot[col]) continue;
        MPoly v(d, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) {
            long c = M[r][col];
            if (c != 0) v[pivot_col[r]] = (p - c) % p;
        }
        mtrim(v);
        kernel.push_back(v);
    }
    size_t nfactors = kernel.size();
    std::vector<MPoly> factors{f};
    for (const auto& v : kernel) {
        if (factors.size() == nfactors) break;
        if (v.size() == 1) continue; // the constant kernel vector
        std::vector<MPoly> next;
        for (auto& u : factors) {
            if (factors.size() + next.size() - 1 >= nfactors && false) {}
            if (static_cast<int>(u.size()) - 1 <= 1) { next.push_back(u); continue; }
            MPoly rem_u = u;
            for (long s = 0; s < p && static_cast<int>(rem_u.size()) - 1 > 0; ++s) {
                MPoly vs = v;
                if (vs.empty()) vs.assign(1, 0);
                vs.resize(std::max<size_t>(vs.size(), 1));
                vs[0] = (vs[0] + p - s) % p;
                mtrim(vs);
                MPoly g = mgcd(rem_u, vs, p);
                if (static_cast<int>(g.size()) - 1 >= 1 &&
                    g.size() < rem_u.size()) {
                    next.push_back(g);
                    MPoly q, r;
                    mdivmod(rem_u, g, q, r, p);
                    rem_u = q;
                }
            }
            if (!rem_u.empty() && static_cast<int>(rem_u.size()) - 1 >= 1)
                next.push_back(rem_u);
            else if (static_cast<int>(rem_u.size()) - 1 == 0 && next.empty())
                next.push_back(u);
        }
        factors = std::move(next);
    }
    return factors;
}

// ---- Hensel lifting ---------------------------------------------------

Int zmod_sym(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zmod_poly(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& c : r) { c %= m; if (c < 0) c += m; }
    ztrim(r);
    return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    return zmod_poly(zmul(a, b), m);
}

// division by a monic polynomial mod m
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    q.clear();
    r = zmod_poly(a, m);
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, Int(0));
    while (r.size() >= b.size()) {
        Int c = r.back() % m;
        size_t k = r.size() - b.size();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            r[i + k] = (r[i + k] - c * b[i]) % m;
            if (r[i + k] < 0) r[i + k] += m;
        }
        ztrim(r);
        if (r.empty()) break;
    }
    ztrim(q);
}

// lift f == g*h (mod p) to mod p^K with g, h monic; s*g + t*h == 1 (mod p)
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h,
                 const MPoly& s, const MPoly& t, long p, const Int& pK) {
    Int m(p);
    auto from_m = [](const MPoly& a) {
        ZPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        return r;
    };
    ZPoly S = from_m(s), T = from_m(t);
    while (m < pK) {
        // e = (f - g*h)/m  mod p
        ZPoly gh = zmul(g, h);
        ZPoly e(std::max(f.size(), gh.size()), Int(0));
        for (size_t i = 0; i < f.size(); ++i) e[i] = f[i];
        for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        for (auto& c : e) c /= m;
        ztrim(e);
        e = zmod_poly(e, Int(p));
        // dg*h + dh*g == e (mod p): e*t = q*g + dg; dh = e*s + q*h
        ZPoly et = zmul_mod(e, T, Int(p));
        ZPoly q, dg;
        zdivmod_monic(et, g, Int(p), q, dg);
        ZPoly es = zmul_mod(e, S, Int(p));
        ZPoly qh = zmul_mod(q, h, Int(p));
        ZPoly dh = zmod_poly(zmul(ZPoly{Int(1)}, es), Int(p));
        {
            ZPoly sum(std::max(dh.size(), qh.size()), Int(0));
            for (size_t i = 0; i < dh.size(); ++i) sum[i] = dh[i];
            for (size_t i = 0; i < qh.size(); ++i) sum[i] = (sum[i] + qh[i]) % p;
            ztrim(sum);
            dh = sum;
        }
        // g += m*dg, h += m*dh
        if (g.size() < dg.size()) g.resize(dg.size(), Int(0));
        for (size_t i = 0; i < dg.size(); ++i) g[i] += m * dg[i];
        if (h.size() < dh.size()) h.resize(dh.size(), Int(0));
        for (size_t i = 0; i < dh.size(); ++i) h[i] += m * dh[i];
        m *= p;
        g = zmod_poly(g, m);
        h = zmod_poly(h, m);
    }
}

// Bezout mod p for monic coprime g, h
void bezout_mod(const MPoly& g, const MPoly& h, long p, MPoly& s, MPoly& t) {
    MPoly r0 = g, r1 = h;
    MPoly s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        MPoly q, r;
        mdivmod(r0, r1, q, r, p);
        MPoly s2 = msub(s0, mmul(q, s1, p), p);
        MPoly t2 = msub(t0, mmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    long inv = invmod(r0[0], p);
    for (auto& c : s0) c = mulmod(c, inv, p);
    for (auto& c : t0) c = mulmod(c, inv, p);
    s = s0; // s*g + t*h == 1
    t = t0;
}

// factor a monic squarefree primitive integer polynomial
std::vector<ZPoly> zfactor_monic_squarefree(const ZPoly& f) {
    int n = zdeg(f);
    if (n <= 1) return {f};
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                  101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    long p = 0;
    MPoly fp;
    for (long cand : primes) {
        if (f.back() % cand == 0) continue;
        MPoly g(f.size());
        for (size_t i = 0; i < f.size(); ++i) g[i] = lmod(f[i], cand);
        mtrim(g);
        if (static_cast<int>(g.size()) - 1 != n) continue;
        MPoly gg = mgcd(g, mderiv(g, cand), cand);
        if (static_cast<int>(gg.size()) - 1 == 0) { p = cand; fp = mmonic(g, cand); break; }
    }
    if (p == 0) throw std::logic_error("no suitable prime for modular factorization");

    std::vector<MPoly> mf = berlekamp(fp, p);
    if (mf.size() == 1) return {f};
    std::sort(mf.begin(), mf.end(), [](const MPoly& a, const MPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // coefficient bound: |factor coeffs| <= 2^n * (sum |f_i|)
    Int B = 0;
    for (const auto& c : f) B += abs(c);
    B <<= n;
    Int pK(p);
    while (pK <= 2 * B) pK *= p;

    // lift the factor list by peeling: f == mf[0] * rest
    std::vector<ZPoly> lifted;
    ZPoly ftail = f;
    std::vector<MPoly> tail(mf.begin(), mf.end());
    while (tail.size() > 1) {
        MPoly g0 = tail.front();
        MPoly h0{1};
        for (size_t i = 1; i < tail.size(); ++i) h0 = mmul(h0, tail[i], p);
        MPoly s, t;
        bezout_mod(g0, h0, p, s, t);
        ZPoly g(g0.size()), h(h0.size());
        for (size_t i = 0; i < g0.size(); ++i) g[i] = g0[i];
        for (size_t i = 0; i < h0.size(); ++i) h[i] = h0[i];
        hensel_pair(zmod_poly(ftail, pK), g, h, s, t, p, pK);
        lifted.push_back(g);
        ftail = h; // still == product of rest mod pK; exactness restored in recombination
        tail.erase(tail.begin());
    }
    {
        ZPoly last(tail[0].size());
        for (size_t i = 0; i < tail[0].size(); ++i) last[i] = tail[0][i];
        lifted.push_back(zmod_poly(ftail, pK));
    }
    for (auto& u : lifted)
        for (auto& c : u) c = zmod_sym(c, pK);

    // subset recombination against the true integer polynomial
    std::vector<ZPoly> out;
    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly rem = f;
    bool progress = true;
    auto try_subsets = [&](size_t card) -> bool {
        std::vector<size_t> idx(card);
        std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t k) -> bool {
            if (k == card) {
                ZPoly cand{Int(1)};
                for (size_t i = 0; i < card; ++i)
                    cand = zmod_poly(zmul(cand, lifted[alive[idx[i]]]), pK);
                for (auto& c : cand) c = zmod_sym(c, pK);
                ZPoly q;
                if (zdivides(rem, cand, q)) {
                    out.push_back(cand);
                    rem = q;
                    std::vector<int> na;
                    for (size_t i = 0, j = 0; i < alive.size(); ++i) {
                        if (j < card && idx[j] == i) { ++j; continue; }
                        na.push_back(alive[i]);
                    }
                    alive = na;
                    return true;
                }
                return false;
            }
            for (size_t i = start; i < alive.size(); ++i) {
                idx[k] = i;
                if (rec(i + 1, k + 1)) return true;
            }
            return false;
        };
        return rec(0, 0);
    };
    while (!alive.empty() && progress) {
        progress = false;
        for (size_t card = 1; card <= alive.size(); ++card) {
            if (card > alive.size() / 2 && card != alive.size()) continue;
            if (try_subsets(card)) { progress = true; break; }
            if (card == alive.size()) break;
        }
        if (!progress && !alive.empty()) {
            out.push_back(rem);
            alive.clear();
        }
    }
    if (zdeg(rem) > 0 &&
        std::find(out.begin(), out.end(), rem) == out.end() &&
        std::accumulate(out.begin(), out.end(), 0,
                        [](int acc, const ZPoly& z) { return acc + zdeg(z); }) < n)
        out.push_back(rem);
    return out;
}

Poly<Constant> zpoly_to_monic_q(const ZPoly& z) {
    Poly<Constant> p(z.size(), Constant(0));
    Rat lc(z.back());
    for (size_t i = 0; i < z.size(); ++i) {
        Rat c(z[i]);
        p[i] = Constant(c / lc);
    }
    return p;
}

} // namespace

QFactorization factor_rational_poly(const Poly<Constant>& p) {
    if (pis_zero(p)) throw domain_error("factoring the zero polynomial");
    QFactorization out;
    out.content = plc(p);
    if (pdeg(p) == 0) return out;
    for (const auto& c : p)
        if (!c.is_rational())
            throw domain_error("factor_rational_poly: nonrational coefficient");

    Poly<Constant> monic = pmonic(p);
    auto sqf = psquarefree(monic);
    for (const auto& [part, mult] : sqf) {
        // clear denominators to a primitive integer polynomial
        Int den(1);
        for (const auto& c : part) {
            Int d = c.rat().get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
        ZPoly z(part.size());
        for (size_t i = 0; i < part.size(); ++i) {
            Rat c = part[i].rat() * Rat(den);
            z[i] = c.get_num();
        }
        Int cont = zcontent(z);
        if (cont > 1) for (auto& c : z) c /= cont;
        if (z.back() < 0) for (auto& c : z) c = -c;
        // make monic over Z by the lc substitution y = lc * x
        Int lc = z.back();
        ZPoly zm = z;
        if (lc != 1) {
            Int pw(1);
            // f_monic(y) = lc^{n-1} f(y/lc): coefficient i scales by lc^{n-1-i}
            int n = zdeg(z);
            std::vector<Int> scale(n + 1, Int(1));
            for (int i = n - 1; i >= 0; --i) scale[i] = scale[i + 1] * lc;
            for (int i = 0; i <= n; ++i) zm[i] = z[i] * scale[i] / lc; // scale[n]=1
            (void)pw;
        }
        auto zf = zfactor_monic_squarefree(zm);
        for (auto& g : zf) {
            if (lc != 1) {
                // map back: factor(x) = monic(g(lc*x))
                ZPoly gx(g.size());
                Int pw(1);
                for (size_t i = 0; i < g.size(); ++i) { gx[i] = g[i] * pw; pw *= lc; }
                Int c2 = zcontent(gx);
                for (auto& cc : gx) cc /= c2;
                out.factors.push_back({zpoly_to_monic_q(gx), mult});
            } else {
                out.factors.push_back({zpoly_to_monic_q(g), mult});
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (pdeg(a.first) != pdeg(b.first)) return pdeg(a.first) < pdeg(b.first);
                  for (size_t i = a.first.size(); i-- > 0;) {
                      int c = a.first[i].cmp(b.first[i]);
                      if (c != 0) return c < 0;
                  }
                  return false;
              });
    return out;
}

RatFactorization factor_rat(const Rat& r) {
    if (r == 0) throw domain_error("factoring zero");
    RatFactorization out;
    Int num = r.get_num(), den = r.get_den();
    if (num < 0) { out.sign = -1; num = -num; }
    std::map<Int, long> acc;
    auto accumulate = [&acc](Int n, long s) {
        for (Int d(2); d * d <= n;) {
            if (n % d == 0) {
                long e = 0;
                while (n % d == 0) { n /= d; ++e; }
                acc[d] += s * e;
            }
            if (d == 2) d = 3; else d += 2;
        }
        if (n > 1) acc[n] += s;
    };
    accumulate(num, 1);
    accumulate(den, -1);
    for (auto& [p, e] : acc)
        if (e != 0) out.primes.push_back({p, e});
    return out;
}

std::vector<Rat> rational_roots(const Poly<Constant>& p) {
    std::vector<Rat> roots;
    auto f = factor_rational_poly(p);
    for (const auto& [fac, mult] : f.factors) {
        (void)mult;
        if (pdeg(fac) == 1) roots.push_back(-fac[0].rat());
    }
    return roots;
}

std::optional<Constant> sqrt_in_quadratic(const Constant& d, const AlgCtxPtr& ctx) {
    if (d.is_rational()) {
        Rat r;
        if (rat_sqrt(d.rat(), r)) return Constant(r);
    }
    if (!ctx || ctx->degree() != 2) return std::nullopt;
    // alpha^2 = -(m1 alpha + m0)
    Rat m0 = ctx->minpoly[0], m1 = ctx->minpoly[1];
    Rat d0 = 0, d1 = 0;
    if (!d.coords().empty()) d0 = d.coords()[0];
    if (d.coords().size() > 1) d1 = d.coords()[1];
    // (u + v alpha)^2 = u^2 - v^2 m0 + (2uv - v^2 m1) alpha
    if (d1 == 0) {
        Rat r;
        if (rat_sqrt(d0, r)) return Constant(r);
        // branch with v != 0, u = v m1/2: v^2 (m1^2/4 - m0) = d0
        Rat disc = m1 * m1 / 4 - m0;
        if (disc != 0) {
            Rat v2 = d0 / disc, v;
            if (rat_sqrt(v2, v))
                return Constant::algebraic(ctx, {v * m1 / 2, v});
        }
        return std::nullopt;
    }
    // 2uv - v^2 m1 = d1, u^2 - v^2 m0 = d0  =>  u = (d1 + v^2 m1) / (2v)
    // (d1 + v^2 m1)^2 = 4 v^2 (d0 + v^2 m0); biquadratic in v
    // m1^2 w^2 + 2 d1 m1 w + d1^2 = 4 w d0 + 4 w^2 m0  with w = v^2
    Rat A = m1 * m1 - 4 * m0;
    Rat B = 2 * d1 * m1 - 4 * d0;
    Rat C = d1 * d1;
    // A w^2 + B w + C = 0
    std::vector<Rat> ws;
    if (A == 0) {
        if (B != 0) ws.push_back(-C / B);
    } else {
        Rat disc = B * B - 4 * A * C, sq;
        if (rat_sqrt(disc, sq)) {
            ws.push_back((-B + sq) / (2 * A));
            ws.push_back((-B - sq) / (2 * A));
        }
    }
    for (const Rat& w : ws) {
        Rat v;
        if (w > 0 && rat_sqrt(w, v) && v != 0) {
            Rat u = (d1 + w * m1) / (2 * v);
            Constant cand = Constant::algebraic(ctx, {u, v});
            if (cand * cand == d) return cand;
        }
    }
    return std::nullopt;
}

} // namespace polyint
