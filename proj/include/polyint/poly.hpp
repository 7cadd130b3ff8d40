#ifndef POLYINT_POLY_HPP
#define POLYINT_POLY_HPP

#include "polyint/rational.hpp"

#include <utility>
#include <vector>

namespace polyint {

// Dense univariate polynomials over a field K, coefficient i belonging to
// t^i, no trailing zeros (empty vector = 0).  K must be constructible from
// long, support +,-,*,/ and is_zero(); works for Constant and for tower
// elements alike.

template <class K> using Poly = std::vector<K>;

template <class K> void ptrim(Poly<K>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class K> int pdeg(const Poly<K>& p) { return static_cast<int>(p.size()) - 1; }

template <class K> bool pis_zero(const Poly<K>& p) { return p.empty(); }

template <class K> const K& plc(const Poly<K>& p) { return p.back(); }

template <class K> Poly<K> pconst(K c) {
    Poly<K> p;
    if (!c.is_zero()) p.push_back(std::move(c));
    return p;
}

template <class K> Poly<K> padd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(std::max(a.size(), b.size()), K(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ptrim(r);
    return r;
}

template <class K> Poly<K> pneg(Poly<K> a) {
    for (auto& c : a) c = -c;
    return a;
}

template <class K> Poly<K> psub(const Poly<K>& a, const Poly<K>& b) {
    return padd(a, pneg(b));
}

template <class K> Poly<K> pscale(Poly<K> a, const K& s) {
    if (s.is_zero()) return {};
    for (auto& c : a) c *= s;
    ptrim(a);
    return a;
}

template <class K> Poly<K> pmul(const Poly<K>& a, const Poly<K>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<K> r(a.size() + b.size() - 1, K(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    ptrim(r);
    return r;
}

// multiply by t^n
template <class K> Poly<K> pshift(Poly<K> a, int n) {
    if (a.empty()) return a;
    a.insert(a.begin(), n, K(0));
    return a;
}

template <class K> Poly<K> ppow(const Poly<K>& a, long n) {
    Poly<K> r = pconst(K(1));
    Poly<K> base = a;
    while (n > 0) {
        if (n & 1) r = pmul(r, base);
        base = pmul(base, base);
        n >>= 1;
    }
    return r;
}

template <class K>
void pdivmod(const Poly<K>& a, const Poly<K>& b, Poly<K>& q, Poly<K>& r) {
    if (b.empty()) throw domain_error("polynomial division by zero");
    q.clear();
    r = a;
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, K(0));
    K inv = K(1) / plc(b);
    while (r.size() >= b.size()) {
        K c = plc(r) * inv;
        size_t k = r.size() - b.size();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
        ptrim(r);
        if (r.empty()) break;
    }
    ptrim(q);
}

template <class K> Poly<K> pquo(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> q, r;
    pdivmod(a, b, q, r);
    return q;
}

template <class K> Poly<K> prem(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> q, r;
    pdivmod(a, b, q, r);
    return r;
}

template <class K> Poly<K> pmonic(Poly<K> a) {
    if (a.empty()) return a;
    K inv = K(1) / plc(a);
    return pscale(std::move(a), inv);
}

// monic gcd via the Euclidean algorithm
template <class K> Poly<K> pgcd(Poly<K> a, Poly<K> b) {
    while (!b.empty()) {
        Poly<K> r = prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(std::move(a));
}

// g = gcd(a,b) monic, with s*a + t*b = g
template <class K>
Poly<K> pextgcd(const Poly<K>& a, const Poly<K>& b, Poly<K>& s, Poly<K>& t) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = pconst(K(1)), s1;
    Poly<K> t0, t1 = pconst(K(1));
    while (!r1.empty()) {
        Poly<K> q, r;
        pdivmod(r0, r1, q, r);
        Poly<K> s2 = psub(s0, pmul(q, s1));
        Poly<K> t2 = psub(t0, pmul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.empty()) { s.clear(); t.clear(); return r0; }
    K inv = K(1) / plc(r0);
    s = pscale(std::move(s0), inv);
    t = pscale(std::move(t0), inv);
    return pscale(std::move(r0), inv);
}

// formal derivative with respect to the polynomial variable
template <class K> Poly<K> pderiv(const Poly<K>& a) {
    if (a.size() <= 1) return {};
    Poly<K> r(a.size() - 1, K(0));
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * K(static_cast<long>(i));
    ptrim(r);
    return r;
}

template <class K> K peval(const Poly<K>& a, const K& x) {
    K r(0);
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

// resultant via the Euclidean remainder sequence (fields only)
template <class K> K presultant(Poly<K> a, Poly<K> b) {
    if (a.empty() || b.empty()) return K(0);
    K res(1);
    while (pdeg(b) > 0) {
        Poly<K> r = prem(a, b);
        long da = pdeg(a), db = pdeg(b), dr = pis_zero(r) ? -1 : pdeg(r);
        if (pis_zero(r)) return K(0);
        // res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b,r)
        K f = plc(b).pow(da - dr);
        if ((da * db) % 2 == 1) f = -f;
        res *= f;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant
    return res * plc(b).pow(pdeg(a));
}

// squarefree decomposition (Yun); returns [(factor, multiplicity)...] with
// factors monic, pairwise coprime, product^mult = monic(a)
template <class K>
std::vector<std::pair<Poly<K>, int>> psquarefree(const Poly<K>& a0) {
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> a = pmonic(a0);
    if (pdeg(a) <= 0) return out;
    Poly<K> ap = pderiv(a);
    Poly<K> g = pgcd(a, ap);
    if (pdeg(g) == 0) {
        out.push_back({a, 1});
        return out;
    }
    Poly<K> w = pquo(a, g);
    Poly<K> y = pquo(ap, g);
    Poly<K> z = psub(y, pderiv(w));
    int i = 1;
    while (!pis_zero(z)) {
        Poly<K> f = pgcd(w, z);
        if (pdeg(f) > 0) out.push_back({f, i});
        w = pquo(w, f);
        y = pquo(z, f);
        z = psub(y, pderiv(w));
        ++i;
    }
    if (pdeg(w) > 0) out.push_back({w, i});
    return out;
}

} // namespace polyint

#endif
