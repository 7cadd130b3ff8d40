#include "polyint/elem.hpp"
#include "polyint/tower.hpp"

#include <sstream>

namespace polyint {

const Constant& Elem::constant() const {
    if (lvl_ != -1) throw std::logic_error("constant() on a nonconstant element");
    return c_;
}

const Tower* common_tower(const Elem& a, const Elem& b) {
    const Tower* ta = a.tower();
    const Tower* tb = b.tower();
    if (ta && tb && ta != tb)
        throw std::logic_error("mixing elements of different towers");
    return ta ? ta : tb;
}

Elem Elem::from_poly(const Tower* tw, int level, Poly<Elem> num) {
    return fraction(tw, level, std::move(num), pconst(Elem(1)));
}

Elem Elem::gen(const Tower* tw, int level) {
    Poly<Elem> p(2, Elem(0));
    p[1] = Elem(1);
    return from_poly(tw, level, std::move(p));
}

Elem Elem::fraction(const Tower* tw, int level, Poly<Elem> num, Poly<Elem> den) {
    ptrim(num);
    ptrim(den);
    if (den.empty()) throw domain_error("division by zero");
    if (num.empty()) return Elem();
    Poly<Elem> g = pgcd(num, den);
    if (pdeg(g) > 0) {
        num = pquo(num, g);
        den = pquo(den, g);
    }
    Elem inv = plc(den).inverse();
    num = pscale(std::move(num), inv);
    den = pscale(std::move(den), inv);
    if (pdeg(den) == 0 && pdeg(num) == 0) return num[0];
    Elem e;
    e.tw_ = tw;
    e.lvl_ = level;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    return e;
}

void Elem::as_fraction(int level, Poly<Elem>& num, Poly<Elem>& den) const {
    if (lvl_ == level && level >= 0) {
        num = num_;
        den = den_;
        return;
    }
    if (lvl_ > level) throw std::logic_error("as_fraction below the element's level");
    num = pconst(*this);
    den = pconst(Elem(1));
}

Elem Elem::operator-() const {
    if (lvl_ == -1) return Elem(-c_);
    Elem e = *this;
    e.num_ = pneg(std::move(e.num_));
    return e;
}

Elem& Elem::operator+=(const Elem& o) {
    if (lvl_ == -1 && o.lvl_ == -1) {
        c_ += o.c_;
        return *this;
    }
    const Tower* tw = common_tower(*this, o);
    int L = std::max(lvl_, o.lvl_);
    Poly<Elem> an, ad, bn, bd;
    as_fraction(L, an, ad);
    o.as_fraction(L, bn, bd);
    *this = fraction(tw, L, padd(pmul(an, bd), pmul(bn, ad)), pmul(ad, bd));
    return *this;
}

Elem& Elem::operator-=(const Elem& o) { return *this += -o; }

Elem& Elem::operator*=(const Elem& o) {
    if (lvl_ == -1 && o.lvl_ == -1) {
        c_ *= o.c_;
        return *this;
    }
    const Tower* tw = common_tower(*this, o);
    int L = std::max(lvl_, o.lvl_);
    Poly<Elem> an, ad, bn, bd;
    as_fraction(L, an, ad);
    o.as_fraction(L, bn, bd);
    *this = fraction(tw, L, pmul(an, bn), pmul(ad, bd));
    return *this;
}

Elem& Elem::operator/=(const Elem& o) { return *this *= o.inverse(); }

Elem Elem::inverse() const {
    if (is_zero()) throw domain_error("division by zero");
    if (lvl_ == -1) return Elem(c_.inverse());
    return fraction(tw_, lvl_, den_, num_);
}

Elem Elem::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Elem r(1), base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

int Elem::cmp(const Elem& o) const {
    if (lvl_ != o.lvl_) return lvl_ < o.lvl_ ? -1 : 1;
    if (lvl_ == -1) return c_.cmp(o.c_);
    auto cmp_poly = [](const Poly<Elem>& a, const Poly<Elem>& b) -> int {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            int c = a[i].cmp(b[i]);
            if (c != 0) return c;
        }
        return 0;
    };
    int c = cmp_poly(num_, o.num_);
    if (c != 0) return c;
    return cmp_poly(den_, o.den_);
}

Elem dpoly(const Tower* tw, int level, const Poly<Elem>& p) {
    if (p.empty()) return Elem();
    const Monomial& mon = tw->gen(level);
    Elem theta = Elem::gen(tw, level);
    Elem result;
    // coefficient derivation
    Elem pw(1);
    for (size_t i = 0; i < p.size(); ++i) {
        Elem dc = p[i].derive();
        if (!dc.is_zero()) result += dc * pw;
        if (i + 1 < p.size()) pw *= theta;
    }
    if (mon.kind == MonKind::Exp) {
        // D(theta^i) = i * Du * theta^i
        Elem du = mon.arg.derive();
        Elem pw2(1);
        for (size_t i = 1; i < p.size(); ++i) {
            pw2 *= theta;
            if (!p[i].is_zero()) result += Elem(Constant(static_cast<long>(i))) * p[i] * du * pw2;
        }
        return result;
    }
    Elem dtheta = tw->d_gen(level);
    Elem pw3(1);
    for (size_t i = 1; i < p.size(); ++i) {
        if (!p[i].is_zero())
            result += Elem(Constant(static_cast<long>(i))) * p[i] * pw3 * dtheta;
        pw3 *= theta;
    }
    return result;
}

Elem Elem::derive() const {
    if (lvl_ == -1) return Elem();
    Elem n = from_poly(tw_, lvl_, num_);
    Elem d = from_poly(tw_, lvl_, den_);
    Elem dn = dpoly(tw_, lvl_, num_);
    Elem dd = dpoly(tw_, lvl_, den_);
    return (dn * d - n * dd) / (d * d);
}

std::string Elem::str() const {
    std::ostringstream os;
    if (lvl_ == -1) {
        os << c_.str();
        return os.str();
    }
    auto poly_str = [&](const Poly<Elem>& p) {
        std::ostringstream ps;
        ps << "[";
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) ps << ", ";
            ps << p[i].str();
        }
        ps << "]";
        return ps.str();
    };
    os << "t" << lvl_ << ":" << poly_str(num_) << "/" << poly_str(den_);
    return os.str();
}

} // namespace polyint
