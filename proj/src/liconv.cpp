#include "polyint/liconv.hpp"

#include <sstream>

namespace polyint {

FormalLayer::FormalLayer(int maxm) : maxm_(maxm) {
    tower_ = Tower::base("z");
    zvar_ = tower_->gen_elem(0);
    one_minus_z_ = Elem(1) - zvar_;
}

FormalLayer::Expr FormalLayer::from_elem(const Elem& c) const {
    Expr e;
    if (!c.is_zero()) e.t[Mono(maxm_ + 1, 0)] = c;
    return e;
}

FormalLayer::Expr FormalLayer::I(int m) const {
    if (m < 2 || m > maxm_) throw domain_error("I index out of range");
    Expr e;
    Mono mono(maxm_ + 1, 0);
    mono[m - 2] = 1;
    e.t[mono] = Elem(1);
    return e;
}

FormalLayer::Expr FormalLayer::logz() const {
    Expr e;
    Mono mono(maxm_ + 1, 0);
    mono[maxm_ - 1] = 1;
    e.t[mono] = Elem(1);
    return e;
}

FormalLayer::Expr FormalLayer::log1mz() const {
    Expr e;
    Mono mono(maxm_ + 1, 0);
    mono[maxm_] = 1;
    e.t[mono] = Elem(1);
    return e;
}

FormalLayer::Expr FormalLayer::add(const Expr& a, const Expr& b) const {
    Expr r = a;
    for (const auto& [m, c] : b.t) {
        auto it = r.t.find(m);
        if (it == r.t.end()) {
            r.t[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.t.erase(it);
        }
    }
    return r;
}

FormalLayer::Expr FormalLayer::sub(const Expr& a, const Expr& b) const {
    Expr nb;
    for (const auto& [m, c] : b.t) nb.t[m] = -c;
    return add(a, nb);
}

FormalLayer::Expr FormalLayer::mul(const Expr& a, const Expr& b) const {
    Expr r;
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            Mono m = ma;
            for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            Elem c = ca * cb;
            auto it = r.t.find(m);
            if (it == r.t.end()) {
                if (!c.is_zero()) r.t[m] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.t.erase(it);
            }
        }
    return r;
}

FormalLayer::Expr FormalLayer::scale(const Expr& a, const Rat& c) const {
    Expr r;
    if (c == 0) return r;
    for (const auto& [m, v] : a.t) r.t[m] = v * Elem(Constant(c));
    return r;
}

FormalLayer::Expr FormalLayer::pow(const Expr& a, int n) const {
    Expr r = from_elem(Elem(1));
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

FormalLayer::Expr FormalLayer::li(int m) const {
    if (m < 1) throw domain_error("Li index must be positive");
    if (m == 1) {
        // Li_1(z) = -log(1-z)
        return scale(log1mz(), Rat(-1));
    }
    auto it = li_cache_.find(m);
    if (it != li_cache_.end()) return it->second;
    // (-1)^(m-1)/(m-1)! I_m - sum_{k=1}^{m-1} (-1)^k/k! Li_{m-k} log(z)^k
    Rat fact(1);
    for (int i = 2; i <= m - 1; ++i) fact *= i;
    Rat lead = Rat((m % 2 == 0) ? -1 : 1) / fact;
    Expr r = scale(I(m), lead);
    Rat kfact(1);
    for (int k = 1; k <= m - 1; ++k) {
        kfact *= k;
        Rat c = Rat((k % 2 == 0) ? 1 : -1) / kfact;
        r = sub(r, scale(mul(li(m - k), pow(logz(), k)), c));
    }
    li_cache_[m] = r;
    return r;
}

FormalLayer::Expr FormalLayer::zdz(const Expr& e) const {
    Expr out;
    Elem z = zvar_;
    for (const auto& [mono, coeff] : e.t) {
        // coefficient part: z * c'(z) * mono
        {
            Elem dc = z * coeff.derive();
            if (!dc.is_zero()) {
                Expr t;
                t.t[mono] = dc;
                out = add(out, t);
            }
        }
        // symbol parts
        for (size_t s = 0; s < mono.size(); ++s) {
            if (mono[s] == 0) continue;
            Mono lower = mono;
            --lower[s];
            Elem factor;
            Mono extra(maxm_ + 1, 0);
            if (static_cast<int>(s) <= maxm_ - 2) {
                // I_{s+2}: z d/dz I_m = z log(z)^{m-1} / (1-z)
                factor = z / one_minus_z_;
                extra[maxm_ - 1] = (static_cast<int>(s) + 2) - 1;
            } else if (static_cast<int>(s) == maxm_ - 1) {
                factor = Elem(1); // z d/dz log z = 1
            } else {
                factor = -z / one_minus_z_; // z d/dz log(1-z)
            }
            Expr t;
            Mono m2 = lower;
            for (size_t i = 0; i < m2.size(); ++i) m2[i] += extra[i];
            t.t[m2] = factor * coeff * Elem(Constant(static_cast<long>(mono[s])));
            out = add(out, t);
        }
    }
    return out;
}

std::string FormalLayer::str(const Expr& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.t) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t s = 0; s < m.size(); ++s) {
            if (m[s] == 0) continue;
            os << "*";
            if (static_cast<int>(s) <= maxm_ - 2) os << "I" << (s + 2);
            else if (static_cast<int>(s) == maxm_ - 1) os << "log(z)";
            else os << "log(1-z)";
            if (m[s] > 1) os << "^" << m[s];
        }
    }
    return os.str();
}

std::string li_I_convert(int m, LiConvDirection dir) {
    if (m < 1) throw domain_error("index must be positive");
    std::ostringstream os;
    if (m == 1) {
        if (dir == LiConvDirection::LiToI) return "Li1(z) = -log(1-z) = I1(z)";
        return "I1(z) = -log(1-z) = Li1(z)";
    }
    if (dir == LiConvDirection::LiToI) {
        os << "Li" << m << "(z) = ";
        Rat fact(1);
        for (int i = 2; i <= m - 1; ++i) fact *= i;
        Rat lead = Rat((m % 2 == 0) ? -1 : 1) / fact;
        os << "(" << lead << ")*I" << m;
        Rat kfact(1);
        for (int k = 1; k <= m - 1; ++k) {
            kfact *= k;
            Rat c = -(Rat((k % 2 == 0) ? 1 : -1) / kfact);
            os << " + (" << c << ")*Li" << (m - k) << "(z)*log(z)^" << k;
        }
        return os.str();
    }
    os << "I" << m << "(z) = ";
    Rat fact(1);
    for (int i = 2; i <= m - 1; ++i) fact *= i;
    Rat lead = Rat((m % 2 == 0) ? -1 : 1) * fact;
    os << "(" << lead << ")*( Li" << m << "(z)";
    Rat kfact(1);
    for (int k = 1; k <= m - 1; ++k) {
        kfact *= k;
        Rat c = Rat((k % 2 == 0) ? 1 : -1) / kfact;
        os << " + (" << c << ")*Li" << (m - k) << "(z)*log(z)^" << k;
    }
    os << " )";
    return os.str();
}

} // namespace polyint
