#include "polyint/tensor2.hpp"

#include <sstream>

namespace polyint {

SymComb& SymComb::operator+=(const SymComb& o) {
    for (const auto& [s, k] : o.c) {
        auto it = c.find(s);
        if (it == c.end()) {
            if (!k.is_zero()) c[s] = k;
        } else {
            it->second += k;
            if (it->second.is_zero()) c.erase(it);
        }
    }
    return *this;
}

SymComb& SymComb::operator-=(const SymComb& o) {
    SymComb neg = o;
    for (auto& [s, k] : neg.c) k = -k;
    return *this += neg;
}

SymComb& SymComb::scale(const Constant& k) {
    if (k.is_zero()) {
        c.clear();
        return *this;
    }
    for (auto& [s, v] : c) v *= k;
    return *this;
}

SymComb SymComb::unit(Sym s) {
    SymComb r;
    r.c[s] = Constant(1);
    return r;
}

void Tensor2::add(const Sym& a, const Sym& b, const Constant& k) {
    if (k.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_[key] = k;
    } else {
        it->second += k;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    for (const auto& [k, v] : o.t_) add(k.first, k.second, v);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    for (const auto& [k, v] : o.t_) add(k.first, k.second, -v);
    return *this;
}

Tensor2 Tensor2::scaled(const Constant& k) const {
    Tensor2 r;
    if (k.is_zero()) return r;
    for (const auto& [key, v] : t_) r.t_[key] = v * k;
    return r;
}

Tensor2 Tensor2::transpose() const {
    Tensor2 r;
    for (const auto& [key, v] : t_) r.t_[{key.second, key.first}] = v;
    return r;
}

Tensor2 Tensor2::symmetric_part() const {
    Tensor2 r = *this;
    r += transpose();
    Constant half(Rat(1, 2));
    return r.scaled(half);
}

Tensor2 Tensor2::antisymmetric_part() const {
    Tensor2 r = *this;
    r -= transpose();
    Constant half(Rat(1, 2));
    return r.scaled(half);
}

Tensor2 Tensor2::outer(const SymComb& a, const SymComb& b) {
    Tensor2 r;
    for (const auto& [sa, ka] : a.c)
        for (const auto& [sb, kb] : b.c) r.add(sa, sb, ka * kb);
    return r;
}

Tensor2 tenseq_residual(const TensEqInput& in) {
    size_t n = in.w.size();
    if (in.k.size() != n || in.l.size() != n || in.ww.size() != n)
        throw domain_error("tenseq: inconsistent dimensions");
    for (size_t i = 0; i < n; ++i)
        if (in.ww[i].size() != n) throw domain_error("tenseq: inconsistent dimensions");

    auto cint = [](const Int& z) { return Constant(Rat(z)); };

    // hypothesis 1: k_i = l_i when either is negative
    for (size_t i = 0; i < n; ++i)
        if ((in.k[i] < 0 || in.l[i] < 0) && in.k[i] != in.l[i])
            throw domain_error("tenseq hypothesis k_i = l_i (k_i < 0 or l_i < 0) violated at i=" +
                               std::to_string(i));
    // hypothesis 2: u = sum_i k_i w_{i,j} for l_j > 0
    for (size_t j = 0; j < n; ++j) {
        if (in.l[j] > 0) {
            SymComb s;
            for (size_t i = 0; i < n; ++i) {
                SymComb w = in.ww[i][j];
                s += w.scale(cint(in.k[i]));
            }
            if (!(s == in.u))
                throw domain_error("tenseq hypothesis u = sum k_i w_{i,j} violated at j=" +
                                   std::to_string(j));
        }
        if (in.k[j] > 0) {
            SymComb s;
            for (size_t i = 0; i < n; ++i) {
                SymComb w = in.ww[i][j];
                s += w.scale(cint(in.l[i]));
            }
            if (!(s == in.v))
                throw domain_error("tenseq hypothesis v = sum l_i w_{i,j} violated at j=" +
                                   std::to_string(j));
        }
        if (in.k[j] < 0) {
            SymComb lhs = in.v, rhs = in.u;
            for (size_t i = 0; i < n; ++i) {
                SymComb wl = in.ww[i][j];
                lhs -= wl.scale(cint(in.l[i]));
                SymComb wr = in.ww[i][j];
                rhs -= wr.scale(cint(in.k[i]));
            }
            if (!(lhs == rhs))
                throw domain_error(
                    "tenseq hypothesis v - sum l_i w_{i,j} = u - sum k_i w_{i,j} violated at j=" +
                    std::to_string(j));
        }
    }

    // (sum k_i w_i + u) (x) (sum l_j w_j + v) - sum k_i l_j M_{i,j} - u (x) v
    SymComb left = in.u, right = in.v;
    for (size_t i = 0; i < n; ++i) {
        SymComb wi = in.w[i];
        left += wi.scale(cint(in.k[i]));
        SymComb wj = in.w[i];
        right += wj.scale(cint(in.l[i]));
    }
    Tensor2 res = Tensor2::outer(left, right);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Constant kl = cint(in.k[i]) * cint(in.l[j]);
            if (kl.is_zero()) continue;
            Tensor2 M = Tensor2::outer(in.w[i], in.w[j]);
            M += Tensor2::outer(in.w[i], in.ww[j][i]);
            M += Tensor2::outer(in.ww[i][j], in.w[j]);
            res -= M.scaled(kl);
        }
    res -= Tensor2::outer(in.u, in.v);
    return res;
}

} // namespace polyint
