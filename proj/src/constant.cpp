#include "polyint/constant.hpp"

#include <sstream>

namespace polyint {

Rat rat_pow(const Rat& a, long n) {
    if (n < 0) {
        if (a == 0) throw domain_error("0^negative");
        return 1 / rat_pow(a, -n);
    }
    Rat r(1), base = a;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

bool rat_sqrt(const Rat& a, Rat& out) {
    if (a < 0) return false;
    if (a == 0) { out = 0; return true; }
    mpz_class num = a.get_num(), den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

bool same_context(const AlgCtxPtr& a, const AlgCtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minpoly == b->minpoly;
}

namespace {

void vtrim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// reduce modulo the monic minpoly
void vmod(std::vector<Rat>& v, const std::vector<Rat>& m) {
    size_t d = m.size() - 1;
    while (v.size() > d) {
        Rat c = v.back();
        size_t k = v.size() - 1 - d;
        if (c != 0)
            for (size_t i = 0; i < d; ++i) v[k + i] -= c * m[i];
        v.pop_back();
    }
    vtrim(v);
}

std::vector<Rat> vmul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    vtrim(r);
    return r;
}

// extended gcd over Q[z] for the inverse modulo minpoly
std::vector<Rat> vinv_mod(const std::vector<Rat>& a, const std::vector<Rat>& m) {
    // invariant: r0 = s0*a (mod m)
    std::vector<Rat> r0 = a, r1 = m;
    std::vector<Rat> s0{Rat(1)}, s1;
    auto divmod = [](const std::vector<Rat>& x, const std::vector<Rat>& y,
                     std::vector<Rat>& q, std::vector<Rat>& r) {
        q.clear();
        r = x;
        if (x.size() < y.size()) return;
        q.assign(x.size() - y.size() + 1, Rat(0));
        while (r.size() >= y.size()) {
            Rat c = r.back() / y.back();
            size_t k = r.size() - y.size();
            q[k] = c;
            for (size_t i = 0; i < y.size(); ++i) r[i + k] -= c * y[i];
            vtrim(r);
            if (r.empty()) break;
        }
        vtrim(q);
    };
    while (!r1.empty()) {
        std::vector<Rat> q, r;
        divmod(r0, r1, q, r);
        std::vector<Rat> s2 = s0;
        {
            std::vector<Rat> qs = vmul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            vtrim(s2);
        }
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw domain_error("constant not invertible modulo minimal polynomial");
    Rat inv = 1 / r0[0];
    for (auto& c : s0) c *= inv;
    vtrim(s0);
    vmod(s0, m);
    return s0;
}

} // namespace

Constant Constant::algebraic(AlgCtxPtr ctx, std::vector<Rat> coords) {
    Constant c;
    c.ctx_ = std::move(ctx);
    c.co_ = std::move(coords);
    if (c.ctx_) vmod(c.co_, c.ctx_->minpoly);
    c.trim();
    return c;
}

void Constant::trim() {
    vtrim(co_);
    if (co_.size() <= 1) ctx_.reset();
}

void Constant::promote(const AlgCtxPtr& ctx) {
    if (!ctx_) { ctx_ = ctx; return; }
    if (!same_context(ctx_, ctx))
        throw domain_error("mixing distinct algebraic extensions");
}

Rat Constant::rat() const {
    if (!is_rational()) throw domain_error("constant is not rational");
    return co_.empty() ? Rat(0) : co_[0];
}

Constant Constant::operator-() const {
    Constant r = *this;
    for (auto& c : r.co_) c = -c;
    return r;
}

Constant& Constant::operator+=(const Constant& o) {
    if (o.ctx_) promote(o.ctx_);
    if (co_.size() < o.co_.size()) co_.resize(o.co_.size(), Rat(0));
    for (size_t i = 0; i < o.co_.size(); ++i) co_[i] += o.co_[i];
    trim();
    return *this;
}

Constant& Constant::operator-=(const Constant& o) { return *this += -o; }

Constant& Constant::operator*=(const Constant& o) {
    if (o.ctx_) promote(o.ctx_);
    co_ = vmul(co_, o.co_);
    if (ctx_) vmod(co_, ctx_->minpoly);
    trim();
    return *this;
}

Constant& Constant::operator/=(const Constant& o) { return *this *= o.inverse(); }

Constant Constant::inverse() const {
    if (is_zero()) throw domain_error("division by zero constant");
    if (is_rational()) return Constant(Rat(1) / co_[0]);
    Constant r;
    r.ctx_ = ctx_;
    r.co_ = vinv_mod(co_, ctx_->minpoly);
    r.trim();
    return r;
}

Constant Constant::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Constant r(1), base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

bool Constant::operator==(const Constant& o) const {
    if (co_.size() != o.co_.size()) return false;
    if (co_.size() > 1 && !same_context(ctx_, o.ctx_)) return false;
    return co_ == o.co_;
}

int Constant::cmp(const Constant& o) const {
    if (co_.size() != o.co_.size()) return co_.size() < o.co_.size() ? -1 : 1;
    for (size_t i = 0; i < co_.size(); ++i) {
        if (co_[i] < o.co_[i]) return -1;
        if (co_[i] > o.co_[i]) return 1;
    }
    return 0;
}

bool Constant::is_root_of_unity(int max_order) const {
    if (is_zero()) return false;
    if (is_rational()) return co_[0] == 1 || co_[0] == -1;
    Constant p = *this;
    for (int n = 1; n <= max_order; ++n) {
        if (p.is_one()) return true;
        p *= *this;
    }
    return false;
}

std::optional<Constant> Constant::sqrt_in_field() const {
    if (is_zero()) return Constant(0);
    if (is_rational()) {
        Rat r;
        if (rat_sqrt(co_[0], r)) return Constant(r);
        return std::nullopt;
    }
    return std::nullopt; // algebraic square roots are handled by the caller
}

std::string Constant::str() const {
    if (is_rational()) return rat_str(rat());
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < co_.size(); ++i) {
        if (co_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) { os << co_[i]; continue; }
        if (co_[i] != 1) os << co_[i] << "*";
        os << ctx_->name;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace polyint
