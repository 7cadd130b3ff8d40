#ifndef POLYINT_CONSTANT_HPP
#define POLYINT_CONSTANT_HPP

#include "polyint/rational.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace polyint {

// Describes a simple algebraic extension Q(alpha).  The minimal polynomial
// is monic and irreducible over Q; the generator is written by name in
// diagnostics and JSON output.
struct AlgebraicContext {
    std::string name;            // e.g. "@a"
    std::vector<Rat> minpoly;    // coefficient i of z^i, monic, degree >= 2

    int degree() const { return static_cast<int>(minpoly.size()) - 1; }
};

using AlgCtxPtr = std::shared_ptr<const AlgebraicContext>;

bool same_context(const AlgCtxPtr& a, const AlgCtxPtr& b);

// Element of the constant field: a rational number, or an element of
// Q(alpha) stored as a coordinate vector modulo the minimal polynomial.
// All arithmetic is exact and equality is decidable.
class Constant {
public:
    Constant() : co_(0) {}
    Constant(long n) : co_(0) { if (n != 0) { co_.assign(1, Rat(n)); } }
    explicit Constant(const Rat& r) : co_(0) { if (r != 0) co_.assign(1, r); }
    static Constant algebraic(AlgCtxPtr ctx, std::vector<Rat> coords);

    bool is_zero() const { return co_.empty(); }
    bool is_one() const { return co_.size() == 1 && co_[0] == 1; }
    bool is_rational() const { return co_.size() <= 1; }
    const AlgCtxPtr& context() const { return ctx_; }
    const std::vector<Rat>& coords() const { return co_; }

    // requires is_rational()
    Rat rat() const;

    Constant operator-() const;
    Constant& operator+=(const Constant& o);
    Constant& operator-=(const Constant& o);
    Constant& operator*=(const Constant& o);
    Constant& operator/=(const Constant& o);

    friend Constant operator+(Constant a, const Constant& b) { a += b; return a; }
    friend Constant operator-(Constant a, const Constant& b) { a -= b; return a; }
    friend Constant operator*(Constant a, const Constant& b) { a *= b; return a; }
    friend Constant operator/(Constant a, const Constant& b) { a /= b; return a; }

    Constant inverse() const;
    Constant pow(long n) const;

    bool operator==(const Constant& o) const;
    bool operator!=(const Constant& o) const { return !(*this == o); }

    // total order used for canonical map keys; no arithmetic meaning
    int cmp(const Constant& o) const;

    // true when this^n == 1 for some 1 <= n <= max_order
    bool is_root_of_unity(int max_order = 120) const;

    // square root inside the current field (rational or the same Q(alpha));
    // succeeds only when the root is exactly representable
    std::optional<Constant> sqrt_in_field() const;

    std::string str() const;

private:
    void trim();
    void promote(const AlgCtxPtr& ctx);

    AlgCtxPtr ctx_;          // null = plain rational
    std::vector<Rat> co_;    // coordinates in powers of alpha; empty = 0
};

} // namespace polyint

#endif
