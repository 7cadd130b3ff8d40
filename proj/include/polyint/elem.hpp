#ifndef POLYINT_ELEM_HPP
#define POLYINT_ELEM_HPP

#include "polyint/constant.hpp"
#include "polyint/poly.hpp"

#include <string>
#include <vector>

namespace polyint {

class Tower;

// Element of a differential field tower C(x)(theta_1)...(theta_n), stored
// recursively: a reduced fraction of polynomials in its top generator with
// coefficients one level down.  Canonical form: numerator and denominator
// coprime, denominator monic in the top generator, level minimal.  Values
// are immutable; all operations are pure.
class Elem {
public:
    Elem() : lvl_(-1) {}
    Elem(long n) : lvl_(-1), c_(n) {}
    explicit Elem(Constant c) : lvl_(-1), c_(std::move(c)) {}

    // builds the canonical fraction num/den in generator `level`
    static Elem fraction(const Tower* tw, int level, Poly<Elem> num, Poly<Elem> den);
    static Elem from_poly(const Tower* tw, int level, Poly<Elem> num);
    static Elem gen(const Tower* tw, int level); // theta_level itself

    int level() const { return lvl_; }
    const Tower* tower() const { return tw_; }
    bool is_zero() const { return lvl_ == -1 && c_.is_zero(); }
    bool is_one() const { return lvl_ == -1 && c_.is_one(); }
    bool is_constant_value() const { return lvl_ == -1; }
    const Constant& constant() const;
    const Poly<Elem>& num() const { return num_; }
    const Poly<Elem>& den() const { return den_; }

    // view as a fraction in generator `level` >= level()
    void as_fraction(int level, Poly<Elem>& num, Poly<Elem>& den) const;

    Elem operator-() const;
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem& operator*=(const Elem& o);
    Elem& operator/=(const Elem& o);
    friend Elem operator+(Elem a, const Elem& b) { a += b; return a; }
    friend Elem operator-(Elem a, const Elem& b) { a -= b; return a; }
    friend Elem operator*(Elem a, const Elem& b) { a *= b; return a; }
    friend Elem operator/(Elem a, const Elem& b) { a /= b; return a; }

    Elem inverse() const;
    Elem pow(long n) const;

    bool operator==(const Elem& o) const { return cmp(o) == 0; }
    bool operator!=(const Elem& o) const { return cmp(o) != 0; }
    int cmp(const Elem& o) const;

    // derivation of the tower; exact
    Elem derive() const;
    bool is_constant() const { return derive().is_zero(); }

    // true when no generator with index >= lvl occurs
    bool level_below(int lvl) const { return lvl_ < lvl; }

    std::string str() const; // rendering lives in render.cpp

private:
    const Tower* tw_ = nullptr;
    int lvl_ = -1;
    Constant c_;
    Poly<Elem> num_, den_;
};

struct ElemLess {
    bool operator()(const Elem& a, const Elem& b) const { return a.cmp(b) < 0; }
};

// canonical form is maintained eagerly; normalize is the identity on values
// already built through the public interface and re-canonicalizes raw data
inline Elem normalize(const Elem& e) { return e; }

// derivative of a polynomial in generator `level` of the tower
Elem dpoly(const Tower* tw, int level, const Poly<Elem>& p);

const Tower* common_tower(const Elem& a, const Elem& b);

} // namespace polyint

#endif
