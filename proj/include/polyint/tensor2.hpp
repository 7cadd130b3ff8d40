#ifndef POLYINT_TENSOR2_HPP
#define POLYINT_TENSOR2_HPP

#include "polyint/constant.hpp"

#include <map>
#include <string>
#include <vector>

namespace polyint {

// Formal symbol entering rank-2 tensors: a logarithm symbol from the
// registry, a basis vector delta_a indexed by a place, or a coordinate of
// the auxiliary constant vector space X.
struct Sym {
    enum Kind { Log = 0, Delta = 1, VCoord = 2 };
    Kind kind = Log;
    int id = 0;

    friend bool operator<(const Sym& a, const Sym& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.id < b.id;
    }
    friend bool operator==(const Sym& a, const Sym& b) {
        return a.kind == b.kind && a.id == b.id;
    }
};

// constant-linear combination of symbols
struct SymComb {
    std::map<Sym, Constant> c;

    bool is_zero() const { return c.empty(); }
    SymComb& operator+=(const SymComb& o);
    SymComb& operator-=(const SymComb& o);
    SymComb& scale(const Constant& k);
    friend SymComb operator+(SymComb a, const SymComb& b) { a += b; return a; }
    friend SymComb operator-(SymComb a, const SymComb& b) { a -= b; return a; }
    bool operator==(const SymComb& o) const { return c == o.c; }
    static SymComb unit(Sym s);
};

// finite constant-coefficient combination of ordered symbol pairs;
// no zero coefficients stored
class Tensor2 {
public:
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<Sym, Sym>, Constant>& terms() const { return t_; }

    void add(const Sym& a, const Sym& b, const Constant& k);
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { a += b; return a; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { a -= b; return a; }
    Tensor2 scaled(const Constant& k) const;
    bool operator==(const Tensor2& o) const { return t_ == o.t_; }

    Tensor2 transpose() const;
    Tensor2 symmetric_part() const;
    Tensor2 antisymmetric_part() const;
    bool is_symmetric() const { return antisymmetric_part().is_zero(); }

    // bilinear extension of the outer product
    static Tensor2 outer(const SymComb& a, const SymComb& b);

private:
    std::map<std::pair<Sym, Sym>, Constant> t_;
};

// Data for the tensor identity: given u, v, w_i, w_{i,j} in a vector space
// and integer vectors k, l subject to the coupled hypotheses, the residual
//   (sum k_i w_i + u) (x) (sum l_j w_j + v) - sum k_i l_j M_{i,j} - u (x) v
// with M_{i,j} = w_i(x)w_j + w_i(x)w_{j,i} + w_{i,j}(x)w_j is symmetric.
struct TensEqInput {
    SymComb u, v;
    std::vector<SymComb> w;               // w_i
    std::vector<std::vector<SymComb>> ww; // ww[i][j] = w_{i,j}
    std::vector<Int> k, l;
};

// throws domain_error naming the violated hypothesis
Tensor2 tenseq_residual(const TensEqInput& in);

} // namespace polyint

#endif
