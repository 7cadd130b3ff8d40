#ifndef POLYINT_LOGSYM_HPP
#define POLYINT_LOGSYM_HPP

#include "polyint/elem.hpp"
#include "polyint/places.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polyint {

// Constant-linear combination of canonical logarithm symbols plus a field
// element remainder (logs of exponential monomials land in the remainder).
struct LogCombination {
    std::map<int, Constant> coeffs;
    Elem remainder;

    bool is_zero() const { return coeffs.empty() && remainder.is_zero(); }
    LogCombination& operator+=(const LogCombination& o);
    LogCombination& operator-=(const LogCombination& o);
    LogCombination& scale(const Constant& c);
    friend LogCombination operator+(LogCombination a, const LogCombination& b) { a += b; return a; }
    friend LogCombination operator-(LogCombination a, const LogCombination& b) { a -= b; return a; }
    bool operator==(const LogCombination& o) const;
};

struct LogSymbolInfo {
    Elem arg;       // canonical argument (monic atom as element, prime, or algebraic constant)
    int level;      // -1 for constant arguments
    bool decomposed = false;
    LogCombination rewrite; // meaningful when decomposed
};

struct LogLinearRelation {
    std::vector<Rat> coeffs; // rational, not all zero
    Elem remainder;          // sum(c_i * logs_i) = remainder
};

// Maintains the free generating set of the multiplicative group of all
// arguments seen so far, modulo constants and roots of unity (eqs of the
// log normalization: log(xy)=log(x)+log(y), log(-x)=log(x), log(root of
// unity)=0).  Symbols are append-only; an atom discovered to be reducible
// against a newcomer is split and carries a rewrite into its children.
class LogRegistry {
public:
    explicit LogRegistry(AlgCtxPtr alg = nullptr) : alg_(std::move(alg)) {}

    void set_algebraic(AlgCtxPtr alg) { alg_ = std::move(alg); }
    const AlgCtxPtr& algebraic() const { return alg_; }

    // decompose f over the free generating set, extending it as needed
    LogCombination log_of(const Elem& f);

    // rational dependence of the given combinations modulo the field
    std::optional<LogLinearRelation> linear_relation(std::vector<LogCombination> combos) const;

    const LogSymbolInfo& sym(int id) const { return syms_[id]; }
    size_t size() const { return syms_.size(); }
    int find_symbol(const Elem& arg) const;

    // expand decomposed symbols
    LogCombination resolve(LogCombination c) const;

    // D(arg)/arg of a live symbol (zero for constant arguments)
    Elem d_log(int id) const;

    std::string sym_name(int id) const;

private:
    int intern_arg(const Elem& arg, int level);
    // returns ids whose product (each once) equals the monic squarefree s
    std::vector<int> intern_monic(int level, Poly<Elem> s, const Tower* tw);
    void split_atom(int id, const Poly<Elem>& g, const Tower* tw);
    void decompose(const Elem& f, const Constant& mult, LogCombination& out);

    AlgCtxPtr alg_;
    std::vector<LogSymbolInfo> syms_;
    std::map<Elem, int, ElemLess> index_;
    std::map<int, std::vector<int>> live_; // level -> live atom ids
};

} // namespace polyint

#endif
