#ifndef POLYINT_TOWER_HPP
#define POLYINT_TOWER_HPP

#include "polyint/elem.hpp"

#include <memory>
#include <string>
#include <vector>

namespace polyint {

enum class MonKind { BaseVar, Log, Exp, Primitive };

// One tower generator.  For Log/Exp `arg` is the argument (a lower-level
// element); for Primitive `arg` stores the generator's derivative.
struct Monomial {
    MonKind kind = MonKind::BaseVar;
    Elem arg;
    std::string name = "x";
};

// K = C(x)(theta_1, ..., theta_n).  Generator 0 is always the base
// variable with derivative 1; every later generator's argument lives
// strictly below it.  Fixed after construction.
class Tower {
public:
    static std::shared_ptr<Tower> base(const std::string& var = "x");

    int size() const { return static_cast<int>(gens_.size()); }
    const Monomial& gen(int i) const { return gens_[i]; }
    const std::string& var_name() const { return gens_[0].name; }

    Elem gen_elem(int i) const;
    Elem d_gen(int i) const; // D(theta_i)

    // unchecked append; dependency checking lives in build_tower
    int append(Monomial m);

private:
    std::vector<Monomial> gens_;
};

using TowerPtr = std::shared_ptr<Tower>;

// Description of one requested generator, used by build_tower.
struct MonomialSpec {
    MonKind kind = MonKind::BaseVar;
    Elem arg; // parsed in the tower built so far
};

} // namespace polyint

#endif
