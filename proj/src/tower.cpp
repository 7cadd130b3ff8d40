#include "polyint/tower.hpp"
#include "polyint/engine.hpp"
#include "polyint/logsym.hpp"
#include "polyint/logpoly.hpp"
#include "polyint/parser.hpp"

namespace polyint {

std::shared_ptr<Tower> Tower::base(const std::string& var) {
    auto t = std::make_shared<Tower>();
    Monomial m;
    m.kind = MonKind::BaseVar;
    m.name = var;
    t->gens_.push_back(std::move(m));
    return t;
}

Elem Tower::gen_elem(int i) const { return Elem::gen(this, i); }

Elem Tower::d_gen(int i) const {
    const Monomial& m = gens_[i];
    switch (m.kind) {
        case MonKind::BaseVar: return Elem(1);
        case MonKind::Log: return m.arg.derive() / m.arg;
        case MonKind::Exp: return m.arg.derive() * gen_elem(i);
        case MonKind::Primitive: return m.arg;
    }
    throw std::logic_error("bad monomial kind");
}

int Tower::append(Monomial m) {
    gens_.push_back(std::move(m));
    return static_cast<int>(gens_.size()) - 1;
}

} // namespace polyint
