#ifndef POLYINT_PLACES_HPP
#define POLYINT_PLACES_HPP

#include "polyint/elem.hpp"

#include <map>
#include <string>
#include <vector>

namespace polyint {

// A closed point of the function field in generator `level` over the field
// one level down: a monic irreducible (or pairwise-coprime refined)
// polynomial, or the infinite place.
struct Place {
    int level = 0;
    bool infinite = false;
    Poly<Elem> poly; // monic; empty iff infinite

    int degree() const { return infinite ? 1 : pdeg(poly); }
    int cmp(const Place& o) const;
    bool operator==(const Place& o) const { return cmp(o) == 0; }
    std::string str() const;

    static Place at(int level, Poly<Elem> p) { return Place{level, false, std::move(p)}; }
    static Place infinity(int level) { return Place{level, true, {}}; }
    // the place theta - c for rational c
    static Place linear(const Tower* tw, int level, const Rat& c);
};

struct PlaceLess {
    bool operator()(const Place& a, const Place& b) const { return a.cmp(b) < 0; }
};

using Divisor = std::map<Place, Int, PlaceLess>;

long order_at(const Elem& f, const Place& p);

// all places with nonzero order, including the infinite one
Divisor divisor_of(const Elem& f, int level);
Int divisor_degree(const Divisor& d);

// leading coefficient of the local expansion at a place: an element of the
// residue field, presented as a polynomial of degree < deg(place)
struct LeadingCoeff {
    Place place;
    Poly<Elem> rep;
    Elem as_elem() const; // requires deg(place) == 1 or infinite
};
LeadingCoeff leading_coeff(const Elem& f, const Place& p);

// residue-field arithmetic helpers (coefficients modulo place.poly)
Poly<Elem> residue_mul(const Poly<Elem>& a, const Poly<Elem>& b, const Place& p);
Poly<Elem> residue_inverse(const Poly<Elem>& a, const Place& p);
Poly<Elem> residue_pow(const Poly<Elem>& a, long n, const Place& p);
bool residue_is_root_of_unity(const Poly<Elem>& a, const Place& p, int max_order = 120);

// Hermite normal form of the rows of A: H = U * A with U unimodular,
// pivots positive, entries above pivots reduced into [0, pivot).
struct HnfResult {
    std::vector<std::vector<Int>> H; // nonzero rows only
    std::vector<std::vector<Int>> U; // rows of U matching rows of H
};
HnfResult hnf_rows(std::vector<std::vector<Int>> A);

// pairwise-coprime monic refinement of a family of monic polynomials;
// at level 0 with rational coefficients the atoms are irreducible over Q
std::vector<Poly<Elem>> atom_refine(int level, const std::vector<Poly<Elem>>& polys,
                                    const AlgCtxPtr& alg = nullptr);

// finest available splitting of one monic polynomial: full factorization
// over Q at level 0 (with quadratic splitting over Q(alpha) when present),
// squarefree decomposition above
std::vector<std::pair<Poly<Elem>, int>> presplit_monic(int level, const Poly<Elem>& monic,
                                                       const AlgCtxPtr& alg = nullptr);

struct IndependentBasis {
    std::vector<Elem> psi;                    // independent generators
    std::vector<std::vector<Int>> exponents;  // f_i = consts[i] * prod psi_j^exponents[i][j]
    std::vector<Elem> consts;                 // coefficient-field constants of the lattice
    std::vector<Place> atoms;                 // divisor columns (infinite last)
    std::vector<std::vector<Int>> psi_divisors;
};

// free basis of the multiplicative group generated by fs modulo the
// coefficient field, computed from the Hermite normal form of the stacked
// divisor matrix
IndependentBasis independent_basis(const std::vector<Elem>& fs, int level,
                                   const AlgCtxPtr& alg = nullptr);

} // namespace polyint

#endif
