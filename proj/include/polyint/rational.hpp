#ifndef POLYINT_RATIONAL_HPP
#define POLYINT_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace polyint {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an operation leaves its mathematical domain (division by
// zero, valuation of 0, log of 0, ...).  Distinct from logic bugs, which
// use plain std::logic_error.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// q = a^n for rationals, n >= 0 checked by the caller when negative bases matter
Rat rat_pow(const Rat& a, long n);

// exact square root when the argument is a square, else nullopt-like flag
bool rat_sqrt(const Rat& a, Rat& out);

std::string rat_str(const Rat& r);

} // namespace polyint

#endif
