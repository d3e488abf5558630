#ifndef RM_RATIONAL_HPP
#define RM_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "errors.hpp"

namespace rm {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw MathError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }
inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

// "p" or "p/q", canonicalized.
inline std::string rat_to_string(const Rat& a) { return a.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw MathError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

} // namespace rm

#endif
