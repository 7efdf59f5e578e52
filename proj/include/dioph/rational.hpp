#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dioph/error.hpp"

namespace dioph {

// Exact arbitrary-precision integers and rationals. GMP does the heavy
// lifting; everything downstream sees only these two types.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r = 1;
    r <<= e;
    return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline bool is_rational_square(const Rat& q) {
    if (q < 0) return false;
    Int rn = sqrt(Int(q.get_num()));
    Int rd = sqrt(Int(q.get_den()));
    return rn * rn == q.get_num() && rd * rd == q.get_den();
}

// exact square root of a rational that is a perfect square
inline Rat sqrt_exact(const Rat& q) {
    if (!is_rational_square(q)) fail(errc::precondition_failed, "not a rational square");
    return make_rat(sqrt(Int(q.get_num())), sqrt(Int(q.get_den())));
}

// All positive divisors of |n| by trial division; false when a cofactor
// resists the factor sweep.
bool positive_divisors(const Int& n, std::vector<Int>& out);

} // namespace dioph
