#pragma once

#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

// Dyadic rational man * 2^exp.
struct Dyadic {
    Int man;
    long exp = 0;

    Rat value() const {
        if (exp >= 0) return Rat(man * pow2(exp));
        return make_rat(man, pow2(-exp));
    }
};

// smallest dyadic with denominator 2^bits that is >= q (resp. <= q)
Dyadic dyadic_upper(const Rat& q, long bits);
Dyadic dyadic_lower(const Rat& q, long bits);

// rational u with u >= sqrt(s) and u - sqrt(s) <= 2^-bits; s >= 0
Rat sqrt_upper(const Rat& s, long bits);
// rational l with 0 <= l <= sqrt(s)
Rat sqrt_lower(const Rat& s, long bits);

// Complex ball: dyadic center, dyadic radius bounding the distance to the
// true value.
struct ComplexBall {
    Dyadic re, im, rad;

    Rat center_re() const { return re.value(); }
    Rat center_im() const { return im.value(); }
    Rat radius() const { return rad.value(); }
};

// Exact complex rational arithmetic used by the root refinement.
struct QC {
    Rat re, im;

    QC operator+(const QC& o) const { return {re + o.re, im + o.im}; }
    QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
    QC operator*(const QC& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    QC operator/(const QC& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) fail(errc::division_by_zero, "complex division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Rat norm2() const { return re * re + im * im; }
};

// round both components to denominator 2^bits (toward nearest)
QC qc_round(const QC& z, long bits);

} // namespace dioph
