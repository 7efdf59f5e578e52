#include "dioph/ball.hpp"

namespace dioph {

namespace {

// floor(num/den) for den > 0
Int floor_div(const Int& num, const Int& den) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

Dyadic dyadic_lower(const Rat& q, long bits) {
    // floor(q * 2^bits) * 2^-bits
    Int scaled = floor_div(q.get_num() * pow2(bits), q.get_den());
    return {scaled, -bits};
}

Dyadic dyadic_upper(const Rat& q, long bits) {
    Dyadic d = dyadic_lower(q, bits);
    if (d.value() < q) d.man += 1;
    return d;
}

Rat sqrt_upper(const Rat& s, long bits) {
    if (s < 0) fail(errc::precondition_failed, "sqrt of negative rational");
    if (s == 0) return Rat(0);
    // sqrt(s) = sqrt(num*den)/den; isqrt rounds down, +1 gives an upper bound
    Int scale = pow2(2 * bits);
    Int t = s.get_num() * s.get_den() * scale;
    Int r = sqrt(t) + 1;
    return make_rat(r, s.get_den() * pow2(bits));
}

Rat sqrt_lower(const Rat& s, long bits) {
    if (s <= 0) return Rat(0);
    Int scale = pow2(2 * bits);
    Int t = s.get_num() * s.get_den() * scale;
    Int r = sqrt(t);
    return make_rat(r, s.get_den() * pow2(bits));
}

QC qc_round(const QC& z, long bits) {
    auto round1 = [&](const Rat& x) {
        Int num2 = x.get_num() * pow2(bits) * 2 + x.get_den(); // rounding to nearest
        Int q = floor_div(num2, x.get_den() * 2);
        return make_rat(q, pow2(bits));
    };
    return {round1(z.re), round1(z.im)};
}

} // namespace dioph
