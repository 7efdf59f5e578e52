#include "dioph/witness.hpp"

#include "dioph/approx.hpp"
#include "dioph/arith.hpp"
#include "dioph/ratfunc.hpp"

namespace dioph {

namespace {

const char* const clause_g_link = "G = 1 - Z*S";
const char* const clause_deg3 = "deg(G) >= 3";
const char* const clause_pell = "X^2 - (((Z+S)/2)^2 - 1)*Y^2 = 1";
const char* const clause_xsign = "X = 1 (mod Z + S - 2)";
const char* const clause_ynz = "Y != 0";
const char* const clause_power = "X + ((Z-S)/2)*Y = 1 (mod G)";

Poly<NFElem> nf_z() { return Poly<NFElem>::monomial(NFElem(1), 1); }

Poly<NFElem> z_power_minus_one_nf(unsigned long u) {
    std::vector<NFElem> v(u + 1);
    v[0] = NFElem(-1);
    v[u] = NFElem(1);
    return Poly<NFElem>::from_coeffs(std::move(v));
}

// Chebyshev pair evaluated at a polynomial argument, by running the
// recurrence at T directly.
std::pair<Poly<NFElem>, Poly<NFElem>> cheb_at(unsigned long n, const Poly<NFElem>& t) {
    Poly<NFElem> x0{NFElem(1)}, y0;
    Poly<NFElem> x1 = t, y1{NFElem(1)};
    if (n == 0) return {x0, y0};
    Poly<NFElem> two_t = t * NFElem(2);
    for (unsigned long k = 1; k < n; ++k) {
        Poly<NFElem> x2 = two_t * x1 - x0;
        Poly<NFElem> y2 = two_t * y1 - y0;
        x0 = std::move(x1);
        y0 = std::move(y1);
        x1 = std::move(x2);
        y1 = std::move(y2);
    }
    return {x1, y1};
}

Poly<NFElem> half_of(const Poly<NFElem>& p) { return p * NFElem(Rat(1, 2)); }

} // namespace

DivUWitness build_divu_witness(const Poly<NFElem>& g, unsigned long u) {
    if (u == 0) fail(errc::precondition_failed, "exponent must be positive");
    if (g.degree() < 3) fail(errc::precondition_failed, clause_deg3);
    if (!(g.coeff(0) == NFElem(1))) fail(errc::precondition_failed, "G(0) = 1");
    if (!divides(g, z_power_minus_one_nf(u))) fail(errc::precondition_failed, "G | Z^u - 1");

    // G = 1 - Z S  =>  S = (1 - G)/Z
    Poly<NFElem> one{NFElem(1)};
    Poly<NFElem> s = *try_divide(one - g, nf_z());
    Poly<NFElem> t = half_of(nf_z() + s);
    auto [x, y] = cheb_at(u, t);
    DivUWitness w{g, s, x, y, static_cast<long>(u)};
    Verdict v = verify_divu_witness(w);
    if (!v) fail(errc::precondition_failed, "constructed witness failed: " + v.reason);
    return w;
}

Verdict verify_divu_witness(const DivUWitness& w) {
    if (w.g.degree() < 3) return Verdict::reject(clause_deg3);
    Poly<NFElem> one{NFElem(1)};
    if (w.g != one - nf_z() * w.s) return Verdict::reject(clause_g_link);
    Poly<NFElem> t = half_of(nf_z() + w.s);
    if (w.x * w.x - (t * t - one) * (w.y * w.y) != one) return Verdict::reject(clause_pell);
    // Z + S - 2 = 2(T - 1); deg S >= 2, so the modulus is non-constant
    Poly<NFElem> mod_x = nf_z() + w.s - Poly<NFElem>(NFElem(2));
    if (!congruent_mod(w.x, one, mod_x)) return Verdict::reject(clause_xsign);
    if (w.y.is_zero()) return Verdict::reject(clause_ynz);
    Poly<NFElem> combined = w.x + half_of(nf_z() - w.s) * w.y;
    if (!congruent_mod(combined, one, w.g)) return Verdict::reject(clause_power);

    auto match = pell_recognize(t, w.x, w.y);
    if (!match || match->x_sign != 1 || match->n == 0)
        return Verdict::reject("Pell pair is not a positive Chebyshev pair");
    unsigned long u = match->n < 0 ? -static_cast<unsigned long>(match->n) : match->n;
    if (!divides(w.g, z_power_minus_one_nf(u))) return Verdict::reject("G | Z^u - 1");
    return Verdict::accept(u);
}

DivisorCertificate build_divisor_certificate(const Poly<NFElem>& f, unsigned long u) {
    if (f.is_zero()) fail(errc::precondition_failed, "F != 0");
    if (u == 0) fail(errc::precondition_failed, "exponent must be positive");
    if (!divides(f, z_power_minus_one_nf(u))) fail(errc::not_a_divisor, "F does not divide Z^u - 1");

    Poly<NFElem> cube = z_power_minus_one_nf(3);
    Poly<NFElem> l = lcm_poly(cube, f);
    NFElem c0 = l.coeff(0);
    if (c0.is_zero()) fail(errc::precondition_failed, "lcm has zero constant term");
    Poly<NFElem> g = l * c0.inverse();
    DivisorCertificate cert{f, g, build_divu_witness(g, 3 * u), u};
    return cert;
}

Verdict verify_divisor_certificate(const DivisorCertificate& c) {
    if (c.f.is_zero()) return Verdict::reject("F != 0");
    if (!divides(c.f, c.g)) return Verdict::reject("F | G");
    if (!divides(z_power_minus_one_nf(3), c.g)) return Verdict::reject("(Z^3 - 1) | G");
    if (c.inner.g != c.g) return Verdict::reject("inner witness is not about G");
    Verdict inner = verify_divu_witness(c.inner);
    if (!inner) return inner;
    if (c.u == 0 || !divides(c.f, z_power_minus_one_nf(c.u)))
        return Verdict::reject("F | Z^u - 1");
    return Verdict::accept(c.u);
}

DivLargeReport check_div_large(const Poly<NFElem>& f, unsigned long u) {
    for (const auto& coeff : f.coeffs())
        if (!is_algebraic_integer(coeff))
            fail(errc::precondition_failed, "coefficients integral over Z");
    if (!(f.coeff(0) == NFElem(1) || f.coeff(0) == NFElem(-1)))
        fail(errc::precondition_failed, "F(0) = ±1");
    if (f.is_zero() || u == 0 || !divides(f, z_power_minus_one_nf(u)))
        fail(errc::precondition_failed, "F | Z^u - 1");

    Int h = pow2(static_cast<unsigned long>(f.degree())) + 1;
    NFElem value = f.eval(NFElem(h));
    if (value.is_integer()) return {div_large_status::integer_coeffs, value};
    return {div_large_status::not_integer_evaluation, value};
}

CMembershipCertificate certify_C_membership(const Poly<NFElem>& f, unsigned long u) {
    Poly<NFElem> f2m1 = f * f - Poly<NFElem>(NFElem(1));
    if (!f2m1.is_zero() && low_order(f2m1) < 1)
        fail(errc::precondition_failed, "Z | F^2 - 1");
    DivisorCertificate divisor = build_divisor_certificate(f, u);

    Int h = pow2(static_cast<unsigned long>(f.degree())) + 1;
    NFElem value = f.eval(NFElem(h));
    if (!value.is_integer())
        fail(errc::not_integer, "F(2^deg(F)+1) is not an integer; F is not in Z[Z]");
    CMembershipCertificate cert{std::move(divisor), value.as_rat().get_num()};

    auto fz = to_int_checked(f);
    if (!fz || !recognize_C(*fz))
        fail(errc::precondition_failed, "integer evaluation did not yield a member of C");
    return cert;
}

Verdict verify_cmembership(const CMembershipCertificate& c) {
    const Poly<NFElem>& f = c.divisor.f;
    Poly<NFElem> f2m1 = f * f - Poly<NFElem>(NFElem(1));
    if (!f2m1.is_zero() && low_order(f2m1) < 1) return Verdict::reject("Z | F^2 - 1");
    Verdict inner = verify_divisor_certificate(c.divisor);
    if (!inner) return inner;
    if (f.is_zero()) return Verdict::reject("F != 0");
    // F = t (mod Z - 2^deg(F) - 1)
    Int h = pow2(static_cast<unsigned long>(f.degree())) + 1;
    Poly<NFElem> mod = nf_z() - Poly<NFElem>(NFElem(h));
    if (!congruent_mod(f, Poly<NFElem>(NFElem(c.t)), mod))
        return Verdict::reject("F = t (mod Z - 2^deg(F) - 1)");
    auto fz = to_int_checked(f);
    if (!fz || !recognize_C(*fz)) return Verdict::reject("F in C");
    return Verdict::accept(inner.u);
}

ZZWitness build_zz_witness(const Poly<Int>& x) {
    Int c = x.eval(Int(0)) - 1;
    Poly<Int> r = x - Poly<Int>(c);  // R(0) = 1
    unsigned long prec = static_cast<unsigned long>(r.degree()) + 1;
    Poly<Int> d = Poly<Int>::monomial(Int(1), prec) - Poly<Int>(Int(1)); // Z^{deg R + 1} - 1
    Poly<Int> m = approximate_by_C(r, prec).m;
    Poly<Int> q = *try_divide(m - r, d + Poly<Int>(Int(1)));
    ZZWitness w{to_nf(m), to_nf(d), to_nf(q), to_nf(r), to_nf(x), c};
    Verdict v = verify_zz_witness(w);
    if (!v) fail(errc::precondition_failed, "constructed witness failed: " + v.reason);
    return w;
}

Verdict verify_zz_witness(const ZZWitness& w) {
    auto mz = to_int_checked(w.m);
    if (!mz || !recognize_C(*mz)) return Verdict::reject("M in C");
    auto dz = to_int_checked(w.d);
    if (!dz || !recognize_C(*dz)) return Verdict::reject("D in C");
    Poly<Int> z_minus_one = Poly<Int>::from_coeffs({Int(-1), Int(1)});
    if (!divides(z_minus_one, *dz)) return Verdict::reject("(Z - 1) | D");
    Poly<NFElem> one{NFElem(1)};
    if (w.m != w.q * (w.d + one) + w.r) return Verdict::reject("M = Q*(D+1) + R");
    if (!w.r.is_zero() && w.r.degree() >= w.d.degree())
        return Verdict::reject("R = 0 or deg(R) < deg(D)");
    if (w.x != w.r + Poly<NFElem>(NFElem(w.c))) return Verdict::reject("X = R + C");
    // soundness: the clauses force X into Z[Z]
    if (!to_int_checked(w.x)) return Verdict::reject("X in Z[Z] (soundness)");
    return Verdict::accept();
}

DegreeWitness build_degree_witness(const Poly<NFElem>& f, long d) {
    if (f.is_zero()) fail(errc::zero_input, "F != 0");
    if (d != f.degree()) fail(errc::precondition_failed, "d = deg(F)");
    ChebPair cp = chebyshev_pair(d);
    DegreeWitness w{to_nf(cp.x), to_nf(cp.y), d, f};
    Verdict v = verify_degree_witness(w);
    if (!v) fail(errc::precondition_failed, "constructed witness failed: " + v.reason);
    return w;
}

Verdict verify_degree_witness(const DegreeWitness& w) {
    if (w.f.is_zero()) return Verdict::reject("F != 0");
    if (w.d < 0) return Verdict::reject("d >= 0");
    Poly<NFElem> one{NFElem(1)};
    Poly<NFElem> z2m1 = nf_z() * nf_z() - one;
    if (w.x * w.x - z2m1 * (w.y * w.y) != one)
        return Verdict::reject("X^2 - (Z^2 - 1)*Y^2 = 1");
    // Y(1) = d as (Z - 1) | Y - d
    Poly<NFElem> zm1 = nf_z() - one;
    if (!congruent_mod(w.y, Poly<NFElem>(NFElem(w.d)), zm1)) return Verdict::reject("Y(1) = d");
    if (w.f.degree() != w.x.degree()) return Verdict::reject("deg(F) = deg(X)");
    return Verdict::accept();
}

} // namespace dioph
