#include "dioph/qf.hpp"

#include <random>

#include "dioph/arith.hpp"

namespace dioph {

namespace {

// rational roots of a nonzero rational polynomial, by the p/q test
std::vector<Rat> rational_roots(const Poly<Rat>& p) {
    std::vector<Rat> roots;
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> zc;
    for (const auto& c : p.coeffs()) zc.push_back(Rat(c * Rat(den)).get_num());
    Poly<Int> pz = Poly<Int>::from_coeffs(std::move(zc));
    if (!pz.is_zero() && pz.coeff(0) == 0) {
        roots.push_back(Rat(0));
        while (!pz.is_zero() && pz.coeff(0) == 0)
            pz = *try_divide(pz, Poly<Int>::monomial(Int(1), 1));
    }
    if (pz.degree() < 1) return roots;
    std::vector<Int> nums, dens;
    if (!positive_divisors(pz.coeff(0), nums) || !positive_divisors(pz.lead(), dens)) return roots;
    Poly<Rat> prz = to_rat(pz);
    for (const auto& n : nums)
        for (const auto& d : dens) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                Rat cand = make_rat(sgn ? -n : n, d);
                if (prz.eval(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

bool field_has_sqrt_minus_one(const FieldPtr& field) {
    const long d = field ? field->degree() : 1;
    if (d % 2 == 1) return false; // [Q(i):Q] = 2 must divide the degree
    const Poly<Rat>& m = field->min_poly();
    if (d == 2) {
        // x = a + b t with x^2 = -1 forces b^2 (4q - p^2) = 4
        Rat p = m.coeff(1), q = m.coeff(0);
        return is_rational_square(4 * q - p * p);
    }
    if (d == 4) {
        // m reducible over Q(i) iff it splits into conjugate quadratics
        // (t^2 + (a1+a2 i) t + (b1+b2 i)) times its conjugate; b1 is then a
        // rational root of an explicit cubic, and a2^2, b2^2 are squares.
        Rat c3 = m.coeff(3), c2 = m.coeff(2), c1 = m.coeff(1), c0 = m.coeff(0);
        Rat a1 = c3 / 2;
        Poly<Rat> b1v = Poly<Rat>::monomial(Rat(1), 1);
        Poly<Rat> p1 = Poly<Rat>(Rat(c2 - a1 * a1)) - Poly<Rat>(Rat(2)) * b1v;
        Poly<Rat> p3 = Poly<Rat>(c0) - b1v * b1v;
        Poly<Rat> rhs = Poly<Rat>(Rat(c1 / 2)) - Poly<Rat>(a1) * b1v;
        Poly<Rat> cubic = p1 * p3 - rhs * rhs; // leading term 2 b1^3, never zero
        for (const Rat& b1 : rational_roots(cubic)) {
            Rat s1 = c2 - 2 * b1 - a1 * a1; // a2^2
            Rat s3 = c0 - b1 * b1;          // b2^2
            if (!is_rational_square(s1) || !is_rational_square(s3)) continue;
            Rat a2 = sqrt_exact(s1), b2 = sqrt_exact(s3);
            Rat target = c1 / 2 - a1 * b1;
            if (a2 * b2 == target || a2 * b2 == -target) return true;
        }
        return false;
    }
    fail(errc::unsupported, "sqrt(-1) detection implemented for degree <= 4 only");
}

HypothesisHConfig make_hypothesis_config(long p, const NFElem& alpha, const NFElem& pi,
                                         std::vector<std::string> unchecked_claims) {
    if (p < 3 || p % 2 == 0) fail(errc::precondition_failed, "p must be an odd prime");
    for (long q = 3; q * q <= p; q += 2)
        if (p % q == 0) fail(errc::precondition_failed, "p must be an odd prime");
    if (!root_of_unity_order(alpha)) fail(errc::precondition_failed, "alpha is not a root of unity");
    if (pi.is_zero()) fail(errc::precondition_failed, "pi must be nonzero");
    FieldPtr k = alpha.field() ? alpha.field() : pi.field();
    HypothesisHConfig cfg;
    cfg.p = p;
    cfg.alpha = alpha;
    cfg.pi = pi;
    cfg.has_sqrt_minus_one = field_has_sqrt_minus_one(k ? k : NumberField::rationals());
    cfg.unchecked_claims = std::move(unchecked_claims);
    return cfg;
}

DiagonalForm make_form(std::vector<RatFunc> entries) {
    if (entries.empty()) fail(errc::precondition_failed, "diagonal form needs at least one entry");
    for (const auto& e : entries)
        if (e.is_zero()) fail(errc::zero_input, "zero entry in diagonal form");
    return {std::move(entries)};
}

DiagonalForm form_product(const DiagonalForm& a, const DiagonalForm& b) {
    std::vector<RatFunc> out;
    out.reserve(a.entries.size() * b.entries.size());
    for (const auto& x : a.entries)
        for (const auto& y : b.entries) out.push_back(x * y);
    return {std::move(out)};
}

RatFunc evaluate_form(const DiagonalForm& f, const std::vector<RatFunc>& v) {
    if (f.entries.size() != v.size()) fail(errc::dimension_mismatch, "witness dimension mismatch");
    RatFunc acc;
    for (size_t i = 0; i < v.size(); ++i) acc = acc + f.entries[i] * v[i] * v[i];
    return acc;
}

bool verify_isotropy_witness(const DiagonalForm& f, const std::vector<RatFunc>& v) {
    bool nontrivial = false;
    for (const auto& x : v)
        if (!x.is_zero()) nontrivial = true;
    return nontrivial && evaluate_form(f, v).is_zero();
}

GParts build_G(const RatFunc& x) {
    RatFunc z = RatFunc::var();
    RatFunc x3 = x * x * x;
    RatFunc g_n = z + z * z + x3;
    RatFunc g_d = z * z * z + z * z * x3;
    if (g_d.is_zero()) fail(errc::zero_denominator, "X^3 = -Z makes the denominator vanish");
    return {g_n / g_d, g_n, g_d};
}

RatFunc build_F(const RatFunc& g, const RatFunc& gamma3, const RatFunc& gamma5) {
    RatFunc zinv = RatFunc::var().inverse();
    RatFunc one(1);
    RatFunc w = one + zinv;
    return w * w * w * g + gamma3 * pow(zinv, 3) + gamma5 * pow(zinv, 5);
}

CaseReport valuation_case_analysis(const RatFunc& x) {
    GParts parts = build_G(x);
    CaseReport rep;
    rep.vZ_G = *v_Z(parts.g);
    rep.vZinf_G = *v_Zinf(parts.g);

    auto vinf_x = v_Zinf(x); // nullopt = +infinity
    auto vz_x = v_Z(x);
    bool vinf_nonneg = !vinf_x || *vinf_x >= 0;
    if (vinf_nonneg) {
        rep.kase = (!vz_x || *vz_x >= 1) ? valuation_case::vZ_ge1 : valuation_case::vZ_le0;
        rep.consistent = (rep.vZinf_G == 1 && rep.vZ_G == -2);
    } else {
        rep.kase = valuation_case::vZinf_negative;
        rep.consistent = (rep.vZinf_G == 2);
    }
    return rep;
}

std::pair<DiagonalForm, DiagonalForm> assemble_kr_forms(const RatFunc& f,
                                                        const HypothesisHConfig& cfg) {
    if (f.is_zero()) fail(errc::zero_input, "zero entry in diagonal form");
    if (cfg.alpha.is_zero() || cfg.pi.is_zero())
        fail(errc::zero_input, "zero entry in diagonal form");
    RatFunc z = RatFunc::var();
    RatFunc alpha{cfg.alpha};
    RatFunc pi{cfg.pi};
    DiagonalForm right = make_form({RatFunc(1), pi});
    DiagonalForm left1 = make_form({z, alpha * z, RatFunc(-1), -f});
    DiagonalForm left2 = make_form({z, alpha * z, RatFunc(-1), -(alpha * f)});
    return {form_product(left1, right), form_product(left2, right)};
}

std::optional<std::vector<RatFunc>> search_isotropy_witness(const DiagonalForm& f, unsigned seed,
                                                            int degree_cap, long height_cap,
                                                            int attempts) {
    std::mt19937_64 rng(seed);
    const size_t dim = f.entries.size();
    auto random_poly = [&](int max_deg) {
        std::vector<NFElem> c(max_deg + 1);
        for (auto& x : c) {
            long v = static_cast<long>(rng() % (2 * height_cap + 1)) - height_cap;
            x = NFElem(v);
        }
        return Poly<NFElem>::from_coeffs(std::move(c));
    };
    for (int it = 0; it < attempts; ++it) {
        std::vector<RatFunc> v(dim);
        bool nonzero = false;
        for (auto& x : v) {
            int deg = static_cast<int>(rng() % (degree_cap + 1));
            Poly<NFElem> num = random_poly(deg);
            x = RatFunc(num);
            if (!x.is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        if (verify_isotropy_witness(f, v)) return v;
    }
    return std::nullopt;
}

} // namespace dioph
