#include "dioph/poly.hpp"

namespace dioph {

Int content(const Poly<Int>& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

Poly<Int> primitive_part(const Poly<Int>& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    std::vector<Int> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.push_back(c / g);
    return Poly<Int>::from_coeffs(std::move(v));
}

Poly<Rat> to_rat(const Poly<Int>& p) {
    std::vector<Rat> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return Poly<Rat>::from_coeffs(std::move(v));
}

std::optional<Poly<Int>> to_int_checked(const Poly<Rat>& p) {
    std::vector<Int> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        if (!is_integer(c)) return std::nullopt;
        v.push_back(c.get_num());
    }
    return Poly<Int>::from_coeffs(std::move(v));
}

std::optional<Poly<Int>> try_divide(const Poly<Int>& a, const Poly<Int>& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (b.lead() == 1 || b.lead() == -1) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) return std::nullopt;
    return to_int_checked(q);
}

// Primitive gcd with positive leading coefficient: rational gcd of the
// primitive parts, cleared back to a primitive integer polynomial, times
// the gcd of the contents.
Poly<Int> gcd_poly(const Poly<Int>& a, const Poly<Int>& b) {
    if (a.is_zero() && b.is_zero()) fail(errc::zero_input, "gcd(0, 0)");
    if (a.is_zero()) return b.lead() < 0 ? -b : b;
    if (b.is_zero()) return a.lead() < 0 ? -a : a;
    Int cg = gcd(content(a), content(b));
    Poly<Rat> g = gcd_poly(to_rat(primitive_part(a)), to_rat(primitive_part(b)));
    Int den = 1;
    for (const auto& c : g.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> v;
    v.reserve(g.size());
    for (const auto& c : g.coeffs()) {
        Rat s = c * Rat(den);
        v.push_back(s.get_num());
    }
    Poly<Int> gi = primitive_part(Poly<Int>::from_coeffs(std::move(v)));
    if (gi.lead() < 0) gi = -gi;
    return gi * cg;
}

Poly<Int> lcm_poly(const Poly<Int>& a, const Poly<Int>& b) {
    if (a.is_zero() || b.is_zero()) fail(errc::zero_input, "lcm with zero operand");
    Poly<Int> l = *try_divide(a * b, gcd_poly(a, b));
    if (l.lead() < 0) l = -l;
    return l;
}

} // namespace dioph
