#include "dioph/encode.hpp"

#include "dioph/arith.hpp"

namespace dioph {

BasisTuple decompose_basis(const Poly<NFElem>& x, const FieldPtr& field) {
    if (!field) fail(errc::precondition_failed, "decomposition needs an ambient field");
    const long d = field->degree();
    Int y = 1;
    std::vector<NFElem> coeffs;
    for (const auto& c : x.coeffs()) {
        NFElem p = c.promoted(field);
        for (const auto& coord : p.coords()) y = lcm(y, coord.get_den());
        coeffs.push_back(std::move(p));
    }
    BasisTuple b;
    b.y = y;
    b.parts.resize(d);
    for (long i = 0; i < d; ++i) {
        std::vector<Int> v(coeffs.size());
        for (size_t j = 0; j < coeffs.size(); ++j) {
            Rat scaled = coeffs[j].coords()[i] * Rat(y);
            v[j] = scaled.get_num();
        }
        b.parts[i] = Poly<Int>::from_coeffs(std::move(v));
    }
    return b;
}

Poly<NFElem> recombine(const BasisTuple& b, const FieldPtr& field) {
    if (b.y == 0) fail(errc::zero_denominator, "basis tuple with y = 0");
    if (!field) fail(errc::precondition_failed, "recombination needs an ambient field");
    if (static_cast<long>(b.parts.size()) != field->degree())
        fail(errc::dimension_mismatch, "basis tuple does not match field degree");
    Poly<NFElem> acc;
    NFElem apow(1);
    for (size_t i = 0; i < b.parts.size(); ++i) {
        acc += to_nf(b.parts[i], field) * apow;
        if (i + 1 < b.parts.size()) apow = apow * NFElem::generator(field);
    }
    return acc * NFElem(make_rat(1, b.y));
}

std::vector<std::vector<Poly<Int>>> transport_set(
    const std::vector<std::vector<Poly<NFElem>>>& s, const FieldPtr& field) {
    std::vector<std::vector<Poly<Int>>> out;
    out.reserve(s.size());
    for (const auto& tuple : s) {
        std::vector<Poly<Int>> flat;
        for (const auto& x : tuple) {
            BasisTuple b = decompose_basis(x, field);
            for (auto& part : b.parts) flat.push_back(std::move(part));
            flat.push_back(Poly<Int>(b.y));
        }
        out.push_back(std::move(flat));
    }
    return out;
}

bool RingSpec::contains(const NFElem& x) const {
    switch (kind) {
        case Kind::whole_field:
            return true;
        case Kind::integers:
            return is_algebraic_integer(x);
        case Kind::localization: {
            Int den = 1;
            for (const auto& c : x.coords()) den = lcm(den, c.get_den());
            for (const auto& p : inverted_primes)
                while (den % p == 0) den /= p;
            if (den == 1) return true;
            // remaining denominator must clear against an S-unit; in the
            // power basis of a monic integral generator it cannot
            return false;
        }
    }
    return false;
}

bool RingSpec::generator_in_ring(const FieldPtr& field) const {
    if (!field || field->is_rationals()) return true; // generator is a rational integer
    return contains(NFElem::generator(field));
}

} // namespace dioph
