#pragma once

#include <vector>

#include "dioph/numberfield.hpp"
#include "dioph/poly.hpp"

namespace dioph {

// X = (X_0 + X_1 a + ... + X_{d-1} a^{d-1}) / y in canonical reduced form:
// y > 0 and coprime to the gcd of all part contents.
struct BasisTuple {
    std::vector<Poly<Int>> parts;
    Int y = 1;
};

BasisTuple decompose_basis(const Poly<NFElem>& x, const FieldPtr& field);
Poly<NFElem> recombine(const BasisTuple& b, const FieldPtr& field);

// Element-wise canonical decomposition of k-tuples over K[Z] into
// (d+1)k-tuples over Z[Z], order preserving; y rides along as a constant
// polynomial.
std::vector<std::vector<Poly<Int>>> transport_set(
    const std::vector<std::vector<Poly<NFElem>>>& s, const FieldPtr& field);

// A concrete subring R of K with fraction field K: the integers of K, all
// of K, or a localization of the integers at an explicit list of rational
// primes. Membership is a predicate on power-basis denominators.
struct RingSpec {
    enum class Kind { integers, whole_field, localization };

    Kind kind = Kind::whole_field;
    std::vector<Int> inverted_primes;

    bool contains(const NFElem& x) const;
    bool generator_in_ring(const FieldPtr& field) const;
};

} // namespace dioph
