#pragma once

#include <optional>

#include "dioph/numberfield.hpp"
#include "dioph/poly.hpp"

namespace dioph {

// index of the lowest-order nonzero coefficient; p must be nonzero
long low_order(const Poly<NFElem>& p);

// Normalized quotient of polynomials over a number field: the denominator
// is monic and coprime to the numerator. Equality is structural.
class RatFunc {
public:
    RatFunc() : den_(NFElem(1)) {}
    RatFunc(long v) : num_(NFElem(v)), den_(NFElem(1)) {}
    RatFunc(const Int& v) : num_(NFElem(v)), den_(NFElem(1)) {}
    RatFunc(const Rat& v) : num_(NFElem(v)), den_(NFElem(1)) {}
    RatFunc(const NFElem& v) : num_(v), den_(NFElem(1)) {}
    RatFunc(Poly<NFElem> num) : num_(std::move(num)), den_(NFElem(1)) {}
    RatFunc(Poly<NFElem> num, Poly<NFElem> den);

    static RatFunc var() { return RatFunc(Poly<NFElem>::monomial(NFElem(1), 1)); }

    const Poly<NFElem>& num() const { return num_; }
    const Poly<NFElem>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly<NFElem> as_polynomial() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

private:
    Poly<NFElem> num_, den_;
};

RatFunc pow(const RatFunc& b, long e);

// order of vanishing at Z = 0; +infinity (nullopt) for the zero function
std::optional<long> v_Z(const RatFunc& f);

// deg(denominator) - deg(numerator); +infinity (nullopt) for zero
std::optional<long> v_Zinf(const RatFunc& f);

} // namespace dioph
