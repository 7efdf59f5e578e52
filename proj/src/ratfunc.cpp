#include "dioph/ratfunc.hpp"

namespace dioph {

long low_order(const Poly<NFElem>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (!(p.coeff(i) == NFElem())) return static_cast<long>(i);
    fail(errc::zero_input, "low order of zero polynomial");
}

RatFunc::RatFunc(Poly<NFElem> num, Poly<NFElem> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::zero_denominator, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly<NFElem>(NFElem(1));
        return;
    }
    Poly<NFElem> g = gcd_poly(num_, den_);
    if (g.degree() > 0) {
        num_ = *try_divide(num_, g);
        den_ = *try_divide(den_, g);
    }
    NFElem lead_inv = den_.lead().inverse();
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
}

Poly<NFElem> RatFunc::as_polynomial() const {
    if (!is_polynomial()) fail(errc::precondition_failed, "rational function is not a polynomial");
    return num_ * den_.coeff(0).inverse();
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of the zero function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc pow(const RatFunc& b, long e) {
    if (e < 0) return pow(b.inverse(), -e);
    RatFunc r(1);
    RatFunc x = b;
    for (unsigned long k = e; k; k >>= 1) {
        if (k & 1) r = r * x;
        if (k > 1) x = x * x;
    }
    return r;
}

std::optional<long> v_Z(const RatFunc& f) {
    if (f.is_zero()) return std::nullopt;
    return low_order(f.num()) - low_order(f.den());
}

std::optional<long> v_Zinf(const RatFunc& f) {
    if (f.is_zero()) return std::nullopt;
    return f.den().degree() - f.num().degree();
}

} // namespace dioph
