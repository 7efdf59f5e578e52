#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/rational.hpp"

namespace dioph {

// Dense univariate polynomial in Z. Coefficients are stored constant term
// first with no trailing zeros; the zero polynomial is the empty vector.
// T is one of Int, Rat, or NFElem.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(T constant) {
        if (!(constant == T())) c_.push_back(std::move(constant));
    }

    static Poly from_coeffs(std::vector<T> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    // c * Z^k
    static Poly monomial(T c, size_t k) {
        if (c == T()) return {};
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return from_coeffs(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    size_t size() const { return c_.size(); }

    T coeff(size_t i) const { return i < c_.size() ? c_[i] : T(); }
    const T& lead() const { return c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
        return from_coeffs(std::move(v));
    }

    Poly operator-(const Poly& o) const {
        std::vector<T> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
        return from_coeffs(std::move(v));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<T> v(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return from_coeffs(std::move(v));
    }

    Poly operator*(const T& s) const {
        std::vector<T> v(c_);
        for (auto& x : v) x = x * s;
        return from_coeffs(std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // P * Z^k
    Poly shift_up(size_t k) const {
        if (is_zero()) return {};
        std::vector<T> v(c_.size() + k);
        std::copy(c_.begin(), c_.end(), v.begin() + k);
        return from_coeffs(std::move(v));
    }

    // P mod Z^d
    Poly truncate(size_t d) const {
        std::vector<T> v(c_.begin(), c_.begin() + std::min(c_.size(), d));
        return from_coeffs(std::move(v));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<long>(i));
        return from_coeffs(std::move(v));
    }

    // Horner evaluation in any domain X constructible from T.
    template <class X>
    X eval(const X& x) const {
        X acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
        return acc;
    }

    T eval(const T& x) const {
        T acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T()) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& p) {
    return p * s;
}

template <class T>
Poly<T> pow(const Poly<T>& p, unsigned long e) {
    Poly<T> r(T(1));
    Poly<T> b = p;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

namespace detail {
template <class T>
struct is_exact_integer_domain : std::false_type {};
template <>
struct is_exact_integer_domain<Int> : std::true_type {};
} // namespace detail

// Euclidean division A = Q*B + R with R = 0 or deg R < deg B. Over the
// integer domain the leading coefficient of B must be a unit.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if constexpr (detail::is_exact_integer_domain<T>::value) {
        if (!(b.lead() == T(1) || b.lead() == T(-1)))
            fail(errc::non_unit_leading, "integer polynomial division needs unit leading coefficient");
    }
    std::vector<T> rem(a.coeffs());
    const long db = b.degree();
    std::vector<T> quot;
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, T());
    for (long i = a.degree(); i >= db; --i) {
        T c = rem[i];
        if (c == T()) continue;
        T q;
        if constexpr (detail::is_exact_integer_domain<T>::value)
            q = b.lead() == T(1) ? c : -c;
        else
            q = c / b.lead();
        quot[i - db] = q;
        for (long j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b.coeff(j);
    }
    return {Poly<T>::from_coeffs(std::move(quot)), Poly<T>::from_coeffs(std::move(rem))};
}

// Quotient when B divides A exactly; nullopt otherwise. Works in every
// domain by lifting an obstructed integer division to the rationals.
std::optional<Poly<Int>> try_divide(const Poly<Int>& a, const Poly<Int>& b);

template <class T>
std::optional<Poly<T>> try_divide(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

template <class T>
bool divides(const Poly<T>& b, const Poly<T>& a) {
    if (a.is_zero()) return true;
    return try_divide(a, b).has_value();
}

// true iff C | A - B exactly in the coefficient domain.
template <class T>
bool congruent_mod(const Poly<T>& a, const Poly<T>& b, const Poly<T>& c) {
    if (c.is_zero()) fail(errc::division_by_zero, "congruence modulo zero");
    return divides(c, a - b);
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
    static_assert(!detail::is_exact_integer_domain<T>::value);
    if (p.is_zero()) return p;
    return p * (T(1) / p.lead());
}

// Monic gcd by the Euclidean algorithm (field coefficients).
template <class T>
Poly<T> gcd_poly(const Poly<T>& a, const Poly<T>& b) {
    static_assert(!detail::is_exact_integer_domain<T>::value);
    Poly<T> x = a, y = b;
    if (x.is_zero() && y.is_zero()) fail(errc::zero_input, "gcd(0, 0)");
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

template <class T>
Poly<T> lcm_poly(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) fail(errc::zero_input, "lcm with zero operand");
    return monic(*try_divide(a * b, gcd_poly(a, b)));
}

template <class T>
bool is_squarefree(const Poly<T>& p) {
    static_assert(!detail::is_exact_integer_domain<T>::value);
    if (p.is_zero()) fail(errc::zero_input, "squarefree test on zero");
    return gcd_poly(p, p.derivative()).degree() == 0;
}

// --- Int-domain specifics -------------------------------------------------

Int content(const Poly<Int>& p);
Poly<Int> primitive_part(const Poly<Int>& p);
Poly<Int> gcd_poly(const Poly<Int>& a, const Poly<Int>& b);
Poly<Int> lcm_poly(const Poly<Int>& a, const Poly<Int>& b);

// --- conversions ------------------------------------------------------------

Poly<Rat> to_rat(const Poly<Int>& p);
std::optional<Poly<Int>> to_int_checked(const Poly<Rat>& p);

} // namespace dioph
