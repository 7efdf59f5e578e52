#include "dioph/special.hpp"

#include <map>
#include <mutex>

#include "dioph/ratfunc.hpp"

namespace dioph {

ChebPair chebyshev_pair(long n) {
    const unsigned long a = n < 0 ? -static_cast<unsigned long>(n) : n;
    Poly<Int> x0(Int(1)), y0;                       // (X_0, Y_0) = (1, 0)
    Poly<Int> x1 = Poly<Int>::monomial(Int(1), 1);  // (X_1, Y_1) = (Z, 1)
    Poly<Int> y1{Int(1)};
    if (a == 0) return {n, x0, y0};
    Poly<Int> two_z = Poly<Int>::monomial(Int(2), 1);
    for (unsigned long k = 1; k < a; ++k) {
        Poly<Int> x2 = two_z * x1 - x0;
        Poly<Int> y2 = two_z * y1 - y0;
        x0 = std::move(x1);
        y0 = std::move(y1);
        x1 = std::move(x2);
        y1 = std::move(y2);
    }
    if (n < 0) y1 = -y1;
    return {n, x1, y1};
}

std::optional<PellMatch> pell_recognize(const Poly<NFElem>& t, const Poly<NFElem>& x,
                                        const Poly<NFElem>& y) {
    if (t.degree() < 1) fail(errc::constant_modulus, "Pell recognition needs non-constant T");
    Poly<NFElem> one{NFElem(1)};
    if (x * x - (t * t - one) * (y * y) != one) return std::nullopt;
    if (y.is_zero()) {
        if (x == one) return PellMatch{0, 1};
        if (x == -one) return PellMatch{0, -1};
        return std::nullopt;
    }
    if (x.degree() % t.degree() != 0) return std::nullopt;
    const long n0 = x.degree() / t.degree();
    ChebPair cp = chebyshev_pair(n0);
    Poly<NFElem> xn = to_nf(cp.x).eval(t);
    Poly<NFElem> yn = to_nf(cp.y).eval(t);
    int x_sign;
    if (x == xn)
        x_sign = 1;
    else if (x == -xn)
        x_sign = -1;
    else
        return std::nullopt;
    if (y == yn) return PellMatch{n0, x_sign};
    if (y == -yn) return PellMatch{-n0, x_sign};
    return std::nullopt;
}

bool verify_cheb_power(long n) {
    RatFunc z = RatFunc::var();
    RatFunc zinv = z.inverse();
    RatFunc half(Rat(1, 2));
    RatFunc t = (z + zinv) * half;
    RatFunc w = (z - zinv) * half;
    ChebPair cp = chebyshev_pair(n);
    RatFunc lhs = pow(z, n);
    RatFunc rhs = cp.x.eval(t) + w * cp.y.eval(t);
    return lhs == rhs;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> f;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int moebius(unsigned long n) {
    if (n == 0) fail(errc::precondition_failed, "moebius(0)");
    int k = 0;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        ++k;
    }
    return k % 2 == 0 ? 1 : -1;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long r = 1;
    for (const auto& [p, e] : factorize(n)) {
        unsigned long pe = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pe *= p;
        r *= pe * (p - 1);
    }
    return r;
}

namespace {

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> d;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

Poly<Int> z_power_minus_one(unsigned long u) {
    std::vector<Int> v(u + 1);
    v[0] = -1;
    v[u] = 1;
    return Poly<Int>::from_coeffs(std::move(v));
}

std::map<unsigned long, Poly<Int>> cyclo_cache;
std::mutex cyclo_mutex;

} // namespace

Poly<Int> cyclotomic(unsigned long n) {
    if (n == 0) fail(errc::precondition_failed, "cyclotomic(0)");
    {
        std::lock_guard<std::mutex> lock(cyclo_mutex);
        auto it = cyclo_cache.find(n);
        if (it != cyclo_cache.end()) return it->second;
    }
    Poly<Int> acc = z_power_minus_one(n);
    for (unsigned long d : divisors(n)) {
        if (d == n) continue;
        acc = *try_divide(acc, cyclotomic(d));
    }
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    cyclo_cache.emplace(n, acc);
    return acc;
}

LowTerms cyclo_low_terms(unsigned long n) {
    if (n < 2) fail(errc::precondition_failed, "cyclo_low_terms needs n >= 2");
    auto f = factorize(n);
    unsigned long d = 1;
    for (const auto& [p, e] : f) {
        unsigned long pe = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pe *= p;
        d *= pe;
    }
    int s = (f.size() % 2 == 0) ? -1 : 1;
    // cross-check against the actual expansion
    Poly<Int> lhs = cyclotomic(n).truncate(2 * d);
    Poly<Int> rhs = Poly<Int>(Int(1)) + Poly<Int>::monomial(Int(s), d);
    if (lhs != rhs) fail(errc::precondition_failed, "low-order-term law violated");
    return {d, s};
}

unsigned long find_cyclotomic_prefix(unsigned long d, int s,
                                     const std::set<unsigned long>& exclusions) {
    for (unsigned long n = 2;; ++n) {
        if (exclusions.count(n)) continue;
        LowTerms lt = cyclo_low_terms(n);
        if (lt.d == d && lt.s == s) return n;
    }
}

Poly<Int> CycloFactorization::expand() const {
    Poly<Int> p{Int(sign)};
    for (unsigned long n : indices) p *= cyclotomic(n);
    return p;
}

std::optional<CycloFactorization> recognize_C(const Poly<Int>& f) {
    if (f.is_zero()) fail(errc::zero_input, "recognize_C on zero");
    Int c0 = f.coeff(0);
    if (!(c0 == 1 || c0 == -1)) return std::nullopt;
    if (!(f.lead() == 1 || f.lead() == -1)) return std::nullopt;
    CycloFactorization r;
    r.sign = f.lead() == 1 ? 1 : -1;
    Poly<Int> residual = r.sign == 1 ? f : -f; // monic part
    const long deg = f.degree();
    const unsigned long scan = 2 * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg) + 1;
    for (unsigned long n = 1; n <= scan && residual.degree() > 0; ++n) {
        if (euler_phi(n) > static_cast<unsigned long>(residual.degree())) continue;
        if (auto q = try_divide(residual, cyclotomic(n))) {
            residual = *q;
            r.indices.push_back(n);
        }
    }
    if (residual != Poly<Int>(Int(1))) return std::nullopt;
    return r;
}

} // namespace dioph
