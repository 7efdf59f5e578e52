#pragma once

#include <optional>
#include <set>
#include <vector>

#include "dioph/numberfield.hpp"
#include "dioph/poly.hpp"

namespace dioph {

// Polynomial solutions of X^2 - (Z^2-1) Y^2 = 1, generated by powers of
// Z + sqrt(Z^2-1). X_{-n} = X_n and Y_{-n} = -Y_n.
struct ChebPair {
    long n = 0;
    Poly<Int> x, y;
};

ChebPair chebyshev_pair(long n);

// Signed product of distinct cyclotomic polynomials.
struct CycloFactorization {
    int sign = 1;                 // +1 or -1
    std::vector<unsigned long> indices; // strictly increasing

    Poly<Int> expand() const;
    bool operator==(const CycloFactorization&) const = default;
};

// If X^2 - (T^2-1) Y^2 = 1 with T non-constant, recover the unique pair
// (n, x_sign) with X = x_sign * X_n(T) and Y = Y_n(T); nullopt when the
// Pell equation fails.
struct PellMatch {
    long n;
    int x_sign;
};
std::optional<PellMatch> pell_recognize(const Poly<NFElem>& t, const Poly<NFElem>& x,
                                        const Poly<NFElem>& y);

// Exact rational-function identity
//   Z^n = X_n((Z+Z^-1)/2) + ((Z-Z^-1)/2) Y_n((Z+Z^-1)/2).
bool verify_cheb_power(long n);

int moebius(unsigned long n);
unsigned long euler_phi(unsigned long n);
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n);

// n-th cyclotomic polynomial, memoized; computed by exact division of
// Z^n - 1 by the proper cyclotomic divisors.
Poly<Int> cyclotomic(unsigned long n);

// For n >= 2 with k distinct prime factors, Phi_n = 1 + s Z^d (mod Z^{2d})
// where d = n / rad(n) and s = (-1)^{k+1}.
struct LowTerms {
    unsigned long d;
    int s;
};
LowTerms cyclo_low_terms(unsigned long n);

// Smallest n outside `exclusions` with Phi_n = 1 + s Z^d (mod Z^{2d}).
unsigned long find_cyclotomic_prefix(unsigned long d, int s,
                                     const std::set<unsigned long>& exclusions);

// Accepts exactly the (signed) products of distinct cyclotomic polynomials,
// i.e. the divisors of some Z^u - 1 in Z[Z].
std::optional<CycloFactorization> recognize_C(const Poly<Int>& f);

} // namespace dioph
