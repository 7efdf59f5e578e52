#pragma once

#include <string>

#include "dioph/numberfield.hpp"
#include "dioph/poly.hpp"
#include "dioph/special.hpp"

namespace dioph {

struct Verdict {
    bool accepted = false;
    std::string reason;      // first failing clause when rejected
    unsigned long u = 0;     // recovered exponent where applicable

    explicit operator bool() const { return accepted; }

    static Verdict accept(unsigned long u = 0) { return {true, "", u}; }
    static Verdict reject(std::string why) { return {false, std::move(why), 0}; }
};

// Witness that G divides Z^u - 1 with G(0) = 1, through the Pell equation
// at T = (Z+S)/2: G = 1 - Z S, X^2 - (T^2-1) Y^2 = 1, X = 1 (mod Z+S-2),
// Y != 0, X + ((Z-S)/2) Y = 1 (mod G).
struct DivUWitness {
    Poly<NFElem> g, s, x, y;
    long n = 0;  // claimed exponent; verification re-derives it
};

DivUWitness build_divu_witness(const Poly<NFElem>& g, unsigned long u);
Verdict verify_divu_witness(const DivUWitness& w);

// Witness that F divides Z^u - 1: a multiple G = lcm(Z^3-1, F), normalized
// to G(0) = 1, together with a DivUWitness for G at exponent 3u.
struct DivisorCertificate {
    Poly<NFElem> f, g;
    DivUWitness inner;
    unsigned long u = 0;
};

DivisorCertificate build_divisor_certificate(const Poly<NFElem>& f, unsigned long u);
Verdict verify_divisor_certificate(const DivisorCertificate& c);

// Integrality transfer: for F with integral coefficients, F(0) = +-1 and
// F | Z^u - 1, a single integer value F(2^deg(F)+1) certifies that every
// coefficient is a rational integer.
enum class div_large_status { integer_coeffs, not_integer_evaluation };

struct DivLargeReport {
    div_large_status status;
    NFElem value;  // F(2^deg(F)+1)
};

DivLargeReport check_div_large(const Poly<NFElem>& f, unsigned long u);

// Membership of F in the set of root-of-unity polynomials, certified by a
// divisor certificate plus the integer value t = F(2^deg(F)+1).
struct CMembershipCertificate {
    DivisorCertificate divisor;
    Int t;
};

CMembershipCertificate certify_C_membership(const Poly<NFElem>& f, unsigned long u);
Verdict verify_cmembership(const CMembershipCertificate& c);

// Witness that X lies in Z[Z]: X = R + C where R is the remainder of some
// M in C under division by D+1, D in C, (Z-1) | D, C an integer.
struct ZZWitness {
    Poly<NFElem> m, d, q, r, x;
    Int c;
};

ZZWitness build_zz_witness(const Poly<Int>& x);
Verdict verify_zz_witness(const ZZWitness& w);

// Witness that deg F = d via the Chebyshev pair of index d:
// X^2 - (Z^2-1) Y^2 = 1, Y(1) = d, deg F = deg X.
struct DegreeWitness {
    Poly<NFElem> x, y;
    long d = 0;
    Poly<NFElem> f;
};

DegreeWitness build_degree_witness(const Poly<NFElem>& f, long d);
Verdict verify_degree_witness(const DegreeWitness& w);

} // namespace dioph
