#include <doctest.h>

#include <random>

#include "dioph/io.hpp"
#include "dioph/ratfunc.hpp"
#include "dioph/special.hpp"

using namespace dioph;

namespace {

Poly<Int> zp(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly<Int>::from_coeffs(std::move(v));
}

Poly<Int> z_pow_minus_1(unsigned long u) {
    std::vector<Int> v(u + 1);
    v[0] = -1;
    v[u] = 1;
    return Poly<Int>::from_coeffs(std::move(v));
}

// Independent oracle for Phi_n: the Moebius product over rational functions,
// prod_{a|n} (Z^{n/a} - 1)^{mu(a)}.
Poly<Int> cyclotomic_moebius_oracle(unsigned long n) {
    RatFunc acc(1);
    for (unsigned long a = 1; a <= n; ++a) {
        if (n % a != 0) continue;
        int mu = moebius(a);
        if (mu == 0) continue;
        RatFunc base{to_nf(z_pow_minus_1(n / a))};
        acc = acc * pow(base, mu);
    }
    auto p = to_int_checked(acc.as_polynomial());
    REQUIRE(p.has_value());
    return *p;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> d;
    for (unsigned long i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

} // namespace

TEST_CASE("chebyshev_pair small cases") {
    ChebPair c0 = chebyshev_pair(0);
    CHECK(c0.x == zp({1}));
    CHECK(c0.y.is_zero());

    ChebPair c2 = chebyshev_pair(2);
    CHECK(c2.x == zp({-1, 0, 2}));
    CHECK(c2.y == zp({0, 2}));

    ChebPair cm1 = chebyshev_pair(-1);
    CHECK(cm1.x == zp({0, 1}));
    CHECK(cm1.y == zp({-1}));
}

TEST_CASE("Pell identity and degree laws up to 40") {
    Poly<Int> z2m1 = zp({-1, 0, 1});
    for (long n = -40; n <= 40; ++n) {
        ChebPair c = chebyshev_pair(n);
        CHECK(c.x * c.x - z2m1 * c.y * c.y == zp({1}));
        long a = n < 0 ? -n : n;
        CHECK(c.x.degree() == a);
        if (n != 0)
            CHECK(c.y.degree() == a - 1);
        else
            CHECK(c.y.is_zero());
        // reflection laws
        ChebPair cm = chebyshev_pair(-n);
        CHECK(cm.x == c.x);
        CHECK(cm.y == -c.y);
    }
}

TEST_CASE("verify_cheb_power up to 20") {
    for (long n = -20; n <= 20; ++n) CHECK(verify_cheb_power(n));
}

TEST_CASE("pell_recognize") {
    auto q = NumberField::rationals();
    Poly<NFElem> t = parse_poly("Z", q);
    CHECK(pell_recognize(t, parse_poly("2*Z^2 - 1", q), parse_poly("2*Z", q))->n == 2);
    CHECK(pell_recognize(t, parse_poly("2*Z^2 - 1", q), parse_poly("2*Z", q))->x_sign == 1);

    auto m0 = pell_recognize(t, parse_poly("1", q), parse_poly("0", q));
    CHECK(m0->n == 0);
    CHECK(m0->x_sign == 1);

    CHECK_FALSE(pell_recognize(t, parse_poly("Z", q), parse_poly("Z", q)).has_value());
    CHECK_THROWS_AS(pell_recognize(parse_poly("1", q), parse_poly("1", q), parse_poly("0", q)),
                    error);
}

TEST_CASE("pell_recognize inverts chebyshev_pair") {
    auto q = NumberField::rationals();
    std::vector<Poly<NFElem>> ts = {parse_poly("Z", q), parse_poly("Z^2 + 1", q),
                                    parse_poly("-(1 + Z^2)/2", q)};
    for (const auto& t : ts) {
        for (long n = -25; n <= 25; ++n) {
            ChebPair c = chebyshev_pair(n);
            Poly<NFElem> x = to_nf(c.x).eval(t);
            Poly<NFElem> y = to_nf(c.y).eval(t);
            auto m = pell_recognize(t, x, y);
            REQUIRE(m.has_value());
            CHECK(m->n == n);
            CHECK(m->x_sign == 1);
            auto mneg = pell_recognize(t, -x, y);
            REQUIRE(mneg.has_value());
            CHECK(mneg->x_sign == -1);
        }
    }
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(30) == -1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(7) == -1);
}

TEST_CASE("cyclotomic basics") {
    CHECK(cyclotomic(1) == zp({-1, 1}));
    CHECK(cyclotomic(6) == zp({1, -1, 1}));
    CHECK(cyclotomic(12) == zp({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic: degree, monic, Moebius oracle") {
    for (unsigned long n = 1; n <= 300; ++n) {
        Poly<Int> phi = cyclotomic(n);
        CHECK(phi.degree() == static_cast<long>(euler_phi(n)));
        CHECK(phi.lead() == 1);
    }
    // independent Moebius-product oracle on a spread of indices
    for (unsigned long n : {1ul, 2ul, 3ul, 4ul, 6ul, 8ul, 12ul, 15ul, 16ul, 24ul, 30ul, 36ul,
                            45ul, 60ul, 64ul, 100ul, 105ul, 128ul, 210ul, 255ul})
        CHECK(cyclotomic(n) == cyclotomic_moebius_oracle(n));
}

TEST_CASE("product of cyclotomics over divisors") {
    for (unsigned long u = 1; u <= 60; ++u) {
        Poly<Int> prod{Int(1)};
        for (unsigned long d : divisors_of(u)) prod *= cyclotomic(d);
        CHECK(prod == z_pow_minus_1(u));
    }
}

TEST_CASE("cyclo_low_terms") {
    auto l6 = cyclo_low_terms(6);
    CHECK(l6.d == 1);
    CHECK(l6.s == -1);
    auto l12 = cyclo_low_terms(12);
    CHECK(l12.d == 2);
    CHECK(l12.s == -1);
    auto l2 = cyclo_low_terms(2);
    CHECK(l2.d == 1);
    CHECK(l2.s == 1);
    CHECK_THROWS_AS(cyclo_low_terms(1), error);

    // the congruence Phi_n = 1 + s Z^d (mod Z^{2d}) for all n <= 300
    for (unsigned long n = 2; n <= 300; ++n) {
        auto lt = cyclo_low_terms(n);
        Poly<Int> expected = zp({1}) + Poly<Int>::monomial(Int(lt.s), lt.d);
        CHECK(cyclotomic(n).truncate(2 * lt.d) == expected);
    }
}

TEST_CASE("find_cyclotomic_prefix") {
    CHECK(find_cyclotomic_prefix(1, 1, {}) == 2);
    CHECK(find_cyclotomic_prefix(1, -1, {}) == 6);
    CHECK(find_cyclotomic_prefix(2, 1, {}) == 4);
    CHECK(find_cyclotomic_prefix(1, 1, {2}) == 3);
    CHECK(find_cyclotomic_prefix(1, 1, {2, 3}) == 5);
    CHECK(find_cyclotomic_prefix(2, -1, {}) == 12);
}

TEST_CASE("recognize_C examples") {
    auto r1 = recognize_C(zp({-1, 0, 0, 1})); // Z^3 - 1
    REQUIRE(r1.has_value());
    CHECK(r1->sign == 1);
    CHECK(r1->indices == std::vector<unsigned long>{1, 3});

    auto r2 = recognize_C(zp({1}));
    REQUIRE(r2.has_value());
    CHECK(r2->sign == 1);
    CHECK(r2->indices.empty());

    CHECK_FALSE(recognize_C(zp({2, 1})).has_value());  // F(0) not a unit
    CHECK_FALSE(recognize_C(zp({1, 2})).has_value());  // leading not a unit
    CHECK_FALSE(recognize_C(zp({-1, 0, 2})).has_value());
    CHECK_THROWS_AS(recognize_C(Poly<Int>()), error);

    auto rm = recognize_C(zp({-1, -1})); // -Phi_2
    REQUIRE(rm.has_value());
    CHECK(rm->sign == -1);
    CHECK(rm->indices == std::vector<unsigned long>{2});
}

TEST_CASE("recognize_C equivalence with signed subset products") {
    // every signed subset-product of {Phi_d : d | u} divides Z^u - 1, and is
    // recognized with exactly its index set
    for (unsigned long u = 1; u <= 12; ++u) {
        auto divs = divisors_of(u);
        for (unsigned long mask = 0; mask < (1ul << divs.size()); ++mask) {
            Poly<Int> prod{Int(1)};
            std::vector<unsigned long> used;
            for (size_t i = 0; i < divs.size(); ++i)
                if (mask & (1ul << i)) {
                    prod *= cyclotomic(divs[i]);
                    used.push_back(divs[i]);
                }
            for (int sgn = 0; sgn < 2; ++sgn) {
                Poly<Int> f = sgn ? -prod : prod;
                CHECK(divides(f, z_pow_minus_1(u)));
                auto rec = recognize_C(f);
                REQUIRE(rec.has_value());
                CHECK(rec->sign == (sgn ? -1 : 1));
                CHECK(rec->indices == used);
                CHECK(rec->expand() == f);
            }
        }
    }
    // conversely: every divisor of Z^u - 1 arises this way, and recognize_C
    // rejects polynomials with zeros that are not roots of unity
    CHECK_FALSE(recognize_C(zp({-2, 0, 1})).has_value()); // Z^2 - 2
    CHECK_FALSE(recognize_C(zp({1, 1, 2})).has_value());
    CHECK_FALSE(recognize_C(zp({1, 3, 1})).has_value());
    CHECK_FALSE(recognize_C(zp({-1, 3, 1})).has_value());
}

TEST_CASE("recognize_C scan bound is sufficient") {
    // a lone Phi_n of large index relative to its degree: phi(7) = 6,
    // phi(30) = 8 <= 2*8^2+1 = 129 scan window
    auto r = recognize_C(cyclotomic(30));
    REQUIRE(r.has_value());
    CHECK(r->indices == std::vector<unsigned long>{30});
    auto r2 = recognize_C(cyclotomic(7) * cyclotomic(30));
    REQUIRE(r2.has_value());
    CHECK(r2->indices == std::vector<unsigned long>{7, 30});
}
