#include <doctest.h>

#include <random>

#include "dioph/arith.hpp"
#include "dioph/io.hpp"

using namespace dioph;

namespace {

std::mt19937_64 rng(777001);

NFElem random_elem(const FieldPtr& k) {
    std::vector<Rat> coords(k->degree());
    for (auto& c : coords) {
        long num = static_cast<long>(rng() % 17) - 8;
        long den = 1 + static_cast<long>(rng() % 4);
        c = make_rat(num, den);
    }
    return NFElem(k, std::move(coords));
}

Poly<Rat> qp(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly<Rat>::from_coeffs(std::move(v));
}

const std::vector<std::string> test_fields = {
    "Q", "Q(a)/a^2+1", "Q(a)/a^2-5", "Q(a)/a^4+a^3+a^2+a+1", "Q(a)/a^4+1"};

} // namespace

TEST_CASE("field descriptor construction and normalization") {
    auto q = parse_field_descriptor("Q");
    CHECK(q->degree() == 1);
    CHECK(q->label() == "Q");

    auto qi = parse_field_descriptor("Q(a)/a^2+1");
    CHECK(qi->degree() == 2);
    CHECK(qi->label() == "Q(a)/a^2+1");
    CHECK(qi->irreducibility_checked());

    auto z5 = parse_field_descriptor("Q(a)/a^4+a^3+a^2+a+1");
    CHECK(z5->degree() == 4);
    CHECK(z5->irreducibility_checked());

    // reducible inputs are refused
    CHECK_THROWS_AS(parse_field_descriptor("Q(a)/a^2-1"), error);
    CHECK_THROWS_AS(parse_field_descriptor("Q(a)/a^2-4"), error);
    CHECK_THROWS_AS(parse_field_descriptor("Q(a)/a^4+2*a^2+1"), error);
    CHECK_THROWS_AS(parse_field_descriptor("Q(a)/a^3-8"), error);
    CHECK_THROWS_AS(parse_field_descriptor("nonsense"), error);

    // non-monic model normalizes to a monic integral one (2t^2 - 1 -> s^2 - 2)
    auto f = NumberField::make(Poly<Rat>::from_coeffs({Rat(-1), Rat(0), Rat(2)}));
    CHECK(f->min_poly() == qp({-2, 0, 1}));
    CHECK(f->generator_scale() == 2);
}

TEST_CASE("field arithmetic properties") {
    for (const auto& desc : test_fields) {
        auto k = parse_field_descriptor(desc);
        int done = 0;
        while (done < 1000) {
            NFElem a = random_elem(k), b = random_elem(k);
            if (a.is_zero()) continue;
            ++done;
            CHECK((a * b) * a.inverse() == b);
        }
        for (int i = 0; i < 50; ++i) {
            NFElem a = random_elem(k), b = random_elem(k), c = random_elem(k);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("minimal polynomial") {
    CHECK(minimal_polynomial_of(NFElem(3)) == qp({-3, 1}));

    auto qi = parse_field_descriptor("Q(a)/a^2+1");
    CHECK(minimal_polynomial_of(NFElem::generator(qi)) == qp({1, 0, 1}));

    auto q5 = parse_field_descriptor("Q(a)/a^2-5");
    NFElem beta(q5, {Rat(1, 2), Rat(1, 2)}); // (1 + t)/2
    CHECK(minimal_polynomial_of(beta) == qp({-1, -1, 1}));

    // evaluated at beta it vanishes, for assorted elements
    for (const auto& desc : test_fields) {
        auto k = parse_field_descriptor(desc);
        for (int i = 0; i < 20; ++i) {
            NFElem b = random_elem(k);
            Poly<Rat> m = minimal_polynomial_of(b);
            CHECK(to_nf(m, k).eval(b).is_zero());
        }
    }
}

TEST_CASE("is_algebraic_integer") {
    auto q5 = parse_field_descriptor("Q(a)/a^2-5");
    CHECK(is_algebraic_integer(NFElem(7)));
    CHECK_FALSE(is_algebraic_integer(NFElem(Rat(1, 2))));
    CHECK(is_algebraic_integer(NFElem(q5, {Rat(1, 2), Rat(1, 2)}))); // (1+sqrt5)/2

    // ring structure on sampled integral elements
    auto zeta5 = parse_field_descriptor("Q(a)/a^4+a^3+a^2+a+1");
    std::vector<NFElem> integral;
    for (int i = 0; i < 200 && integral.size() < 12; ++i) {
        std::vector<Rat> coords(4);
        for (auto& c : coords) c = Rat(static_cast<long>(rng() % 5) - 2);
        NFElem e(zeta5, std::move(coords));
        if (is_algebraic_integer(e)) integral.push_back(e);
    }
    REQUIRE(integral.size() >= 2);
    for (size_t i = 0; i + 1 < integral.size(); ++i) {
        CHECK(is_algebraic_integer(integral[i] + integral[i + 1]));
        CHECK(is_algebraic_integer(integral[i] * integral[i + 1]));
    }
}

TEST_CASE("root_of_unity_order") {
    auto zeta5 = parse_field_descriptor("Q(a)/a^4+a^3+a^2+a+1");
    CHECK(*root_of_unity_order(NFElem(1)) == 1);
    CHECK(*root_of_unity_order(NFElem(-1)) == 2);
    CHECK(*root_of_unity_order(NFElem::generator(zeta5)) == 5);
    CHECK(*root_of_unity_order(-NFElem::generator(zeta5)) == 10);
    CHECK_FALSE(root_of_unity_order(NFElem(2)).has_value());
    CHECK_FALSE(root_of_unity_order(NFElem::generator(zeta5) + NFElem(1)).has_value());
}

TEST_CASE("embeddings: Gaussian field") {
    auto qi = parse_field_descriptor("Q(a)/a^2+1");
    auto balls = embeddings(qi, 32);
    REQUIRE(balls.size() == 2);
    for (const auto& b : balls) {
        CHECK(b.radius() <= make_rat(1, pow2(32)));
        CHECK(abs(b.center_re()) <= b.radius());
        CHECK((abs(b.center_im() - 1) <= b.radius() || abs(b.center_im() + 1) <= b.radius()));
    }
    // one ball near +i, one near -i
    CHECK(balls[0].center_im() * balls[1].center_im() < 0);
}

TEST_CASE("embeddings: Q and real quadratic") {
    auto q = NumberField::rationals();
    auto balls = embeddings(q, 64);
    REQUIRE(balls.size() == 1);
    CHECK(balls[0].center_re() == 0);
    CHECK(balls[0].center_im() == 0);

    auto q5 = parse_field_descriptor("Q(a)/a^2-5");
    auto b5 = embeddings(q5, 64);
    REQUIRE(b5.size() == 2);
    Rat lo("2236067977/1000000000"), hi("2236067978/1000000000");
    for (const auto& b : b5) {
        Rat m = abs(b.center_re());
        CHECK(m >= lo - b.radius());
        CHECK(m <= hi + b.radius());
        CHECK(abs(b.center_im()) <= b.radius());
    }
}

TEST_CASE("embeddings: ball product approximates constant term") {
    for (const auto& desc : test_fields) {
        auto k = parse_field_descriptor(desc);
        long d = k->degree();
        auto balls = embeddings(k, 64);
        REQUIRE(balls.size() == static_cast<size_t>(d));
        // product of centers vs (-1)^d * m(0), within combined radii
        Rat pre(1), pim(0);
        for (const auto& b : balls) {
            Rat re = b.center_re(), im = b.center_im();
            Rat nre = pre * re - pim * im;
            Rat nim = pre * im + pim * re;
            pre = nre;
            pim = nim;
        }
        Rat target = (d % 2 == 0 ? Rat(1) : Rat(-1)) * k->min_poly().coeff(0);
        // crude tolerance: radii are ~2^-64, roots here have modulus <= 3
        Rat tol = make_rat(1, pow2(48));
        CHECK(abs(pre - target) <= tol);
        CHECK(abs(pim) <= tol);
    }
}

TEST_CASE("abs_bound_leq") {
    auto qi = parse_field_descriptor("Q(a)/a^2+1");
    auto q5 = parse_field_descriptor("Q(a)/a^2-5");

    CHECK(abs_bound_leq(NFElem(2), Rat(2)) == tristate::yes);
    CHECK(abs_bound_leq(NFElem(-3), Rat(2)) == tristate::no);

    // |1+i|^2 = 2 > 1, exact rational comparison
    NFElem one_plus_i = NFElem(1) + NFElem::generator(qi);
    CHECK(abs_bound_leq(one_plus_i, Rat(1)) == tristate::no);
    CHECK(abs_bound_leq(one_plus_i, Rat(2)) == tristate::yes);

    // sqrt(5) < 3 via the interval oracle
    CHECK(abs_bound_leq(NFElem::generator(q5), Rat(3)) == tristate::yes);
    CHECK(abs_bound_leq(NFElem::generator(q5), Rat(2)) == tristate::no);

    // 2 sqrt(5) vs integer bounds: strict comparisons through refinement
    NFElem two_t(q5, {Rat(0), Rat(2)});
    CHECK(abs_bound_leq(two_t, Rat(5)) == tristate::yes);
    CHECK(abs_bound_leq(two_t, Rat(4)) == tristate::no);

    // roots of unity against bound 1
    auto zeta5 = parse_field_descriptor("Q(a)/a^4+a^3+a^2+a+1");
    CHECK(abs_bound_leq(NFElem::generator(zeta5), Rat(1)) == tristate::yes);
    CHECK(abs_bound_leq(NFElem::generator(zeta5), make_rat(99, 100)) == tristate::no);

    // quartic non-root-of-unity decided by refinement
    NFElem mix = NFElem::generator(zeta5) + NFElem(2);
    CHECK(abs_bound_leq(mix, Rat(4)) == tristate::yes);
    CHECK(abs_bound_leq(mix, Rat(1)) == tristate::no);
}
