#include <doctest.h>

#include <random>
#include <set>

#include "dioph/approx.hpp"

using namespace dioph;

namespace {

Poly<Int> zp(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly<Int>::from_coeffs(std::move(v));
}

Poly<Int> z_pow(size_t k) { return Poly<Int>::monomial(Int(1), k); }

std::mt19937_64 rng(424242);

Poly<Int> random_unit_poly(int max_deg, long height) {
    int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Int> v(deg + 1);
    for (auto& c : v) c = static_cast<long>(rng() % (2 * height + 1)) - height;
    v[0] = (rng() % 2) ? 1 : -1;
    return Poly<Int>::from_coeffs(std::move(v));
}

bool indices_distinct(const ApproxTrace& t) {
    std::set<unsigned long> seen;
    for (const auto& s : t.steps)
        for (unsigned long n : s.applied)
            if (!seen.insert(n).second) return false;
    return true;
}

} // namespace

TEST_CASE("approximate_by_C examples") {
    // F = 1: M = 1, empty trace
    auto r1 = approximate_by_C(zp({1}), 5);
    CHECK(r1.m == zp({1}));
    CHECK(r1.trace.steps.empty());
    CHECK(r1.trace.result.sign == 1);
    CHECK(r1.trace.result.indices.empty());

    // F = 1 + 2Z, d = 2: M = Phi_2 Phi_3
    auto r2 = approximate_by_C(zp({1, 2}), 2);
    CHECK(r2.m == zp({1, 2, 2, 1}));
    REQUIRE(r2.trace.steps.size() == 1);
    CHECK(r2.trace.steps[0].level == 1);
    CHECK(r2.trace.steps[0].c == 2);
    CHECK(r2.trace.steps[0].applied == std::vector<unsigned long>{2, 3});

    // F = -1 - Z, d = 2: M = -Phi_2
    auto r3 = approximate_by_C(zp({-1, -1}), 2);
    CHECK(r3.m == zp({-1, -1}));
    CHECK(r3.trace.result.sign == -1);

    CHECK_THROWS_AS(approximate_by_C(zp({2, 1}), 2), error);
    CHECK_THROWS_AS(approximate_by_C(Poly<Int>(), 2), error);
}

TEST_CASE("approximate_by_C randomized contract") {
    for (int i = 0; i < 200; ++i) {
        Poly<Int> f = random_unit_poly(6, 5);
        for (unsigned long d = 1; d <= 6; ++d) {
            auto res = approximate_by_C(f, d);
            auto rec = recognize_C(res.m);
            REQUIRE(rec.has_value());
            CHECK(*rec == res.trace.result);
            CHECK(f.truncate(d) == res.m.truncate(d));
            CHECK(congruent_mod(f, res.m, z_pow(d)));
            CHECK(indices_distinct(res.trace));
        }
    }
}

TEST_CASE("density of C in the Z-adic unit ball") {
    // every prefix vector in {-2..2}^d with unit leading entry is realized
    for (int d = 1; d <= 4; ++d) {
        long count = 1;
        for (int i = 1; i < d; ++i) count *= 5;
        for (long code = 0; code < count; ++code) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                std::vector<Int> v(d);
                v[0] = sgn ? -1 : 1;
                long c = code;
                for (int i = 1; i < d; ++i) {
                    v[i] = (c % 5) - 2;
                    c /= 5;
                }
                Poly<Int> f = Poly<Int>::from_coeffs(std::move(v));
                auto res = approximate_by_C(f, d);
                CHECK(f.truncate(d) == res.m.truncate(d));
                CHECK(recognize_C(res.m).has_value());
            }
        }
    }
}

TEST_CASE("monotone refinement") {
    for (int i = 0; i < 40; ++i) {
        Poly<Int> f = random_unit_poly(5, 4);
        for (unsigned long d = 1; d <= 5; ++d) {
            auto md = approximate_by_C(f, d);
            auto md1 = approximate_by_C(f, d + 1);
            CHECK(congruent_mod(md1.m, md.m, z_pow(d)));
        }
    }
}
