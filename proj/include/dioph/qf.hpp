#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/numberfield.hpp"
#include "dioph/ratfunc.hpp"

namespace dioph {

// Configuration data for a field satisfying the Kim-Roush hypothesis.
// Only the algebraic items are machine-checked: alpha is a root of unity
// and the presence of sqrt(-1). The completion-theoretic items are carried
// verbatim in unchecked_claims.
struct HypothesisHConfig {
    long p = 3;
    NFElem alpha, pi;
    bool has_sqrt_minus_one = false;
    std::vector<std::string> unchecked_claims;
};

// exact decision for fields of degree <= 4; degree > 4 is unsupported
bool field_has_sqrt_minus_one(const FieldPtr& field);

HypothesisHConfig make_hypothesis_config(long p, const NFElem& alpha, const NFElem& pi,
                                         std::vector<std::string> unchecked_claims = {});

// Diagonal quadratic form <d_1, ..., d_k> with nonzero entries.
struct DiagonalForm {
    std::vector<RatFunc> entries;
};

DiagonalForm make_form(std::vector<RatFunc> entries);

// tensor product: all pairwise products a_i b_j in row-major order
DiagonalForm form_product(const DiagonalForm& a, const DiagonalForm& b);

RatFunc evaluate_form(const DiagonalForm& f, const std::vector<RatFunc>& v);

// v != 0 and f(v) = 0
bool verify_isotropy_witness(const DiagonalForm& f, const std::vector<RatFunc>& v);

// G = ((Z + Z^2) + X^3) / (Z^3 + Z^2 X^3), with the pre-cancellation
// numerator and denominator kept alongside.
struct GParts {
    RatFunc g, g_n, g_d;
};

GParts build_G(const RatFunc& x);

// F = (1 + Z^-1)^3 G + gamma3 Z^-3 + gamma5 Z^-5
RatFunc build_F(const RatFunc& g, const RatFunc& gamma3, const RatFunc& gamma5);

enum class valuation_case { vZ_ge1, vZ_le0, vZinf_negative };

struct CaseReport {
    valuation_case kase;
    long vZ_G = 0;
    long vZinf_G = 0;
    bool consistent = false;
};

// Computes the valuations of G(X) and checks them against the expected
// table: v_Zinf(X) >= 0 forces (v_Zinf(G), v_Z(G)) = (1, -2), and
// v_Zinf(X) < 0 forces v_Zinf(G) = 2.
CaseReport valuation_case_analysis(const RatFunc& x);

// the two 8-entry forms <Z, aZ, -1, -F><1, pi> and <Z, aZ, -1, -aF><1, pi>
std::pair<DiagonalForm, DiagonalForm> assemble_kr_forms(const RatFunc& f,
                                                        const HypothesisHConfig& cfg);

// Bounded random search for an isotropy witness. Best effort: returns a
// verified witness or nothing; a miss says nothing about anisotropy.
std::optional<std::vector<RatFunc>> search_isotropy_witness(const DiagonalForm& f, unsigned seed,
                                                            int degree_cap = 2,
                                                            long height_cap = 3,
                                                            int attempts = 2000);

} // namespace dioph
