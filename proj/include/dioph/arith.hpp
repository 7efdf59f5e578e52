#pragma once

#include <optional>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/numberfield.hpp"
#include "dioph/poly.hpp"

namespace dioph {

// Monic minimal polynomial over Q: squarefree part of the characteristic
// polynomial of the multiplication-by-beta matrix in the power basis.
Poly<Rat> minimal_polynomial_of(const NFElem& beta);

// true iff the minimal polynomial has integer coefficients
bool is_algebraic_integer(const NFElem& beta);

// order k with beta^k = 1, if beta is a root of unity
std::optional<unsigned long> root_of_unity_order(const NFElem& beta);

// One certified ball per complex root of the defining polynomial, pairwise
// disjoint, radius <= 2^-precision_bits. precision_bits >= 16.
std::vector<ComplexBall> embeddings(const FieldPtr& field, long precision_bits);

enum class tristate { yes, no, undecided };

// Does |sigma(beta)| <= bound hold for every embedding sigma? Decided by
// ball refinement with doubling precision (64 up to 4096 bits) plus exact
// tie-breaking where |sigma(beta)|^2 is rational; never undecided for
// fields of degree <= 2.
tristate abs_bound_leq(const NFElem& beta, const Rat& bound);

} // namespace dioph
