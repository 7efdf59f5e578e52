#pragma once

#include <vector>

#include "dioph/poly.hpp"
#include "dioph/special.hpp"

namespace dioph {

// One correction pass of the Z-adic approximation: at `level` the defect
// coefficient was `c`, fixed by multiplying with the listed fresh
// cyclotomics.
struct ApproxStep {
    unsigned long level;
    Int c;
    std::vector<unsigned long> applied;
};

struct ApproxTrace {
    std::vector<ApproxStep> steps;
    CycloFactorization result;
};

struct ApproxResult {
    Poly<Int> m;
    ApproxTrace trace;
};

// Given F with F(0) = +-1 and a precision d >= 1, produce a signed product
// M of distinct cyclotomic polynomials with F = M (mod Z^d). Index choice
// is the smallest fresh index at each step, so the output is deterministic.
ApproxResult approximate_by_C(const Poly<Int>& f, unsigned long d);

} // namespace dioph
