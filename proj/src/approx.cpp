#include "dioph/approx.hpp"

namespace dioph {

ApproxResult approximate_by_C(const Poly<Int>& f, unsigned long d) {
    Int c0 = f.coeff(0);
    if (!(c0 == 1 || c0 == -1)) fail(errc::bad_constant_term, "constant term not ±1");
    if (d == 0) fail(errc::precondition_failed, "precision must be positive");
    const int sign = c0 == 1 ? 1 : -1;
    Poly<Int> target = sign == 1 ? f : -f;

    Poly<Int> m{Int(1)};
    ApproxTrace trace;
    std::set<unsigned long> used;
    for (unsigned long level = 1; level < d; ++level) {
        Int c = (target - m).coeff(level);
        if (c == 0) continue;
        const int s = c > 0 ? 1 : -1;
        ApproxStep step{level, c, {}};
        Int reps = abs(c);
        for (Int i = 0; i < reps; ++i) {
            unsigned long n = find_cyclotomic_prefix(level, s, used);
            used.insert(n);
            step.applied.push_back(n);
            m *= cyclotomic(n);
        }
        trace.steps.push_back(std::move(step));
    }
    if (sign == -1) m = -m;

    trace.result.sign = sign;
    trace.result.indices.assign(used.begin(), used.end());
    return {std::move(m), std::move(trace)};
}

} // namespace dioph
