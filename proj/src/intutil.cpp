#include "dioph/rational.hpp"

namespace dioph {

bool positive_divisors(const Int& n, std::vector<Int>& out) {
    Int m = abs(n);
    if (m == 0) return false;
    std::vector<std::pair<Int, unsigned>> fac;
    Int p = 2;
    const Int cap = 2'000'000;
    while (m > 1) {
        if (p > cap) return false;
        if (p * p > m) {
            fac.emplace_back(m, 1);
            break;
        }
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            fac.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    out = {Int(1)};
    for (const auto& [q, e] : fac) {
        std::vector<Int> next;
        Int qe = 1;
        for (unsigned i = 0; i <= e; ++i) {
            for (const auto& d : out) next.push_back(d * qe);
            qe *= q;
        }
        out = std::move(next);
    }
    return true;
}

} // namespace dioph
