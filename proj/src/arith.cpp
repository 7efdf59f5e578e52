#include "dioph/arith.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace dioph {

namespace {

std::vector<std::vector<Rat>> multiplication_matrix(const NFElem& beta) {
    const FieldPtr& k = beta.field();
    const long d = k->degree();
    std::vector<std::vector<Rat>> cols;
    NFElem cur = beta;
    NFElem gen = NFElem::generator(k);
    for (long j = 0; j < d; ++j) {
        cols.push_back(cur.coords());
        if (j + 1 < d) cur = cur * gen;
    }
    // a[i][j] = i-th coordinate of beta * t^j
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
    for (long j = 0; j < d; ++j)
        for (long i = 0; i < d; ++i) a[i][j] = cols[j][i];
    return a;
}

// characteristic polynomial by the Faddeev-LeVerrier recurrence
Poly<Rat> char_poly(const std::vector<std::vector<Rat>>& a) {
    const long d = static_cast<long>(a.size());
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
    for (long i = 0; i < d; ++i) m[i][i] = 1;
    std::vector<Rat> c(d + 1);
    c[d] = 1;
    for (long k = 1; k <= d; ++k) {
        std::vector<std::vector<Rat>> am(d, std::vector<Rat>(d));
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j)
                for (long l = 0; l < d; ++l) am[i][j] += a[i][l] * m[l][j];
        Rat tr = 0;
        for (long i = 0; i < d; ++i) tr += am[i][i];
        Rat ck = -tr / Rat(k);
        c[d - k] = ck;
        m = am;
        for (long i = 0; i < d; ++i) m[i][i] += ck;
    }
    return Poly<Rat>::from_coeffs(std::move(c));
}

} // namespace

Poly<Rat> minimal_polynomial_of(const NFElem& beta) {
    if (beta.is_rational())
        return Poly<Rat>::from_coeffs({-beta.as_rat(), Rat(1)});
    Poly<Rat> cp = char_poly(multiplication_matrix(beta));
    Poly<Rat> g = gcd_poly(cp, cp.derivative());
    return monic(*try_divide(cp, g));
}

bool is_algebraic_integer(const NFElem& beta) {
    Poly<Rat> m = minimal_polynomial_of(beta);
    for (const auto& c : m.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

std::optional<unsigned long> root_of_unity_order(const NFElem& beta) {
    if (beta.is_zero()) return std::nullopt;
    const long d = beta.field() ? beta.field()->degree() : 1;
    // phi(n) <= d forces n <= 2 d^2
    const unsigned long limit = 2 * static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
    NFElem p = beta;
    for (unsigned long k = 1; k <= limit; ++k) {
        if (p == NFElem(1)) return k;
        p = p * beta;
    }
    return std::nullopt;
}

namespace {

std::vector<std::complex<double>> durand_kerner(const Poly<Rat>& m, unsigned seed) {
    const long d = m.degree();
    std::vector<double> cd(d + 1);
    for (long i = 0; i <= d; ++i) cd[i] = m.coeff(i).get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (long i = d; i >= 0; --i) acc = acc * z + cd[i];
        return acc;
    };
    double bound = 1.0;
    for (long i = 0; i < d; ++i) bound = std::max(bound, std::abs(cd[i]));
    bound += 1.0;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> noise(-0.1, 0.1);
    std::vector<std::complex<double>> z(d);
    for (long i = 0; i < d; ++i) {
        double ang = 0.7 + 2 * 3.14159265358979 * i / d + noise(rng);
        z[i] = std::polar(bound * (0.5 + 0.01 * i), ang);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double worst = 0;
        for (long i = 0; i < d; ++i) {
            std::complex<double> den = 1;
            for (long j = 0; j < d; ++j)
                if (j != i) den *= z[i] - z[j];
            if (den == std::complex<double>(0)) den = 1e-30;
            std::complex<double> step = eval(z[i]) / den;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-13) break;
    }
    return z;
}

struct CertifiedRoot {
    QC center;
    Rat radius;  // upper bound
};

// Newton refinement in exact rational arithmetic with rounding back to
// `bits` fractional bits after every step, then an a-posteriori radius
// d * |m(z)/m'(z)|, valid around any point with m'(z) != 0.
std::optional<CertifiedRoot> refine_and_certify(const Poly<Rat>& m, const Poly<Rat>& md, QC z,
                                                long bits) {
    const long d = m.degree();
    for (int step = 0; step < 64; ++step) {
        QC fz = m.eval(z);
        if (fz.norm2() == 0) return CertifiedRoot{z, Rat(0)};
        QC fdz = md.eval(z);
        if (fdz.norm2() == 0) return std::nullopt;
        QC delta = fz / fdz;
        z = qc_round(z - delta, bits);
        // converged once the Newton correction reaches the rounding floor
        Rat tol = make_rat(1, pow2(bits - 8));
        if (delta.norm2() <= tol * tol) break;
    }
    QC fz = m.eval(z);
    if (fz.norm2() == 0) return CertifiedRoot{z, Rat(0)};
    QC fdz = md.eval(z);
    if (fdz.norm2() == 0) return std::nullopt;
    Rat ratio2 = fz.norm2() / fdz.norm2();
    Rat r = Rat(d) * sqrt_upper(ratio2, 2 * bits);
    return CertifiedRoot{z, r};
}

} // namespace

std::vector<ComplexBall> embeddings(const FieldPtr& field, long precision_bits) {
    if (precision_bits < 16) fail(errc::precondition_failed, "precision_bits must be >= 16");
    const Poly<Rat>& m = field->min_poly();
    const long d = m.degree();
    if (d == 1) {
        Rat root = -m.coeff(0);
        ComplexBall b;
        b.re = dyadic_lower(root, precision_bits + 4);
        b.im = {Int(0), 0};
        Rat err = root - b.re.value();
        b.rad = dyadic_upper(err, precision_bits + 4);
        return {b};
    }
    if (gcd_poly(m, m.derivative()).degree() != 0)
        fail(errc::isolation_failure, "defining polynomial is not squarefree");
    const Poly<Rat> md = m.derivative();
    Rat target = make_rat(1, pow2(precision_bits + 2));

    for (unsigned attempt = 0; attempt < 6; ++attempt) {
        auto seeds = durand_kerner(m, 12345 + 77 * attempt);
        long bits = std::max<long>(64, precision_bits + 16) << attempt;
        std::vector<CertifiedRoot> roots;
        bool ok = true;
        for (const auto& s : seeds) {
            if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
                ok = false;
                break;
            }
            QC z{Rat(s.real()), Rat(s.imag())}; // double-to-rational is exact
            auto cr = refine_and_certify(m, md, z, bits);
            if (!cr || cr->radius > target) {
                ok = false;
                break;
            }
            roots.push_back(*cr);
        }
        if (!ok) continue;
        // pairwise disjoint: |ci-cj|^2 > 2(ri^2+rj^2) >= (ri+rj)^2
        for (long i = 0; ok && i < d; ++i)
            for (long j = i + 1; ok && j < d; ++j) {
                Rat dist2 = (roots[i].center - roots[j].center).norm2();
                Rat rr = 2 * (roots[i].radius * roots[i].radius + roots[j].radius * roots[j].radius);
                if (!(dist2 > rr)) ok = false;
            }
        if (!ok) continue;
        std::vector<ComplexBall> out;
        for (const auto& r : roots) {
            ComplexBall b;
            b.re = dyadic_lower(r.center.re, precision_bits + 6);
            b.im = dyadic_lower(r.center.im, precision_bits + 6);
            Rat shift = abs(r.center.re - b.re.value()) + abs(r.center.im - b.im.value());
            b.rad = dyadic_upper(r.radius + shift, precision_bits + 6);
            out.push_back(b);
        }
        return out;
    }
    fail(errc::isolation_failure, "could not certify disjoint root balls");
}

namespace {

// exact value range [lo, hi] of |beta| on the ball, all bounds rational
void abs_range_on_ball(const NFElem& beta, const ComplexBall& ball, long bits, Rat& lo, Rat& hi) {
    const auto& coords = beta.coords();
    QC z{ball.center_re(), ball.center_im()};
    QC val{};
    for (size_t i = coords.size(); i-- > 0;) val = val * z + QC{coords[i], Rat(0)};
    Rat r = ball.radius();
    // Lipschitz bound: sum k*|c_k|*R^{k-1} with R >= |z| + r
    Rat zabs = sqrt_upper(z.norm2(), bits);
    Rat big_r = zabs + r;
    Rat lip = 0;
    Rat rpow = 1;
    for (size_t k = 1; k < coords.size(); ++k) {
        lip += Rat(static_cast<long>(k)) * abs(coords[k]) * rpow;
        rpow *= big_r;
    }
    Rat err = lip * r;
    hi = sqrt_upper(val.norm2(), bits) + err;
    lo = sqrt_lower(val.norm2(), bits) - err;
    if (lo < 0) lo = 0;
}

} // namespace

tristate abs_bound_leq(const NFElem& beta, const Rat& bound) {
    if (beta.is_rational()) return abs(beta.as_rat()) <= bound ? tristate::yes : tristate::no;
    const FieldPtr& k = beta.field();
    const Poly<Rat>& m = k->min_poly();

    // sigma(beta)^2 = bound^2 for every embedding: exact equality
    if (pow(beta, 2) == NFElem(bound * bound)) return tristate::yes;

    if (k->degree() == 2) {
        Rat p = m.coeff(1), q = m.coeff(0);
        if (p * p - 4 * q < 0) {
            // complex quadratic: |sigma(beta)|^2 is the rational norm
            Rat x = beta.coords()[0], y = beta.coords()[1];
            Rat norm = x * x - p * x * y + q * y * y;
            return norm <= bound * bound ? tristate::yes : tristate::no;
        }
    }
    // roots of unity have absolute value exactly 1 under every embedding
    if (root_of_unity_order(beta)) {
        return Rat(1) <= bound ? tristate::yes : tristate::no;
    }

    for (long prec = 64; prec <= 4096; prec *= 2) {
        auto balls = embeddings(k, prec);
        bool all_le = true, any_gt = false;
        for (const auto& b : balls) {
            Rat lo, hi;
            abs_range_on_ball(beta, b, prec, lo, hi);
            if (lo > bound) any_gt = true;
            if (!(hi <= bound)) all_le = false;
        }
        if (any_gt) return tristate::no;
        if (all_le) return tristate::yes;
    }
    return tristate::undecided;
}

} // namespace dioph
