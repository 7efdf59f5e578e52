#include "dioph/numberfield.hpp"

#include "dioph/io.hpp"

namespace dioph {

namespace {

bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

bool has_integer_root(const Poly<Int>& m) {
    Int c0 = m.coeff(0);
    if (c0 == 0) return true;
    std::vector<Int> divs;
    if (!positive_divisors(c0, divs)) return false; // treated as unchecked by caller
    for (const auto& d : divs) {
        if (m.eval(d) == 0 || m.eval(Int(-d)) == 0) return true;
    }
    return false;
}

// Monic integral quartic: factorization into two monic integer quadratics
// (t^2+pt+q)(t^2+rt+s). Integer root testing is done separately.
bool quartic_splits_in_quadratics(const Poly<Int>& m) {
    const Int a = m.coeff(3), b = m.coeff(2), c = m.coeff(1), d0 = m.coeff(0);
    std::vector<Int> divs;
    if (!positive_divisors(d0, divs)) return false;
    for (const auto& qa : divs) {
        for (int sign = 0; sign < 2; ++sign) {
            Int q = sign ? -qa : qa;
            if (q == 0) continue;
            Int s = d0 / q;
            // p + r = a, p*r = b - q - s, p*s + r*q = c
            Int pr = b - q - s;
            Int disc = a * a - 4 * pr;
            Int w;
            if (!is_perfect_square(disc, w)) continue;
            for (int ws = 0; ws < 2; ++ws) {
                Int num = a + (ws ? w : -w);
                if (num % 2 != 0) continue;
                Int p = num / 2;
                Int r = a - p;
                if (p * s + r * q == c) return true;
            }
        }
    }
    return false;
}

// Complete for degree <= 4 (monic integral input): rational-root test plus
// the quadratic-pair square-detection routine for quartics.
enum class irred { yes, no, unknown };

irred irreducible_over_q(const Poly<Int>& m) {
    const long d = m.degree();
    if (d == 1) return irred::yes;
    if (m.coeff(0) == 0) return irred::no;
    if (d > 4) return irred::unknown;
    std::vector<Int> divs;
    if (!positive_divisors(m.coeff(0), divs)) return irred::unknown;
    if (has_integer_root(m)) return irred::no;
    if (d <= 3) return irred::yes;
    return quartic_splits_in_quadratics(m) ? irred::no : irred::yes;
}

} // namespace

FieldPtr NumberField::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<NumberField>(new NumberField());
        f->min_poly_ = Poly<Rat>::from_coeffs({Rat(0), Rat(1)}); // t
        f->gen_ = "a";
        f->label_ = "Q";
        f->irreducibility_checked_ = true;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr NumberField::make(const Poly<Rat>& m_in, const std::string& gen) {
    if (m_in.degree() < 1) fail(errc::precondition_failed, "defining polynomial must be non-constant");
    if (m_in.degree() == 1) return rationals(); // any degree-1 model is Q itself
    // clear denominators, strip content
    Int den = 1;
    for (const auto& c : m_in.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> zc;
    for (const auto& c : m_in.coeffs()) {
        Rat scaled = c * Rat(den);
        zc.push_back(scaled.get_num());
    }
    Poly<Int> mz = primitive_part(Poly<Int>::from_coeffs(std::move(zc)));
    if (mz.lead() < 0) mz = -mz;

    Int scale = 1;
    if (mz.lead() != 1) {
        // monic integral model: M(s) = lead^{d-1} m(s/lead), s = lead * t
        scale = mz.lead();
        const long d = mz.degree();
        std::vector<Int> v(d + 1);
        v[d] = 1;
        for (long i = 0; i < d; ++i) v[i] = mz.coeff(i) * pow_int(scale, d - 1 - i);
        mz = Poly<Int>::from_coeffs(std::move(v));
    }

    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->min_poly_ = to_rat(mz);
    f->gen_ = gen;
    f->generator_scale_ = scale;
    irred status = irreducible_over_q(mz);
    if (status == irred::no) fail(errc::precondition_failed, "defining polynomial is reducible over Q");
    f->irreducibility_checked_ = (status == irred::yes);
    f->label_ = "Q(" + gen + ")/" + poly_to_string_compact(mz, gen);
    return f;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->min_poly() == b->min_poly();
}

namespace {

FieldPtr unify_fields(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_field(a, b)) fail(errc::field_mismatch, "elements of different number fields");
    return a;
}

std::vector<Rat> reduce_mod(const Poly<Rat>& p, const NumberField& k) {
    auto [q, r] = divmod(p, k.min_poly());
    (void)q;
    std::vector<Rat> v(k.degree());
    for (long i = 0; i < k.degree(); ++i) v[i] = r.coeff(i);
    return v;
}

} // namespace

NFElem::NFElem(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) fail(errc::precondition_failed, "null field in element construction");
    if (static_cast<long>(coords_.size()) != field_->degree())
        fail(errc::dimension_mismatch, "coordinate vector does not match field degree");
}

NFElem NFElem::generator(const FieldPtr& field) {
    if (!field || field->degree() < 2) fail(errc::precondition_failed, "generator needs a proper extension field");
    std::vector<Rat> v(field->degree());
    v[1] = 1;
    return NFElem(field, std::move(v));
}

bool NFElem::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat NFElem::as_rat() const {
    if (!is_rational()) fail(errc::precondition_failed, "element is not rational");
    return coords_[0];
}

NFElem NFElem::promoted(const FieldPtr& field) const {
    if (!field || same_field(field_, field)) return *this;
    if (field_) fail(errc::field_mismatch, "cannot promote between distinct fields");
    std::vector<Rat> v(field->degree());
    v[0] = coords_[0];
    return NFElem(field, std::move(v));
}

NFElem NFElem::operator-() const {
    NFElem r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

NFElem NFElem::operator+(const NFElem& o) const {
    FieldPtr k = unify_fields(field_, o.field_);
    NFElem a = promoted(k), b = o.promoted(k);
    for (size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator*(const NFElem& o) const {
    FieldPtr k = unify_fields(field_, o.field_);
    if (!k) return NFElem(Rat(coords_[0] * o.coords_[0]));
    NFElem a = promoted(k), b = o.promoted(k);
    Poly<Rat> prod = Poly<Rat>::from_coeffs(a.coords_) * Poly<Rat>::from_coeffs(b.coords_);
    return NFElem(k, reduce_mod(prod, *k));
}

NFElem NFElem::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    if (!field_ || is_rational()) {
        NFElem r(*this);
        Rat inv = Rat(1) / coords_[0];
        r.coords_.assign(r.coords_.size(), Rat(0));
        r.coords_[0] = inv;
        return r;
    }
    // extended Euclid in Q[t] against the minimal polynomial
    Poly<Rat> r0 = field_->min_poly(), r1 = Poly<Rat>::from_coeffs(coords_);
    Poly<Rat> s0, s1{Rat(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly<Rat> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        fail(errc::division_by_zero, "zero divisor: defining polynomial is not irreducible");
    Poly<Rat> inv = s0 * (Rat(1) / r0.coeff(0));
    return NFElem(field_, reduce_mod(inv, *field_));
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

bool NFElem::operator==(const NFElem& o) const {
    if (!field_ && !o.field_) return coords_[0] == o.coords_[0];
    if (field_ && o.field_ && !same_field(field_, o.field_)) return false;
    FieldPtr k = field_ ? field_ : o.field_;
    return promoted(k).coords() == o.promoted(k).coords();
}

NFElem pow(const NFElem& b, unsigned long e) {
    NFElem r(1);
    NFElem x = b;
    for (; e; e >>= 1) {
        if (e & 1) r = r * x;
        if (e > 1) x = x * x;
    }
    return r;
}

Poly<NFElem> to_nf(const Poly<Rat>& p, const FieldPtr& field) {
    std::vector<NFElem> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.push_back(field ? NFElem(c).promoted(field) : NFElem(c));
    return Poly<NFElem>::from_coeffs(std::move(v));
}

Poly<NFElem> to_nf(const Poly<Int>& p, const FieldPtr& field) { return to_nf(to_rat(p), field); }

std::optional<Poly<Rat>> to_rat_checked(const Poly<NFElem>& p) {
    std::vector<Rat> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational()) return std::nullopt;
        v.push_back(c.as_rat());
    }
    return Poly<Rat>::from_coeffs(std::move(v));
}

std::optional<Poly<Int>> to_int_checked(const Poly<NFElem>& p) {
    auto q = to_rat_checked(p);
    if (!q) return std::nullopt;
    return to_int_checked(*q);
}

FieldPtr field_of(const Poly<NFElem>& p) {
    for (const auto& c : p.coeffs())
        if (c.field()) return c.field();
    return nullptr;
}

} // namespace dioph
