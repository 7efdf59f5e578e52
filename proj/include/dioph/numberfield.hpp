#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dioph/poly.hpp"
#include "dioph/rational.hpp"

namespace dioph {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// K = Q[t]/(m(t)) for a monic integral m, irreducible over Q. Degree 1 is Q
// itself. Construction normalizes a non-monic or non-integral input to a
// monic integral model by rescaling the generator.
class NumberField {
public:
    const Poly<Rat>& min_poly() const { return min_poly_; }
    long degree() const { return min_poly_.degree(); }
    const std::string& gen() const { return gen_; }
    const std::string& label() const { return label_; }
    bool irreducibility_checked() const { return irreducibility_checked_; }
    bool is_rationals() const { return degree() == 1; }
    // stored generator = generator_scale * input generator
    const Int& generator_scale() const { return generator_scale_; }

    static FieldPtr rationals();
    static FieldPtr make(const Poly<Rat>& m, const std::string& gen = "a");

private:
    NumberField() = default;

    Poly<Rat> min_poly_;
    std::string gen_;
    std::string label_;
    Int generator_scale_ = 1;
    bool irreducibility_checked_ = false;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Element of a number field in the power basis 1, t, ..., t^{d-1}, with
// exact rational coordinates. A null field means a plain rational constant;
// mixed-field arithmetic promotes rationals into the other operand's field.
class NFElem {
public:
    NFElem() : coords_(1) {}
    NFElem(long v) : coords_{Rat(v)} {}
    NFElem(const Int& v) : coords_{Rat(v)} {}
    NFElem(const Rat& v) : coords_{v} {}
    NFElem(FieldPtr field, std::vector<Rat> coords);

    static NFElem generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat as_rat() const;
    bool is_integer() const { return is_rational() && dioph::is_integer(as_rat()); }

    NFElem promoted(const FieldPtr& field) const;

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem inverse() const;
    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

private:
    FieldPtr field_;            // null: rational constant, coords_ = {value}
    std::vector<Rat> coords_;   // size d when field_ set
};

NFElem pow(const NFElem& b, unsigned long e);

// lifts between coefficient domains
Poly<NFElem> to_nf(const Poly<Rat>& p, const FieldPtr& field = nullptr);
Poly<NFElem> to_nf(const Poly<Int>& p, const FieldPtr& field = nullptr);
std::optional<Poly<Rat>> to_rat_checked(const Poly<NFElem>& p);
std::optional<Poly<Int>> to_int_checked(const Poly<NFElem>& p);

// field carried by the coefficients of p (null when all rational)
FieldPtr field_of(const Poly<NFElem>& p);

} // namespace dioph
