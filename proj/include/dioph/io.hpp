#pragma once

#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "dioph/encode.hpp"
#include "dioph/numberfield.hpp"
#include "dioph/poly.hpp"
#include "dioph/qf.hpp"
#include "dioph/ratfunc.hpp"
#include "dioph/witness.hpp"

namespace dioph {

using json = nlohmann::ordered_json;

// Canonical text form: descending powers, " + " / " - " joins, rational
// coefficients as p or (p/q), field elements parenthesized with all
// coordinates, e.g. "Z^3 - 1" and "(1/2)*Z^2 + (0+1*a)".
std::string to_string(const NFElem& e);
std::string to_string(const Poly<NFElem>& p);
std::string to_string(const Poly<Rat>& p);
std::string to_string(const Poly<Int>& p);
std::string to_string(const RatFunc& f);

// compact integer-polynomial form used inside field descriptors, e.g. "a^2+1"
std::string poly_to_string_compact(const Poly<Int>& p, const std::string& var);

// "Q" or "Q(a)/<monic integer polynomial in a>"
FieldPtr parse_field_descriptor(const std::string& text);

RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field);
Poly<NFElem> parse_poly(const std::string& text, const FieldPtr& field);
Poly<Int> parse_int_poly(const std::string& text);

using Certificate =
    std::variant<DivUWitness, DivisorCertificate, CMembershipCertificate, ZZWitness, DegreeWitness>;

json certificate_to_json(const Certificate& c, const FieldPtr& field);
std::pair<Certificate, FieldPtr> certificate_from_json(const json& j);
Verdict verify_certificate(const Certificate& c);

json form_to_json(const DiagonalForm& f);
DiagonalForm form_from_json(const json& j, const FieldPtr& field);

json basis_tuple_to_json(const BasisTuple& b);

} // namespace dioph
