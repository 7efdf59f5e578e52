#include "dioph/io.hpp"

#include <cctype>

namespace dioph {

namespace {

std::string rat_mag_str(const Rat& q) { return to_string(Rat(abs(q))); }

std::string elem_inner(const NFElem& e) {
    // all coordinates, joined by sign: "0+1*a", "-1/2+3*a^2"
    const auto& k = e.field();
    const std::string& g = k->gen();
    std::string out = to_string(e.coords()[0]);
    for (size_t i = 1; i < e.coords().size(); ++i) {
        const Rat& c = e.coords()[i];
        out += (c < 0) ? "-" : "+";
        out += rat_mag_str(c) + "*" + g;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string zpart(size_t i, const std::string& var) {
    return i == 1 ? var : var + "^" + std::to_string(i);
}

} // namespace

std::string to_string(const NFElem& e) {
    if (e.is_rational()) return to_string(e.as_rat());
    return "(" + elem_inner(e) + ")";
}

std::string to_string(const Poly<NFElem>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        NFElem c = p.coeff(i);
        if (c == NFElem()) continue;
        bool rational = c.is_rational();
        int sign = 1;
        std::string body;
        if (rational) {
            Rat q = c.as_rat();
            sign = q < 0 ? -1 : 1;
            std::string mag = rat_mag_str(q);
            if (i == 0)
                body = mag;
            else if (q == 1 || q == -1)
                body = zpart(i, "Z");
            else if (is_integer(q))
                body = mag + "*" + zpart(i, "Z");
            else
                body = "(" + mag + ")*" + zpart(i, "Z");
        } else {
            body = "(" + elem_inner(c) + ")";
            if (i > 0) body += "*" + zpart(i, "Z");
        }
        if (out.empty())
            out = (sign < 0 ? "-" : "") + body;
        else
            out += (sign < 0 ? " - " : " + ") + body;
    }
    return out;
}

std::string to_string(const Poly<Rat>& p) { return to_string(to_nf(p)); }
std::string to_string(const Poly<Int>& p) { return to_string(to_nf(p)); }

std::string to_string(const RatFunc& f) {
    if (f.is_polynomial()) return to_string(f.as_polynomial());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string poly_to_string_compact(const Poly<Int>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        Int c = p.coeff(i);
        if (c == 0) continue;
        std::string body;
        Int mag = abs(c);
        if (i == 0)
            body = mag.get_str();
        else if (mag == 1)
            body = zpart(i, var);
        else
            body = mag.get_str() + "*" + zpart(i, var);
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? "-" : "+") + body;
    }
    return out;
}

// --- expression parser ------------------------------------------------------

namespace {

class ExprParser {
public:
    ExprParser(std::string_view src, FieldPtr field, std::string var)
        : src_(src), field_(std::move(field)), var_(std::move(var)) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != src_.size()) fail(errc::parse_error, "trailing input at position " + std::to_string(pos_));
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(errc::parse_error, std::string("expected '") + c + "'");
    }

    RatFunc expr() {
        RatFunc acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        for (;;) {
            if (accept('*'))
                acc = acc * unary();
            else if (accept('/'))
                acc = acc / unary();
            else
                return acc;
        }
    }

    RatFunc unary() {
        int sign = 1;
        for (;;) {
            if (accept('-'))
                sign = -sign;
            else if (accept('+'))
                ;
            else
                break;
        }
        RatFunc v = power();
        return sign < 0 ? -v : v;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (accept('^')) {
            unsigned long e = parse_uint();
            return pow(base, static_cast<long>(e));
        }
        return base;
    }

    unsigned long parse_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail(errc::parse_error, "expected an exponent");
        unsigned long v = 0;
        for (size_t i = start; i < pos_; ++i) {
            v = v * 10 + (src_[i] - '0');
            if (v > 1000000) fail(errc::parse_error, "exponent too large");
        }
        return v;
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail(errc::parse_error, "unexpected end of input");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return RatFunc(Int(std::string(src_.substr(start, pos_ - start)), 10));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            if (name == var_) return RatFunc::var();
            if (field_ && !field_->is_rationals() && name == field_->gen())
                return RatFunc(NFElem::generator(field_));
            fail(errc::parse_error, "unknown symbol '" + name + "'");
        }
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            expect(')');
            return inner;
        }
        fail(errc::parse_error, std::string("unexpected character '") + c + "'");
    }

    std::string_view src_;
    size_t pos_ = 0;
    FieldPtr field_;
    std::string var_;
};

} // namespace

RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field) {
    return ExprParser(text, field ? field : NumberField::rationals(), "Z").parse();
}

Poly<NFElem> parse_poly(const std::string& text, const FieldPtr& field) {
    RatFunc f = parse_ratfunc(text, field);
    if (!f.is_polynomial()) fail(errc::parse_error, "expected a polynomial");
    return f.as_polynomial();
}

Poly<Int> parse_int_poly(const std::string& text) {
    auto p = to_int_checked(parse_poly(text, NumberField::rationals()));
    if (!p) fail(errc::parse_error, "expected a polynomial with integer coefficients");
    return *p;
}

FieldPtr parse_field_descriptor(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "Q") return NumberField::rationals();
    if (s.rfind("Q(", 0) != 0) fail(errc::parse_error, "invalid field descriptor: " + text);
    size_t close = s.find(')');
    if (close == std::string::npos || close < 3) fail(errc::parse_error, "invalid field descriptor: " + text);
    std::string sym = s.substr(2, close - 2);
    for (char c : sym)
        if (!std::isalpha(static_cast<unsigned char>(c)))
            fail(errc::parse_error, "invalid generator symbol: " + sym);
    if (sym == "Z") fail(errc::parse_error, "generator symbol cannot be the variable Z");
    if (close + 1 >= s.size() || s[close + 1] != '/')
        fail(errc::parse_error, "invalid field descriptor: " + text);
    std::string body = s.substr(close + 2);
    RatFunc f = ExprParser(body, NumberField::rationals(), sym).parse();
    if (!f.is_polynomial()) fail(errc::parse_error, "field polynomial must be a polynomial");
    auto mz = to_int_checked(f.as_polynomial());
    if (!mz || mz->degree() < 1 || mz->lead() != 1)
        fail(errc::parse_error, "field polynomial must be monic with integer coefficients");
    return NumberField::make(to_rat(*mz), sym);
}

// --- certificates -----------------------------------------------------------

namespace {

std::string field_label(const FieldPtr& field) {
    return field ? field->label() : NumberField::rationals()->label();
}

json divu_data(const DivUWitness& w) {
    json d;
    d["G"] = to_string(w.g);
    d["S"] = to_string(w.s);
    d["X"] = to_string(w.x);
    d["Y"] = to_string(w.y);
    d["n"] = w.n;
    return d;
}

json divisor_data(const DivisorCertificate& c) {
    json d;
    d["F"] = to_string(c.f);
    d["G"] = to_string(c.g);
    d["u"] = c.u;
    d["inner"] = divu_data(c.inner);
    return d;
}

Int json_int(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            fail(errc::parse_error, "bad integer in certificate field " + key);
        }
    }
    fail(errc::parse_error, "bad integer in certificate field " + key);
}

long json_long(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(errc::parse_error, "bad integer in certificate field " + key);
    return v.get<long>();
}

std::string json_str(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (!v.is_string()) fail(errc::parse_error, "bad string in certificate field " + key);
    return v.get<std::string>();
}

DivUWitness divu_from(const json& d, const FieldPtr& field) {
    DivUWitness w;
    w.g = parse_poly(json_str(d, "G"), field);
    w.s = parse_poly(json_str(d, "S"), field);
    w.x = parse_poly(json_str(d, "X"), field);
    w.y = parse_poly(json_str(d, "Y"), field);
    w.n = json_long(d, "n");
    return w;
}

DivisorCertificate divisor_from(const json& d, const FieldPtr& field) {
    DivisorCertificate c;
    c.f = parse_poly(json_str(d, "F"), field);
    c.g = parse_poly(json_str(d, "G"), field);
    long u = json_long(d, "u");
    if (u <= 0) fail(errc::parse_error, "exponent u must be positive");
    c.u = static_cast<unsigned long>(u);
    c.inner = divu_from(d.at("inner"), field);
    return c;
}

} // namespace

json certificate_to_json(const Certificate& c, const FieldPtr& field) {
    json j;
    j["schema"] = "dioph-cert/1";
    std::string kind;
    json data;
    if (const auto* w = std::get_if<DivUWitness>(&c)) {
        kind = "divu";
        data = divu_data(*w);
    } else if (const auto* w = std::get_if<DivisorCertificate>(&c)) {
        kind = "divisor";
        data = divisor_data(*w);
    } else if (const auto* w = std::get_if<CMembershipCertificate>(&c)) {
        kind = "cmember";
        data["divisor"] = divisor_data(w->divisor);
        data["t"] = w->t.get_str();
    } else if (const auto* w = std::get_if<ZZWitness>(&c)) {
        kind = "zz";
        data["M"] = to_string(w->m);
        data["D"] = to_string(w->d);
        data["Q"] = to_string(w->q);
        data["R"] = to_string(w->r);
        data["C"] = w->c.get_str();
        data["X"] = to_string(w->x);
    } else if (const auto* w = std::get_if<DegreeWitness>(&c)) {
        kind = "degree";
        data["X"] = to_string(w->x);
        data["Y"] = to_string(w->y);
        data["d"] = w->d;
        data["F"] = to_string(w->f);
    }
    j["kind"] = kind;
    j["field"] = field_label(field);
    j["data"] = data;
    return j;
}

std::pair<Certificate, FieldPtr> certificate_from_json(const json& j) {
    if (!j.is_object() || json_str(j, "schema") != "dioph-cert/1")
        fail(errc::parse_error, "unknown certificate schema");
    FieldPtr field = parse_field_descriptor(json_str(j, "field"));
    std::string kind = json_str(j, "kind");
    const json& d = j.at("data");
    if (kind == "divu") return {divu_from(d, field), field};
    if (kind == "divisor") return {divisor_from(d, field), field};
    if (kind == "cmember") {
        CMembershipCertificate c;
        c.divisor = divisor_from(d.at("divisor"), field);
        c.t = json_int(d, "t");
        return {c, field};
    }
    if (kind == "zz") {
        ZZWitness w;
        w.m = parse_poly(json_str(d, "M"), field);
        w.d = parse_poly(json_str(d, "D"), field);
        w.q = parse_poly(json_str(d, "Q"), field);
        w.r = parse_poly(json_str(d, "R"), field);
        w.c = json_int(d, "C");
        w.x = parse_poly(json_str(d, "X"), field);
        return {w, field};
    }
    if (kind == "degree") {
        DegreeWitness w;
        w.x = parse_poly(json_str(d, "X"), field);
        w.y = parse_poly(json_str(d, "Y"), field);
        w.d = json_long(d, "d");
        w.f = parse_poly(json_str(d, "F"), field);
        return {w, field};
    }
    fail(errc::parse_error, "unknown certificate kind: " + kind);
}

Verdict verify_certificate(const Certificate& c) {
    return std::visit(
        [](const auto& w) -> Verdict {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, DivUWitness>) return verify_divu_witness(w);
            if constexpr (std::is_same_v<T, DivisorCertificate>) return verify_divisor_certificate(w);
            if constexpr (std::is_same_v<T, CMembershipCertificate>) return verify_cmembership(w);
            if constexpr (std::is_same_v<T, ZZWitness>) return verify_zz_witness(w);
            if constexpr (std::is_same_v<T, DegreeWitness>) return verify_degree_witness(w);
        },
        c);
}

json form_to_json(const DiagonalForm& f) {
    json arr = json::array();
    for (const auto& e : f.entries) arr.push_back(to_string(e));
    return arr;
}

DiagonalForm form_from_json(const json& j, const FieldPtr& field) {
    if (!j.is_array() || j.empty()) fail(errc::parse_error, "diagonal form must be a non-empty array");
    std::vector<RatFunc> entries;
    for (const auto& e : j) {
        if (!e.is_string()) fail(errc::parse_error, "diagonal form entries must be strings");
        entries.push_back(parse_ratfunc(e.get<std::string>(), field));
    }
    return make_form(std::move(entries));
}

json basis_tuple_to_json(const BasisTuple& b) {
    json arr = json::array();
    for (const auto& p : b.parts) arr.push_back(to_string(p));
    if (b.y.fits_slong_p())
        arr.push_back(b.y.get_si());
    else
        arr.push_back(b.y.get_str());
    return arr;
}

} // namespace dioph
