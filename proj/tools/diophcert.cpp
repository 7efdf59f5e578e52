#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dioph/approx.hpp"
#include "dioph/arith.hpp"
#include "dioph/encode.hpp"
#include "dioph/io.hpp"
#include "dioph/qf.hpp"
#include "dioph/special.hpp"
#include "dioph/witness.hpp"

namespace {

using namespace dioph;

struct Options {
    std::string field_desc = "Q";
    long precision_bits = 128;
    std::string output = "text";
};

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_cheb(const Options& opt, long n) {
    ChebPair cp = chebyshev_pair(n);
    if (opt.output == "json") {
        json j;
        j["n"] = n;
        j["X"] = to_string(cp.x);
        j["Y"] = to_string(cp.y);
        emit_json(j);
    } else {
        std::cout << "X = " << to_string(cp.x) << "\n";
        std::cout << "Y = " << to_string(cp.y) << "\n";
    }
    return 0;
}

int cmd_cyclo(const Options& opt, unsigned long n) {
    Poly<Int> phi = cyclotomic(n);
    if (opt.output == "json") {
        json j;
        j["n"] = n;
        j["Phi"] = to_string(phi);
        emit_json(j);
    } else {
        std::cout << to_string(phi) << "\n";
    }
    return 0;
}

int cmd_recognize_c(const Options& opt, const std::string& poly_text) {
    Poly<Int> f = parse_int_poly(poly_text);
    if (f.is_zero()) {
        std::cerr << "zero polynomial\n";
        return 1;
    }
    auto fac = recognize_C(f);
    if (!fac) {
        if (!(f.coeff(0) == 1 || f.coeff(0) == -1))
            std::cerr << "constant term not ±1\n";
        else if (!(f.lead() == 1 || f.lead() == -1))
            std::cerr << "leading coefficient not ±1\n";
        else
            std::cerr << "not a product of distinct cyclotomic polynomials\n";
        return 1;
    }
    if (opt.output == "json") {
        json j;
        j["sign"] = fac->sign;
        j["indices"] = fac->indices;
        emit_json(j);
    } else {
        std::string out = fac->sign < 0 ? "-" : "";
        if (fac->indices.empty()) {
            out += "1";
        } else {
            for (size_t i = 0; i < fac->indices.size(); ++i) {
                if (i) out += " * ";
                out += "Phi_" + std::to_string(fac->indices[i]);
            }
        }
        std::cout << out << "\n";
    }
    return 0;
}

int cmd_approx(const Options& opt, const std::string& poly_text, unsigned long d) {
    Poly<Int> f = parse_int_poly(poly_text);
    ApproxResult res = approximate_by_C(f, d);
    if (opt.output == "json") {
        json j;
        j["M"] = to_string(res.m);
        json steps = json::array();
        for (const auto& s : res.trace.steps) {
            json e;
            e["level"] = s.level;
            e["c"] = s.c.get_si();
            e["applied"] = s.applied;
            steps.push_back(e);
        }
        j["steps"] = steps;
        j["sign"] = res.trace.result.sign;
        j["indices"] = res.trace.result.indices;
        emit_json(j);
    } else {
        std::cout << to_string(res.m) << "\n";
        for (const auto& s : res.trace.steps) {
            std::cout << "level " << s.level << ": c = " << s.c.get_str() << ", applied = [";
            for (size_t i = 0; i < s.applied.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << s.applied[i];
            }
            std::cout << "]\n";
        }
    }
    return 0;
}

int cmd_valuation(const Options& opt, const FieldPtr& field, const std::string& rf_text) {
    RatFunc f = parse_ratfunc(rf_text, field);
    auto vz = v_Z(f);
    auto vinf = v_Zinf(f);
    auto render = [](const std::optional<long>& v) {
        return v ? std::to_string(*v) : std::string("+inf");
    };
    if (opt.output == "json") {
        json j;
        if (vz)
            j["v_Z"] = *vz;
        else
            j["v_Z"] = "+inf";
        if (vinf)
            j["v_Zinf"] = *vinf;
        else
            j["v_Zinf"] = "+inf";
        emit_json(j);
    } else {
        std::cout << "v_Z = " << render(vz) << "\n";
        std::cout << "v_Zinf = " << render(vinf) << "\n";
    }
    return 0;
}

int cmd_qf_case(const Options& opt, const FieldPtr& field, const std::string& rf_text) {
    RatFunc x = parse_ratfunc(rf_text, field);
    CaseReport rep = valuation_case_analysis(x);
    const char* kase = rep.kase == valuation_case::vZ_ge1      ? "vZ_ge1"
                       : rep.kase == valuation_case::vZ_le0    ? "vZ_le0"
                                                               : "vZinf_negative";
    if (opt.output == "json") {
        json j;
        j["case"] = kase;
        j["v_Z_G"] = rep.vZ_G;
        j["v_Zinf_G"] = rep.vZinf_G;
        j["consistent"] = rep.consistent;
        emit_json(j);
    } else {
        std::cout << "case = " << kase << "\n";
        std::cout << "v_Z(G) = " << rep.vZ_G << "\n";
        std::cout << "v_Zinf(G) = " << rep.vZinf_G << "\n";
        std::cout << "consistent = " << (rep.consistent ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_decompose(const FieldPtr& field, const std::string& poly_text) {
    Poly<NFElem> x = parse_poly(poly_text, field);
    BasisTuple b = decompose_basis(x, field ? field : NumberField::rationals());
    std::cout << basis_tuple_to_json(b).dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open " << path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text);
    auto [cert, field] = certificate_from_json(j);
    (void)field;
    Verdict v = verify_certificate(cert);
    if (!v) {
        std::cerr << "reject: " << v.reason << "\n";
        return 1;
    }
    std::cout << "accept\n";
    return 0;
}

int emit_certificate(const Certificate& cert, const FieldPtr& field) {
    emit_json(certificate_to_json(cert, field));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact witnesses and verifiers for root-of-unity polynomial certificates"};
    app.require_subcommand(1);
    app.add_option("--field", opt.field_desc, "ambient field descriptor, e.g. Q(a)/a^2+1");
    app.add_option("--precision-bits", opt.precision_bits, "working precision for ball refinement")
        ->check(CLI::Range(16L, 1L << 20));
    app.add_option("--output", opt.output, "output mode")->check(CLI::IsMember({"text", "json"}));

    long cheb_n = 0;
    auto* cheb = app.add_subcommand("cheb", "Chebyshev pair (X_n, Y_n)");
    cheb->add_option("n", cheb_n, "index")->required();

    unsigned long cyclo_n = 1;
    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic polynomial Phi_n");
    cyclo->add_option("n", cyclo_n, "index")->required()->check(CLI::PositiveNumber);

    std::string rc_poly;
    auto* rc = app.add_subcommand("recognize-c", "factor a root-of-unity polynomial");
    rc->add_option("poly", rc_poly, "integer polynomial in Z")->required();

    std::string ap_poly;
    unsigned long ap_d = 1;
    auto* ap = app.add_subcommand("approx", "Z-adic approximation by a product of cyclotomics");
    ap->add_option("poly", ap_poly, "integer polynomial with constant term +-1")->required();
    ap->add_option("d", ap_d, "precision")->required()->check(CLI::PositiveNumber);

    auto* wit = app.add_subcommand("witness", "build a certificate");
    wit->require_subcommand(1);
    std::string divu_g;
    unsigned long divu_u = 1;
    auto* wdivu = wit->add_subcommand("divu", "witness for G | Z^u - 1 with G(0) = 1");
    wdivu->add_option("G", divu_g)->required();
    wdivu->add_option("u", divu_u)->required()->check(CLI::PositiveNumber);
    std::string divisor_f;
    unsigned long divisor_u = 1;
    auto* wdivisor = wit->add_subcommand("divisor", "certificate that F divides Z^u - 1");
    wdivisor->add_option("F", divisor_f)->required();
    wdivisor->add_option("u", divisor_u)->required()->check(CLI::PositiveNumber);
    std::string zz_x;
    auto* wzz = wit->add_subcommand("zz", "witness that X lies in Z[Z]");
    wzz->add_option("X", zz_x)->required();
    std::string deg_f;
    auto* wdeg = wit->add_subcommand("degree", "degree witness for F");
    wdeg->add_option("F", deg_f)->required();

    std::string verify_path;
    auto* ver = app.add_subcommand("verify", "verify a certificate JSON document");
    ver->add_option("cert", verify_path, "path to certificate, or - for stdin")->required();

    std::string val_rf;
    auto* val = app.add_subcommand("valuation", "v_Z and v_Zinf of a rational function");
    val->add_option("ratfunc", val_rf)->required();

    auto* qf = app.add_subcommand("qf", "quadratic-form calculus");
    qf->require_subcommand(1);
    std::string qf_rf;
    auto* qfcase = qf->add_subcommand("case", "valuation case analysis of G(X)");
    qfcase->add_option("ratfunc", qf_rf)->required();

    std::string dec_poly;
    auto* dec = app.add_subcommand("decompose", "power-basis decomposition over the ambient field");
    dec->add_option("poly", dec_poly)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        FieldPtr field = parse_field_descriptor(opt.field_desc);
        if (cheb->parsed()) return cmd_cheb(opt, cheb_n);
        if (cyclo->parsed()) return cmd_cyclo(opt, cyclo_n);
        if (rc->parsed()) return cmd_recognize_c(opt, rc_poly);
        if (ap->parsed()) return cmd_approx(opt, ap_poly, ap_d);
        if (wit->parsed()) {
            if (wdivu->parsed())
                return emit_certificate(build_divu_witness(parse_poly(divu_g, field), divu_u), field);
            if (wdivisor->parsed())
                return emit_certificate(build_divisor_certificate(parse_poly(divisor_f, field), divisor_u),
                                        field);
            if (wzz->parsed()) return emit_certificate(build_zz_witness(parse_int_poly(zz_x)), field);
            if (wdeg->parsed()) {
                Poly<NFElem> f = parse_poly(deg_f, field);
                if (f.is_zero()) fail(errc::zero_input, "degree witness needs F != 0");
                return emit_certificate(build_degree_witness(f, f.degree()), field);
            }
        }
        if (ver->parsed()) return cmd_verify(verify_path);
        if (val->parsed()) return cmd_valuation(opt, field, val_rf);
        if (qf->parsed() && qfcase->parsed()) return cmd_qf_case(opt, field, qf_rf);
        if (dec->parsed()) return cmd_decompose(field, dec_poly);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const dioph::error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == errc::parse_error ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid JSON: " << e.what() << "\n";
        return 2;
    }
}
