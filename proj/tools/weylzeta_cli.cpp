/*
 * weylzeta_cli.cpp
 * ----------------
 * Command-line front end. Thin wrappers only: every computation happens in
 * the library.
 *
 * Exit codes: 0 success, 1 domain error (unsupported configuration, exact
 * root failure, non-moderate operator, bad scenario), 2 usage/parse error.
 */
#include <complex>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <weylzeta/weylzeta.hpp>

namespace {

using namespace weylzeta;
using nlohmann::json;

struct Options {
    std::string format = "text";
    std::vector<std::string> assign;
    std::string family;
    std::string op_expr;
    std::string at = "inf";
    int katz_n = 2, katz_m = 0;
    int N = 2, d = 2;
    std::string param = "a";
    std::string scenario_path;
    std::string acampo_m;
};

std::map<std::string, std::complex<double>> parse_assignments(
    const std::vector<std::string>& raw) {
    std::map<std::string, std::complex<double>> out;
    for (const auto& s : raw) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("--assign expects name=p/q", 0);
        Rational v = Rational::parse(s.substr(eq + 1));
        out[s.substr(0, eq)] = std::complex<double>(v.to_double(), 0.0);
    }
    return out;
}

std::string fmt_complex(std::complex<double> v) {
    auto chop = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", chop(v.real()), chop(v.imag()));
    return buf;
}

// Resolve the operator under study: either a catalog family (with its
// factored indicial data) or a parsed expression.
CatalogOperator resolve_operator(const Options& opt) {
    if (!opt.family.empty()) {
        if (opt.family == "bessel") return catalog_bessel();
        if (opt.family == "gauss") return catalog_gauss();
        if (opt.family == "katz") return catalog_katz(opt.katz_n, opt.katz_m);
        throw ParseError("unknown family '" + opt.family + "'", 0);
    }
    if (opt.op_expr.empty()) throw ParseError("no operator given (expression or --family)", 0);
    return {"expr", parse_operator(opt.op_expr), {}, {}};
}

LocalPoint parse_point(const std::string& s) {
    if (s == "inf" || s == "infinity") return LocalPoint::infinity();
    return LocalPoint::finite(Rational::parse(s));
}

json multiset_json(const EigenMultiset& m,
                   const std::map<std::string, std::complex<double>>* assign) {
    json arr = json::array();
    for (const auto& [cls, mult] : m) {
        json e{{"class", cls.str()}, {"mult", mult}};
        if (assign) e["approx"] = fmt_complex(cls.eval(*assign));
        arr.push_back(e);
    }
    return arr;
}

json zeta_json(const ZetaFunction& z) {
    json factors = json::array();
    for (const auto& [key, e] : z.factors())
        factors.push_back({{"class", key.first.str()}, {"m", key.second}, {"exp", e}});
    return json{{"lead", z.lead().str()}, {"lead_power", z.lead_power()}, {"factors", factors}};
}

void print_multiset_lines(const EigenMultiset& m,
                          const std::map<std::string, std::complex<double>>* assign) {
    for (const auto& [cls, mult] : m) {
        std::cout << "  " << cls.str() << ": " << mult;
        if (assign) std::cout << " ~ " << fmt_complex(cls.eval(*assign));
        std::cout << "\n";
    }
}

void emit_zeta_result(const Options& opt, const ZetaFunction& z,
                      const std::optional<VirtualMultiplicity>& mu,
                      const std::map<std::string, std::complex<double>>* assign) {
    if (opt.format == "json") {
        json out{{"zeta", zeta_json(z)}};
        if (mu) out["mu"] = multiset_json(*mu, assign);
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "zeta: " << z.str() << "\n";
    if (mu) {
        std::cout << "mu:\n";
        print_multiset_lines(*mu, assign);
    }
}

int cmd_fourier(const Options& opt) {
    WeylOp p = opt.family.empty() ? parse_operator(opt.op_expr) : resolve_operator(opt).op;
    std::string printed = print_operator(fourier(p));
    if (opt.format == "json")
        std::cout << json{{"operator", printed}}.dump(2) << "\n";
    else
        std::cout << printed << "\n";
    return 0;
}

int cmd_slopes(const Options& opt) {
    auto cat = resolve_operator(opt);
    SlopeSet s = slopes(cat.op, parse_point(opt.at));
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& q : s) arr.push_back(q.str());
        std::cout << json{{"slopes", arr},
                          {"moderate_at_infinity", is_moderate_at_infinity(cat.op)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "{";
    bool first = true;
    for (const auto& q : s) {
        if (!first) std::cout << ", ";
        std::cout << q.str();
        first = false;
    }
    std::cout << "}\n";
    return 0;
}

int cmd_exponents(const Options& opt) {
    auto cat = resolve_operator(opt);
    LocalPoint at = parse_point(opt.at);
    auto assign = parse_assignments(opt.assign);
    std::vector<ExponentQ> roots = char_exponents(cat.op, at, cat.hints);
    std::sort(roots.begin(), roots.end());
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& x : roots) {
            json e{{"exponent", x.str()}};
            if (!assign.empty()) e["approx"] = fmt_complex(x.eval_complex(assign));
            arr.push_back(e);
        }
        std::cout << json{{"exponents", arr}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << roots[i].str();
        if (!assign.empty()) std::cout << " ~ " << fmt_complex(roots[i].eval_complex(assign));
    }
    std::cout << "}\n";
    return 0;
}

int cmd_monodromy_inf(const Options& opt) {
    auto cat = resolve_operator(opt);
    auto assign = parse_assignments(opt.assign);
    EigenMultiset m = monodromy_at_infinity(cat.op, cat.hints);
    if (opt.format == "json") {
        std::cout << json{{"mu", multiset_json(m, assign.empty() ? nullptr : &assign)}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "monodromy at infinity:\n";
    print_multiset_lines(m, assign.empty() ? nullptr : &assign);
    return 0;
}

int cmd_reciprocity(const Options& opt) {
    auto cat = resolve_operator(opt);
    auto assign = parse_assignments(opt.assign);
    ReciprocityReport rep = reciprocity_check(cat.op, cat.hints);
    const auto* ap = assign.empty() ? nullptr : &assign;
    if (opt.format == "json") {
        std::cout << json{{"holds", rep.holds},
                          {"left", multiset_json(rep.left, ap)},
                          {"right", multiset_json(rep.right, ap)},
                          {"right_inverted", multiset_json(rep.right_inverted, ap)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "holds: " << (rep.holds ? "true" : "false") << "\n";
    std::cout << "left:\n";
    print_multiset_lines(rep.left, ap);
    std::cout << "right:\n";
    print_multiset_lines(rep.right, ap);
    std::cout << "right^-1:\n";
    print_multiset_lines(rep.right_inverted, ap);
    return 0;
}

int cmd_zeta_mt3(const Options& opt) {
    auto assign = parse_assignments(opt.assign);
    ZetaFunction z = falpha_infinity_zeta(opt.N, opt.d, opt.param);
    VirtualMultiplicity mu = multiplicities_from_zeta(z, opt.N);
    emit_zeta_result(opt, z, mu, assign.empty() ? nullptr : &assign);
    return 0;
}

int cmd_zeta_scenario(const Options& opt) {
    auto assign = parse_assignments(opt.assign);
    ScenarioResult r = run_scenario_file(opt.scenario_path);
    emit_zeta_result(opt, r.zeta, r.mu, assign.empty() ? nullptr : &assign);
    return 0;
}

int cmd_zeta_acampo(const Options& opt) {
    std::vector<int> m;
    std::stringstream ss(opt.acampo_m);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) m.push_back(static_cast<int>(Rational::parse(tok).num()));
    ZetaFunction z = acampo_monomial(m);
    emit_zeta_result(opt, z, std::nullopt, nullptr);
    return 0;
}

int cmd_zeta_chi(const Options& opt) {
    long long chi = chi_hypersurface(opt.N, opt.d);
    if (opt.format == "json")
        std::cout << json{{"chi", chi}}.dump(2) << "\n";
    else
        std::cout << chi << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact monodromy-at-infinity data for Weyl-algebra operators, "
                 "their Fourier transforms, and the monodromy zeta calculus"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--assign", opt.assign, "Numeric parameter assignment name=p/q (repeatable)");

    auto add_operator_inputs = [&](CLI::App* c, bool with_at) {
        c->add_option("expr", opt.op_expr, "Operator expression");
        c->add_option("--op", opt.op_expr, "Operator expression (same as the positional)");
        c->add_option("--family", opt.family, "Catalog family: bessel, gauss, katz");
        c->add_option("--n", opt.katz_n, "Katz family: number of alpha factors");
        c->add_option("--m", opt.katz_m, "Katz family: number of beta factors");
        if (with_at) c->add_option("--at", opt.at, "Point: 0, inf, or a rational");
    };

    auto* c_fourier = app.add_subcommand("fourier", "Fourier transform of an operator");
    add_operator_inputs(c_fourier, false);
    auto* c_slopes = app.add_subcommand("slopes", "Slope set of the Newton polygon at a point");
    add_operator_inputs(c_slopes, true);
    auto* c_exponents =
        app.add_subcommand("exponents", "Characteristic exponents at 0 or infinity");
    add_operator_inputs(c_exponents, true);
    auto* c_monodromy =
        app.add_subcommand("monodromy-inf", "Eigenvalues of the monodromy at infinity");
    add_operator_inputs(c_monodromy, false);
    auto* c_reciprocity = app.add_subcommand(
        "reciprocity", "Check the monodromy reciprocity law for an operator");
    add_operator_inputs(c_reciprocity, false);

    auto* c_zeta = app.add_subcommand("zeta", "Monodromy zeta calculus");
    c_zeta->require_subcommand(1);
    auto* z_mt3 = c_zeta->add_subcommand(
        "mt3", "Closed-form zeta at infinity for the f^alpha family (smooth top part)");
    z_mt3->add_option("--N", opt.N, "Ambient dimension")->required();
    z_mt3->add_option("--d", opt.d, "Degree of f")->required();
    z_mt3->add_option("--param", opt.param, "Name of the exponent parameter");
    auto* z_scenario = c_zeta->add_subcommand("scenario", "Run a stratification scenario file");
    z_scenario->add_option("file", opt.scenario_path, "Scenario JSON file")->required();
    auto* z_acampo = c_zeta->add_subcommand("acampo", "Zeta of a monomial at the origin");
    z_acampo->add_option("--m", opt.acampo_m, "Comma-separated positive exponents")->required();
    auto* z_chi = c_zeta->add_subcommand(
        "chi", "Euler characteristic of a smooth degree-d hypersurface in P^N");
    z_chi->add_option("--N", opt.N, "Projective dimension")->required();
    z_chi->add_option("--d", opt.d, "Degree")->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_fourier)) return cmd_fourier(opt);
        if (app.got_subcommand(c_slopes)) return cmd_slopes(opt);
        if (app.got_subcommand(c_exponents)) return cmd_exponents(opt);
        if (app.got_subcommand(c_monodromy)) return cmd_monodromy_inf(opt);
        if (app.got_subcommand(c_reciprocity)) return cmd_reciprocity(opt);
        if (app.got_subcommand(c_zeta)) {
            if (c_zeta->got_subcommand(z_mt3)) return cmd_zeta_mt3(opt);
            if (c_zeta->got_subcommand(z_scenario)) return cmd_zeta_scenario(opt);
            if (c_zeta->got_subcommand(z_acampo)) return cmd_zeta_acampo(opt);
            if (c_zeta->got_subcommand(z_chi)) return cmd_zeta_chi(opt);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
