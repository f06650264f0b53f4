// eisen: command-line front end for the Eisenstein-series checks.
//
// Exit status: 0 when the command ran and every check passed, 1 when a check
// failed, 2 on bad input or usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eisen/gekeler.hpp"
#include "eisen/irreducibility.hpp"
#include "eisen/replicate.hpp"

namespace {

using namespace eisen;
using nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Globals {
    bool json = false;
    bool csv = false;
    std::string out;
    unsigned threads = 0;
    std::string table_dump;
    std::string table_load;

    Format format() const { return json ? Format::json : (csv ? Format::csv : Format::text); }
};

void emit(const Globals& g, const std::string& body) {
    if (g.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream os(g.out);
    if (!os) throw std::runtime_error("cannot write " + g.out);
    os << body;
}

int emit_report(const Globals& g, const CheckReport& rep) {
    switch (g.format()) {
    case Format::json: emit(g, rep.to_json().dump(2) + "\n"); break;
    case Format::csv: emit(g, rep.to_csv()); break;
    case Format::text: emit(g, rep.to_text()); break;
    }
    if (!g.out.empty() && g.format() != Format::text) std::cerr << rep.name << ": " << rep.status() << "\n";
    return rep.ok() ? 0 : 1;
}

std::string monomial_name(int a, int b) {
    std::string s;
    if (a) s += "G4^" + std::to_string(a);
    if (a && b) s += " ";
    if (b) s += "G6^" + std::to_string(b);
    return s.empty() ? "1" : s;
}

int run_wk(const Globals& g, Session& s, int k) {
    if (k < 4 || k % 2) throw DomainError("weight must be even and >= 4");
    s.ensure(k);
    const Expansion& w = s.table().at(k);
    std::ostringstream os;
    if (g.format() == Format::json) {
        ordered_json j;
        j["k"] = k;
        j["provenance"] = to_string(s.table().provenance(k));
        j["min_nu2"] = min_valuation2(w).to_string();
        j["coefficients"] = ordered_json::array();
        for (int a : w.indices()) j["coefficients"].push_back({{"a", a}, {"b", w.b_for(a)}, {"w", w[a].to_string()}});
        os << j.dump(2) << "\n";
    } else if (g.format() == Format::csv) {
        os << "k,a,b,w\n";
        for (int a : w.indices()) os << k << "," << a << "," << w.b_for(a) << "," << w[a].to_string() << "\n";
    } else {
        os << "G_" << k << " (" << to_string(s.table().provenance(k)) << ", min nu_2 = " << min_valuation2(w) << ")\n";
        for (int a : w.indices())
            os << "  w_" << a << " = " << w[a].to_short_string() << "   [" << monomial_name(a, w.b_for(a)) << "]\n";
    }
    emit(g, os.str());
    return 0;
}

int run_phi(const Globals& g, Session& s, int k) {
    if (k < 4 || k % 2) throw DomainError("weight must be even and >= 4");
    s.ensure(k);
    const GekelerPolynomial phi = phi_by_division(k, s.table());
    std::optional<bool> routes;
    if (k % 12 == 0) routes = phi_closed_form(k, s.table()) == phi;
    const std::vector<Valuation> profile = valuation_profile(phi, 2);
    std::ostringstream os;
    if (g.format() == Format::json) {
        ordered_json j;
        j["k"] = k;
        j["degree"] = phi.degree();
        j["delta"] = phi.delta();
        j["epsilon"] = phi.epsilon();
        j["coefficients"] = ordered_json::array();
        for (const auto& c : phi.polynomial().coefficients()) j["coefficients"].push_back(c.to_string());
        j["nu2_profile"] = ordered_json::array();
        for (const auto& v : profile) j["nu2_profile"].push_back(v.to_string());
        j["routes_agree"] = routes ? ordered_json(*routes) : ordered_json(nullptr);
        os << j.dump(2) << "\n";
    } else if (g.format() == Format::csv) {
        os << "k,r,t\n";
        for (int r = 0; r <= phi.degree(); ++r) os << k << "," << r << "," << phi.coefficient(r).to_string() << "\n";
    } else {
        os << "phi_" << k << "(X) = " << phi.polynomial().to_string("X") << "\n";
        os << "  degree " << phi.degree() << ", E_" << k << " = E4^" << phi.delta() << " E6^" << phi.epsilon()
           << " Delta^" << phi.degree() << " phi(j)\n";
        if (!profile.empty()) {
            os << "  nu_2(t_r), r = 0.." << phi.degree() - 1 << ":";
            for (const auto& v : profile) os << " " << v;
            os << "\n";
        }
        if (routes) os << "  closed form agrees with division: " << (*routes ? "yes" : "no") << "\n";
    }
    emit(g, os.str());
    return routes.value_or(true) ? 0 : 1;
}

int run_newton(const Globals& g, const std::string& path, long p) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    const RationalPolynomial f = RationalPolynomial::read(is);
    require_prime(p);
    const NewtonPolygon poly = newton_polygon(f, p);
    const IrreducibilityCertificate cert = dumas_check(f, p, path);
    std::ostringstream os;
    if (g.format() == Format::json) {
        ordered_json j;
        j["certificate"] = to_json(cert);
        j["polygon"] = ordered_json::array();
        for (const auto& seg : poly.segments)
            j["polygon"].push_back({{"from", {seg.from.x, seg.from.y}}, {"to", {seg.to.x, seg.to.y}}});
        j["single_coprime_segment"] = poly.single_coprime_segment();
        os << j.dump(2) << "\n";
    } else if (g.format() == Format::csv) {
        os << "r,valuation\n";
        for (int r = 0; r <= f.degree(); ++r) os << r << "," << valuation(f.coefficient(r), p) << "\n";
    } else {
        os << "f(X) = " << f.to_string("X") << "\n";
        os << "Newton polygon at p = " << p << ":";
        for (const auto& v : poly.vertices) os << " (" << v.x << "," << v.y << ")";
        os << "\n";
        os << "dumas: " << to_string(cert.verdict);
        if (!cert.reason.empty()) os << " (" << cert.reason << ")";
        else os << " (nu_p(a_0) = " << cert.slope_num << ", n = " << cert.slope_den << ", gcd = " << cert.gcd << ")";
        os << "\n";
    }
    emit(g, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein series expansions, the polynomials phi_k and their irreducibility"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    auto* json_flag = app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--csv", g.csv, "CSV output")->excludes(json_flag);
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");
    app.add_option("--table-dump", g.table_dump, "Write the expansion table as CSV after the run");
    app.add_option("--table-load", g.table_load, "Start from an expansion table CSV")->check(CLI::ExistingFile);

    auto* selftest_cmd = app.add_subcommand("selftest", "Recurrence, q-series and phi-route cross-checks");

    int wk_k = 0;
    auto* wk_cmd = app.add_subcommand("wk", "Coefficients w_{a,k} of G_k in G4^a G6^b");
    wk_cmd->add_option("--k", wk_k, "Even weight >= 4")->required();

    int phi_k = 0;
    auto* phi_cmd = app.add_subcommand("phi", "The polynomial phi_k");
    phi_cmd->add_option("--k", phi_k, "Even weight >= 4")->required();

    std::string lemma;
    int check_k_max = 0;
    auto* check_cmd = app.add_subcommand("check", "Verify one lemma over a range of weights");
    check_cmd->add_option("--lemma", lemma, "valsum | ineq | min | conjecture")
        ->required()
        ->check(CLI::IsMember({"valsum", "ineq", "min", "conjecture"}));
    check_cmd->add_option("--k-max", check_k_max, "Largest weight (default 1024, 512, 500, 500)");

    int ell_max = 5;
    auto* theorem_cmd = app.add_subcommand("theorem", "Irreducibility of phi_{12*2^l} by Dumas at 2");
    theorem_cmd->add_option("--ell-max", ell_max, "Largest l")->capture_default_str();

    int scan_k_max = 446;
    auto* scan_cmd = app.add_subcommand("scan", "Irreducibility of every phi_k up to a weight");
    scan_cmd->add_option("--k-max", scan_k_max, "Largest weight")->capture_default_str();

    std::string poly_path;
    long newton_p = 2;
    auto* newton_cmd = app.add_subcommand("newton", "Newton polygon and Dumas test of a polynomial file");
    newton_cmd->add_option("--poly", poly_path, "One coefficient per line, constant term first")
        ->required()
        ->check(CLI::ExistingFile);
    newton_cmd->add_option("--p", newton_p, "Prime")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        std::optional<Session> session;
        if (!g.table_load.empty()) {
            std::ifstream is(g.table_load);
            session.emplace(EisensteinTable::read_csv(is), g.threads);
        } else {
            session.emplace(g.threads);
        }
        Session& s = *session;

        int code = 0;
        if (*selftest_cmd) {
            code = emit_report(g, selftest(s));
        } else if (*wk_cmd) {
            code = run_wk(g, s, wk_k);
        } else if (*phi_cmd) {
            code = run_phi(g, s, phi_k);
        } else if (*check_cmd) {
            if (lemma == "valsum") code = emit_report(g, check_lemma_valsum(s, check_k_max ? check_k_max : 1024));
            else if (lemma == "ineq") code = emit_report(g, check_lemma_ineq(s, check_k_max ? check_k_max : 512));
            else if (lemma == "min") code = emit_report(g, check_min_valuation(s, check_k_max ? check_k_max : 500));
            else code = emit_report(g, check_conjecture(s, check_k_max ? check_k_max : 500));
        } else if (*theorem_cmd) {
            code = emit_report(g, check_theorem_main(s, ell_max));
        } else if (*scan_cmd) {
            code = emit_report(g, gekeler_scan(s, scan_k_max));
        } else if (*newton_cmd) {
            code = run_newton(g, poly_path, newton_p);
        }

        if (!g.table_dump.empty()) {
            std::ofstream os(g.table_dump);
            if (!os) throw std::runtime_error("cannot write " + g.table_dump);
            s.table().write_csv(os);
        }
        return code;
    } catch (const std::exception& e) {
        std::cerr << "eisen: " << e.what() << "\n";
        return 2;
    }
}
