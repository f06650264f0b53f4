// Acceptance run: one line per criterion with its measured time and budget.
// Exits nonzero if any criterion fails or overruns its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisen/replicate.hpp"
#include "support/properties.hpp"

using namespace eisen;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Gate {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

Outcome from_report(const CheckReport& rep) {
    std::string detail = std::to_string(rep.passed()) + " passed, " + std::to_string(rep.failed()) + " failed";
    if (!rep.ok())
        for (const auto& n : rep.notes) detail += "; " + n;
    return {rep.ok() && !rep.records.empty(), detail};
}

Outcome from_property(const char* what, const testing::PropertyOutcome& out) {
    std::string detail = std::string(what) + ": " + std::to_string(out.cases) + " cases";
    if (!out.ok()) detail += ", " + std::to_string(out.failures) + " failures, first: " + out.first_failure;
    return {out.ok(), detail};
}

} // namespace

int main() {
    Session session(0);

    const std::vector<Gate> criteria = {
        {"golden fixtures phi_16 and phi_24", 1.0, [&] { return from_report(check_golden(session)); }},

        {"G_12 = 25/143 G6^2 + 18/143 G4^3 by both recurrences", 1.0,
         [] {
             Expansion expected(12);
             expected.set(0, Rational(25, 143));
             expected.set(3, Rational(18, 143));
             EisensteinTable rad(Recurrence::rademacher), popa(Recurrence::popa);
             rad.extend_to(12);
             popa.extend_to(12);
             const bool ok = rad.at(12) == expected && popa.at(12) == expected;
             return Outcome{ok, "rademacher " + rad.at(12).to_string() + ", popa " + popa.at(12).to_string()};
         }},

        {"dual recurrence, even 8 <= k <= 200", 30.0,
         [&] { return from_report(check_dual_recurrence(session, 200)); }},

        {"q-series oracle, even 4 <= k <= 60, 30 terms", 30.0,
         [&] { return from_report(check_q_series(session, 60, 30)); }},

        {"binomial valuation lemma, k <= 1024, mod-4 step", 10.0,
         [&] {
             const CheckReport rep = check_lemma_valsum(session, 1024);
             Outcome out = from_report(rep);
             long special = 0;
             for (const auto& r : rep.records)
                 if (r.field("k_plus_2_power_of_two") == "yes") {
                     ++special;
                     out.pass = out.pass && r.field("binom_mod4") == "3";
                 }
             out.detail += ", mod-4 step at " + std::to_string(special) + " weights";
             return out;
         }},

        {"constant inequalities, 8 <= k <= 512, sharp pair", 120.0,
         [&] {
             const CheckReport rep = check_lemma_ineq(session, 512);
             Outcome out = from_report(rep);
             long sharp = 0;
             for (const auto& r : rep.records)
                 if (r.k >= 8 && r.field("sharp_pair") == "-1/-1") ++sharp;
             // k + 2 = 2^l for k = 14, 30, 62, 126, 254, 510.
             out.pass = out.pass && sharp == 6;
             out.detail += ", sharp pair at " + std::to_string(sharp) + " weights";
             return out;
         }},

        {"min nu_2(w) >= 0 and the conjecture, k <= 500", 600.0,
         [&] {
             const Outcome a = from_report(check_min_valuation(session, 500));
             const Outcome b = from_report(check_conjecture(session, 500));
             return Outcome{a.pass && b.pass, "min: " + a.detail + "; conjecture: " + b.detail};
         }},

        {"w and t valuations at k = 12*2^l, l <= 5", 300.0,
         [&] {
             bool ok = true;
             std::string detail;
             for (int ell = 0; ell <= 5; ++ell) {
                 const TheoremInstance t = theorem_instance(session, ell);
                 const bool this_ok = t.routes_agree && t.lemma_w_ok() && t.corollary_t_ok();
                 ok = ok && this_ok;
                 detail += (detail.empty() ? "" : ", ") + std::string("k=") + std::to_string(t.k) + " nu(t0)=" +
                           t.t0_valuation.to_string() + (this_ok ? "" : " FAIL");
             }
             return Outcome{ok, detail};
         }},

        {"Dumas certificates at 2 for phi_{12*2^l}, l <= 5, re-checked from JSON", 300.0,
         [&] {
             const CheckReport rep = check_theorem_main(session, 5);
             Outcome out = from_report(rep);
             long rechecked = 0;
             for (const auto& cert : rep.certificates) {
                 const auto parsed = nlohmann::ordered_json::parse(cert.dump());
                 const RecheckResult res = recheck_certificate(parsed);
                 if (res.valid && parsed["criterion"] == "dumas" && parsed["prime"] == 2) ++rechecked;
             }
             out.pass = out.pass && rechecked == 6;
             out.detail += ", " + std::to_string(rechecked) + " certificates re-checked";
             return out;
         }},

        {"Gekeler scan, even 4 <= k <= 446", 900.0,
         [&] {
             const CheckReport rep = gekeler_scan(session, 446);
             Outcome out = from_report(rep);
             long irreducible = 0, reducible = 0;
             for (const auto& r : rep.records) {
                 irreducible += r.field("verdict") == "irreducible" ? 1 : 0;
                 reducible += r.field("verdict") == "reducible" ? 1 : 0;
             }
             out.pass = out.pass && reducible == 0 && irreducible == static_cast<long>(rep.records.size());
             out.detail = std::to_string(irreducible) + "/" + std::to_string(rep.records.size()) +
                          " irreducible, " + std::to_string(reducible) + " reducible";
             for (const auto& n : rep.notes) out.detail += "; " + n;
             return out;
         }},

        {"property suites", 120.0,
         [] {
             const Outcome a = from_property("polygon", testing::property_dumas_polygon(0x5eed0001, 1000));
             const Outcome b = from_property("ddf", testing::property_ddf_degrees(0x5eed0002, 500));
             const Outcome c = from_property("derivation", testing::property_derivation(0x5eed0003, 100));
             return Outcome{a.pass && b.pass && c.pass, a.detail + "; " + b.detail + "; " + c.detail};
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs < c.budget_seconds;
        const bool pass = out.pass && in_budget;
        failures += pass ? 0 : 1;
        std::printf("%s  %s  [%.2f s, budget %.0f s%s]  %s\n", pass ? "PASS" : "FAIL", c.name.c_str(), secs,
                    c.budget_seconds, in_budget ? "" : ", over budget", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %zu criteria, %d failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
