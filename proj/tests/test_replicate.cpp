#include <doctest.h>

#include <stdexcept>

#include "eisen/replicate.hpp"

using namespace eisen;

TEST_SUITE("replicate") {

TEST_CASE("binomial valuation lemma examples") {
    Session s(1);
    const CheckReport rep = check_lemma_valsum(s, 64);
    CHECK(rep.ok());
    REQUIRE(rep.find(6));
    CHECK(rep.find(6)->field("value_nu2") == "1");
    CHECK(rep.find(6)->field("k_plus_2_power_of_two") == "yes");
    CHECK(rep.find(4)->field("value_nu2") == "0");
    CHECK(rep.find(4)->field("k_plus_2_power_of_two") == "no");
    CHECK(rep.find(14)->field("value_nu2") == "1");
    CHECK(rep.find(14)->field("binom_mod4") == "3");
    CHECK(rep.records.size() == 31);
}

TEST_CASE("constant inequalities") {
    Session s(1);
    const CheckReport rep = check_lemma_ineq(s, 64);
    CHECK(rep.ok());
    REQUIRE(rep.find(14));
    // s_2(7) - 1 = 2.
    CHECK(rep.find(14)->field("nu_q1") == "2");
    CHECK(rep.find(14)->field("sharp_pair") == "-1/-1");
    // 8 d_4^2 / (2 c_8 d_8) = 3/57.
    CHECK(rep.find(8)->field("nu_q2") == "0");
    CHECK(rep.find(30)->field("sharp_pair") == "-1/-1");
    CHECK(rep.find(16)->field("sharp_pair") == "-");
    for (const auto& r : rep.records) CHECK(r.field("closed_forms") == "yes");
}

TEST_CASE("minimum valuation and conjecture") {
    Session s(1);
    const CheckReport min = check_min_valuation(s, 140);
    CHECK(min.ok());
    CHECK(min.find(12)->field("min_valuation") == "0");
    CHECK(min.find(128)->field("min_valuation") == "0");
    const CheckReport conj = check_conjecture(s, 140);
    CHECK(conj.ok());
    CHECK(conj.find(16)->field("branch") == "power-of-two");
    CHECK(conj.find(16)->field("predicted") == "0");
    CHECK(conj.find(20)->field("predicted") == "0");
    CHECK(conj.find(14)->field("predicted") == "1");
    CHECK(conj.find(14)->field("min_valuation") == "1");
}

TEST_CASE("theorem instances") {
    Session s(1);
    const TheoremInstance i0 = theorem_instance(s, 0);
    CHECK(i0.k == 12);
    CHECK(i0.t0_valuation == Valuation(7));
    CHECK(i0.t0_expected == 7);
    CHECK(i0.dumas_ok());
    const TheoremInstance i3 = theorem_instance(s, 3);
    CHECK(i3.k == 96);
    CHECK(i3.t0_valuation == Valuation(63));
    CHECK(i3.routes_agree);
    CHECK(i3.lemma_w_ok());
    CHECK(i3.corollary_t_ok());
    CHECK(i3.recheck_valid);

    const CheckReport rep = check_theorem_main(s, 3);
    CHECK(rep.ok());
    CHECK(rep.records.size() == 4);
    CHECK(rep.certificates.size() == 4);
}

TEST_CASE("scan examples") {
    Session s(1);
    const CheckReport rep = gekeler_scan(s, 48);
    CHECK(rep.ok());
    CHECK(rep.find(16)->field("verdict") == "irreducible");
    CHECK(rep.find(16)->field("degree") == "1");
    CHECK(rep.find(24)->field("verdict") == "irreducible");
    CHECK(rep.find(24)->field("criterion") == "dumas");
    CHECK(rep.find(24)->field("primes") == "2");
    CHECK(rep.find(28)->field("verdict") == "irreducible");
    // Degree-zero weights are not scanned.
    CHECK(rep.find(14) == nullptr);
}

TEST_CASE("theorem certificates equal the scan certificates") {
    Session s(1);
    const CheckReport thm = check_theorem_main(s, 2);
    const CheckReport scan = gekeler_scan(s, 48);
    for (const auto& cert : thm.certificates) {
        bool found = false;
        for (const auto& other : scan.certificates)
            if (other["poly"]["id"] == cert["poly"]["id"]) found = (other == cert);
        CHECK_MESSAGE(found, cert["poly"]["id"].get<std::string>());
    }
}

TEST_CASE("golden fixtures") {
    Session s(1);
    CHECK(check_golden(s).ok());
}

TEST_CASE("small selftest") {
    Session s(1);
    const CheckReport rep = selftest(s, {40, 24, 12, 96});
    CHECK(rep.ok());
    CHECK(rep.status() == "PASS");
}

TEST_CASE("fault injection is caught with the first divergent weight") {
    Session s(1);
    s.ensure(120);
    Expansion bad = s.table().at(100);
    bad.set(bad.indices().front(), bad[bad.indices().front()] + Rational(1));
    s.table().insert(bad, Provenance::loaded);
    const CheckReport rep = check_dual_recurrence(s, 120);
    CHECK_FALSE(rep.ok());
    CHECK(rep.status() == "FAIL");
    bool noted = false;
    for (const auto& n : rep.notes) noted = noted || n == "first divergent k: 100";
    CHECK(noted);
    CHECK_FALSE(selftest(s, {120, 24, 12, 120}).ok());
}

TEST_CASE("reports are deterministic") {
    Session a(1), b(2);
    CHECK(check_conjecture(a, 100).to_json(false) == check_conjecture(b, 100).to_json(false));
    CHECK(gekeler_scan(a, 60).to_json(false) == gekeler_scan(b, 60).to_json(false));
    CHECK(check_lemma_ineq(a, 60).to_csv() == check_lemma_ineq(b, 60).to_csv());
}

TEST_CASE("report rendering and status") {
    CheckReport rep;
    rep.name = "demo";
    rep.records.push_back({4, {{"x", "1"}}, true});
    rep.records.push_back({6, {{"x", "2"}, {"y", "3"}}, false});
    CHECK(rep.passed() == 1);
    CHECK(rep.failed() == 1);
    CHECK(rep.status() == "FAIL");
    CHECK(rep.to_csv() == "k,x,y,pass\n4,1,,true\n6,2,3,false\n");
    const auto j = rep.to_json(false);
    CHECK(j["summary"]["status"] == "FAIL");
    CHECK_FALSE(j.contains("wall_seconds"));

    const CheckReport all = combine("all", {rep});
    CHECK(all.status() == "FAIL");
    CHECK(all.records.front().field("check") == "demo");
}

TEST_CASE("parallel map keeps order and forwards errors") {
    const auto sq = parallel_map(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < sq.size(); ++i) CHECK(sq[i] == static_cast<int>(i * i));
    CHECK_THROWS_AS(parallel_map(10, 3,
                                 [](std::size_t i) {
                                     if (i == 7) throw std::runtime_error("boom");
                                     return 0;
                                 }),
                    std::runtime_error);
}

}
