#include <doctest.h>

#include "eisen/gekeler.hpp"

using namespace eisen;

namespace {

const EisensteinTable& table() {
    static const EisensteinTable t = [] {
        EisensteinTable t;
        t.extend_to(120);
        return t;
    }();
    return t;
}

RationalPolynomial poly(std::initializer_list<Rational> cs) { return RationalPolynomial(std::vector<Rational>(cs)); }

QSeries power(const QSeries& s, int e, std::size_t n) {
    QSeries out = QSeries::constant(Rational(1), n);
    for (int i = 0; i < e; ++i) out = out * s;
    return out;
}

// E4^delta E6^epsilon sum_r t_r E4^{3r} Delta^{m-r}, written without j so it
// stays a power series.
QSeries product_side(const GekelerPolynomial& phi, std::size_t n) {
    const QSeries e4 = eisenstein_q_expansion(4, n);
    const QSeries e6 = eisenstein_q_expansion(6, n);
    const QSeries delta = (power(e4, 3, n) - power(e6, 2, n)) * Rational(1, 1728);
    QSeries sum(n);
    for (int r = 0; r <= phi.degree(); ++r)
        sum += power(e4, 3 * r, n) * power(delta, phi.degree() - r, n) * phi.coefficient(r);
    return power(e4, phi.delta(), n) * power(e6, phi.epsilon(), n) * sum;
}

} // namespace

TEST_SUITE("gekeler") {

TEST_CASE("weight split") {
    CHECK(WeightSplit::of(4) == WeightSplit{0, 1, 0});
    CHECK(WeightSplit::of(14) == WeightSplit{0, 2, 1});
    CHECK(WeightSplit::of(24) == WeightSplit{2, 0, 0});
    CHECK(WeightSplit::of(26) == WeightSplit{1, 2, 1});
    for (int k = 4; k <= 200; k += 2) {
        const WeightSplit s = WeightSplit::of(k);
        CHECK(12 * s.m + 4 * s.delta + 6 * s.epsilon == k);
    }
    CHECK_THROWS_AS(WeightSplit::of(7), DomainError);
    CHECK_THROWS_AS(WeightSplit::of(2), DomainError);
}

TEST_CASE("phi_12 and phi_16") {
    // From E12 = Delta (j + t_0): the q^1 coefficient gives 720 + t_0 = 65520/691.
    CHECK(phi_closed_form(12, table()).polynomial() == poly({Rational(-432000, 691), 1}));
    CHECK(phi_by_division(12, table()).polynomial() == poly({Rational(-432000, 691), 1}));
    // From E16 = E4 Delta (j + t_0): 960 + t_0 = 16320/3617.
    const GekelerPolynomial p16 = phi_by_division(16, table());
    CHECK(p16.polynomial() == poly({Rational(-3456000, 3617), 1}));
    CHECK(p16.delta() == 1);
    CHECK(p16.epsilon() == 0);
}

TEST_CASE("phi_24") {
    const RationalPolynomial expected = poly({Rational(Integer("30710845440000"), Integer("236364091")),
                                              Rational(Integer("-340364160000"), Integer("236364091")), 1});
    CHECK(phi_closed_form(24, table()).polynomial() == expected);
    CHECK(phi_by_division(24, table()).polynomial() == expected);
}

TEST_CASE("degree-zero cases") {
    for (int k : {4, 6, 8, 10, 14}) {
        const GekelerPolynomial phi = phi_by_division(k, table());
        CHECK(phi.degree() == 0);
        CHECK(phi.polynomial() == poly({1}));
        CHECK(valuation_profile(phi, 2).empty());
    }
}

TEST_CASE("closed form needs k = 0 mod 12") {
    CHECK_THROWS_AS(phi_closed_form(16, table()), DomainError);
    CHECK_THROWS_AS(phi_closed_form(6, table()), DomainError);
    CHECK_THROWS_AS(phi_by_division(9, table()), DomainError);
}

TEST_CASE("monic of the expected degree") {
    for (int k = 4; k <= 120; k += 2) {
        const GekelerPolynomial phi = phi_by_division(k, table());
        CHECK(phi.degree() == WeightSplit::of(k).m);
        CHECK(phi.coefficient(phi.degree()) == Rational(1));
    }
    for (int k : {12, 24, 36}) CHECK(phi_closed_form(k, table()).polynomial().is_monic());
}

TEST_CASE("both routes agree") {
    for (int k = 12; k <= 120; k += 12) CHECK(phi_closed_form(k, table()) == phi_by_division(k, table()));
}

TEST_CASE("phi_k reproduces E_k as a q-series") {
    const std::size_t n = 12;
    for (int k = 4; k <= 60; k += 2) {
        const GekelerPolynomial phi = phi_by_division(k, table());
        CHECK_MESSAGE(product_side(phi, n) == q_expansion_direct(k, n), "k = ", k);
    }
}

TEST_CASE("valuation profiles") {
    CHECK(valuation_profile(phi_by_division(12, table()), 2) == std::vector<Valuation>{Valuation(7)});
    const auto p24 = valuation_profile(phi_by_division(24, table()), 2);
    REQUIRE(p24.size() == 2);
    CHECK(p24[0] == Valuation(15));
    // 340364160000 = 2^10 * 332386875.
    CHECK(p24[1] == Valuation(10));
    CHECK(valuation_profile(phi_by_division(12, table()), 691) == std::vector<Valuation>{Valuation(-1)});
}

}
