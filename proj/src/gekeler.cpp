#include "eisen/gekeler.hpp"

#include <map>
#include <tuple>

namespace eisen {

WeightSplit WeightSplit::of(int k) {
    if (k < 4 || k % 2 != 0) throw DomainError("phi_k needs even k >= 4, got " + std::to_string(k));
    WeightSplit s;
    switch (k % 12) {
    case 0: break;
    case 2: s.delta = 2; s.epsilon = 1; break;
    case 4: s.delta = 1; break;
    case 6: s.epsilon = 1; break;
    case 8: s.delta = 2; break;
    case 10: s.delta = 1; s.epsilon = 1; break;
    }
    s.m = (k - 4 * s.delta - 6 * s.epsilon) / 12;
    return s;
}

GekelerPolynomial::GekelerPolynomial(int weight, RationalPolynomial poly)
    : weight_(weight), split_(WeightSplit::of(weight)), poly_(std::move(poly)) {
    if (poly_.degree() != split_.m)
        throw ConsistencyError("phi_" + std::to_string(weight) + " must have degree " + std::to_string(split_.m));
    if (!poly_.is_monic()) throw ConsistencyError("phi_" + std::to_string(weight) + " is not monic");
}

GekelerPolynomial phi_closed_form(int k, const EisensteinTable& table) {
    if (k < 12 || k % 12 != 0) throw DomainError("closed form of phi_k needs k = 0 mod 12, got " + std::to_string(k));
    const Expansion& w = table.at(k);
    const int m = k / 12;
    const Rational prefactor = Rational(2) / zeta_ratio(k);
    const Rational two(2), three(3), five(5), seven(7);

    std::vector<Rational> t(static_cast<std::size_t>(m + 1));
    for (int r = 0; r <= m; ++r) {
        Rational sum;
        for (int a = 0; a <= r; ++a) {
            const Rational num = two.pow(2 * k / 3 - 6 * r - 2 * a - 1);
            const Rational den = three.pow(k / 4 + 3 * r) * five.pow(a + k / 6) * seven.pow(k / 6 - 2 * a);
            sum += w[3 * a] * num / den * Rational(binomial(m - a, m - r));
        }
        t[static_cast<std::size_t>(r)] = ((m - r) % 2 == 0 ? prefactor : -prefactor) * sum;
    }
    if (t.back() != Rational(1))
        throw ConsistencyError("closed form of phi_" + std::to_string(k) + " has leading coefficient " +
                               t.back().to_string());
    return GekelerPolynomial(k, RationalPolynomial(std::move(t)));
}

namespace {

// Monomial E4^e4 E6^e6 Delta^disc.
using DeltaMonomial = std::tuple<int, int, int>;

} // namespace

GekelerPolynomial phi_by_division(int k, const EisensteinTable& table) {
    const WeightSplit split = WeightSplit::of(k);
    const GradedForm e_form =
        renormalize(table.at(k).to_form(), Normalization::G, Normalization::E) * zeta_ratio(k).inverse();

    std::map<DeltaMonomial, Rational> terms;
    for (const auto& [mono, c] : e_form.terms()) {
        const int e4 = mono.e4 - split.delta;
        const int e6 = mono.e6 - split.epsilon;
        if (mono.e2 != 0 || e4 < 0 || e6 < 0)
            throw ConsistencyError("E_" + std::to_string(k) + " is not divisible by E4^" + std::to_string(split.delta) +
                                   " E6^" + std::to_string(split.epsilon));
        terms[{e4, e6, 0}] += c;
    }

    // Rewrite E6^2 -> E4^3 - 1728 Delta until no E6^2 remains.
    for (bool changed = true; changed;) {
        changed = false;
        std::map<DeltaMonomial, Rational> next;
        for (const auto& [mono, c] : terms) {
            if (c.is_zero()) continue;
            const auto [e4, e6, disc] = mono;
            if (e6 < 2) {
                next[mono] += c;
                continue;
            }
            changed = true;
            next[{e4 + 3, e6 - 2, disc}] += c;
            next[{e4, e6 - 2, disc + 1}] += c * Rational(-1728);
        }
        terms = std::move(next);
    }

    std::vector<Rational> coeffs(static_cast<std::size_t>(split.m + 1));
    for (const auto& [mono, c] : terms) {
        if (c.is_zero()) continue;
        const auto [e4, e6, disc] = mono;
        if (e6 != 0 || e4 % 3 != 0 || e4 / 3 + disc != split.m)
            throw ConsistencyError("nonzero remainder dividing E_" + std::to_string(k) + " by Delta^" +
                                   std::to_string(split.m));
        // E4^{3i} / Delta^i = j^i
        coeffs[static_cast<std::size_t>(e4 / 3)] += c;
    }
    return GekelerPolynomial(k, RationalPolynomial(std::move(coeffs)));
}

std::vector<Valuation> valuation_profile(const GekelerPolynomial& phi, long p) {
    std::vector<Valuation> out;
    for (int r = 0; r < phi.degree(); ++r) out.push_back(valuation(phi.coefficient(r), p));
    return out;
}

} // namespace eisen
