#include "eisen/qmring.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace eisen {

namespace {

void check_weight(int w) {
    if (w < 0 || w % 2 != 0) throw WeightError("graded form weight must be even and nonnegative, got " + std::to_string(w));
}

} // namespace

GradedForm::GradedForm(int weight) : weight_(weight) { check_weight(weight); }

GradedForm GradedForm::constant(const Rational& c) {
    GradedForm f(0);
    f.add_term({}, c);
    return f;
}

GradedForm GradedForm::monomial(const Monomial& m, const Rational& c) {
    if (m.e2 < 0 || m.e4 < 0 || m.e6 < 0) throw DomainError("negative exponent in monomial");
    GradedForm f(m.weight());
    f.add_term(m, c);
    return f;
}

GradedForm GradedForm::generator(int weight) {
    switch (weight) {
    case 2: return monomial({1, 0, 0});
    case 4: return monomial({0, 1, 0});
    case 6: return monomial({0, 0, 1});
    default: throw DomainError("no generator of weight " + std::to_string(weight));
    }
}

bool GradedForm::has_e2() const {
    for (const auto& [m, c] : terms_)
        if (m.e2 != 0) return true;
    return false;
}

Rational GradedForm::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedForm::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.weight() != weight_) {
        if (!terms_.empty())
            throw WeightError("term of weight " + std::to_string(m.weight()) + " added to form of weight " +
                              std::to_string(weight_));
        weight_ = m.weight();
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedForm& GradedForm::operator+=(const GradedForm& o) {
    if (!is_zero() && !o.is_zero() && weight_ != o.weight_)
        throw WeightError("cannot add forms of weight " + std::to_string(weight_) + " and " + std::to_string(o.weight_));
    if (is_zero()) weight_ = o.weight_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedForm& GradedForm::operator-=(const GradedForm& o) { return *this += -o; }

GradedForm& GradedForm::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

GradedForm operator*(const GradedForm& a, const GradedForm& b) {
    std::map<Monomial, mpq_class> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            acc[{ma.e2 + mb.e2, ma.e4 + mb.e4, ma.e6 + mb.e6}] += ca.raw() * cb.raw();
    GradedForm r(a.weight_ + b.weight_);
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) r.terms_.emplace(m, Rational(std::move(c)));
    return r;
}

GradedForm GradedForm::pow(unsigned e) const {
    GradedForm result = constant(Rational(1));
    GradedForm base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

bool operator==(const GradedForm& a, const GradedForm& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.weight_ == b.weight_ && a.terms_ == b.terms_;
}

std::string GradedForm::serialize() const {
    std::ostringstream os;
    os << weight_;
    for (const auto& [m, c] : terms_) os << "; " << m.e2 << ',' << m.e4 << ',' << m.e6 << ':' << c.to_string();
    return os.str();
}

GradedForm GradedForm::deserialize(std::string_view text) {
    auto next = [&text]() {
        auto pos = text.find(';');
        std::string_view field = text.substr(0, pos);
        text = pos == std::string_view::npos ? std::string_view{} : text.substr(pos + 1);
        return std::string(field);
    };
    std::string head = next();
    GradedForm f;
    try {
        f = GradedForm(std::stoi(head));
    } catch (const std::logic_error&) {
        throw ParseError("bad graded form weight '" + head + "'");
    }
    while (!text.empty()) {
        std::string field = next();
        Monomial m;
        char c1 = 0, c2 = 0, colon = 0;
        std::istringstream is(field);
        if (!(is >> m.e2 >> c1 >> m.e4 >> c2 >> m.e6 >> colon) || c1 != ',' || c2 != ',' || colon != ':')
            throw ParseError("bad graded form term '" + field + "'");
        std::string coeff;
        is >> coeff;
        if (m.weight() != f.weight_) throw ParseError("term weight mismatch in '" + field + "'");
        f.add_term(m, Rational::parse(coeff));
    }
    return f;
}

GradedForm add(const GradedForm& f, const GradedForm& g) { return f + g; }
GradedForm mul(const GradedForm& f, const GradedForm& g) { return f * g; }

GradedForm renormalize(const GradedForm& f, Normalization from, Normalization to) {
    if (from == to) return f;
    const std::array<Rational, 3> r{zeta_ratio(2), zeta_ratio(4), zeta_ratio(6)};
    const long sign = from == Normalization::G ? 1 : -1; // G -> E multiplies by r^e
    GradedForm out(f.weight());
    for (const auto& [m, c] : f.terms())
        out.add_term(m, c * r[0].pow(sign * m.e2) * r[1].pow(sign * m.e4) * r[2].pow(sign * m.e6));
    return out;
}

namespace {

// Images of the three generators under the derivation.
std::array<GradedForm, 3> generator_derivatives(Normalization norm) {
    const GradedForm g2 = GradedForm::generator(2);
    const GradedForm g4 = GradedForm::generator(4);
    const GradedForm g6 = GradedForm::generator(6);
    if (norm == Normalization::E) {
        // Ramanujan: E2' = (E2^2 - E4)/12, E4' = (E2 E4 - E6)/3, E6' = (E2 E6 - E4^2)/2
        return {(g2 * g2 - g4) * (Rational(1) / Rational(12)),
                (g2 * g4 - g6) * (Rational(1) / Rational(3)),
                (g2 * g6 - g4 * g4) * (Rational(1) / Rational(2))};
    }
    // pi^2 G4' = G2 G4 - (7/2) G6 and pi^2 G6' = (3/2) G2 G6 - (15/7) G4^2;
    // the G2 rule is Ramanujan's E2' rescaled.
    return {g2 * g2 * (Rational(1) / Rational(4)) - g4 * (Rational(5) / Rational(4)),
            g2 * g4 - g6 * (Rational(7) / Rational(2)),
            g2 * g6 * (Rational(3) / Rational(2)) - g4 * g4 * (Rational(15) / Rational(7))};
}

} // namespace

GradedForm derivative(const GradedForm& f, Normalization norm) {
    const auto images = generator_derivatives(norm);
    GradedForm out(f.weight() + 2);
    for (const auto& [m, c] : f.terms()) {
        const std::array<int, 3> exps{m.e2, m.e4, m.e6};
        for (int g = 0; g < 3; ++g) {
            if (exps[g] == 0) continue;
            Monomial rest = m;
            (g == 0 ? rest.e2 : g == 1 ? rest.e4 : rest.e6) -= 1;
            out += GradedForm::monomial(rest, c * Rational(exps[g])) * images[g];
        }
    }
    return out;
}

GradedForm derivative_via_e(const GradedForm& f) {
    auto e_form = renormalize(f, Normalization::G, Normalization::E);
    return renormalize(derivative(e_form, Normalization::E), Normalization::E, Normalization::G);
}

QSeries substitute_q_expansion(const GradedForm& f, std::size_t n_terms, Normalization norm) {
    const GradedForm ef = renormalize(f, norm, Normalization::E);
    QSeries total(n_terms);
    if (n_terms == 0) throw DomainError("substitute_q_expansion needs n_terms >= 1");

    std::array<std::vector<QSeries>, 3> powers;
    const std::array<int, 3> weights{2, 4, 6};
    for (int g = 0; g < 3; ++g) powers[g].push_back(QSeries::constant(Rational(1), n_terms));
    auto power = [&](int g, int e) -> const QSeries& {
        auto& cache = powers[g];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * eisenstein_q_expansion(weights[g], n_terms));
        return cache[e];
    };

    for (const auto& [m, c] : ef.terms()) total += (power(0, m.e2) * power(1, m.e4) * power(2, m.e6)) * c;
    return total;
}

} // namespace eisen
