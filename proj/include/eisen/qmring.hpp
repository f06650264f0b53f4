/**
 * @file qmring.hpp
 * @brief The graded ring Q[E2, E4, E6] of quasimodular forms.
 *
 * A GradedForm is a homogeneous polynomial in three generators of weights
 * 2, 4 and 6. The polynomial itself does not know which normalization its
 * generators carry; callers say so with Normalization when it matters:
 *
 *  - Normalization::E : generators are E_k (constant term 1).
 *  - Normalization::G : generators are G_k = 2 zeta(k) E_k with the common
 *    factor pi^weight dropped, so that G_k = zeta_ratio(k) * E_k.
 *
 * Eisenstein tables are stored in the G normalization, where the
 * coefficient of G4^a G6^b is w_{a,k}.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "eisen/exact.hpp"
#include "eisen/qseries.hpp"

namespace eisen {

struct Monomial {
    int e2 = 0;
    int e4 = 0;
    int e6 = 0;

    int weight() const { return 2 * e2 + 4 * e4 + 6 * e6; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class Normalization { E, G };

class GradedForm {
public:
    using TermMap = std::map<Monomial, Rational>;

    /// The zero form of the given weight. Zero adds to forms of any weight.
    explicit GradedForm(int weight = 0);
    static GradedForm constant(const Rational& c);
    static GradedForm monomial(const Monomial& m, const Rational& c = Rational(1));
    static GradedForm generator(int weight); // 2, 4 or 6

    int weight() const { return weight_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_e2() const;
    Rational coefficient(const Monomial& m) const;

    /// Adds c * m; m must have this form's weight unless the form is zero.
    void add_term(const Monomial& m, const Rational& c);

    GradedForm& operator+=(const GradedForm& o);
    GradedForm& operator-=(const GradedForm& o);
    GradedForm& operator*=(const Rational& c);
    friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
    friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
    friend GradedForm operator*(GradedForm a, const Rational& c) { return a *= c; }
    friend GradedForm operator*(const Rational& c, GradedForm a) { return a *= c; }
    friend GradedForm operator*(const GradedForm& a, const GradedForm& b);
    GradedForm operator-() const { return *this * Rational(-1); }

    GradedForm pow(unsigned e) const;

    friend bool operator==(const GradedForm& a, const GradedForm& b);

    /// "weight; e2,e4,e6:num/den; ..." in lexicographic exponent order.
    std::string serialize() const;
    static GradedForm deserialize(std::string_view text);

private:
    int weight_;
    TermMap terms_;
};

GradedForm add(const GradedForm& f, const GradedForm& g);
GradedForm mul(const GradedForm& f, const GradedForm& g);

/// Rescales generators between normalizations (G_k = zeta_ratio(k) * E_k).
GradedForm renormalize(const GradedForm& f, Normalization from, Normalization to);

/// The derivation f -> f' with f' = (1/2 pi i) df/dz, written in the chosen
/// normalization. Under E this is q d/dq through the Ramanujan identities;
/// under G it returns pi^2 * f', e.g. G4 -> G2 G4 - (7/2) G6.
GradedForm derivative(const GradedForm& f, Normalization norm);

/// Same derivation under G, computed by renormalizing through E and back.
GradedForm derivative_via_e(const GradedForm& f);

/// q-expansion obtained by substituting the exact expansions of the
/// generators. Under G the result is the series of f / pi^weight.
QSeries substitute_q_expansion(const GradedForm& f, std::size_t n_terms,
                               Normalization norm = Normalization::E);

} // namespace eisen
