/**
 * @file gekeler.hpp
 * @brief The polynomial phi_k whose roots are the j-invariants of the zeros
 * of E_k away from j = 0 and j = 1728.
 *
 * Every even k >= 4 splits as k = 12m + 4*delta + 6*epsilon with
 * delta in {0,1,2} and epsilon in {0,1}; then
 *
 *     E_k = E4^delta * E6^epsilon * Delta^m * phi_k(j),   deg phi_k = m.
 *
 * phi_by_division computes this for every k. For k = 0 mod 12 the
 * coefficients also have a closed form in the w_{a,k}, implemented by
 * phi_closed_form; the two routes must agree exactly.
 */
#pragma once

#include <vector>

#include "eisen/eisenstein.hpp"
#include "eisen/exact.hpp"
#include "eisen/polynomial.hpp"

namespace eisen {

struct WeightSplit {
    int m = 0;
    int delta = 0;
    int epsilon = 0;

    /// k even, k >= 4.
    static WeightSplit of(int k);
    friend bool operator==(const WeightSplit&, const WeightSplit&) = default;
};

class GekelerPolynomial {
public:
    GekelerPolynomial(int weight, RationalPolynomial poly);

    int weight() const { return weight_; }
    int degree() const { return poly_.degree(); }
    int delta() const { return split_.delta; }
    int epsilon() const { return split_.epsilon; }
    /// t_{k,r}, the coefficient of X^r.
    Rational coefficient(int r) const { return poly_.coefficient(r); }
    const RationalPolynomial& polynomial() const { return poly_; }

    friend bool operator==(const GekelerPolynomial&, const GekelerPolynomial&) = default;

private:
    int weight_;
    WeightSplit split_;
    RationalPolynomial poly_;
};

/// k = 0 (mod 12): t_{k,r} from the w_{3a,k} with pi^k/zeta(k) replaced by 2/zeta_ratio(k).
GekelerPolynomial phi_closed_form(int k, const EisensteinTable& table);

/// Any even k >= 4: divides E_k by E4^delta E6^epsilon Delta^m inside Q[E4, E6, Delta]
/// using E6^2 = E4^3 - 1728 Delta, with a hard zero-remainder check.
GekelerPolynomial phi_by_division(int k, const EisensteinTable& table);

/// (nu_p(t_{k,0}), ..., nu_p(t_{k,m-1})).
std::vector<Valuation> valuation_profile(const GekelerPolynomial& phi, long p);

} // namespace eisen
