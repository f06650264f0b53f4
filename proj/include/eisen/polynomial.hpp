#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eisen/exact.hpp"

namespace eisen {

/// Dense univariate polynomial over Q, constant term first, no trailing zeros.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Zero past the degree.
    Rational coefficient(int r) const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

    /// The primitive integer polynomial with positive leading coefficient that
    /// is a rational multiple of this one.
    std::vector<Integer> primitive_integer_part() const;

    /// "X^2 - 34/3*X + 5"
    std::string to_string(const std::string& var = "X") const;

    /// One coefficient per line, constant term first, as num/den strings.
    static RationalPolynomial read(std::istream& is);
    void write(std::ostream& os) const;

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

} // namespace eisen
