#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eisen/exact.hpp"

namespace eisen {

/// Truncated power series in q with rational coefficients; coefficient i is the q^i term.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::size_t n_terms) : coeffs_(n_terms) {}
    explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static QSeries constant(const Rational& c, std::size_t n_terms);

    std::size_t size() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rational& c);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    /// Product truncated to the shorter length.
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /// q d/dq, i.e. (1/2 pi i) d/dz on q-expansions.
    QSeries theta() const;

    friend bool operator==(const QSeries& a, const QSeries& b) = default;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n by divisor enumeration (k even, k >= 2).
QSeries eisenstein_q_expansion(int k, std::size_t n_terms);

} // namespace eisen
