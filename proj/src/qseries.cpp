#include "eisen/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace eisen {

QSeries QSeries::constant(const Rational& c, std::size_t n_terms) {
    QSeries s(n_terms);
    if (n_terms > 0) s.coeffs_[0] = c;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.size() > size()) coeffs_.resize(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.size() > size()) coeffs_.resize(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<mpq_class> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j].is_zero()) continue;
            acc[i + j] += a[i].raw() * b[j].raw();
        }
    }
    std::vector<Rational> out;
    out.reserve(n);
    for (auto& x : acc) out.emplace_back(std::move(x));
    return QSeries(std::move(out));
}

QSeries QSeries::theta() const {
    QSeries r(size());
    for (std::size_t i = 1; i < size(); ++i) r.coeffs_[i] = coeffs_[i] * Rational(static_cast<long>(i));
    return r;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i];
        if (i == 1) os << "*q";
        else if (i > 1) os << "*q^" << i;
    }
    if (first) os << "0";
    os << " + O(q^" << size() << ")";
    return os.str();
}

QSeries eisenstein_q_expansion(int k, std::size_t n_terms) {
    if (k < 2 || k % 2 != 0) throw DomainError("Eisenstein series needs even k >= 2");
    QSeries s = QSeries::constant(Rational(1), n_terms);
    const Rational factor = -Rational(2L * k) / bernoulli(static_cast<unsigned>(k));
    for (std::size_t n = 1; n < n_terms; ++n)
        s[n] = factor * Rational(divisor_sigma(n, static_cast<unsigned>(k - 1)));
    return s;
}

} // namespace eisen
