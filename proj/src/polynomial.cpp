#include "eisen/polynomial.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace eisen {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int r) const {
    if (r < 0 || r > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(r)];
}

std::vector<Integer> RationalPolynomial::primitive_integer_part() const {
    if (coeffs_.empty()) return {};
    Integer lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    Integer content = 0;
    for (const auto& c : coeffs_) {
        out.push_back(c.num() * (lcm / c.den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (out.back() < 0) content = -content;
    for (auto& x : out) x /= content;
    return out;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int r = degree(); r >= 0; --r) {
        const Rational& c = coeffs_[static_cast<std::size_t>(r)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (r == 0 || !unit) os << mag;
        if (r > 0) {
            if (!unit) os << '*';
            os << var;
            if (r > 1) os << '^' << r;
        }
    }
    return os.str();
}

RationalPolynomial RationalPolynomial::read(std::istream& is) {
    std::vector<Rational> coeffs;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        coeffs.push_back(Rational::parse(line));
    }
    return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::write(std::ostream& os) const {
    for (const auto& c : coeffs_) os << c.to_string() << '\n';
}

} // namespace eisen
