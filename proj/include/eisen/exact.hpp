/**
 * @file exact.hpp
 * @brief Exact scalars and the arithmetic helpers used throughout the library.
 *
 * Rational is a thin value type over GMP's mpq_class that keeps the
 * canonical form (lowest terms, positive denominator, zero as 0/1) and turns
 * division by zero into an exception instead of a crash. Everything else in
 * this header works on top of it: p-adic valuations, binomials and their
 * parity, Bernoulli numbers and the rational zeta ratio 2*zeta(k)/pi^k.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "eisen/errors.hpp"

namespace eisen {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}       // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class v);

    /// Accepts "n" or "n/d" with optional leading sign; result is canonical.
    static Rational parse(std::string_view text);

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Always "num/den", the serialization used by tables, certificates and reports.
    std::string to_string() const;
    /// "num" for integers, "num/den" otherwise.
    std::string to_short_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational inverse() const;
    /// Integer power, negative exponents allowed for nonzero values.
    Rational pow(long e) const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// p-adic valuation; Infinity is the valuation of zero and compares above every finite value.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long v) : value_(v) {}
    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    /// Finite value; throws DomainError on Infinity.
    long value() const;

    std::string to_string() const;

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

private:
    long value_ = 0;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Throws InvalidPrime for p < 2, and for composite p >= 100 (smaller p is trusted).
void require_prime(long p);
bool is_prime(long n);

Valuation valuation(const Integer& x, long p);
Valuation valuation(const Rational& x, long p);

unsigned digit_sum_base2(std::uint64_t m);
/// nu_2(m!) = m - s_2(m).
std::uint64_t factorial_valuation2(std::uint64_t m);

Integer factorial(unsigned long n);
/// Zero when r < 0 or r > n.
Integer binomial(long n, long r);
/// Parity of C(n, r) by the bitwise subset test.
int binomial_mod2(std::uint64_t n, std::uint64_t r);

/// B_n with B_1 = -1/2; memoized, safe for concurrent callers.
Rational bernoulli(unsigned n);

/// 2*zeta(k)/pi^k = (-1)^(k/2-1) 2^k B_k / k! for even k >= 2.
Rational zeta_ratio(int k);

/// Sum of positive divisors d^power of n.
Integer divisor_sigma(unsigned long n, unsigned power);

} // namespace eisen
