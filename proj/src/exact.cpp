#include "eisen/exact.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <vector>

namespace eisen {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
    if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) {
        std::string str(s);
        if (!str.empty() && str.front() == '+') str.erase(0, 1);
        bool digits = !str.empty() && std::all_of(str.begin() + (str.front() == '-' ? 1 : 0), str.end(),
                                                  [](char c) { return c >= '0' && c <= '9'; });
        if (!digits || str == "-") throw ParseError("not an integer: '" + std::string(s) + "'");
        return Integer(str, 10);
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_short_string() const {
    return is_integer() ? value_.get_num().get_str() : to_string();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    mpq_class q(n, d);
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_short_string(); }

long Valuation::value() const {
    if (infinite_) throw DomainError("value() of infinite valuation");
    return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_prime(long p) {
    if (p < 2) throw InvalidPrime("invalid prime " + std::to_string(p));
    if (p >= 100 && !is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
}

Valuation valuation(const Integer& x, long p) {
    require_prime(p);
    if (x == 0) return Valuation::infinity();
    mpz_class rest;
    mpz_class prime(p);
    auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
    return Valuation(static_cast<long>(v));
}

Valuation valuation(const Rational& x, long p) {
    if (x.is_zero()) {
        require_prime(p);
        return Valuation::infinity();
    }
    return Valuation(valuation(x.num(), p).value() - valuation(x.den(), p).value());
}

unsigned digit_sum_base2(std::uint64_t m) { return static_cast<unsigned>(__builtin_popcountll(m)); }

std::uint64_t factorial_valuation2(std::uint64_t m) { return m - digit_sum_base2(m); }

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long r) {
    if (n < 0) throw DomainError("binomial with negative n");
    if (r < 0 || r > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

int binomial_mod2(std::uint64_t n, std::uint64_t r) { return (r & ~n) == 0 ? 1 : 0; }

namespace {

struct BernoulliMemo {
    std::shared_mutex mutex;
    std::vector<Rational> values{Rational(1), Rational(-1) / Rational(2)};
};

BernoulliMemo& bernoulli_memo() {
    static BernoulliMemo memo;
    return memo;
}

} // namespace

Rational bernoulli(unsigned n) {
    auto& memo = bernoulli_memo();
    {
        std::shared_lock lock(memo.mutex);
        if (n < memo.values.size()) return memo.values[n];
    }
    std::unique_lock lock(memo.mutex);
    auto& b = memo.values;
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (b.size() <= n) {
        const unsigned m = static_cast<unsigned>(b.size());
        if (m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        mpq_class acc = 0;
        Integer c = 1; // C(m+1, j), updated incrementally
        for (unsigned j = 0; j < m; ++j) {
            if (j == 0 || j == 1 || j % 2 == 0) acc += mpq_class(c) * b[j].raw();
            c = c * (m + 1 - j) / (j + 1);
        }
        b.emplace_back(mpq_class(-acc / (m + 1)));
    }
    return b[n];
}

Rational zeta_ratio(int k) {
    if (k < 2 || k % 2 != 0) throw DomainError("zeta_ratio needs even k >= 2, got " + std::to_string(k));
    Integer two_k = 1;
    two_k <<= static_cast<mp_bitcnt_t>(k);
    Rational r = Rational(two_k) * bernoulli(static_cast<unsigned>(k)) / Rational(factorial(static_cast<unsigned long>(k)));
    return ((k / 2 - 1) % 2 == 0) ? r : -r;
}

Integer divisor_sigma(unsigned long n, unsigned power) {
    Integer s = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), d, power);
        s += t;
        unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), e, power);
            s += t;
        }
    }
    return s;
}

} // namespace eisen
