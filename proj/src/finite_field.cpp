#include "eisen/finite_field.hpp"

#include <algorithm>

namespace eisen::gf {

namespace {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    // a^(p-2)
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1U) result = mul(result, base, p);
        base = mul(base, base, p);
        e >>= 1U;
    }
    return result;
}

} // namespace

Poly reduce(const std::vector<Integer>& f, std::uint64_t p) {
    if (p < 2 || p >= (1ULL << 32)) throw DomainError("finite field prime out of range");
    Poly out;
    out.reserve(f.size());
    const Integer mod(static_cast<unsigned long>(p));
    for (const auto& c : f) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
        out.push_back(r.get_ui());
    }
    trim(out);
    return out;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly derivative(const Poly& f, std::uint64_t p) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p, p));
    trim(d);
    return d;
}

Poly remainder(Poly f, const Poly& g, std::uint64_t p) {
    if (g.empty()) throw DomainError("polynomial division by zero");
    const std::uint64_t lead_inv = inverse(g.back(), p);
    const std::size_t dg = g.size() - 1;
    trim(f);
    while (f.size() > dg) {
        const std::uint64_t factor = mul(f.back(), lead_inv, p);
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + p - mul(factor, g[i], p)) % p;
        trim(f);
    }
    return f;
}

Poly quotient(Poly f, const Poly& g, std::uint64_t p) {
    if (g.empty()) throw DomainError("polynomial division by zero");
    trim(f);
    if (f.size() < g.size()) return {};
    const std::uint64_t lead_inv = inverse(g.back(), p);
    const std::size_t dg = g.size() - 1;
    Poly q(f.size() - dg);
    while (f.size() > dg) {
        const std::uint64_t factor = mul(f.back(), lead_inv, p);
        const std::size_t shift = f.size() - 1 - dg;
        q[shift] = factor;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + p - mul(factor, g[i], p)) % p;
        f.pop_back();
    }
    trim(q);
    return q;
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = remainder(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(std::move(f), p);
}

Poly make_monic(Poly f, std::uint64_t p) {
    trim(f);
    if (f.empty()) return f;
    const std::uint64_t inv = inverse(f.back(), p);
    for (auto& c : f) c = mul(c, inv, p);
    return f;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + mul(a[i], b[j], p)) % p;
    }
    return remainder(std::move(prod), modulus, p);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint64_t p) {
    Poly result = remainder(Poly{1}, modulus, p);
    base = remainder(std::move(base), modulus, p);
    while (e > 0) {
        if (e & 1U) result = mul_mod(result, base, modulus, p);
        e >>= 1U;
        if (e > 0) base = mul_mod(base, base, modulus, p);
    }
    return result;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
    if (degree(f) < 1) return true;
    const Poly d = derivative(f, p);
    if (d.empty()) return false;
    return degree(gcd(f, d, p)) == 0;
}

std::vector<int> distinct_degree_pattern(const Poly& f_in, std::uint64_t p) {
    Poly f = make_monic(f_in, p);
    if (degree(f) < 1) throw DomainError("distinct-degree factorization of a constant");
    std::vector<int> degrees;
    const Poly x{0, 1};
    Poly h = remainder(x, f, p);
    for (int d = 1; 2 * d <= degree(f); ++d) {
        h = pow_mod(h, p, f, p); // x^(p^d) mod f
        Poly h_minus_x = h;
        h_minus_x.resize(std::max<std::size_t>(h_minus_x.size(), 2));
        h_minus_x[1] = (h_minus_x[1] + p - 1) % p;
        trim(h_minus_x);
        const Poly g = gcd(f, h_minus_x, p);
        if (degree(g) > 0) {
            for (int i = 0; i < degree(g) / d; ++i) degrees.push_back(d);
            f = quotient(f, g, p);
            h = remainder(h, f, p);
        }
    }
    if (degree(f) > 0) degrees.push_back(degree(f));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

} // namespace eisen::gf
