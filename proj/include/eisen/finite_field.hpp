#pragma once

#include <cstdint>
#include <vector>

#include "eisen/exact.hpp"

namespace eisen::gf {

/// Polynomial over F_p, constant term first, trimmed (empty = zero).
using Poly = std::vector<std::uint64_t>;

/// p must be prime and below 2^32.
Poly reduce(const std::vector<Integer>& f, std::uint64_t p);

int degree(const Poly& f);
Poly derivative(const Poly& f, std::uint64_t p);
Poly remainder(Poly f, const Poly& g, std::uint64_t p);
Poly quotient(Poly f, const Poly& g, std::uint64_t p);
Poly gcd(Poly f, Poly g, std::uint64_t p);
Poly make_monic(Poly f, std::uint64_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

/// Degrees of the irreducible factors of a squarefree f of positive degree,
/// sorted ascending, by distinct-degree factorization.
std::vector<int> distinct_degree_pattern(const Poly& f, std::uint64_t p);

} // namespace eisen::gf
