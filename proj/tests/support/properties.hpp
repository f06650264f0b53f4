#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eisen/exact.hpp"
#include "eisen/polynomial.hpp"
#include "eisen/qmring.hpp"

namespace eisen::testing {

/// Seeded source of small random inputs.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    /// Nonzero numerator in [-bound, bound], denominator in [1, bound].
    Rational rational(long bound);
    /// Random homogeneous form of the given weight in Q[E2, E4, E6].
    GradedForm form(int weight, int max_terms, bool allow_e2 = true);
    /// Monic integer polynomial, constant term first, other coefficients in [-bound, bound].
    std::vector<Integer> monic(int degree, long bound);
    /// Monic of degree n >= 1 with the Dumas shape at p: a_0 = p^v * unit with gcd(v, n) = 1,
    /// other coefficients divisible by enough powers of p; sometimes perturbed so it fails.
    std::vector<Integer> dumas_shaped(int degree, long p);

private:
    std::mt19937_64 rng_;
};

std::vector<Integer> multiply(const std::vector<Integer>& f, const std::vector<Integer>& g);
RationalPolynomial to_rational(const std::vector<Integer>& f);

/// Naive search for a proper monic integer factor of degree 1..max_degree (Kronecker's
/// method: interpolate through divisors of f at small integers). f must be monic.
std::optional<std::vector<Integer>> naive_factor(const std::vector<Integer>& f, int max_degree);

struct PropertyOutcome {
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

/// Slope condition (i) on random valuation vectors against the polygon chord test,
/// and (i) plus (ii) against the single-coprime-segment test.
PropertyOutcome property_dumas_polygon(std::uint64_t seed, int cases);
/// Distinct-degree multisets sum to the degree; root counts agree with brute force at small p.
PropertyOutcome property_ddf_degrees(std::uint64_t seed, int cases);
/// Leibniz rule, the two derivative routes, and derivation against q d/dq on q-expansions.
PropertyOutcome property_derivation(std::uint64_t seed, int cases);
/// mul is commutative and associative.
PropertyOutcome property_ring_laws(std::uint64_t seed, int cases);
/// Dumas-irreducible random polynomials have no small factor and are never called
/// reducible by the pattern oracle; products are never certified irreducible.
PropertyOutcome property_soundness(std::uint64_t seed, int cases);
/// Binomial parity, factorial valuations and Bernoulli valuations.
PropertyOutcome property_arithmetic();

} // namespace eisen::testing
