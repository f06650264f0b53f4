/**
 * @file irreducibility.hpp
 * @brief Irreducibility certificates for monic polynomials over Q.
 *
 * Two independent criteria:
 *
 *  - Dumas at a prime p: if nu_p(a_r)/(n-r) >= nu_p(a_0)/n for every r < n
 *    and gcd(nu_p(a_0), n) = 1, the polynomial is irreducible. The test is
 *    one-directional and never reports "reducible". All slope comparisons are
 *    done on cross-multiplied integers.
 *
 *  - Degree patterns modulo primes: the factor degrees of f mod p (squarefree
 *    reductions only) constrain the degrees of any rational factor to the
 *    subset sums of each pattern. If no proper degree survives every pattern,
 *    f is irreducible.
 *
 * Certificates serialize to JSON and can be re-checked from the JSON alone.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisen/exact.hpp"
#include "eisen/polynomial.hpp"

namespace eisen {

struct PolygonPoint {
    long x = 0;
    long y = 0;
    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonSegment {
    PolygonPoint from;
    PolygonPoint to;

    long run() const { return to.x - from.x; }
    long rise() const { return to.y - from.y; }
};

struct NewtonPolygon {
    long prime = 0;
    /// (r, nu_p(a_r)) for every r with a_r != 0.
    std::vector<PolygonPoint> points;
    /// Lower convex hull; collinear points are not vertices.
    std::vector<PolygonPoint> vertices;
    std::vector<PolygonSegment> segments;

    /// True when no vertex lies strictly below the chord from (0, v_0) to (n, v_n).
    bool on_or_above_chord() const;
    /// One segment whose height and width are coprime.
    bool single_coprime_segment() const;
};

/// Requires monic f of degree >= 1 with f(0) != 0.
NewtonPolygon newton_polygon(const RationalPolynomial& f, long p);
/// valuations[r] = nu_p(a_r) for r = 0..n; valuations[0] must be finite.
NewtonPolygon newton_polygon(std::span<const Valuation> valuations, long p);

/// Slope condition of the Dumas criterion on valuations[0..n]; index n is ignored.
bool dumas_slope_condition(std::span<const Valuation> valuations);

enum class Verdict { irreducible, inconclusive, reducible };
enum class Criterion { dumas, finite_field_pattern };
std::string to_string(Verdict v);
std::string to_string(Criterion c);

struct DegreePattern {
    long prime = 0;
    std::vector<int> degrees;
};

struct IrreducibilityCertificate {
    std::string poly_id;
    RationalPolynomial poly;
    Verdict verdict = Verdict::inconclusive;
    Criterion criterion = Criterion::dumas;

    // dumas
    long prime = 0;
    std::vector<Valuation> valuations; // nu_p(a_r), r = 0..n-1
    long slope_num = 0;                // nu_p(a_0); the chord slope is -slope_num/slope_den
    long slope_den = 0;                // n
    long gcd = 0;

    // finite_field_pattern
    std::vector<DegreePattern> patterns;
    std::vector<long> skipped_primes;

    std::string reason;
};

/// Throws DomainError for non-monic f or degree < 1.
IrreducibilityCertificate dumas_check(const RationalPolynomial& f, long p, std::string poly_id = {});

/// f is a primitive integer polynomial (constant term first); no prime may divide
/// its leading coefficient. Non-squarefree reductions are skipped and recorded.
IrreducibilityCertificate finite_field_degree_patterns(const std::vector<Integer>& f, std::span<const long> primes,
                                                       std::string poly_id = {});

/// The first `count` primes p >= min_prime not dividing the leading coefficient
/// of f at which f is squarefree; primes passed over for squarefreeness are
/// appended to `skipped`. Gives up after 50 * count + 100 candidate primes.
std::vector<long> oracle_primes(const std::vector<Integer>& f, std::size_t count, long min_prime = 2,
                                std::vector<long>* skipped = nullptr);

/// Up to `count` primes p >= min_prime, each kept only if its degree pattern
/// rules out a factor degree that the earlier ones left open. Stops once every
/// proper degree is excluded or after `max_candidates` candidate primes.
std::vector<long> informative_primes(const std::vector<Integer>& f, std::size_t count, long min_prime,
                                     std::size_t max_candidates = 200, std::vector<long>* skipped = nullptr);

/// Subset sums of a degree multiset, as a membership vector over 0..sum.
std::vector<bool> subset_sums(std::span<const int> degrees);

nlohmann::ordered_json to_json(const IrreducibilityCertificate& cert);

struct RecheckResult {
    bool valid = false;
    std::string detail;
};

/// Recomputes the witness from the JSON alone: valuations and both Dumas
/// conditions, or every listed degree pattern and the subset-sum argument.
RecheckResult recheck_certificate(const nlohmann::ordered_json& cert);

} // namespace eisen
