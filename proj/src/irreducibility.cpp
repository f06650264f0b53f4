#include "eisen/irreducibility.hpp"

#include <algorithm>
#include <numeric>

#include "eisen/finite_field.hpp"

namespace eisen {

namespace {

// > 0 when c lies strictly to the left of a->b (counter-clockwise turn).
long cross(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

long gcd_abs(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void require_monic(const RationalPolynomial& f) {
    if (f.degree() < 1) throw DomainError("irreducibility test needs degree >= 1");
    if (!f.is_monic()) throw DomainError("irreducibility test needs a monic polynomial");
}

} // namespace

bool NewtonPolygon::on_or_above_chord() const {
    if (vertices.size() < 2) return true;
    const PolygonPoint& first = vertices.front();
    const PolygonPoint& last = vertices.back();
    for (const auto& v : vertices)
        if (cross(first, last, v) < 0) return false;
    return true;
}

bool NewtonPolygon::single_coprime_segment() const {
    return segments.size() == 1 && gcd_abs(segments[0].rise(), segments[0].run()) == 1;
}

NewtonPolygon newton_polygon(std::span<const Valuation> valuations, long p) {
    if (valuations.empty() || valuations[0].is_infinite())
        throw DomainError("Newton polygon needs a nonzero constant term");
    NewtonPolygon poly;
    poly.prime = p;
    for (std::size_t r = 0; r < valuations.size(); ++r)
        if (valuations[r].is_finite()) poly.points.push_back({static_cast<long>(r), valuations[r].value()});

    // Lower hull, monotone chain; points arrive sorted by x.
    for (const auto& pt : poly.points) {
        while (poly.vertices.size() >= 2 &&
               cross(poly.vertices[poly.vertices.size() - 2], poly.vertices.back(), pt) <= 0)
            poly.vertices.pop_back();
        poly.vertices.push_back(pt);
    }
    for (std::size_t i = 1; i < poly.vertices.size(); ++i)
        poly.segments.push_back({poly.vertices[i - 1], poly.vertices[i]});
    return poly;
}

NewtonPolygon newton_polygon(const RationalPolynomial& f, long p) {
    require_monic(f);
    std::vector<Valuation> vals;
    for (const auto& c : f.coefficients()) vals.push_back(valuation(c, p));
    return newton_polygon(vals, p);
}

bool dumas_slope_condition(std::span<const Valuation> valuations) {
    if (valuations.size() < 2) return true;
    const long n = static_cast<long>(valuations.size()) - 1;
    if (valuations[0].is_infinite()) return false;
    const long v0 = valuations[0].value();
    // nu(a_r)/(n-r) >= nu(a_0)/n  <=>  nu(a_r) * n >= nu(a_0) * (n-r)
    for (long r = 1; r < n; ++r) {
        const auto& v = valuations[static_cast<std::size_t>(r)];
        if (v.is_finite() && v.value() * n < v0 * (n - r)) return false;
    }
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::irreducible: return "irreducible";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::reducible: return "reducible";
    }
    return "?";
}

std::string to_string(Criterion c) { return c == Criterion::dumas ? "dumas" : "finite-field-pattern"; }

IrreducibilityCertificate dumas_check(const RationalPolynomial& f, long p, std::string poly_id) {
    require_monic(f);
    require_prime(p);
    IrreducibilityCertificate cert;
    cert.poly_id = std::move(poly_id);
    cert.poly = f;
    cert.criterion = Criterion::dumas;
    cert.prime = p;
    const long n = f.degree();
    for (long r = 0; r < n; ++r) cert.valuations.push_back(valuation(f.coefficient(static_cast<int>(r)), p));
    cert.slope_den = n;

    if (cert.valuations[0].is_infinite()) {
        cert.reason = "zero constant term";
        return cert;
    }
    cert.slope_num = cert.valuations[0].value();
    cert.gcd = gcd_abs(cert.slope_num, n);

    std::vector<Valuation> all = cert.valuations;
    all.emplace_back(0);
    if (!dumas_slope_condition(all)) {
        cert.reason = "a coefficient lies below the chord";
        return cert;
    }
    if (cert.gcd != 1) {
        cert.reason = "gcd(nu_p(a_0), n) = " + std::to_string(cert.gcd);
        return cert;
    }
    cert.verdict = Verdict::irreducible;
    return cert;
}

std::vector<bool> subset_sums(std::span<const int> degrees) {
    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    std::vector<bool> reach(static_cast<std::size_t>(total + 1));
    reach[0] = true;
    for (int d : degrees)
        for (int s = total; s >= d; --s)
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
    return reach;
}

namespace {

Integer leading(const std::vector<Integer>& f) { return f.empty() ? Integer(0) : f.back(); }

bool divides(long p, const Integer& x) { return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }

// Proper factor degrees 1..n-1 compatible with every pattern.
std::vector<int> surviving_degrees(int n, const std::vector<DegreePattern>& patterns) {
    std::vector<bool> alive(static_cast<std::size_t>(n + 1), true);
    for (const auto& pat : patterns) {
        const auto sums = subset_sums(pat.degrees);
        for (int d = 0; d <= n; ++d)
            if (static_cast<std::size_t>(d) >= sums.size() || !sums[static_cast<std::size_t>(d)])
                alive[static_cast<std::size_t>(d)] = false;
    }
    std::vector<int> out;
    for (int d = 1; d < n; ++d)
        if (alive[static_cast<std::size_t>(d)]) out.push_back(d);
    return out;
}

} // namespace

IrreducibilityCertificate finite_field_degree_patterns(const std::vector<Integer>& f, std::span<const long> primes,
                                                       std::string poly_id) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) throw DomainError("degree-pattern test needs degree >= 1");
    IrreducibilityCertificate cert;
    cert.poly_id = std::move(poly_id);
    {
        std::vector<Rational> rc;
        for (const auto& c : f) rc.emplace_back(c, leading(f));
        cert.poly = RationalPolynomial(std::move(rc));
    }
    cert.criterion = Criterion::finite_field_pattern;

    if (f[0] == 0 && n >= 2) {
        cert.verdict = Verdict::reducible;
        cert.reason = "X divides the polynomial";
        return cert;
    }

    for (long p : primes) {
        require_prime(p);
        if (divides(p, leading(f)))
            throw DomainError(std::to_string(p) + " divides the leading coefficient");
        const gf::Poly fp = gf::reduce(f, static_cast<std::uint64_t>(p));
        if (!gf::is_squarefree(fp, static_cast<std::uint64_t>(p))) {
            cert.skipped_primes.push_back(p);
            continue;
        }
        cert.patterns.push_back({p, gf::distinct_degree_pattern(fp, static_cast<std::uint64_t>(p))});
    }
    if (cert.patterns.empty()) {
        cert.reason = "no usable prime";
        return cert;
    }
    const auto survivors = surviving_degrees(n, cert.patterns);
    if (survivors.empty()) {
        cert.verdict = Verdict::irreducible;
    } else {
        cert.reason = "possible factor degrees remain:";
        for (int d : survivors) cert.reason += " " + std::to_string(d);
    }
    return cert;
}

std::vector<long> oracle_primes(const std::vector<Integer>& f, std::size_t count, long min_prime,
                                std::vector<long>* skipped) {
    std::vector<long> out;
    // A polynomial with a repeated factor is not squarefree modulo any prime; bound the search.
    std::size_t examined = 0;
    for (long p = std::max(2L, min_prime); out.size() < count && examined < 50 * count + 100 && p < (1L << 31); ++p) {
        if (!is_prime(p) || divides(p, leading(f))) continue;
        ++examined;
        if (!gf::is_squarefree(gf::reduce(f, static_cast<std::uint64_t>(p)), static_cast<std::uint64_t>(p))) {
            if (skipped) skipped->push_back(p);
            continue;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<long> informative_primes(const std::vector<Integer>& f, std::size_t count, long min_prime,
                                     std::size_t max_candidates, std::vector<long>* skipped) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) throw DomainError("degree-pattern test needs degree >= 1");
    std::vector<long> out;
    std::vector<DegreePattern> kept;
    std::vector<int> open(static_cast<std::size_t>(n - 1));
    std::iota(open.begin(), open.end(), 1);
    std::size_t tried = 0;
    for (long p = std::max(2L, min_prime); out.size() < count && tried < max_candidates && !open.empty() && p < (1L << 31);
         ++p) {
        if (!is_prime(p) || divides(p, leading(f))) continue;
        ++tried;
        const gf::Poly fp = gf::reduce(f, static_cast<std::uint64_t>(p));
        if (!gf::is_squarefree(fp, static_cast<std::uint64_t>(p))) {
            if (skipped) skipped->push_back(p);
            continue;
        }
        kept.push_back({p, gf::distinct_degree_pattern(fp, static_cast<std::uint64_t>(p))});
        auto next = surviving_degrees(n, kept);
        if (next.size() < open.size() || out.empty()) {
            out.push_back(p);
            open = std::move(next);
        } else {
            kept.pop_back();
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const IrreducibilityCertificate& cert) {
    using nlohmann::ordered_json;
    ordered_json poly;
    poly["id"] = cert.poly_id;
    poly["degree"] = cert.poly.degree();
    poly["coefficients"] = ordered_json::array();
    for (const auto& c : cert.poly.coefficients()) poly["coefficients"].push_back(c.to_string());

    ordered_json j;
    j["poly"] = std::move(poly);
    if (cert.criterion == Criterion::dumas) j["prime"] = cert.prime;
    else j["prime"] = nullptr;
    j["valuations"] = ordered_json::array();
    for (const auto& v : cert.valuations) {
        if (v.is_infinite()) j["valuations"].push_back("inf");
        else j["valuations"].push_back(v.value());
    }
    j["slope_num"] = cert.slope_num;
    j["slope_den"] = cert.slope_den;
    j["gcd"] = cert.gcd;
    j["verdict"] = to_string(cert.verdict);
    j["criterion"] = to_string(cert.criterion);
    if (cert.criterion == Criterion::finite_field_pattern) {
        j["patterns"] = ordered_json::array();
        for (const auto& pat : cert.patterns) j["patterns"].push_back({{"prime", pat.prime}, {"degrees", pat.degrees}});
        j["skipped_primes"] = cert.skipped_primes;
    }
    j["reason"] = cert.reason;
    return j;
}

namespace {

RecheckResult fail(std::string why) { return {false, std::move(why)}; }

RecheckResult recheck_dumas(const RationalPolynomial& f, const nlohmann::ordered_json& j) {
    const long p = j.at("prime").get<long>();
    const long n = f.degree();
    std::vector<Valuation> vals;
    for (long r = 0; r < n; ++r) vals.push_back(valuation(f.coefficient(static_cast<int>(r)), p));
    const auto& listed = j.at("valuations");
    if (listed.size() != vals.size()) return fail("valuation vector has the wrong length");
    for (std::size_t r = 0; r < vals.size(); ++r) {
        const bool listed_inf = listed[r].is_string() && listed[r].get<std::string>() == "inf";
        if (listed_inf != vals[r].is_infinite() || (!listed_inf && listed[r].get<long>() != vals[r].value()))
            return fail("valuation of a_" + std::to_string(r) + " does not match");
    }
    const std::string verdict = j.at("verdict").get<std::string>();
    if (vals[0].is_infinite())
        return verdict == "irreducible" ? fail("zero constant term cannot certify") : RecheckResult{true, "inconclusive"};
    const long v0 = vals[0].value();
    if (j.at("slope_num").get<long>() != v0 || j.at("slope_den").get<long>() != n)
        return fail("slope does not match nu_p(a_0)/n");
    const long g = gcd_abs(v0, n);
    if (j.at("gcd").get<long>() != g) return fail("gcd does not match");
    std::vector<Valuation> all = vals;
    all.emplace_back(0);
    const bool holds = dumas_slope_condition(all) && g == 1;
    if ((verdict == "irreducible") != holds) return fail("verdict disagrees with the Dumas conditions");
    return {true, holds ? "irreducible" : "inconclusive"};
}

RecheckResult recheck_patterns(const RationalPolynomial& f, const nlohmann::ordered_json& j) {
    const auto ints = f.primitive_integer_part();
    const int n = f.degree();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "reducible") {
        if (f.coefficient(0).is_zero() && n >= 2) return {true, "reducible"};
        return fail("reducible verdict without a witness");
    }
    std::vector<DegreePattern> patterns;
    for (const auto& pat : j.at("patterns")) {
        const long p = pat.at("prime").get<long>();
        require_prime(p);
        if (divides(p, leading(ints))) return fail(std::to_string(p) + " divides the leading coefficient");
        const gf::Poly fp = gf::reduce(ints, static_cast<std::uint64_t>(p));
        if (!gf::is_squarefree(fp, static_cast<std::uint64_t>(p)))
            return fail("reduction mod " + std::to_string(p) + " is not squarefree");
        auto degrees = gf::distinct_degree_pattern(fp, static_cast<std::uint64_t>(p));
        if (degrees != pat.at("degrees").get<std::vector<int>>())
            return fail("degree pattern mod " + std::to_string(p) + " does not match");
        patterns.push_back({p, std::move(degrees)});
    }
    const bool holds = !patterns.empty() && surviving_degrees(n, patterns).empty();
    if ((verdict == "irreducible") != holds) return fail("verdict disagrees with the degree patterns");
    return {true, holds ? "irreducible" : "inconclusive"};
}

} // namespace

RecheckResult recheck_certificate(const nlohmann::ordered_json& j) {
    try {
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("poly").at("coefficients")) coeffs.push_back(Rational::parse(c.get<std::string>()));
        RationalPolynomial f(std::move(coeffs));
        if (f.degree() != j.at("poly").at("degree").get<int>()) return fail("degree does not match coefficients");
        if (!f.is_monic() || f.degree() < 1) return fail("polynomial is not monic of positive degree");
        const std::string criterion = j.at("criterion").get<std::string>();
        if (criterion == "dumas") return recheck_dumas(f, j);
        if (criterion == "finite-field-pattern") return recheck_patterns(f, j);
        return fail("unknown criterion '" + criterion + "'");
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace eisen
