#include "eisen/replicate.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace eisen {

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string str(long v) { return std::to_string(v); }
std::string str(const Valuation& v) { return v.to_string(); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<int> even_range(int from, int to) {
    std::vector<int> ks;
    for (int k = from + (from & 1); k <= to; k += 2) ks.push_back(k);
    return ks;
}

void require_k_max(int k_max, int least, const char* what) {
    if (k_max < least) throw DomainError(std::string(what) + " needs k_max >= " + std::to_string(least));
}

/// (-1)^{k/2} + C(k, k/2-1), the common denominator of the quotients in the Popa recurrence.
Integer valsum_value(int k) {
    const Integer sign = (k / 2) % 2 == 0 ? 1 : -1;
    return sign + binomial(k, k / 2 - 1);
}

std::string join(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

} // namespace

std::string Record::field(const std::string& name) const {
    for (const auto& [key, value] : fields)
        if (key == name) return value;
    return {};
}

std::size_t CheckReport::passed() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return r.pass; }));
}

std::size_t CheckReport::failed() const { return records.size() - passed(); }

const Record* CheckReport::find(int k) const {
    for (const auto& r : records)
        if (r.k == k) return &r;
    return nullptr;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << "== " << name;
    if (!parameters.empty()) {
        os << " (";
        for (std::size_t i = 0; i < parameters.size(); ++i)
            os << (i ? ", " : "") << parameters[i].first << "=" << parameters[i].second;
        os << ")";
    }
    os << " ==\n";
    for (const auto& r : records) {
        os << "k=" << r.k;
        for (const auto& [key, value] : r.fields) os << "  " << key << "=" << value;
        os << "  " << (r.pass ? "ok" : "FAIL") << "\n";
    }
    for (const auto& n : notes) os << "note: " << n << "\n";
    os << "summary: " << passed() << " passed, " << failed() << " failed, " << std::fixed << std::setprecision(2)
       << wall_seconds << " s -> " << status() << "\n";
    return os.str();
}

nlohmann::ordered_json CheckReport::to_json(bool with_timing) const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["check"] = name;
    j["parameters"] = ordered_json::object();
    for (const auto& [key, value] : parameters) j["parameters"][key] = value;
    j["records"] = ordered_json::array();
    for (const auto& r : records) {
        ordered_json rec;
        rec["k"] = r.k;
        for (const auto& [key, value] : r.fields) rec[key] = value;
        rec["pass"] = r.pass;
        j["records"].push_back(std::move(rec));
    }
    j["notes"] = notes;
    j["summary"] = {{"passed", passed()}, {"failed", failed()}, {"status", status()}};
    if (!certificates.empty()) j["certificates"] = certificates;
    if (with_timing) j["wall_seconds"] = wall_seconds;
    return j;
}

std::string CheckReport::to_csv() const {
    std::vector<std::string> columns;
    for (const auto& r : records)
        for (const auto& [key, value] : r.fields)
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    std::ostringstream os;
    os << "k";
    for (const auto& c : columns) os << "," << csv_escape(c);
    os << ",pass\n";
    for (const auto& r : records) {
        os << r.k;
        for (const auto& c : columns) os << "," << csv_escape(r.field(c));
        os << "," << (r.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

CheckReport combine(std::string name, const std::vector<CheckReport>& parts) {
    CheckReport out;
    out.name = std::move(name);
    for (const auto& part : parts) {
        for (const auto& p : part.parameters) out.parameters.emplace_back(part.name + "." + p.first, p.second);
        for (auto r : part.records) {
            r.fields.insert(r.fields.begin(), {"check", part.name});
            out.records.push_back(std::move(r));
        }
        for (const auto& n : part.notes) out.notes.push_back(part.name + ": " + n);
        out.notes.push_back(part.name + ": " + part.status());
        out.certificates.insert(out.certificates.end(), part.certificates.begin(), part.certificates.end());
        out.wall_seconds += part.wall_seconds;
    }
    return out;
}

Session::Session(unsigned threads)
    : threads_(threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads) {}

Session::Session(EisensteinTable table, unsigned threads) : Session(threads) { table_ = std::move(table); }

void Session::ensure(int k_max) { table_.extend_to(k_max); }

// ---------------------------------------------------------------------------
// Binomial lemmas

CheckReport check_lemma_valsum(Session& s, int k_max) {
    require_k_max(k_max, 4, "check_lemma_valsum");
    Stopwatch clock;
    CheckReport rep;
    rep.name = "lemma-valsum";
    rep.parameters = {{"k_max", str(k_max)}};
    const auto ks = even_range(4, k_max);
    rep.records = parallel_map(ks.size(), s.threads(), [&](std::size_t i) {
        const int k = ks[i];
        const Integer binom = binomial(k, k / 2 - 1);
        const Integer value = valsum_value(k);
        const Valuation nu = valuation(value, 2);
        const bool special = is_power_of_two(k + 2);
        const long predicted = special ? 1 : 0;

        Record r{k, {}, true};
        r.fields = {{"value_nu2", str(nu)}, {"predicted", str(predicted)}, {"k_plus_2_power_of_two", yes_no(special)}};
        // Lucas: the parity of C(k, k/2-1) alone decides the case split.
        const int parity = binomial_mod2(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(k / 2 - 1));
        const bool lucas_ok = parity == static_cast<int>(mpz_fdiv_ui(binom.get_mpz_t(), 2)) && parity == (special ? 1 : 0);
        r.fields.emplace_back("lucas_parity", str(parity));
        bool granville_ok = true;
        if (special) {
            const unsigned long mod4 = mpz_fdiv_ui(binom.get_mpz_t(), 4);
            granville_ok = mod4 == 3;
            r.fields.emplace_back("binom_mod4", str(static_cast<long>(mod4)));
        } else {
            r.fields.emplace_back("binom_mod4", "-");
        }
        r.pass = nu.is_finite() && nu.value() == predicted && lucas_ok && granville_ok;
        return r;
    });
    long special_count = 0;
    for (int k : ks) special_count += is_power_of_two(k + 2) ? 1 : 0;
    rep.notes.push_back("mod-4 step checked at " + str(special_count) + " weights with k+2 a power of two");
    rep.wall_seconds = clock.seconds();
    return rep;
}

CheckReport check_lemma_ineq(Session& s, int k_max) {
    require_k_max(k_max, 8, "check_lemma_ineq");
    Stopwatch clock;
    CheckReport rep;
    rep.name = "lemma-ineq";
    rep.parameters = {{"k_max", str(k_max)}};

    std::vector<Rational> d(static_cast<std::size_t>(k_max + 1));
    for (int k = 2; k <= k_max; k += 2) d[static_cast<std::size_t>(k)] = d_constant(k);
    auto dk = [&](int k) -> const Rational& { return d.at(static_cast<std::size_t>(k)); };

    const auto ks = even_range(4, k_max);
    rep.records = parallel_map(ks.size(), s.threads(), [&](std::size_t i) {
        const int k = ks[i];
        const int h = k / 2;
        const Rational cd = c_constant(k) * dk(k);
        const Rational V(valsum_value(k));
        const bool special = is_power_of_two(k + 2);

        // |d_{k/2}|^2 = ((k/2-1)!)^2 / 2^(k+2); only the square enters, so odd k/2 is fine.
        const Integer fh = factorial(static_cast<unsigned long>(h - 1));
        const Rational d_half_sq = Rational(Integer(fh * fh)) / Rational(2).pow(k + 2);

        const Rational q1 = dk(k - 2) / (Rational(2) * cd);
        const Rational q1_closed =
            Rational(Integer(-2 * factorial(static_cast<unsigned long>(k - 2)))) /
            (Rational(Integer(factorial(static_cast<unsigned long>(h - 1)) * factorial(static_cast<unsigned long>(h)))) * V);
        const Rational q2 = Rational(k) * d_half_sq / (Rational(2) * cd);
        // The closed form reads d_{k/2}^2 formally as (-1)^{k/2} ((k/2-1)!)^2 / 2^(k+2); only the sign differs.
        const Rational q2_closed = h % 2 == 0 ? Rational(h - 1) / V : -(Rational(h - 1) / V);

        const Valuation v1 = valuation(q1, 2);
        const Valuation v2 = valuation(q2, 2);
        const Valuation nu_v = valuation(V, 2);
        const long v1_formula = static_cast<long>(digit_sum_base2(static_cast<std::uint64_t>(h))) - nu_v.value();

        bool closed_ok = q1 == q1_closed && q2 == q2_closed;
        Valuation v3_min = Valuation::infinity();
        int j_count = 0;
        std::string sharp = "-";
        bool sharp_ok = true;
        for (int j = 3; j <= h - 2; j += 2) {
            ++j_count;
            const Rational dd = dk(j + 1) * dk(k - j - 1) / cd;
            const Rational ta = Rational(binomial(h, j)) * dd;
            const Rational tb = Rational(binomial(h - 2, j)) * dd;
            closed_ok = closed_ok && ta == Rational(binomial(k - j - 2, h - 2)) / V &&
                        tb == Rational(binomial(k - j - 2, h)) / V;
            v3_min = std::min(v3_min, valuation(ta + tb, 2));
            if (special && j == h - 2) {
                const Valuation va = valuation(ta, 2), vb = valuation(tb, 2);
                sharp = va.to_string() + "/" + vb.to_string();
                sharp_ok = va == Valuation(-1) && vb == Valuation(-1);
            }
        }
        // k+2 = 2^l forces k/2-2 odd; it is in range from k = 14 on.
        if (special && h - 2 >= 3 && sharp == "-") sharp_ok = false;

        Record r{k, {}, true};
        r.fields = {{"nu_q1", str(v1)},           {"nu_q1_formula", str(v1_formula)}, {"nu_q2", str(v2)},
                    {"min_nu_sum", str(v3_min)},  {"j_count", str(j_count)},          {"sharp_pair", sharp},
                    {"closed_forms", yes_no(closed_ok)}};
        r.pass = v1 >= Valuation(1) && v1 == Valuation(v1_formula) && v2 >= Valuation(0) &&
                 v3_min >= Valuation(0) && closed_ok && sharp_ok;
        return r;
    });
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Valuations of the expansion coefficients

CheckReport check_min_valuation(Session& s, int k_max) {
    require_k_max(k_max, 4, "check_min_valuation");
    Stopwatch clock;
    s.ensure(k_max);
    CheckReport rep;
    rep.name = "min-valuation";
    rep.parameters = {{"k_max", str(k_max)}};
    const auto ks = even_range(4, k_max);
    const EisensteinTable& table = s.table();
    rep.records = parallel_map(ks.size(), s.threads(), [&](std::size_t i) {
        const Valuation m = min_valuation2(table.at(ks[i]));
        return Record{ks[i], {{"min_valuation", str(m)}}, m >= Valuation(0)};
    });
    rep.wall_seconds = clock.seconds();
    return rep;
}

CheckReport check_conjecture(Session& s, int k_max) {
    require_k_max(k_max, 4, "check_conjecture");
    Stopwatch clock;
    s.ensure(k_max);
    CheckReport rep;
    rep.name = "conjecture";
    rep.parameters = {{"k_max", str(k_max)}, {"digit_sum", "base 2"}};
    const auto ks = even_range(4, k_max);
    const EisensteinTable& table = s.table();
    rep.records = parallel_map(ks.size(), s.threads(), [&](std::size_t i) {
        const int k = ks[i];
        const long s2 = digit_sum_base2(static_cast<std::uint64_t>(k));
        const bool pow2 = is_power_of_two(k);
        const long predicted = pow2 ? 0 : s2 - 2;
        const Valuation m = min_valuation2(table.at(k));
        return Record{k,
                      {{"s2", str(s2)},
                       {"min_valuation", str(m)},
                       {"branch", pow2 ? "power-of-two" : "s2-minus-2"},
                       {"predicted", str(predicted)}},
                      m == Valuation(predicted)};
    });
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Main theorem

bool TheoremInstance::lemma_w_ok() const {
    return w0_valuation == Valuation(0) && w3a_min_valuation >= Valuation(1);
}

bool TheoremInstance::corollary_t_ok() const {
    return t0_valuation == Valuation(t0_expected) && t_bound_violations.empty();
}

bool TheoremInstance::dumas_ok() const {
    return routes_agree && gcd == 1 && certificate.verdict == Verdict::irreducible && recheck_valid;
}

TheoremInstance theorem_instance(Session& s, int ell) {
    if (ell < 0 || ell > 20) throw DomainError("ell out of range");
    TheoremInstance inst;
    inst.ell = ell;
    inst.k = 12 * (1 << ell);
    const int k = inst.k;
    // Instances run concurrently once the caller has built the table; only build when missing.
    if (s.table().complete_up_to() < k) s.ensure(k);
    const Expansion& w = s.table().at(k);

    inst.w0_valuation = valuation(w[0], 2);
    for (int a = 1; a <= k / 12 - 1; ++a) inst.w3a_min_valuation = std::min(inst.w3a_min_valuation, valuation(w[3 * a], 2));

    const GekelerPolynomial phi = phi_closed_form(k, s.table());
    inst.routes_agree = phi == phi_by_division(k, s.table());
    const auto profile = valuation_profile(phi, 2);
    inst.t0_valuation = profile.at(0);
    inst.t0_expected = (2L * k - 3) / 3;
    for (int r = 1; r < phi.degree(); ++r)
        if (profile[static_cast<std::size_t>(r)] < Valuation(2L * k / 3 - 8L * r)) inst.t_bound_violations.push_back(r);
    inst.gcd = inst.t0_valuation.is_finite() ? std::gcd(inst.t0_valuation.value(), 1L << ell) : 0;

    inst.certificate = dumas_check(phi.polynomial(), 2, "phi_" + std::to_string(k));
    inst.recheck_valid = recheck_certificate(to_json(inst.certificate)).valid;
    return inst;
}

CheckReport check_theorem_main(Session& s, int ell_max) {
    if (ell_max < 0) throw DomainError("check_theorem_main needs ell_max >= 0");
    Stopwatch clock;
    s.ensure(12 * (1 << ell_max));
    CheckReport rep;
    rep.name = "theorem";
    rep.parameters = {{"ell_max", str(ell_max)}, {"prime", "2"}};
    auto instances =
        parallel_map(static_cast<std::size_t>(ell_max + 1), s.threads(), [&](std::size_t i) {
            return theorem_instance(s, static_cast<int>(i));
        });
    for (const auto& inst : instances) {
        Record r{inst.k, {}, true};
        r.fields = {{"ell", str(inst.ell)},
                    {"nu_w0", str(inst.w0_valuation)},
                    {"min_nu_w3a", str(inst.w3a_min_valuation)},
                    {"nu_t0", str(inst.t0_valuation)},
                    {"expected_nu_t0", str(inst.t0_expected)},
                    {"t_bound_violations", inst.t_bound_violations.empty() ? "none" : join(inst.t_bound_violations, ";")},
                    {"gcd", str(inst.gcd)},
                    {"routes_agree", yes_no(inst.routes_agree)},
                    {"verdict", to_string(inst.certificate.verdict)},
                    {"recheck", yes_no(inst.recheck_valid)}};
        r.pass = inst.lemma_w_ok() && inst.corollary_t_ok() && inst.dumas_ok();
        if (!r.pass) {
            std::string why = "ell=" + str(inst.ell);
            if (!inst.lemma_w_ok()) why += " w-valuations";
            if (!inst.t_bound_violations.empty()) why += " r=" + join(inst.t_bound_violations, ",");
            if (inst.t0_valuation != Valuation(inst.t0_expected)) why += " t0";
            if (!inst.dumas_ok()) why += " dumas";
            rep.notes.push_back("failed hypotheses: " + why);
        }
        rep.certificates.push_back(to_json(inst.certificate));
        rep.records.push_back(std::move(r));
    }
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Gekeler scan

IrreducibilityCertificate certify_gekeler(const GekelerPolynomial& phi) {
    const std::string id = "phi_" + std::to_string(phi.weight());
    for (long p = 2; p <= 97; ++p) {
        if (!is_prime(p)) continue;
        auto cert = dumas_check(phi.polynomial(), p, id);
        if (cert.verdict == Verdict::irreducible) return cert;
    }
    const auto ints = phi.polynomial().primitive_integer_part();
    std::vector<long> skipped;
    // Below k the reduction is governed by supersingular values and is nearly split.
    const auto primes = informative_primes(ints, 10, phi.weight() + 2, 200, &skipped);
    auto cert = finite_field_degree_patterns(ints, primes, id);
    cert.skipped_primes.insert(cert.skipped_primes.begin(), skipped.begin(), skipped.end());
    return cert;
}

CheckReport gekeler_scan(Session& s, int k_max) {
    require_k_max(k_max, 4, "gekeler_scan");
    Stopwatch clock;
    s.ensure(k_max);
    CheckReport rep;
    rep.name = "gekeler-scan";
    rep.parameters = {{"k_max", str(k_max)}, {"dumas_primes", "p <= 97"}, {"pattern_primes", "up to 10"}};
    std::vector<int> ks;
    for (int k : even_range(4, k_max))
        if (WeightSplit::of(k).m >= 1) ks.push_back(k);

    auto certs = parallel_map(ks.size(), s.threads(), [&](std::size_t i) {
        return certify_gekeler(phi_by_division(ks[i], s.table()));
    });
    std::vector<int> inconclusive, reducible;
    long by_dumas = 0, by_patterns = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const auto& c = certs[i];
        std::vector<int> primes_used;
        if (c.criterion == Criterion::dumas) {
            primes_used.push_back(static_cast<int>(c.prime));
        } else {
            for (const auto& pat : c.patterns) primes_used.push_back(static_cast<int>(pat.prime));
        }
        Record r{ks[i],
                 {{"degree", str(c.poly.degree())},
                  {"verdict", to_string(c.verdict)},
                  {"criterion", to_string(c.criterion)},
                  {"primes", join(primes_used, ";")}},
                 c.verdict != Verdict::reducible};
        if (c.verdict == Verdict::irreducible) (c.criterion == Criterion::dumas ? by_dumas : by_patterns)++;
        if (c.verdict == Verdict::inconclusive) inconclusive.push_back(ks[i]);
        if (c.verdict == Verdict::reducible) reducible.push_back(ks[i]);
        rep.records.push_back(std::move(r));
        rep.certificates.push_back(to_json(c));
    }
    rep.notes.push_back("irreducible by dumas: " + str(by_dumas));
    rep.notes.push_back("irreducible by finite-field-pattern: " + str(by_patterns));
    rep.notes.push_back("inconclusive: " + (inconclusive.empty() ? std::string("none") : join(inconclusive, ",")));
    rep.notes.push_back("reducible: " + (reducible.empty() ? std::string("none") : join(reducible, ",")));
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Self-test

namespace {

void note_first_failure(CheckReport& rep) {
    const auto bad = std::find_if(rep.records.begin(), rep.records.end(), [](const Record& r) { return !r.pass; });
    rep.notes.push_back("first divergent k: " + (bad == rep.records.end() ? std::string("none") : str(bad->k)));
}

} // namespace

CheckReport check_golden(Session& s) {
    Stopwatch clock;
    s.ensure(24);
    CheckReport rep;
    rep.name = "golden";
    const RationalPolynomial phi16({Rational::parse("-3456000/3617"), Rational(1)});
    const RationalPolynomial phi24(
        {Rational::parse("30710845440000/236364091"), Rational::parse("-340364160000/236364091"), Rational(1)});
    auto compare = [&](int k, const RationalPolynomial& expected) {
        try {
            const auto got = phi_by_division(k, s.table());
            bool same = got.polynomial() == expected;
            if (k % 12 == 0) same = same && phi_closed_form(k, s.table()).polynomial() == expected;
            rep.records.push_back({k, {{"computed", got.polynomial().to_string("X")}}, same});
        } catch (const ConsistencyError& e) {
            rep.records.push_back({k, {{"error", e.what()}}, false});
        }
    };
    compare(16, phi16);
    compare(24, phi24);
    rep.wall_seconds = clock.seconds();
    return rep;
}

CheckReport check_dual_recurrence(Session& s, int k_max) {
    require_k_max(k_max, 8, "check_dual_recurrence");
    Stopwatch clock;
    s.ensure(k_max);
    CheckReport rep;
    rep.name = "dual-recurrence";
    rep.parameters = {{"k_max", str(k_max)}};
    EisensteinTable popa(Recurrence::popa);
    popa.extend_to(k_max);
    int first = 0;
    for (int k : even_range(8, k_max)) {
        const bool same = popa.at(k) == s.table().at(k);
        if (!same && first == 0) first = k;
        rep.records.push_back({k, {{"session_provenance", to_string(s.table().provenance(k))}}, same});
    }
    rep.notes.push_back("first divergent k: " + (first ? str(first) : std::string("none")));
    rep.wall_seconds = clock.seconds();
    return rep;
}

CheckReport check_q_series(Session& s, int k_max, std::size_t n_terms) {
    require_k_max(k_max, 4, "check_q_series");
    if (n_terms == 0) throw DomainError("check_q_series needs at least one term");
    Stopwatch clock;
    s.ensure(k_max);
    CheckReport rep;
    rep.name = "q-series";
    rep.parameters = {{"k_max", str(k_max)}, {"terms", str(static_cast<long>(n_terms))}};
    const auto ks = even_range(4, k_max);
    const EisensteinTable& table = s.table();
    rep.records = parallel_map(ks.size(), s.threads(), [&](std::size_t i) {
        const int k = ks[i];
        const QSeries from_basis = substitute_q_expansion(table.at(k).to_form(), n_terms, Normalization::G);
        const QSeries direct = q_expansion_direct(k, n_terms) * zeta_ratio(k);
        return Record{k, {}, from_basis == direct};
    });
    note_first_failure(rep);
    rep.wall_seconds = clock.seconds();
    return rep;
}

CheckReport check_phi_routes(Session& s, int k_max) {
    require_k_max(k_max, 12, "check_phi_routes");
    Stopwatch clock;
    s.ensure(k_max);
    CheckReport rep;
    rep.name = "phi-routes";
    rep.parameters = {{"k_max", str(k_max)}};
    std::vector<int> ks;
    for (int k = 12; k <= k_max; k += 12) ks.push_back(k);
    rep.records = parallel_map(ks.size(), s.threads(), [&](std::size_t i) {
        const int k = ks[i];
        try {
            const auto closed = phi_closed_form(k, s.table());
            return Record{k, {{"degree", str(closed.degree())}}, closed == phi_by_division(k, s.table())};
        } catch (const ConsistencyError& e) {
            // A corrupted table can break monicity or exact division; that is a failed record, not an abort.
            return Record{k, {{"error", e.what()}}, false};
        }
    });
    note_first_failure(rep);
    rep.wall_seconds = clock.seconds();
    return rep;
}

CheckReport selftest(Session& s, const SelftestOptions& options) {
    Stopwatch clock;
    s.ensure(std::max({options.recurrence_k_max, options.q_series_k_max, options.phi_routes_k_max}));
    auto rep = combine("selftest", {check_golden(s), check_dual_recurrence(s, options.recurrence_k_max),
                                    check_q_series(s, options.q_series_k_max, options.q_series_terms),
                                    check_phi_routes(s, options.phi_routes_k_max)});
    rep.wall_seconds = clock.seconds();
    return rep;
}

} // namespace eisen
