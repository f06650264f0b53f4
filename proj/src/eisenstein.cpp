#include "eisen/eisenstein.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace eisen {

namespace {

void require_even_at_least(int k, int lo, const char* what) {
    if (k < lo || k % 2 != 0)
        throw DomainError(std::string(what) + " needs even k >= " + std::to_string(lo) + ", got " + std::to_string(k));
}

Rational sign_pow(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace

Expansion::Expansion(int weight) : weight_(weight) {
    if (weight < 0 || weight % 2 != 0) throw DomainError("expansion weight must be even and nonnegative");
    coeffs_.resize(static_cast<std::size_t>(weight / 4 + 1));
}

bool Expansion::valid_index(int a) const {
    return a >= 0 && a <= max_a() && (weight_ - 4 * a) % 6 == 0;
}

std::vector<int> Expansion::indices() const {
    std::vector<int> out;
    for (int a = 0; a <= max_a(); ++a)
        if (valid_index(a)) out.push_back(a);
    return out;
}

void Expansion::set(int a, const Rational& w) {
    if (!valid_index(a))
        throw DomainError("no monomial G4^" + std::to_string(a) + " G6^b of weight " + std::to_string(weight_));
    coeffs_[static_cast<std::size_t>(a)] = w;
}

GradedForm Expansion::to_form() const {
    GradedForm f(weight_);
    for (int a : indices()) f.add_term({0, a, b_for(a)}, coeffs_[static_cast<std::size_t>(a)]);
    return f;
}

Expansion Expansion::from_form(const GradedForm& f) {
    if (f.has_e2()) throw ConsistencyError("form of weight " + std::to_string(f.weight()) + " still has G2 terms");
    Expansion w(f.weight());
    for (const auto& [m, c] : f.terms()) w.set(m.e4, c);
    return w;
}

std::string Expansion::to_string() const {
    std::ostringstream os;
    os << "G_" << weight_ << " =";
    bool first = true;
    for (int a : indices()) {
        const auto& c = coeffs_[static_cast<std::size_t>(a)];
        if (c.is_zero()) continue;
        os << (first ? " " : " + ") << "(" << c << ")*G4^" << a << "*G6^" << b_for(a);
        first = false;
    }
    if (first) os << " 0";
    return os.str();
}

Expansion multiply(const Expansion& f, const Expansion& g) {
    Expansion out(f.weight() + g.weight());
    std::vector<mpq_class> acc(static_cast<std::size_t>(out.max_a() + 1));
    for (int a : f.indices()) {
        if (f[a].is_zero()) continue;
        for (int b : g.indices())
            if (!g[b].is_zero()) acc[static_cast<std::size_t>(a + b)] += f[a].raw() * g[b].raw();
    }
    for (int a : out.indices()) out.set(a, Rational(std::move(acc[static_cast<std::size_t>(a)])));
    return out;
}

ScaledExpansion ScaledExpansion::from(const Expansion& w) {
    ScaledExpansion s;
    s.denominator = 1;
    for (int a : w.indices()) mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(), w[a].den().get_mpz_t());
    s.numerators.resize(static_cast<std::size_t>(w.max_a() + 1));
    for (int a : w.indices()) s.numerators[static_cast<std::size_t>(a)] = w[a].num() * (s.denominator / w[a].den());
    return s;
}

Rational d_constant(int k) {
    require_even_at_least(k, 2, "d_k");
    Integer two_pow = 1;
    two_pow <<= static_cast<mp_bitcnt_t>(k + 1);
    return sign_pow(k / 2) * Rational(factorial(static_cast<unsigned long>(k - 1)), two_pow);
}

Rational c_constant(int k) {
    require_even_at_least(k, 4, "c_k");
    const long h = k / 2;
    Rational first = Rational(k) / Rational(2 * (h + 1) * (h - 1));
    Rational second = sign_pow(static_cast<int>(h)) *
                      Rational(factorial(static_cast<unsigned long>(h)) * factorial(static_cast<unsigned long>(h - 2)),
                               2 * factorial(static_cast<unsigned long>(k - 1)));
    Rational c = first + second;
    if (c.is_zero()) throw ConsistencyError("c_k vanished at k = " + std::to_string(k));
    return c;
}

RecurrenceConstants constants(int k) { return {c_constant(k), d_constant(k)}; }

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::popa: return "popa";
    case Provenance::rademacher: return "rademacher";
    case Provenance::loaded: return "loaded";
    }
    return "?";
}

Expansion base_expansion(int k) {
    Expansion w(k);
    if (k == 4) w.set(1, Rational(1));
    else if (k == 6) w.set(0, Rational(1));
    else throw DomainError("base expansions exist only for k = 4, 6");
    return w;
}

EisensteinTable::EisensteinTable(Recurrence method) : method_(method) {
    insert(base_expansion(4), Provenance::closed_form);
    insert(base_expansion(6), Provenance::closed_form);
}

const Expansion& EisensteinTable::at(int k) const {
    auto it = entries_.find(k);
    if (it == entries_.end()) throw DependencyError("Eisenstein table has no entry for k = " + std::to_string(k));
    return it->second.w;
}

const ScaledExpansion& EisensteinTable::scaled(int k) const {
    auto it = entries_.find(k);
    if (it == entries_.end()) throw DependencyError("Eisenstein table has no entry for k = " + std::to_string(k));
    return it->second.scaled;
}

Provenance EisensteinTable::provenance(int k) const {
    auto it = entries_.find(k);
    if (it == entries_.end()) throw DependencyError("Eisenstein table has no entry for k = " + std::to_string(k));
    return it->second.provenance;
}

int EisensteinTable::complete_up_to() const {
    int k = 2;
    while (entries_.count(k + 2) != 0) k += 2;
    return k;
}

void EisensteinTable::extend_to(int k_max) {
    for (int k = 8; k <= k_max; k += 2) {
        if (contains(k)) continue;
        if (method_ == Recurrence::popa) insert(popa_expand(k, *this), Provenance::popa);
        else insert(rademacher_expand_paired(k, *this), Provenance::rademacher);
    }
}

void EisensteinTable::insert(Expansion w, Provenance p) {
    const int k = w.weight();
    ScaledExpansion scaled = ScaledExpansion::from(w);
    entries_.insert_or_assign(k, Entry{std::move(w), std::move(scaled), p});
}

std::vector<int> EisensteinTable::weights() const {
    std::vector<int> out;
    for (const auto& [k, e] : entries_) out.push_back(k);
    return out;
}

void EisensteinTable::write_csv(std::ostream& os) const {
    os << "k,a,b,w\n";
    for (const auto& [k, e] : entries_)
        for (int a : e.w.indices()) os << k << ',' << a << ',' << e.w.b_for(a) << ',' << e.w[a].to_string() << '\n';
}

EisensteinTable EisensteinTable::read_csv(std::istream& is, Recurrence method) {
    EisensteinTable table(method);
    std::map<int, Expansion> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (line_no == 1 && line.rfind("k,", 0) == 0) continue;
        std::istringstream ls(line);
        std::string fk, fa, fb, fw;
        if (!std::getline(ls, fk, ',') || !std::getline(ls, fa, ',') || !std::getline(ls, fb, ',') ||
            !std::getline(ls, fw))
            throw ParseError("table line " + std::to_string(line_no) + ": expected k,a,b,w");
        int k = 0, a = 0, b = 0;
        try {
            k = std::stoi(fk);
            a = std::stoi(fa);
            b = std::stoi(fb);
        } catch (const std::logic_error&) {
            throw ParseError("table line " + std::to_string(line_no) + ": bad integer field");
        }
        if (4 * a + 6 * b != k) throw ParseError("table line " + std::to_string(line_no) + ": 4a + 6b != k");
        auto it = rows.try_emplace(k, Expansion(k)).first;
        it->second.set(a, Rational::parse(fw));
    }
    for (auto& [k, w] : rows) table.insert(std::move(w), Provenance::loaded);
    return table;
}

namespace {

void require_weights(const EisensteinTable& table, int lo, int hi, int k) {
    for (int m = lo; m <= hi; m += 2)
        if (!table.contains(m))
            throw DependencyError("expanding G_" + std::to_string(k) + " needs G_" + std::to_string(m));
}

// Part of the Popa sum that never involves G2: the binomial convolution and the G_{k/2}^2 term.
GradedForm popa_classical_part(int k, const EisensteinTable& table) {
    const int h = k / 2;
    GradedForm sum(k);
    for (int j = 3; j <= h - 2; j += 2) {
        Rational coeff = Rational(Integer(binomial(h, j) + binomial(h - 2, j))) * d_constant(j + 1) * d_constant(k - j - 1);
        sum += multiply(table.at(j + 1), table.at(k - j - 1)).to_form() * coeff;
    }
    // G_{k/2} only exists for even k/2.
    if (h % 2 == 0) {
        const Rational d = d_constant(h);
        sum += multiply(table.at(h), table.at(h)).to_form() * (Rational(h) * d * d);
    }
    return sum;
}

} // namespace

GradedForm popa_right_hand_side(int k, const EisensteinTable& table) {
    require_even_at_least(k, 8, "popa_expand");
    require_weights(table, 4, k - 2, k);
    GradedForm rhs = popa_classical_part(k, table);
    const Rational d_prev = d_constant(k - 2);
    const GradedForm prev = table.at(k - 2).to_form();
    rhs += GradedForm::generator(2) * prev * (Rational(k - 2) * d_constant(2) * d_prev);
    rhs += derivative(prev, Normalization::G) * (d_prev / Rational(2));
    return rhs;
}

Expansion popa_expand(int k, const EisensteinTable& table) {
    GradedForm rhs = popa_right_hand_side(k, table);
    if (rhs.has_e2())
        throw ConsistencyError("G2 terms did not cancel in the Popa identity at k = " + std::to_string(k));
    const auto [c, d] = constants(k);
    return Expansion::from_form(rhs * (Rational(1) / (c * d)));
}

Expansion popa_expand_precancelled(int k, const EisensteinTable& table) {
    require_even_at_least(k, 8, "popa_expand");
    require_weights(table, 4, k - 2, k);
    GradedForm rhs = popa_classical_part(k, table);
    const Expansion& prev = table.at(k - 2);
    const Rational scale = -d_constant(k - 2) / Rational(2);
    GradedForm cancelled(k);
    for (int a : prev.indices()) {
        const int b = prev.b_for(a);
        if (a > 0) cancelled.add_term({0, a - 1, b + 1}, prev[a] * Rational(7 * a) / Rational(2));
        if (b > 0) cancelled.add_term({0, a + 2, b - 1}, prev[a] * Rational(15 * b) / Rational(7));
    }
    rhs += cancelled * scale;
    const auto [c, d] = constants(k);
    return Expansion::from_form(rhs * (Rational(1) / (c * d)));
}

namespace {

Rational rademacher_divisor(int k) {
    if (k == 6) throw DomainError("Rademacher recurrence divides by k/2 - 3 = 0 at k = 6");
    require_even_at_least(k, 8, "rademacher_expand");
    return Rational(static_cast<long>(k / 2 - 3) * (k - 1) * (k + 1));
}

// Running sum numerators / denominator over weight k.
class ScaledAccumulator {
public:
    explicit ScaledAccumulator(int k) : k_(k), numerators_(static_cast<std::size_t>(k / 4 + 1)), denominator_(1) {}

    // += coeff * f * g
    void add_product(long coeff, const ScaledExpansion& f, const ScaledExpansion& g) {
        std::vector<Integer> conv(numerators_.size());
        for (std::size_t a = 0; a < f.numerators.size(); ++a) {
            if (f.numerators[a] == 0) continue;
            for (std::size_t b = 0; b < g.numerators.size(); ++b)
                if (g.numerators[b] != 0)
                    mpz_addmul(conv[a + b].get_mpz_t(), f.numerators[a].get_mpz_t(), g.numerators[b].get_mpz_t());
        }
        const Integer d = f.denominator * g.denominator;
        Integer gcd;
        mpz_gcd(gcd.get_mpz_t(), denominator_.get_mpz_t(), d.get_mpz_t());
        const Integer scale_acc = d / gcd;
        const Integer scale_new = Integer(denominator_ / gcd) * coeff;
        for (std::size_t a = 0; a < numerators_.size(); ++a) {
            numerators_[a] *= scale_acc;
            mpz_addmul(numerators_[a].get_mpz_t(), conv[a].get_mpz_t(), scale_new.get_mpz_t());
        }
        denominator_ *= scale_acc;
    }

    Expansion finish(const Rational& divisor) const {
        Expansion out(k_);
        for (int a : out.indices())
            out.set(a, Rational(numerators_[static_cast<std::size_t>(a)], denominator_) / divisor);
        return out;
    }

private:
    int k_;
    std::vector<Integer> numerators_;
    Integer denominator_;
};

} // namespace

Expansion rademacher_expand(int k, const EisensteinTable& table) {
    const Rational divisor = rademacher_divisor(k);
    require_weights(table, 4, k - 4, k);
    ScaledAccumulator acc(k);
    for (int p = 2; p <= k / 2 - 2; ++p)
        acc.add_product(3L * (2 * p - 1) * (k - 2 * p - 1), table.scaled(2 * p), table.scaled(k - 2 * p));
    return acc.finish(divisor);
}

Expansion rademacher_expand_paired(int k, const EisensteinTable& table) {
    const Rational divisor = rademacher_divisor(k);
    require_weights(table, 4, k - 4, k);
    ScaledAccumulator acc(k);
    for (int p = 2; 4 * p < k; ++p)
        acc.add_product(6L * (2 * p - 1) * (k - 2 * p - 1), table.scaled(2 * p), table.scaled(k - 2 * p));
    if (k % 4 == 0) {
        const long mid = k / 2 - 1;
        acc.add_product(3L * mid * mid, table.scaled(k / 2), table.scaled(k / 2));
    }
    return acc.finish(divisor);
}

QSeries q_expansion_direct(int k, std::size_t n_terms) {
    require_even_at_least(k, 4, "q_expansion_direct");
    if (n_terms == 0) throw DomainError("q_expansion_direct needs n_terms >= 1");
    return eisenstein_q_expansion(k, n_terms);
}

Valuation min_valuation2(const Expansion& w) {
    Valuation best = Valuation::infinity();
    for (int a : w.indices()) best = std::min(best, valuation(w[a], 2));
    return best;
}

} // namespace eisen
