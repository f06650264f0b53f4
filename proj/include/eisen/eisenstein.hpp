/**
 * @file eisenstein.hpp
 * @brief Eisenstein series G_k expanded in the basis G4^a G6^b.
 *
 * G_k = sum_{4a+6b=k} w_{a,k} G4^a G6^b with G_k = 2 zeta(k) E_k. Two
 * recurrences produce the coefficients independently:
 *
 *  - rademacher_expand: the convolution
 *      (k/2-3)(k-1)(k+1) G_k = 3 sum_{p=2}^{k/2-2} (2p-1)(k-2p-1) G_{2p} G_{k-2p}
 *    (production path, also available with the p <-> k/2-p pairing);
 *  - popa_expand: the quasimodular identity involving G2, the derivation
 *    and the constants c_k, d_k, evaluated in the full ring Q[G2, G4, G6]
 *    with a hard check that every G2 term cancels.
 *
 * The table is filled bottom-up; after the build phase it is read-only and
 * may be shared between threads.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "eisen/exact.hpp"
#include "eisen/qmring.hpp"
#include "eisen/qseries.hpp"

namespace eisen {

/// The coefficients w_{a,k} of one weight, stored densely by the G4 exponent a.
class Expansion {
public:
    explicit Expansion(int weight);

    int weight() const { return weight_; }
    /// Largest possible G4 exponent, floor(k/4).
    int max_a() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Whether 4a + 6b = k has a solution b >= 0.
    bool valid_index(int a) const;
    /// Valid a values in increasing order.
    std::vector<int> indices() const;
    int b_for(int a) const { return (weight_ - 4 * a) / 6; }

    const Rational& operator[](int a) const { return coeffs_.at(static_cast<std::size_t>(a)); }
    void set(int a, const Rational& w);

    GradedForm to_form() const;
    /// Throws ConsistencyError if f has E2 content.
    static Expansion from_form(const GradedForm& f);

    friend bool operator==(const Expansion&, const Expansion&) = default;

    std::string to_string() const;

private:
    int weight_;
    std::vector<Rational> coeffs_;
};

/// Product of two classical expansions (convolution in a).
Expansion multiply(const Expansion& f, const Expansion& g);

/// w_{a,k} = numerators[a] / denominator with one shared denominator.
struct ScaledExpansion {
    std::vector<Integer> numerators;
    Integer denominator;

    static ScaledExpansion from(const Expansion& w);
};

struct RecurrenceConstants {
    Rational c;
    Rational d;
};

/// d_k = (-1)^{k/2} (k-1)! / 2^{k+1}, for even k >= 2 (d_2 = -1/8).
Rational d_constant(int k);
/// c_k = k/(2(k/2+1)(k/2-1)) + (-1)^{k/2} (k/2)! (k/2-2)! / (2 (k-1)!), even k >= 4.
Rational c_constant(int k);
RecurrenceConstants constants(int k);

enum class Provenance { closed_form, popa, rademacher, loaded };
std::string to_string(Provenance p);

enum class Recurrence { rademacher, popa };

class EisensteinTable {
public:
    explicit EisensteinTable(Recurrence method = Recurrence::rademacher);

    Recurrence method() const { return method_; }
    bool contains(int k) const { return entries_.count(k) != 0; }
    /// Throws DependencyError when k is absent.
    const Expansion& at(int k) const;
    const ScaledExpansion& scaled(int k) const;
    Provenance provenance(int k) const;
    /// Largest k such that every even weight 4..k is present.
    int complete_up_to() const;

    /// Fills every missing even weight up to k_max, in increasing order.
    void extend_to(int k_max);
    /// Overwrites an entry; used for warm starts and fault injection.
    void insert(Expansion w, Provenance p);

    /// CSV "k,a,b,w" with w as num/den; one row per valid (k, a).
    void write_csv(std::ostream& os) const;
    /// Entries read back are tagged Provenance::loaded.
    static EisensteinTable read_csv(std::istream& is, Recurrence method = Recurrence::rademacher);

    std::vector<int> weights() const;

private:
    struct Entry {
        Expansion w;
        ScaledExpansion scaled;
        Provenance provenance;
    };
    Recurrence method_;
    std::map<int, Entry> entries_;
};

/// w(4) = {w_1 = 1}, w(6) = {w_0 = 1}.
Expansion base_expansion(int k);

Expansion popa_expand(int k, const EisensteinTable& table);
/// Same identity with the G2 and derivative terms replaced by their
/// already-cancelled combination in G4, G6 only.
Expansion popa_expand_precancelled(int k, const EisensteinTable& table);
/// The Popa right-hand side in Q[G2, G4, G6] before dividing by c_k d_k.
GradedForm popa_right_hand_side(int k, const EisensteinTable& table);

Expansion rademacher_expand(int k, const EisensteinTable& table);
/// Sums the terms p and k/2-p together, plus the middle p = k/4 term.
Expansion rademacher_expand_paired(int k, const EisensteinTable& table);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QSeries q_expansion_direct(int k, std::size_t n_terms);

/// min_a nu_2(w_{a,k}).
Valuation min_valuation2(const Expansion& w);

} // namespace eisen
