/**
 * @file replicate.hpp
 * @brief Verification checks over ranges of weights, with reports that render
 * as text, JSON or CSV.
 *
 * A Session owns the shared Eisenstein table. The table is built
 * sequentially; per-k work afterwards runs on a small worker pool and the
 * records are merged back in k order, so a report body depends only on its
 * parameters.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eisen/eisenstein.hpp"
#include "eisen/gekeler.hpp"
#include "eisen/irreducibility.hpp"

namespace eisen {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Record {
    int k = 0;
    Fields fields;
    bool pass = true;

    /// Empty string when the field is absent.
    std::string field(const std::string& name) const;
};

struct CheckReport {
    std::string name;
    Fields parameters;
    std::vector<Record> records;
    /// Summary lines: first divergences, inconclusive weights, counts.
    std::vector<std::string> notes;
    std::vector<nlohmann::ordered_json> certificates;
    double wall_seconds = 0.0;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
    std::string status() const { return ok() ? "PASS" : "FAIL"; }
    const Record* find(int k) const;

    std::string to_text() const;
    /// Without timing the output is identical across runs with equal parameters.
    nlohmann::ordered_json to_json(bool with_timing = true) const;
    /// Header is k, every field name in order of first appearance, pass.
    std::string to_csv() const;
};

/// Reports from several checks merged into one, in order.
CheckReport combine(std::string name, const std::vector<CheckReport>& parts);

/// Applies f to 0..n-1 on up to `threads` workers; results come back in index order.
/// The first exception thrown by any task is rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t n, unsigned threads, F f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(n);
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = n;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

class Session {
public:
    /// threads == 0 picks the hardware concurrency.
    explicit Session(unsigned threads = 0);
    Session(EisensteinTable table, unsigned threads);

    unsigned threads() const { return threads_; }
    EisensteinTable& table() { return table_; }
    const EisensteinTable& table() const { return table_; }
    /// Sequential build up to k_max.
    void ensure(int k_max);

private:
    EisensteinTable table_;
    unsigned threads_;
};

CheckReport check_lemma_valsum(Session& s, int k_max);
CheckReport check_lemma_ineq(Session& s, int k_max);
CheckReport check_min_valuation(Session& s, int k_max);
CheckReport check_conjecture(Session& s, int k_max);

/// Everything verified for one k = 12 * 2^ell.
struct TheoremInstance {
    int ell = 0;
    int k = 0;
    bool routes_agree = false;
    Valuation w0_valuation;
    /// min nu_2(w_{3a,k}) over 1 <= a <= k/12 - 1; Infinity when the range is empty.
    Valuation w3a_min_valuation = Valuation::infinity();
    Valuation t0_valuation;
    long t0_expected = 0;
    /// r values with nu_2(t_{k,r}) < 2k/3 - 8r.
    std::vector<int> t_bound_violations;
    long gcd = 0;
    IrreducibilityCertificate certificate;
    bool recheck_valid = false;

    bool lemma_w_ok() const;
    bool corollary_t_ok() const;
    bool dumas_ok() const;
};

TheoremInstance theorem_instance(Session& s, int ell);
CheckReport check_theorem_main(Session& s, int ell_max);

/// Dumas at each prime up to 97, then the degree-pattern oracle.
IrreducibilityCertificate certify_gekeler(const GekelerPolynomial& phi);
CheckReport gekeler_scan(Session& s, int k_max);

/// phi_16 and phi_24 against the two polynomials embedded as fixtures.
CheckReport check_golden(Session& s);
/// A fresh table built by the Popa recurrence against the session table, 8 <= k <= k_max.
CheckReport check_dual_recurrence(Session& s, int k_max);
/// sum w_{a,k} (r_4 E4)^a (r_6 E6)^b against r_k times the divisor-sum expansion of E_k.
CheckReport check_q_series(Session& s, int k_max, std::size_t n_terms);
/// phi_closed_form against phi_by_division for k = 0 (mod 12) up to k_max.
CheckReport check_phi_routes(Session& s, int k_max);

struct SelftestOptions {
    int recurrence_k_max = 200;
    int q_series_k_max = 60;
    std::size_t q_series_terms = 30;
    int phi_routes_k_max = 480;
};

CheckReport selftest(Session& s, const SelftestOptions& options = {});

} // namespace eisen
