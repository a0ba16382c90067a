#pragma once

#include "cover.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace cocompact {

struct entropy_row {
    std::size_t n = 0;
    std::size_t subcover_size = 0;  // N_n
    double log_count = 0.0;         // a_n = log N_n, natural log
    double rate = 0.0;              // a_n / n
    bool exact = true;
};

struct entropy_sequence {
    std::vector<entropy_row> rows;
    bool cover_cocompact = true;  // informational: whether every element of the base cover was co-compact
    bool all_exact() const {
        for (const auto& r : rows)
            if (!r.exact) return false;
        return true;
    }
};

struct sequence_options {
    std::size_t element_cap = 100000;  // abort if a join grows past this many elements
    subcover_options subcover;
    // Keep only maximal join elements while iterating. Dominated elements can
    // never appear in a minimal subcover in place of their dominator, so every
    // N_n is unchanged; without this the joins of line covers grow
    // exponentially in n while their maximal part stays polynomial.
    bool reduce_joins = true;
};

// Rows n = 1..n_max of N(U v f^-1(U) v ... v f^-(n-1)(U)), built incrementally.
inline entropy_sequence compute_entropy_sequence(const piecewise_affine& f, const finite_cover& u,
                                                 std::size_t n_max, const sequence_options& opts = {}) {
    if (n_max < 1) throw invalid_input("entropy_sequence: n_max must be >= 1");
    if (u.ambient().is_real_line() && !is_perfect(f))
        throw invalid_input("entropy_sequence: map is not perfect; entropy is undefined here");

    entropy_sequence seq;
    seq.cover_cocompact = u.all_cocompact();

    finite_cover level = u;                                  // f^-(n-1)(U)
    finite_cover acc = opts.reduce_joins ? reduce(u) : u;    // running join
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto res = minimal_subcover(acc, opts.subcover);
        entropy_row row;
        row.n = n;
        row.subcover_size = res.size;
        row.log_count = std::log(static_cast<double>(res.size));
        row.rate = row.log_count / static_cast<double>(n);
        row.exact = res.exact;
        seq.rows.push_back(row);
        if (n == n_max) break;
        level = pullback(f, level);
        finite_cover next = join(acc, level);
        acc = opts.reduce_joins ? reduce(next) : std::move(next);
        if (acc.size() > opts.element_cap)
            throw resource_limit("entropy_sequence: join exceeded the element cap at depth n=" + std::to_string(n + 1));
    }
    return seq;
}

struct estimate_diagnostics {
    double slope = 0.0;         // least-squares slope of a_n over the tail rows
    double slope_stderr = 0.0;
    bool converged = false;     // |fekete min - slope| below tolerance
};

struct entropy_estimate {
    double value = 0.0;  // fekete minimum of a_n/n: a certified upper bound on the limit
    std::string method = "fekete-min";
    std::size_t n_max = 0;
    bool all_exact = true;
    estimate_diagnostics diagnostics;
};

// Least-squares slope with standard error; requires >= 2 points, stderr
// defined for >= 3.
inline std::pair<double, double> fit_slope(const std::vector<std::pair<double, double>>& pts) {
    const std::size_t k = pts.size();
    if (k < 2) throw invalid_input("fit_slope: need at least two points");
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) throw invalid_input("fit_slope: degenerate fit (no spread in n)");
    const double slope = sxy / sxx;
    double rss = 0;
    for (const auto& [x, y] : pts) {
        const double e = y - my - slope * (x - mx);
        rss += e * e;
    }
    const double se = k > 2 ? std::sqrt(rss / static_cast<double>(k - 2) / sxx) : 0.0;
    return {slope, se};
}

// The limit of a_n/n exists and equals its infimum, so the running minimum is
// the headline estimate; the tail slope of a_n is diagnostic only.
inline entropy_estimate compute_entropy_estimate(const entropy_sequence& seq, double tolerance = 0.02) {
    if (seq.rows.empty()) throw invalid_input("entropy_estimate: empty sequence");
    entropy_estimate est;
    est.n_max = seq.rows.back().n;
    est.value = seq.rows.front().rate;
    for (const auto& r : seq.rows) {
        est.value = std::min(est.value, r.rate);
        est.all_exact = est.all_exact && r.exact;
    }
    std::vector<std::pair<double, double>> tail;
    const std::size_t start = seq.rows.size() / 2;
    for (std::size_t i = start; i < seq.rows.size(); ++i)
        tail.emplace_back(static_cast<double>(seq.rows[i].n), seq.rows[i].log_count);
    if (tail.size() >= 2) {
        const auto [slope, se] = fit_slope(tail);
        est.diagnostics.slope = slope;
        est.diagnostics.slope_stderr = se;
        est.diagnostics.converged = std::abs(est.value - slope) < tolerance;
    }
    return est;
}

// ---------------------------------------------------------------------------
// Cover families on R: finite surrogates for the supremum over all co-compact
// covers. For margin M the two rays form one co-compact element
// (-inf,-M+1) u (M-1,inf); the compact core [-M,M] is covered by g overlapping
// open intervals (one interval when g <= 1), each unioned with far tails
// (-inf,-M-1) u (M+1,inf) so that every element is co-compact.
// ---------------------------------------------------------------------------

struct family_spec {
    std::vector<rational> ray_margins = {rational(1)};
    std::vector<int> core_grids = {0, 4};
};

inline std::vector<finite_cover> cover_family(const space& sp, const family_spec& spec = {}) {
    if (!sp.is_real_line()) throw invalid_input("cover_family: only defined on the real line");
    std::vector<finite_cover> family;
    for (const auto& m : spec.ray_margins) {
        if (m.sign() <= 0) throw invalid_input("cover_family: margins must be positive");
        for (int g : spec.core_grids) {
            std::vector<interval_set> elems;
            elems.push_back(interval_set::normalize(
                {{endpoint::neg_inf(), endpoint(-m + 1)}, {endpoint(m - 1), endpoint::pos_inf()}}));
            const rational tail_l = -m - 1, tail_r = m + 1;
            const auto with_tails = [&](rational lo, rational hi) {
                return interval_set::normalize({{endpoint::neg_inf(), endpoint(tail_l)},
                                                {endpoint(std::move(lo)), endpoint(std::move(hi))},
                                                {endpoint(tail_r), endpoint::pos_inf()}});
            };
            if (g <= 1) {
                elems.push_back(with_tails(-m, m));
            } else {
                const rational w = (m + m) / rational(g);
                const rational pad = w / rational(4);
                for (int j = 0; j < g; ++j) {
                    rational lo = -m + w * rational(j) - pad;
                    rational hi = -m + w * rational(j + 1) + pad;
                    elems.push_back(with_tails(std::move(lo), std::move(hi)));
                }
            }
            finite_cover cov(sp, std::move(elems));
            for (std::size_t i = 0; i < cov.size(); ++i)
                if (!cov.element_cocompact(i)) throw std::logic_error("cover_family: element not co-compact");
            family.push_back(std::move(cov));
        }
    }
    return family;
}

// Deterministic fan-out over an index range; results land by index, so the
// output does not depend on scheduling.
template <typename T, typename Fn>
std::vector<T> indexed_parallel(std::size_t count, Fn&& fn) {
    std::vector<T> out(count);
    const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
        }));
    for (auto& f : futs) f.get();
    return out;
}

struct sup_entry {
    entropy_sequence sequence;
    entropy_estimate estimate;
};

struct sup_result {
    double value = 0.0;  // max over the family; a lower bound for c(f)
    std::size_t witness = 0;
    std::vector<sup_entry> entries;
};

inline sup_result entropy_sup(const piecewise_affine& f, const std::vector<finite_cover>& family,
                              std::size_t n_max, const sequence_options& opts = {}) {
    if (family.empty()) throw invalid_input("entropy_sup: empty cover family");
    sup_result res;
    res.entries = indexed_parallel<sup_entry>(family.size(), [&](std::size_t i) {
        sup_entry e;
        e.sequence = compute_entropy_sequence(f, family[i], n_max, opts);
        e.estimate = compute_entropy_estimate(e.sequence);
        return e;
    });
    res.value = res.entries.front().estimate.value;
    for (std::size_t i = 0; i < res.entries.size(); ++i)
        if (res.entries[i].estimate.value > res.value) {
            res.value = res.entries[i].estimate.value;
            res.witness = i;
        }
    return res;
}

// ---------------------------------------------------------------------------
// Theorem harnesses
// ---------------------------------------------------------------------------

struct power_row {
    std::size_t n = 0;
    std::size_t subcover_power = 0;  // N at depth n for (f^m, V)
    std::size_t subcover_base = 0;   // N at depth m*n for (f, U)
    bool equal = false;
};

struct power_report {
    std::size_t m = 0;
    double estimate_power = 0.0;   // c(f^m, V) estimate
    double estimate_scaled = 0.0;  // m * c(f, U) estimate
    std::vector<power_row> rows;
    bool identity_holds = true;  // integer N equality at every depth
    bool pass = false;
    double relative_gap = 0.0;
};

// Checks c(f^m) against m*c(f) through the join identity
// V = U v f^-1 U v ... v f^-(m-1) U, N((f^m)-chain at n) = N(f-chain at mn).
inline power_report verify_power(const piecewise_affine& f, const finite_cover& u, std::size_t m,
                                 std::size_t n_max, double rel_tol = 0.05,
                                 const sequence_options& opts = {}) {
    if (m < 1) throw invalid_input("verify_power: m must be >= 1");
    power_report rep;
    rep.m = m;

    finite_cover v = u;
    finite_cover level = u;
    for (std::size_t i = 1; i < m; ++i) {
        level = pullback(f, level);
        v = join(v, level);
    }
    const piecewise_affine fm = power(f, m);
    const entropy_sequence seq_pow = compute_entropy_sequence(fm, v, n_max, opts);
    const entropy_sequence seq_base = compute_entropy_sequence(f, u, m * n_max, opts);

    rep.identity_holds = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        power_row row;
        row.n = n;
        row.subcover_power = seq_pow.rows[n - 1].subcover_size;
        row.subcover_base = seq_base.rows[m * n - 1].subcover_size;
        row.equal = row.subcover_power == row.subcover_base && seq_pow.rows[n - 1].exact &&
                    seq_base.rows[m * n - 1].exact;
        rep.identity_holds = rep.identity_holds && row.equal;
        rep.rows.push_back(row);
    }
    rep.estimate_power = compute_entropy_estimate(seq_pow).value;
    rep.estimate_scaled = static_cast<double>(m) * compute_entropy_estimate(seq_base).value;
    const double denom = std::max(std::abs(rep.estimate_scaled), 1e-12);
    rep.relative_gap = std::abs(rep.estimate_power - rep.estimate_scaled) / denom;
    const bool both_zero = std::abs(rep.estimate_power) < 1e-9 && std::abs(rep.estimate_scaled) < 1e-9;
    rep.pass = rep.identity_holds && (both_zero || rep.relative_gap <= rel_tol);
    return rep;
}

struct subsystem_row {
    std::size_t n = 0;
    std::size_t subcover_sub = 0;    // N_{Lambda,n}
    std::size_t subcover_whole = 0;  // N_{X,n}
    bool ok = false;                 // N_sub <= N_whole
};

struct subsystem_report {
    double estimate_sub = 0.0;
    double estimate_whole = 0.0;
    std::vector<subsystem_row> rows;
    bool pass = false;
};

// Lifts a cover of an invariant compact interval to a co-compact cover of R by
// attaching the complement of the interval to every element, then checks
// N_{Lambda,n} <= N_{X,n} row by row.
inline subsystem_report verify_subsystem(const piecewise_affine& f, const compact_interval& lambda,
                                         const finite_cover& u_sub, std::size_t n_max,
                                         const sequence_options& opts = {}) {
    if (!(u_sub.ambient() == space::compact(lambda)))
        throw invalid_input("verify_subsystem: cover does not live on the invariant interval");
    if (!is_invariant(f, lambda)) throw invalid_input("verify_subsystem: interval is not invariant under the map");

    std::vector<interval_set> lifted;
    for (const auto& e : u_sub.elements()) {
        std::vector<open_interval> raw(e.intervals());
        raw.push_back({endpoint::neg_inf(), endpoint(lambda.lo)});
        raw.push_back({endpoint(lambda.hi), endpoint::pos_inf()});
        lifted.push_back(interval_set::normalize(std::move(raw)));
    }
    const finite_cover u_star(space::real_line(), std::move(lifted));

    const entropy_sequence seq_sub = compute_entropy_sequence(f, u_sub, n_max, opts);
    const entropy_sequence seq_whole = compute_entropy_sequence(f, u_star, n_max, opts);

    subsystem_report rep;
    rep.pass = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        subsystem_row row;
        row.n = n;
        row.subcover_sub = seq_sub.rows[n - 1].subcover_size;
        row.subcover_whole = seq_whole.rows[n - 1].subcover_size;
        row.ok = row.subcover_sub <= row.subcover_whole && seq_sub.rows[n - 1].exact && seq_whole.rows[n - 1].exact;
        rep.pass = rep.pass && row.ok;
        rep.rows.push_back(row);
    }
    rep.estimate_sub = compute_entropy_estimate(seq_sub).value;
    rep.estimate_whole = compute_entropy_estimate(seq_whole).value;
    return rep;
}

struct conjugacy_cover_row {
    std::size_t n = 0;
    std::size_t subcover_g = 0;  // N along the g-chain
    std::size_t subcover_f = 0;  // N along the f-chain of the pulled-back cover
    bool equal = false;
};

struct conjugacy_report {
    bool intertwines = false;  // h o f = g o h verified exactly
    std::vector<std::vector<conjugacy_cover_row>> per_cover;
    bool pass = false;
};

// h must be an invertible piecewise-affine conjugacy; the N values along the
// two pullback chains must then agree exactly for every cover and depth.
inline conjugacy_report verify_conjugacy(const piecewise_affine& f, const piecewise_affine& g,
                                         const piecewise_affine& h, const std::vector<finite_cover>& family,
                                         std::size_t n_max, const sequence_options& opts = {}) {
    conjugacy_report rep;
    (void)invert(h);  // throws unless h is a monotone bijection
    const piecewise_affine hf = compose(h, f);
    const piecewise_affine gh = compose(g, h);
    rep.intertwines = hf == gh;
    for (int i = -500; i <= 500 && rep.intertwines; ++i) {
        const rational x(i, 41);
        rep.intertwines = hf(x) == gh(x);
    }
    if (!rep.intertwines) throw invalid_input("verify_conjugacy: h does not intertwine f and g");

    rep.pass = true;
    for (const auto& u : family) {
        const entropy_sequence seq_g = compute_entropy_sequence(g, u, n_max, opts);
        const entropy_sequence seq_f = compute_entropy_sequence(f, pullback(h, u), n_max, opts);
        std::vector<conjugacy_cover_row> rows;
        for (std::size_t n = 1; n <= n_max; ++n) {
            conjugacy_cover_row row;
            row.n = n;
            row.subcover_g = seq_g.rows[n - 1].subcover_size;
            row.subcover_f = seq_f.rows[n - 1].subcover_size;
            row.equal = row.subcover_g == row.subcover_f && seq_g.rows[n - 1].exact && seq_f.rows[n - 1].exact;
            rep.pass = rep.pass && row.equal;
            rows.push_back(row);
        }
        rep.per_cover.push_back(std::move(rows));
    }
    return rep;
}

}  // namespace cocompact
