#pragma once

#include "entropy.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace cocompact {

// d_n(x, y) = max_{0 <= j < n} |f^j(x) - f^j(y)|, exact.
inline rational dn_metric(const piecewise_affine& f, const rational& x, const rational& y, std::size_t n) {
    if (n < 1) throw invalid_input("dn_metric: n must be >= 1");
    rational fx = x, fy = y;
    rational best = (fx - fy).abs();
    for (std::size_t j = 1; j < n; ++j) {
        fx = f(fx);
        fy = f(fy);
        const rational d = (fx - fy).abs();
        if (d > best) best = d;
    }
    return best;
}

struct spanning_record {
    std::size_t n = 0;
    rational eps{0};
    std::size_t r_hat = 0;  // greedy spanning count: upper bound for the grid's r_n
    std::size_t s_hat = 0;  // greedy separated count: a genuine (n,eps)-separated set in K
    rational grid_step{0};
};

namespace detail {

// Closed d_n-ball around x intersected with [k.lo, k.hi], as exact closed
// intervals. The j=0 term confines the ball to |y - x| <= eps, so only map
// pieces near that window are ever visited.
inline closed_set dn_ball(const std::vector<piecewise_affine>& iterates, const rational& x, const rational& eps,
                          const compact_interval& k, std::size_t n) {
    closed_set ball;
    {
        rational lo = x - eps, hi = x + eps;
        if (lo < k.lo) lo = k.lo;
        if (k.hi < hi) hi = k.hi;
        if (hi < lo) return ball;
        ball.push_back({endpoint(std::move(lo)), endpoint(std::move(hi))});
    }
    for (std::size_t j = 1; j < n && !ball.empty(); ++j) {
        const piecewise_affine& fj = iterates[j];
        const rational c = fj(x);
        const rational ylo = c - eps, yhi = c + eps;
        closed_set next;
        for (const auto& piece : ball) {
            closed_set part = preimage_closed_within(fj, ylo, yhi, piece.lo.value(), piece.hi.value());
            next.insert(next.end(), part.begin(), part.end());
        }
        ball = closed_normalize(std::move(next));
    }
    return ball;
}

}  // namespace detail

// Greedy sweep shared by the spanning and separated counts: walk the grid left
// to right, take each still-unmarked point, and mark every grid point whose
// d_n distance from it is <= eps (its closed ball). The chosen points span all
// grid points, and they are pairwise more than eps apart (each was outside all
// earlier balls), so one sweep delivers both count semantics: an upper bound
// on the grid's minimal spanning count, and a certified (n,eps)-separated
// subset of K. Returns the chosen count.
inline std::size_t greedy_sweep_count(const piecewise_affine& f, const compact_interval& k, std::size_t n,
                                      const rational& eps, const rational& grid_step,
                                      std::size_t grid_cap = std::size_t(1) << 26) {
    if (eps.sign() <= 0) throw invalid_input("greedy sweep: eps must be positive");
    if (grid_step.sign() <= 0 || eps / grid_step < rational(4))
        throw invalid_input("greedy sweep: resolution rule grid_step <= eps/4 violated");
    const long long cells = (k.width() / grid_step).floor_div(rational(1));
    if (cells < 0 || static_cast<std::size_t>(cells) + 1 > grid_cap)
        throw resource_limit("greedy sweep: grid too large");
    const std::size_t npts = static_cast<std::size_t>(cells) + 1;

    std::vector<piecewise_affine> iterates;
    iterates.reserve(n);
    iterates.push_back(piecewise_affine::identity());
    for (std::size_t j = 1; j < n; ++j) iterates.push_back(compose(f, iterates.back()));

    std::vector<std::uint64_t> marked((npts + 63) / 64, 0);
    const auto is_marked = [&](std::size_t i) { return (marked[i >> 6] >> (i & 63)) & 1; };
    const auto mark_range = [&](std::size_t a, std::size_t b) {  // inclusive
        for (std::size_t i = a; i <= b; ++i) marked[i >> 6] |= std::uint64_t(1) << (i & 63);
    };

    std::size_t count = 0;
    std::size_t cursor = 0;
    while (cursor < npts) {
        if (is_marked(cursor)) {
            ++cursor;
            continue;
        }
        const rational x = k.lo + grid_step * rational(static_cast<long long>(cursor));
        ++count;
        const closed_set ball = detail::dn_ball(iterates, x, eps, k, n);
        for (const auto& piece : ball) {
            // grid indices with lo <= k.lo + i*step <= hi
            const rational rel_lo = piece.lo.value() - k.lo;
            const rational rel_hi = piece.hi.value() - k.lo;
            long long a = rel_lo.floor_div(grid_step);
            if (rational(a) * grid_step < rel_lo) ++a;  // ceil
            long long b = rel_hi.floor_div(grid_step);
            if (a < 0) a = 0;
            if (b >= static_cast<long long>(npts)) b = static_cast<long long>(npts) - 1;
            if (a <= b) mark_range(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        }
        ++cursor;
    }
    return count;
}

inline spanning_record make_spanning_record(const piecewise_affine& f, const compact_interval& k, std::size_t n,
                                            const rational& eps, const rational& grid_step) {
    spanning_record rec;
    rec.n = n;
    rec.eps = eps;
    rec.grid_step = grid_step;
    rec.r_hat = greedy_sweep_count(f, k, n, eps, grid_step);
    rec.s_hat = rec.r_hat;  // the same sweep realizes both bounds
    return rec;
}

inline std::size_t spanning_number(const piecewise_affine& f, const compact_interval& k, std::size_t n,
                                   const rational& eps, const rational& grid_step) {
    return greedy_sweep_count(f, k, n, eps, grid_step);
}

inline std::size_t separated_number(const piecewise_affine& f, const compact_interval& k, std::size_t n,
                                    const rational& eps, const rational& grid_step) {
    return greedy_sweep_count(f, k, n, eps, grid_step);
}

// Least-squares slope of log(count) against n. Fitting the slope rather than
// evaluating (1/n) log(count) at n_max cancels the eps-dependent constant.
inline std::pair<double, double> growth_rate(const std::vector<spanning_record>& records, bool separated = false) {
    if (records.size() < 3) throw invalid_input("growth_rate: need at least 3 records");
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records)
        pts.emplace_back(static_cast<double>(r.n),
                         std::log(static_cast<double>(separated ? r.s_hat : r.r_hat)));
    return fit_slope(pts);
}

// step = eps / (4 * L^(n-1)) with L the expansion bound of the map: fine
// enough that d_n balls span several grid cells, so counts keep growing with n
// instead of saturating at the grid size. A flat eps/4 rule is kept for
// non-expanding maps.
struct grid_rule {
    rational base_divisor{4};
    bool scale_by_expansion = true;

    rational step(const piecewise_affine& f, const rational& eps, std::size_t n) const {
        rational div = base_divisor;
        if (scale_by_expansion) {
            rational expansion = f.max_abs_slope();
            if (expansion < rational(1)) expansion = rational(1);
            for (std::size_t j = 1; j < n; ++j) div = div * expansion;
        }
        return eps / div;
    }
};

struct eps_rate {
    rational eps{0};
    double spanning_rate = 0.0;
    double spanning_stderr = 0.0;
    double separated_rate = 0.0;
    double separated_stderr = 0.0;
    std::vector<spanning_record> records;
};

struct bowen_estimate {
    std::vector<eps_rate> ladder;   // one entry per eps, in the given order
    double value = 0.0;             // spanning rate at the smallest eps
    bool monotone_trend = true;     // rates non-decreasing as eps shrinks (diagnostic)
};

// Spanning/separated growth rates across an eps ladder for n in
// [n_min, n_max]; K is caller-chosen (no supremum over compact sets here).
inline bowen_estimate compute_bowen_estimate(const piecewise_affine& f, const compact_interval& k,
                                             const std::vector<rational>& eps_ladder, std::size_t n_min,
                                             std::size_t n_max, const grid_rule& rule = {}) {
    if (eps_ladder.empty()) throw invalid_input("bowen_estimate: empty eps ladder");
    for (std::size_t i = 0; i + 1 < eps_ladder.size(); ++i)
        if (!(eps_ladder[i + 1] < eps_ladder[i])) throw invalid_input("bowen_estimate: eps ladder must decrease");
    if (n_min < 1 || n_max < n_min + 2)
        throw invalid_input("bowen_estimate: need n_min >= 1 and at least three n values");

    bowen_estimate est;
    est.ladder = indexed_parallel<eps_rate>(eps_ladder.size(), [&](std::size_t i) {
        eps_rate er;
        er.eps = eps_ladder[i];
        for (std::size_t n = n_min; n <= n_max; ++n)
            er.records.push_back(make_spanning_record(f, k, n, er.eps, rule.step(f, er.eps, n)));
        const auto [rs, ses] = growth_rate(er.records, false);
        er.spanning_rate = rs;
        er.spanning_stderr = ses;
        const auto [rp, sep] = growth_rate(er.records, true);
        er.separated_rate = rp;
        er.separated_stderr = sep;
        return er;
    });
    est.value = est.ladder.back().spanning_rate;
    for (std::size_t i = 0; i + 1 < est.ladder.size(); ++i)
        est.monotone_trend = est.monotone_trend &&
                             est.ladder[i].spanning_rate <= est.ladder[i + 1].spanning_rate + 1e-9;
    return est;
}

// ---------------------------------------------------------------------------
// Exhaustive oracles on tiny grids, for certifying the greedy bounds in tests.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<rational> tiny_grid(const compact_interval& k, const rational& grid_step,
                                       std::size_t max_points) {
    std::vector<rational> pts;
    for (rational x = k.lo; x <= k.hi; x += grid_step) {
        pts.push_back(x);
        if (pts.size() > max_points) throw resource_limit("brute force: grid too large");
    }
    return pts;
}

}  // namespace detail

// Exact minimum number of grid points whose d_n balls cover the whole grid.
inline std::size_t brute_force_rn(const piecewise_affine& f, const compact_interval& k, std::size_t n,
                                  const rational& eps, const rational& grid_step) {
    const auto pts = detail::tiny_grid(k, grid_step, 18);
    const std::size_t m = pts.size();
    std::vector<std::uint32_t> ball(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (dn_metric(f, pts[i], pts[j], n) <= eps) ball[i] |= std::uint32_t(1) << j;
    const std::uint32_t all = m == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << m) - 1;
    std::size_t best = m;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
        const auto pc = static_cast<std::size_t>(__builtin_popcount(mask));
        if (pc >= best) continue;
        std::uint32_t cov = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint32_t(1) << i)) cov |= ball[i];
        if (cov == all) best = pc;
    }
    return best;
}

// Exact maximum cardinality of a pairwise (n,eps)-separated subset of the grid.
inline std::size_t brute_force_sn(const piecewise_affine& f, const compact_interval& k, std::size_t n,
                                  const rational& eps, const rational& grid_step) {
    const auto pts = detail::tiny_grid(k, grid_step, 18);
    const std::size_t m = pts.size();
    std::vector<std::uint32_t> conflict(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && !(dn_metric(f, pts[i], pts[j], n) > eps)) conflict[i] |= std::uint32_t(1) << j;
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
        const auto pc = static_cast<std::size_t>(__builtin_popcount(mask));
        if (pc <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            if (mask & (std::uint32_t(1) << i)) ok = (mask & conflict[i]) == 0;
        if (ok) best = pc;
    }
    return best;
}

}  // namespace cocompact
