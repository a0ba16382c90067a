#pragma once

#include "bowen.hpp"

#include <cstdint>
#include <vector>

namespace cocompact {

// Full shift on p symbols. Points are represented by words of length
// `horizon`; every computation below states how deep it looks, and the
// horizon must exceed that depth by 2 so truncation never shows.
struct shift_space {
    unsigned symbols = 2;       // p
    std::size_t horizon = 32;   // L

    shift_space(unsigned p, std::size_t L) : symbols(p), horizon(L) {
        if (p < 2) throw invalid_input("shift_space: need at least two symbols");
        if (L < 3) throw invalid_input("shift_space: horizon too small");
    }

    void require_depth(std::size_t depth) const {
        if (depth + 2 > horizon)
            throw invalid_input("shift_space: depth " + std::to_string(depth) +
                                " exceeds horizon - 2 = " + std::to_string(horizon - 2));
    }
};

// The cover of a full shift by length-k cylinders: p^k pairwise disjoint
// clopen sets. Being a partition, its minimal subcover is the whole family,
// so N is just the element count; joins with shift pullbacks only deepen the
// cylinders.
struct cylinder_cover {
    unsigned symbols = 2;
    std::size_t depth = 1;

    std::size_t count() const {
        std::size_t out = 1;
        for (std::size_t i = 0; i < depth; ++i) {
            if (out > (std::size_t(1) << 62) / symbols)
                throw resource_limit("cylinder_cover: count overflows");
            out *= symbols;
        }
        return out;
    }
};

inline cylinder_cover make_cylinder_cover(const shift_space& s, std::size_t k) {
    if (k < 1) throw invalid_input("cylinder_cover: depth must be >= 1");
    s.require_depth(k);
    return {s.symbols, k};
}

// sigma^-1 of a depth-k cylinder cover refines to depth k+1: joining the
// base cover with n-1 pullbacks gives the depth-(k+n-1) cylinders.
inline cylinder_cover join_with_pullbacks(const shift_space& s, const cylinder_cover& base, std::size_t n) {
    if (n < 1) throw invalid_input("join_with_pullbacks: n must be >= 1");
    s.require_depth(base.depth + n - 1);
    return {base.symbols, base.depth + n - 1};
}

// a_n = log N(join of n pullbacks of the 1-cylinder cover) = n log p, exactly.
inline entropy_sequence shift_cover_entropy(const shift_space& s, std::size_t n_max) {
    if (n_max < 1) throw invalid_input("shift_cover_entropy: n_max must be >= 1");
    s.require_depth(n_max);
    const cylinder_cover base = make_cylinder_cover(s, 1);
    entropy_sequence seq;
    for (std::size_t n = 1; n <= n_max; ++n) {
        entropy_row row;
        row.n = n;
        row.subcover_size = join_with_pullbacks(s, base, n).count();
        row.log_count = std::log(static_cast<double>(row.subcover_size));
        row.rate = row.log_count / static_cast<double>(n);
        row.exact = true;
        seq.rows.push_back(row);
    }
    return seq;
}

// Metric d(x,y) = 2^{-min{i : x_i != y_i}}. Then d_n(x,y) = 2^{-max(k-n+1,0)}
// where k is the first difference, so for tail(eps) = #{j >= 0 : 2^-j > eps}:
// two points are (n,eps)-separated iff they differ within the first
// n-1+tail(eps) coordinates, and a d_n ball of radius eps is exactly a
// cylinder of that depth. Both r_n and s_n therefore equal p^(n-1+tail(eps)).
inline std::size_t shift_metric_tail(const rational& eps) {
    if (eps.sign() <= 0) throw invalid_input("shift metric: eps must be positive");
    std::size_t t = 0;
    rational power(1);
    while (power > eps) {
        ++t;
        power = power / rational(2);
        if (t > 128) throw invalid_input("shift metric: eps too small");
    }
    return t;
}

inline std::size_t shift_span_count(const shift_space& s, std::size_t n, const rational& eps) {
    const std::size_t t = shift_metric_tail(eps);
    const std::size_t depth = n - 1 + t;
    s.require_depth(depth);
    const cylinder_cover c{s.symbols, depth};
    return c.count();  // depth 0 gives the single trivial cylinder
}

// d_n over explicit words (used by the enumeration oracles in tests).
inline rational shift_dn(const std::vector<unsigned>& x, const std::vector<unsigned>& y, std::size_t n) {
    const std::size_t len = std::min(x.size(), y.size());
    std::size_t first = len;
    for (std::size_t i = 0; i < len; ++i)
        if (x[i] != y[i]) {
            first = i;
            break;
        }
    if (first == len) return rational(0);  // equal within horizon
    const std::size_t drop = first >= n ? first - (n - 1) : 0;
    return rational::pow2(-static_cast<long>(drop));
}

// Exact Bowen data for the full shift: counts are closed-form powers of p,
// rates come from the same slope fit as the interval systems.
inline bowen_estimate shift_bowen_entropy(const shift_space& s, const std::vector<rational>& eps_ladder,
                                          std::size_t n_min, std::size_t n_max) {
    if (eps_ladder.empty()) throw invalid_input("shift_bowen_entropy: empty eps ladder");
    for (std::size_t i = 0; i + 1 < eps_ladder.size(); ++i)
        if (!(eps_ladder[i + 1] < eps_ladder[i]))
            throw invalid_input("shift_bowen_entropy: eps ladder must decrease");
    if (n_min < 1 || n_max < n_min + 2)
        throw invalid_input("shift_bowen_entropy: need n_min >= 1 and at least three n values");

    bowen_estimate est;
    for (const auto& eps : eps_ladder) {
        eps_rate er;
        er.eps = eps;
        for (std::size_t n = n_min; n <= n_max; ++n) {
            spanning_record rec;
            rec.n = n;
            rec.eps = eps;
            rec.r_hat = shift_span_count(s, n, eps);
            rec.s_hat = rec.r_hat;
            rec.grid_step = rational(0);  // combinatorial, no grid
            er.records.push_back(rec);
        }
        const auto [rs, ses] = growth_rate(er.records, false);
        er.spanning_rate = rs;
        er.spanning_stderr = ses;
        er.separated_rate = rs;
        er.separated_stderr = ses;
        est.ladder.push_back(std::move(er));
    }
    est.value = est.ladder.back().spanning_rate;
    for (std::size_t i = 0; i + 1 < est.ladder.size(); ++i)
        est.monotone_trend = est.monotone_trend &&
                             est.ladder[i].spanning_rate <= est.ladder[i + 1].spanning_rate + 1e-9;
    return est;
}

}  // namespace cocompact
