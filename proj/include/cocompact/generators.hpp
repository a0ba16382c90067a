#pragma once

#include "cover.hpp"

#include <random>

namespace cocompact {

// Deterministic sample generators for property suites, randomized harnesses
// and the CLI verify commands. Everything is driven by one seeded engine so
// identical seeds reproduce identical reports.
class sampler {
public:
    explicit sampler(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    // Rational in [lo, hi] on a grid of 1/den steps.
    rational rational_in(std::int64_t lo, std::int64_t hi, std::int64_t den = 64) {
        return rational(int_in(lo * den, hi * den), den);
    }

    // Normalized union of up to max_components random open intervals in [-w, w].
    interval_set open_set(std::int64_t w = 10, int max_components = 4) {
        std::vector<open_interval> raw;
        const int k = static_cast<int>(int_in(1, max_components));
        for (int i = 0; i < k; ++i) {
            rational a = rational_in(-w, w);
            rational b = rational_in(-w, w);
            if (a == b) b = a + rational(1, 64);
            if (b < a) std::swap(a, b);
            raw.push_back({endpoint(a), endpoint(b)});
        }
        return interval_set::normalize(std::move(raw));
    }

    // Co-compact open set: two unbounded rays plus a few bounded components.
    interval_set cocompact_set(std::int64_t w = 10) {
        interval_set bounded = open_set(w, 3);
        rational l = rational_in(-w, w);
        rational r = rational_in(-w, w);
        std::vector<open_interval> raw(bounded.intervals());
        raw.push_back({endpoint::neg_inf(), endpoint(std::move(l))});
        raw.push_back({endpoint(std::move(r)), endpoint::pos_inf()});
        return interval_set::normalize(std::move(raw));
    }

    // Random co-compact open cover of R: an overlapping chain of bounded
    // intervals covering [-w, w], each unioned with far tails so every element
    // is co-compact, plus one two-ray element handling the outside.
    finite_cover cocompact_cover(std::int64_t w = 4, int max_links = 6) {
        const int links = static_cast<int>(int_in(2, max_links));
        std::vector<interval_set> elems;
        const rational tail_lo = rational(-w - 2), tail_hi = rational(w + 2);
        const rational step = rational(2 * w) / rational(links);
        for (int i = 0; i < links; ++i) {
            rational mid_lo = rational(-w) + step * rational(i);
            rational mid_hi = mid_lo + step;
            // widen both ends by a random overlap so consecutive links overlap
            rational pad_l = rational(int_in(1, 32), 32);
            rational pad_r = rational(int_in(1, 32), 32);
            std::vector<open_interval> raw;
            raw.push_back({endpoint(mid_lo - pad_l), endpoint(mid_hi + pad_r)});
            raw.push_back({endpoint::neg_inf(), endpoint(tail_lo)});
            raw.push_back({endpoint(tail_hi), endpoint::pos_inf()});
            elems.push_back(interval_set::normalize(std::move(raw)));
        }
        // the two-ray element: rays reach into the chain's padded span, so the
        // cover property holds by construction; complement [a, b] is compact
        rational a = rational(-w) + rational(int_in(0, 16), 32);
        rational b = rational(w) - rational(int_in(0, 16), 32);
        std::vector<open_interval> raw;
        raw.push_back({endpoint::neg_inf(), endpoint(std::move(a))});
        raw.push_back({endpoint(std::move(b)), endpoint::pos_inf()});
        elems.push_back(interval_set::normalize(std::move(raw)));
        return finite_cover(space::real_line(), std::move(elems));
    }

    // Random cover of a compact interval by an overlapping chain, optionally
    // with extra random components per element (stress for the subcover solver).
    finite_cover compact_cover(const compact_interval& k, int max_elems = 12, bool extra_components = true) {
        const int links = static_cast<int>(int_in(2, std::max(2, max_elems - 1)));
        const rational width = k.width();
        const rational step = width / rational(links);
        std::vector<interval_set> elems;
        for (int i = 0; i < links; ++i) {
            rational lo = k.lo + step * rational(i) - step * rational(int_in(1, 16), 32);
            rational hi = k.lo + step * rational(i + 1) + step * rational(int_in(1, 16), 32);
            std::vector<open_interval> raw;
            raw.push_back({endpoint(std::move(lo)), endpoint(std::move(hi))});
            if (extra_components && int_in(0, 2) == 0) {
                rational a = k.lo + width * rational(int_in(0, 63), 64);
                rational b = a + width * rational(int_in(1, 16), 64);
                raw.push_back({endpoint(std::move(a)), endpoint(std::move(b))});
            }
            elems.push_back(interval_set::normalize(std::move(raw)));
        }
        return finite_cover(space::compact(k), std::move(elems));
    }

    // Random perfect piecewise-affine map with a few breakpoints.
    piecewise_affine perfect_map(int max_breaks = 3) {
        const int k = static_cast<int>(int_in(0, max_breaks));
        std::vector<rational> breaks;
        for (int i = 0; i < k; ++i) breaks.push_back(rational_in(-4, 4, 8));
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        // build pieces left to right, chaining intercepts for continuity
        std::vector<affine> pieces;
        rational slope = nonzero_slope();
        rational offset = rational_in(-2, 2, 8);
        pieces.push_back({slope, offset});
        for (std::size_t i = 0; i < breaks.size(); ++i) {
            const rational v = pieces.back()(breaks[i]);
            rational s = i + 1 == breaks.size() ? nonzero_slope() : maybe_zero_slope();
            pieces.push_back({s, v - s * breaks[i]});
        }
        return piecewise_affine(std::move(breaks), std::move(pieces));
    }

private:
    rational nonzero_slope() {
        rational s = rational_in(-3, 3, 4);
        if (s.sign() == 0) s = rational(1, 2);
        return s;
    }
    rational maybe_zero_slope() { return int_in(0, 3) == 0 ? rational(0) : nonzero_slope(); }

    std::mt19937_64 rng_;
};

}  // namespace cocompact
