#pragma once

#include "interval_set.hpp"

#include <cstddef>
#include <vector>

namespace cocompact {

struct affine {
    rational slope, offset;
    rational operator()(const rational& x) const { return slope * x + offset; }
};

inline bool operator==(const affine& a, const affine& b) {
    return a.slope == b.slope && a.offset == b.offset;
}

// Continuous piecewise-affine self-map of R: k breakpoints x1 < ... < xk and
// k+1 affine pieces acting on (-inf,x1], [x1,x2], ..., [xk,inf). Adjacent
// pieces must agree exactly at the shared breakpoint.
class piecewise_affine {
public:
    piecewise_affine(std::vector<rational> breakpoints, std::vector<affine> pieces)
        : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (pieces_.empty()) throw invalid_input("piecewise_affine: needs at least one piece");
        if (pieces_.size() != breaks_.size() + 1)
            throw invalid_input("piecewise_affine: piece count must be breakpoint count + 1");
        for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
            if (!(breaks_[i] < breaks_[i + 1]))
                throw invalid_input("piecewise_affine: breakpoints must be strictly increasing");
        for (std::size_t i = 0; i < breaks_.size(); ++i)
            if (pieces_[i](breaks_[i]) != pieces_[i + 1](breaks_[i]))
                throw invalid_input("piecewise_affine: discontinuity at breakpoint " + breaks_[i].str());
    }

    static piecewise_affine constant_map(rational c) { return {{}, {affine{rational(0), std::move(c)}}}; }
    static piecewise_affine linear(rational slope, rational offset) {
        return {{}, {affine{std::move(slope), std::move(offset)}}};
    }
    static piecewise_affine identity() { return linear(1, 0); }
    // x -> 2x, the expanding linear system on R.
    static piecewise_affine doubling() { return linear(2, 0); }
    // Tent map 1-|2x-1| on [0,1], extended by the same slopes beyond the
    // unit interval so it is a proper self-map of R with [0,1] invariant.
    static piecewise_affine tent() {
        return {{rational(1, 2)}, {affine{rational(2), rational(0)}, affine{rational(-2), rational(2)}}};
    }

    const std::vector<rational>& breakpoints() const { return breaks_; }
    const std::vector<affine>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }

    // Index of the piece whose region contains x (ties at a breakpoint
    // resolve to the left region; both pieces agree there).
    std::size_t piece_index(const rational& x) const {
        std::size_t lo = 0, hi = breaks_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (breaks_[mid] < x) lo = mid + 1;
            else hi = mid;
        }
        return lo;
    }

    rational operator()(const rational& x) const { return pieces_[piece_index(x)](x); }

    // Largest |slope| over all pieces; expansion bound used by grid rules.
    rational max_abs_slope() const {
        rational m(0);
        for (const auto& p : pieces_)
            if (p.slope.abs() > m) m = p.slope.abs();
        return m;
    }

    // Region of piece i as a closed (possibly unbounded) interval.
    closed_interval region(std::size_t i) const {
        endpoint lo = i == 0 ? endpoint::neg_inf() : endpoint(breaks_[i - 1]);
        endpoint hi = i == breaks_.size() ? endpoint::pos_inf() : endpoint(breaks_[i]);
        return {std::move(lo), std::move(hi)};
    }

    friend bool operator==(const piecewise_affine& a, const piecewise_affine& b) {
        return a.breaks_ == b.breaks_ && a.pieces_ == b.pieces_;
    }

private:
    std::vector<rational> breaks_;
    std::vector<affine> pieces_;
};

inline rational eval(const piecewise_affine& f, const rational& x) { return f(x); }

namespace detail {

// Image of piece i's region: a closed interval, unbounded unless the piece
// is constant or the region is bounded.
inline closed_interval piece_range(const piecewise_affine& f, std::size_t i) {
    const closed_interval reg = f.region(i);
    const affine& p = f.pieces()[i];
    if (p.slope.sign() == 0) return {endpoint(p.offset), endpoint(p.offset)};
    const auto image = [&](const endpoint& e) -> endpoint {
        if (e.is_neg_inf()) return p.slope.sign() > 0 ? endpoint::neg_inf() : endpoint::pos_inf();
        if (e.is_pos_inf()) return p.slope.sign() > 0 ? endpoint::pos_inf() : endpoint::neg_inf();
        return endpoint(p(e.value()));
    };
    endpoint a = image(reg.lo), b = image(reg.hi);
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

}  // namespace detail

// Exact range f(R) as a closed set.
inline closed_set range(const piecewise_affine& f) {
    closed_set out;
    out.reserve(f.piece_count());
    for (std::size_t i = 0; i < f.piece_count(); ++i) out.push_back(detail::piece_range(f, i));
    return closed_normalize(std::move(out));
}

// Exact image of a compact interval (continuous => a compact interval).
inline compact_interval range_on(const piecewise_affine& f, const compact_interval& k) {
    rational lo = f(k.lo), hi = lo;
    const auto consider = [&](const rational& v) {
        if (v < lo) lo = v;
        if (hi < v) hi = v;
    };
    consider(f(k.hi));
    for (const auto& b : f.breakpoints())
        if (k.lo < b && b < k.hi) consider(f(b));
    return {std::move(lo), std::move(hi)};
}

// Exact preimage of an open set; the result is open by continuity. Constant
// pieces contribute their whole region when their value lies in u. Clipping
// per-piece solutions to regions strips the shared breakpoints, so a final
// pass re-merges output intervals that meet at a breakpoint x with f(x) in u.
inline interval_set preimage(const piecewise_affine& f, const interval_set& u) {
    std::vector<open_interval> raw;
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        const affine& p = f.pieces()[i];
        const closed_interval reg = f.region(i);
        if (p.slope.sign() == 0) {
            if (u.contains_point(p.offset) && reg.lo < reg.hi) raw.push_back({reg.lo, reg.hi});
            continue;
        }
        for (const auto& t : u.intervals()) {
            // solve t.lo < p(x) < t.hi within the region
            const auto pre = [&](const endpoint& e) -> endpoint {
                if (e.is_neg_inf()) return p.slope.sign() > 0 ? endpoint::neg_inf() : endpoint::pos_inf();
                if (e.is_pos_inf()) return p.slope.sign() > 0 ? endpoint::pos_inf() : endpoint::neg_inf();
                return endpoint((e.value() - p.offset) / p.slope);
            };
            endpoint a = pre(t.lo);
            endpoint b = pre(t.hi);
            if (b < a) std::swap(a, b);
            endpoint lo = std::max(a, reg.lo);
            endpoint hi = std::min(b, reg.hi);
            if (lo < hi) raw.push_back({std::move(lo), std::move(hi)});
        }
    }
    interval_set s = interval_set::normalize(std::move(raw));
    // heal artificial splits at breakpoints that genuinely belong to the preimage
    std::vector<open_interval> healed(s.intervals());
    bool changed = false;
    for (std::size_t i = 0; i + 1 < healed.size();) {
        const endpoint& e = healed[i].hi;
        if (e.is_finite() && e == healed[i + 1].lo && u.contains_point(f(e.value()))) {
            healed[i].hi = healed[i + 1].hi;
            healed.erase(healed.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            changed = true;
        } else {
            ++i;
        }
    }
    return changed ? interval_set::normalize(std::move(healed)) : s;
}

// Exact fiber f^{-1}({y}) as a closed set (points and, for constant pieces,
// whole regions).
inline closed_set preimage_point(const piecewise_affine& f, const rational& y) {
    closed_set out;
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        const affine& p = f.pieces()[i];
        const closed_interval reg = f.region(i);
        if (p.slope.sign() == 0) {
            if (p.offset == y) out.push_back(reg);
            continue;
        }
        const rational x = (y - p.offset) / p.slope;
        const endpoint e{x};
        if (reg.lo <= e && e <= reg.hi) out.push_back({e, e});
    }
    return closed_normalize(std::move(out));
}

// Solutions of ylo <= f(x) <= yhi restricted to [xlo, xhi], as closed
// intervals. Only pieces overlapping the window are visited, so this stays
// cheap on maps with many pieces (iterated tent maps).
inline closed_set preimage_closed_within(const piecewise_affine& f, const rational& ylo, const rational& yhi,
                                         const rational& xlo, const rational& xhi) {
    closed_set out;
    if (yhi < ylo || xhi < xlo) return out;
    std::size_t first = f.piece_index(xlo);
    std::size_t last = f.piece_index(xhi);
    for (std::size_t i = first; i <= last; ++i) {
        const affine& p = f.pieces()[i];
        const closed_interval reg = f.region(i);
        rational lo = reg.lo.is_neg_inf() ? xlo : std::max(xlo, reg.lo.value());
        rational hi = reg.hi.is_pos_inf() ? xhi : std::min(xhi, reg.hi.value());
        if (hi < lo) continue;
        if (p.slope.sign() == 0) {
            if (ylo <= p.offset && p.offset <= yhi) out.push_back({endpoint(lo), endpoint(hi)});
            continue;
        }
        rational a = (ylo - p.offset) / p.slope;
        rational b = (yhi - p.offset) / p.slope;
        if (b < a) std::swap(a, b);
        if (a < lo) a = lo;
        if (hi < b) b = hi;
        if (a <= b) out.push_back({endpoint(std::move(a)), endpoint(std::move(b))});
    }
    return closed_normalize(std::move(out));
}

// On R, perfectness (closed map with compact fibers) is equivalent to
// properness, which for a continuous piecewise-affine map means both
// unbounded pieces are non-constant.
inline bool is_perfect(const piecewise_affine& f) {
    return f.pieces().front().slope.sign() != 0 && f.pieces().back().slope.sign() != 0;
}

inline bool is_surjective_real(const piecewise_affine& f) {
    const closed_set r = range(f);
    return r.size() == 1 && r[0].lo.is_neg_inf() && r[0].hi.is_pos_inf();
}

// f(k) contains k, i.e. the restriction to an invariant k maps onto it.
inline bool is_surjective_onto(const piecewise_affine& f, const compact_interval& k) {
    const compact_interval img = range_on(f, k);
    return img.lo <= k.lo && k.hi <= img.hi;
}

// f(k) is a subset of k.
inline bool is_invariant(const piecewise_affine& f, const compact_interval& k) {
    const compact_interval img = range_on(f, k);
    return k.lo <= img.lo && img.hi <= k.hi;
}

// g o f as an explicit piecewise-affine map. Composite breakpoints are f's
// own plus the per-piece preimages of g's breakpoints; on each resulting
// region both maps are affine, so sampling the region determines the piece.
inline piecewise_affine compose(const piecewise_affine& g, const piecewise_affine& f,
                                std::size_t piece_cap = 1 << 16) {
    std::vector<rational> cuts = f.breakpoints();
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        const affine& p = f.pieces()[i];
        if (p.slope.sign() == 0) continue;
        const closed_interval reg = f.region(i);
        for (const auto& b : g.breakpoints()) {
            rational x = (b - p.offset) / p.slope;
            const endpoint e{x};
            if (reg.lo < e && e < reg.hi) cuts.push_back(std::move(x));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.size() + 1 > piece_cap) throw resource_limit("compose: piece cap exceeded");

    const auto composed_at = [&](const rational& sample) {
        const affine& p = f.pieces()[f.piece_index(sample)];
        const affine& q = g.pieces()[g.piece_index(p(sample))];
        return affine{q.slope * p.slope, q.slope * p.offset + q.offset};
    };
    std::vector<affine> pieces;
    pieces.reserve(cuts.size() + 1);
    if (cuts.empty()) {
        pieces.push_back(composed_at(rational(0)));
    } else {
        pieces.push_back(composed_at(cuts.front() - 1));
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            pieces.push_back(composed_at((cuts[i] + cuts[i + 1]) / rational(2)));
        pieces.push_back(composed_at(cuts.back() + 1));
    }
    // drop cuts whose two sides agree
    std::vector<rational> nb;
    std::vector<affine> np;
    np.push_back(pieces.front());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (pieces[i + 1] == np.back()) continue;
        nb.push_back(cuts[i]);
        np.push_back(pieces[i + 1]);
    }
    return piecewise_affine(std::move(nb), std::move(np));
}

// m-fold composition f o ... o f with exact breakpoints.
inline piecewise_affine power(const piecewise_affine& f, std::size_t m, std::size_t piece_cap = 1 << 16) {
    if (m < 1) throw invalid_input("power: exponent must be >= 1");
    piecewise_affine out = f;
    for (std::size_t i = 1; i < m; ++i) out = compose(f, out, piece_cap);
    return out;
}

// Inverse of a strictly monotone piecewise-affine bijection of R.
inline piecewise_affine invert(const piecewise_affine& f) {
    const int dir = f.pieces().front().slope.sign();
    if (dir == 0) throw invalid_input("invert: map is not monotone");
    for (const auto& p : f.pieces())
        if (p.slope.sign() != dir) throw invalid_input("invert: map is not monotone");
    std::vector<rational> breaks;
    std::vector<affine> pieces;
    const std::size_t k = f.breakpoints().size();
    for (std::size_t i = 0; i < k; ++i) breaks.push_back(f(f.breakpoints()[i]));
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        const affine& p = f.pieces()[i];
        pieces.push_back(affine{rational(1) / p.slope, -p.offset / p.slope});
    }
    if (dir < 0) {
        std::reverse(breaks.begin(), breaks.end());
        std::reverse(pieces.begin(), pieces.end());
    }
    return piecewise_affine(std::move(breaks), std::move(pieces));
}

}  // namespace cocompact
