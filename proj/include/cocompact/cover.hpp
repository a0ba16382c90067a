#pragma once

#include "piecewise_map.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cocompact {

struct not_a_cover : invalid_input {
    using invalid_input::invalid_input;
};

// Ambient space of a cover: the whole line, or a compact interval carrying
// the relative topology.
class space {
public:
    static space real_line() { return space{}; }
    static space compact(compact_interval k) {
        space s;
        s.box_ = std::move(k);
        return s;
    }
    static space compact(rational lo, rational hi) { return compact(compact_interval(std::move(lo), std::move(hi))); }

    bool is_real_line() const { return !box_.has_value(); }
    const compact_interval& box() const {
        if (!box_) throw std::logic_error("space: box() of the real line");
        return *box_;
    }

    friend bool operator==(const space& a, const space& b) {
        if (a.is_real_line() != b.is_real_line()) return false;
        if (a.is_real_line()) return true;
        return a.box().lo == b.box().lo && a.box().hi == b.box().hi;
    }
    friend bool operator!=(const space& a, const space& b) { return !(a == b); }

    std::string str() const {
        return is_real_line() ? "R" : "[" + box().lo.str() + "," + box().hi.str() + "]";
    }

private:
    space() = default;
    std::optional<compact_interval> box_;
};

// Relative-open elements of a compact interval [a,b] are stored through a
// canonical open representative in R: boundary-touching components reach the
// sentinels a-1 / b+1, so exact equality, containment and intersection of
// representatives coincide with the same relations between traces on [a,b].
inline interval_set canonicalize(const space& sp, const interval_set& u) {
    if (sp.is_real_line()) return u;
    const rational& a = sp.box().lo;
    const rational& b = sp.box().hi;
    const endpoint lo_sent{a - 1}, hi_sent{b + 1};
    const endpoint ea{a}, eb{b};
    std::vector<open_interval> raw;
    for (const auto& iv : u.intervals()) {
        if (iv.hi <= ea || eb <= iv.lo) continue;  // trace on [a,b] is empty
        endpoint lo = iv.lo < ea ? lo_sent : iv.lo;
        endpoint hi = eb < iv.hi ? hi_sent : iv.hi;
        raw.push_back({std::move(lo), std::move(hi)});
    }
    return interval_set::normalize(std::move(raw));
}

// Does x belong to the trace of u on the space?
inline bool trace_contains_point(const space& sp, const interval_set& u, const rational& x) {
    if (!sp.is_real_line() && !sp.box().contains(x)) return false;
    return u.contains_point(x);
}

// Union of elements contains the whole space (exact).
inline bool covers_space(const space& sp, const std::vector<interval_set>& elements) {
    interval_set un;
    for (const auto& e : elements) un = set_union(un, e);
    if (sp.is_real_line()) return un.is_whole_line();
    const closed_set gaps = complement(un);
    for (const auto& g : gaps) {
        // any complement point inside [a,b] breaks coverage
        const endpoint lo{sp.box().lo}, hi{sp.box().hi};
        if (!(g.hi < lo || hi < g.lo)) return false;
    }
    return true;
}

// Finite open cover of a space; elements are canonical representatives.
class finite_cover {
public:
    finite_cover(space sp, std::vector<interval_set> elements) : sp_(std::move(sp)) {
        if (elements.empty()) throw not_a_cover("finite_cover: no elements");
        elems_.reserve(elements.size());
        for (auto& e : elements) elems_.push_back(canonicalize(sp_, e));
        if (!covers_space(sp_, elems_)) throw not_a_cover("finite_cover: union of elements does not cover the space");
        cocompact_.reserve(elems_.size());
        for (const auto& e : elems_)
            cocompact_.push_back(sp_.is_real_line() ? is_cocompact(e) : true);
    }

    const space& ambient() const { return sp_; }
    const std::vector<interval_set>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    const interval_set& operator[](std::size_t i) const { return elems_[i]; }
    bool element_cocompact(std::size_t i) const { return cocompact_[i]; }
    // On a compact space every relative-open set has compact complement.
    bool all_cocompact() const {
        for (bool b : cocompact_)
            if (!b) return false;
        return true;
    }

private:
    space sp_;
    std::vector<interval_set> elems_;
    std::vector<bool> cocompact_;
};

inline finite_cover make_cover(space sp, std::vector<interval_set> elements) {
    return finite_cover(std::move(sp), std::move(elements));
}

inline bool is_surjective_onto(const piecewise_affine& f, const space& sp) {
    return sp.is_real_line() ? is_surjective_real(f) : is_surjective_onto(f, sp.box());
}

namespace detail {

inline void sort_dedup(std::vector<interval_set>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

// Join U v V = { U n V }, empty traces dropped, exact duplicates removed.
inline finite_cover join(const finite_cover& u, const finite_cover& v) {
    if (u.ambient() != v.ambient()) throw invalid_input("join: covers live on different spaces");
    std::vector<interval_set> out;
    out.reserve(u.size() * v.size());
    for (const auto& a : u.elements())
        for (const auto& b : v.elements()) {
            interval_set w = intersect(a, b);
            if (!w.is_empty()) out.push_back(std::move(w));
        }
    detail::sort_dedup(out);
    return finite_cover(u.ambient(), std::move(out));
}

// { f^{-1}(U) : U in u }, empties dropped. On a compact space the map must
// keep the space invariant for the pullback to be a cover of it.
inline finite_cover pullback(const piecewise_affine& f, const finite_cover& u) {
    if (!u.ambient().is_real_line() && !is_invariant(f, u.ambient().box()))
        throw invalid_input("pullback: space is not invariant under the map");
    std::vector<interval_set> out;
    out.reserve(u.size());
    for (const auto& e : u.elements()) {
        interval_set w = canonicalize(u.ambient(), preimage(f, e));
        if (!w.is_empty()) out.push_back(std::move(w));
    }
    detail::sort_dedup(out);
    return finite_cover(u.ambient(), std::move(out));
}

// v refines u ("v < u"): every element of u is contained in some element of v.
inline bool refines(const finite_cover& v, const finite_cover& u) {
    if (u.ambient() != v.ambient()) throw invalid_input("refines: covers live on different spaces");
    for (const auto& a : u.elements()) {
        bool inside = false;
        for (const auto& b : v.elements())
            if (contains(b, a)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

// Drop elements strictly contained in another element. A minimal subcover can
// always swap a dominated element for its dominator, so N is preserved.
inline std::vector<interval_set> maximal_elements(std::vector<interval_set> elems) {
    detail::sort_dedup(elems);  // equal sets collapse first, so containment below is strict
    const std::size_t n = elems.size();
    std::vector<char> dead(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = elems[i];
        if (a.is_empty()) {
            dead[i] = 1;
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& b = elems[j];
            // cheap necessary conditions before the full scan: b's hull must
            // enclose a's, and a boundary component with an infinite end can
            // only fit inside b's matching boundary component
            if (b.is_empty() || b.intervals().front().lo > a.intervals().front().lo ||
                b.intervals().back().hi < a.intervals().back().hi)
                continue;
            if (a.intervals().front().lo.is_neg_inf() && b.intervals().front().hi < a.intervals().front().hi)
                continue;
            if (a.intervals().back().hi.is_pos_inf() && a.intervals().back().lo < b.intervals().back().lo)
                continue;
            if (contains(b, a)) {
                dead[i] = 1;
                break;
            }
        }
    }
    std::vector<interval_set> out;
    for (std::size_t i = 0; i < n; ++i)
        if (!dead[i]) out.push_back(std::move(elems[i]));
    return out;
}

inline finite_cover reduce(const finite_cover& u) {
    return finite_cover(u.ambient(), maximal_elements(u.elements()));
}

// ---------------------------------------------------------------------------
// Minimal subcover N(U) by reduction to exact finite set cover.
//
// The arrangement of all element endpoints splits the space into cells (open
// gaps and endpoint singletons) on which membership in every element is
// constant, so covering all cells is the same as covering the space.
// ---------------------------------------------------------------------------

struct subcover_options {
    std::size_t exact_threshold = 30;   // B&B only when the reduced residual instance is at most this big
    std::uint64_t node_budget = 4'000'000;  // hard stop for pathological branch-and-bound instances
};

struct subcover_result {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // element indices, sorted
    bool exact = true;                 // false => greedy upper bound on N
};

namespace detail {

using word = std::uint64_t;

struct bitrow {
    std::vector<word> w;
    explicit bitrow(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= word(1) << (i & 63); }
    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    std::size_t count_and(const bitrow& m) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += static_cast<std::size_t>(__builtin_popcountll(w[i] & m.w[i]));
        return c;
    }
    bool subset_of(const bitrow& m) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~m.w[i]) return false;
        return true;
    }
    void and_not(const bitrow& m) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~m.w[i];
    }
    bool any() const {
        for (word x : w)
            if (x) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (word x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
};

// Cells of the endpoint arrangement restricted to the space. Each cell is
// identified by an index; cells alternate gap/point/gap/.../point/gap over
// the sorted endpoint list.
struct arrangement {
    std::vector<rational> points;  // sorted distinct finite endpoints inside the space
    bool clip = false;             // compact space: cells outside [a,b] are excluded
    rational lo{0}, hi{0};

    std::size_t cell_count() const {
        // gaps: points.size()+1 (clipped spaces drop the two outer gaps when
        // the boundary coincides... boundaries are always included as points)
        return 2 * points.size() + 1;
    }
    // cell 2i+1 = singleton points[i]; cell 2i = gap before points[i]
};

inline arrangement build_arrangement(const space& sp, const std::vector<interval_set>& elems) {
    arrangement arr;
    std::vector<rational> pts;
    const bool clip = !sp.is_real_line();
    rational a{0}, b{0};
    if (clip) {
        a = sp.box().lo;
        b = sp.box().hi;
        arr.clip = true;
        arr.lo = a;
        arr.hi = b;
        pts.push_back(a);
        if (a != b) pts.push_back(b);
    }
    for (const auto& e : elems)
        for (const auto& iv : e.intervals()) {
            if (iv.lo.is_finite() && (!clip || (a <= iv.lo.value() && iv.lo.value() <= b))) pts.push_back(iv.lo.value());
            if (iv.hi.is_finite() && (!clip || (a <= iv.hi.value() && iv.hi.value() <= b))) pts.push_back(iv.hi.value());
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    arr.points = std::move(pts);
    return arr;
}

// Mark the cells covered by one element. Gap cell 2i spans (points[i-1],
// points[i]) (unbounded at the ends); it is inside (l,r) iff l <= left edge
// and right edge <= r, endpoint cells need l < p < r.
inline bitrow element_cells(const arrangement& arr, const interval_set& e) {
    const std::size_t m = arr.points.size();
    bitrow row(arr.cell_count());
    const auto& P = arr.points;
    for (const auto& iv : e.intervals()) {
        // singleton cells: lo < P[i] < hi
        const std::size_t i_lo = iv.lo.is_neg_inf()
                                     ? 0
                                     : static_cast<std::size_t>(std::upper_bound(P.begin(), P.end(), iv.lo.value()) - P.begin());
        const std::size_t i_hi = iv.hi.is_pos_inf()
                                     ? m
                                     : static_cast<std::size_t>(std::lower_bound(P.begin(), P.end(), iv.hi.value()) - P.begin());
        for (std::size_t i = i_lo; i < i_hi; ++i) row.set(2 * i + 1);
        // gap cells: gap j spans (P[j-1], P[j]) with P[-1] = -inf, P[m] = +inf;
        // gap j is inside (lo, hi) iff lo <= P[j-1] and P[j] <= hi
        std::size_t j_first;
        if (iv.lo.is_neg_inf()) {
            j_first = 0;
        } else {
            j_first = static_cast<std::size_t>(std::lower_bound(P.begin(), P.end(), iv.lo.value()) - P.begin()) + 1;
        }
        std::size_t j_last;
        if (iv.hi.is_pos_inf()) {
            j_last = m;
        } else {
            const auto ub = std::upper_bound(P.begin(), P.end(), iv.hi.value());
            if (ub == P.begin()) continue;
            j_last = static_cast<std::size_t>(ub - P.begin()) - 1;
        }
        for (std::size_t j = j_first; j <= j_last; ++j) row.set(2 * j);
    }
    return row;
}

}  // namespace detail

// Exact (when flagged) minimal-subcover computation. Preprocessing forces
// elements that uniquely cover some cell and prunes dominated elements; the
// residual instance is solved by branch-and-bound when small enough, by
// greedy (flagged approximate) otherwise.
inline subcover_result minimal_subcover(const finite_cover& u, const subcover_options& opts = {}) {
    using detail::bitrow;
    const auto& elems = u.elements();
    const std::size_t n = elems.size();
    detail::arrangement arr = detail::build_arrangement(u.ambient(), elems);
    std::size_t ncells = arr.cell_count();

    std::vector<bitrow> rows;
    rows.reserve(n);
    for (const auto& e : elems) rows.push_back(detail::element_cells(arr, e));

    // universe: on R all cells; on [a,b] only cells between the boundary points
    bitrow universe(ncells);
    if (arr.clip) {
        const auto& P = arr.points;
        const auto a_it = std::lower_bound(P.begin(), P.end(), arr.lo);
        const auto b_it = std::lower_bound(P.begin(), P.end(), arr.hi);
        const std::size_t ia = static_cast<std::size_t>(a_it - P.begin());
        const std::size_t ib = static_cast<std::size_t>(b_it - P.begin());
        for (std::size_t c = 2 * ia + 1; c <= 2 * ib + 1; ++c) universe.set(c);
    } else {
        for (std::size_t c = 0; c < ncells; ++c) universe.set(c);
    }

    bitrow uncovered = universe;
    std::vector<char> active(n, 1);
    std::vector<std::size_t> chosen;

    // forcing pass: a cell covered by exactly one element pins that element.
    // Picking an element only removes cells, never coverers, so a single pass
    // finds every forced element.
    {
        std::vector<std::uint32_t> counts(ncells, 0);
        std::vector<std::uint32_t> last(ncells, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t w = 0; w < rows[i].w.size(); ++w) {
                detail::word bits = rows[i].w[w];
                while (bits) {
                    const std::size_t cell = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    ++counts[cell];
                    last[cell] = static_cast<std::uint32_t>(i);
                }
            }
        for (std::size_t cell = 0; cell < ncells; ++cell) {
            if (!universe.get(cell)) continue;
            if (counts[cell] == 0) throw not_a_cover("minimal_subcover: uncovered cell (cover invariant broken)");
            if (counts[cell] == 1 && active[last[cell]]) {
                chosen.push_back(last[cell]);
                active[last[cell]] = 0;
            }
        }
        for (std::size_t i : chosen) uncovered.and_not(rows[i]);
    }

    subcover_result res;
    if (!uncovered.any()) {
        res.size = chosen.size();
        res.witness = chosen;
        std::sort(res.witness.begin(), res.witness.end());
        res.exact = true;
        return res;
    }

    // residual instance: restrict to uncovered cells
    std::vector<std::size_t> idx;
    std::vector<bitrow> sub;
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        bitrow r = rows[i];
        for (std::size_t w = 0; w < r.w.size(); ++w) r.w[w] &= uncovered.w[w];
        if (!r.any()) continue;
        idx.push_back(i);
        sub.push_back(std::move(r));
    }

    // reduction loop: forced elements, dominated rows, implied cells. Dropping
    // a cell whose coverer set contains another cell's coverer set never
    // changes feasibility or the optimum (its constraint is implied).
    bitrow need = uncovered;
    for (bool changed = true; changed && need.any();) {
        changed = false;
        // forced elements on the current cells
        {
            std::vector<std::uint32_t> cnt(ncells, 0), who(ncells, 0);
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t w = 0; w < sub[i].w.size(); ++w) {
                    detail::word bits = sub[i].w[w] & need.w[w];
                    while (bits) {
                        const std::size_t cell = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
                        bits &= bits - 1;
                        ++cnt[cell];
                        who[cell] = static_cast<std::uint32_t>(i);
                    }
                }
            std::vector<char> forced(sub.size(), 0);
            for (std::size_t cell = 0; cell < ncells; ++cell) {
                if (!need.get(cell)) continue;
                if (cnt[cell] == 0) throw not_a_cover("minimal_subcover: uncovered cell (cover invariant broken)");
                if (cnt[cell] == 1) forced[who[cell]] = 1;
            }
            for (std::size_t i = 0; i < sub.size(); ++i)
                if (forced[i]) {
                    chosen.push_back(idx[i]);
                    need.and_not(sub[i]);
                    changed = true;
                }
            if (changed) {
                std::size_t k = 0;
                for (std::size_t i = 0; i < sub.size(); ++i) {
                    if (forced[i]) continue;
                    bitrow r = std::move(sub[i]);
                    for (std::size_t w = 0; w < r.w.size(); ++w) r.w[w] &= need.w[w];
                    if (!r.any()) continue;
                    sub[k] = std::move(r);
                    idx[k] = idx[i];
                    ++k;
                }
                sub.resize(k);
                idx.resize(k);
                continue;
            }
        }
        // dominated rows (keep the first of equal rows)
        {
            std::vector<char> dead(sub.size(), 0);
            for (std::size_t i = 0; i < sub.size(); ++i) {
                for (std::size_t j = 0; j < sub.size() && !dead[i]; ++j)
                    if (i != j && !dead[j] && sub[i].subset_of(sub[j]) && !(sub[j].subset_of(sub[i]) && j > i))
                        dead[i] = 1;
            }
            std::size_t k = 0;
            for (std::size_t i = 0; i < sub.size(); ++i) {
                if (dead[i]) continue;
                if (k != i) {
                    sub[k] = std::move(sub[i]);
                    idx[k] = idx[i];
                }
                ++k;
            }
            if (k != sub.size()) changed = true;
            sub.resize(k);
            idx.resize(k);
        }
        // implied cells: coverers(d) subset of coverers(c) lets c go
        {
            std::vector<std::size_t> cells;
            for (std::size_t c = 0; c < ncells; ++c)
                if (need.get(c)) cells.push_back(c);
            const std::size_t m = cells.size();
            std::vector<bitrow> coverers(m, bitrow(sub.size()));
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t ci = 0; ci < m; ++ci)
                    if (sub[i].get(cells[ci])) coverers[ci].set(i);
            for (std::size_t a = 0; a < m; ++a) {
                if (!need.get(cells[a])) continue;
                for (std::size_t b = 0; b < m; ++b) {
                    if (a == b || !need.get(cells[b])) continue;
                    if (coverers[b].subset_of(coverers[a]) && !(coverers[a].subset_of(coverers[b]) && b > a)) {
                        // covering cell b forces cell a as well
                        need.w[cells[a] >> 6] &= ~(detail::word(1) << (cells[a] & 63));
                        changed = true;
                        break;
                    }
                }
            }
            if (changed)
                for (auto& r : sub)
                    for (std::size_t w = 0; w < r.w.size(); ++w) r.w[w] &= need.w[w];
        }
    }

    if (!need.any()) {
        res.size = chosen.size();
        res.witness = chosen;
        std::sort(res.witness.begin(), res.witness.end());
        res.exact = true;
        return res;
    }

    const auto greedy_residual = [&](bitrow want) {
        std::vector<std::size_t> picks;
        while (want.any()) {
            std::size_t best = sub.size(), best_cov = 0;
            for (std::size_t i = 0; i < sub.size(); ++i) {
                const std::size_t c = sub[i].count_and(want);
                if (c > best_cov) {
                    best_cov = c;
                    best = i;
                }
            }
            if (best == sub.size()) throw not_a_cover("minimal_subcover: greedy ran out of elements");
            picks.push_back(best);
            want.and_not(sub[best]);
        }
        return picks;
    };

    std::vector<std::size_t> best_picks = greedy_residual(need);
    bool exact = false;

    if (sub.size() <= opts.exact_threshold) {
        // branch and bound over the reduced instance
        std::vector<std::size_t> live_cells;
        for (std::size_t c = 0; c < ncells; ++c)
            if (need.get(c)) live_cells.push_back(c);
        // per-cell coverer lists and exclusion masks for the packing bound
        std::vector<std::vector<std::uint32_t>> coverers(live_cells.size());
        std::vector<bitrow> exclusion(live_cells.size(), bitrow(ncells));
        for (std::size_t ci = 0; ci < live_cells.size(); ++ci)
            for (std::size_t i = 0; i < sub.size(); ++i)
                if (sub[i].get(live_cells[ci])) {
                    coverers[ci].push_back(static_cast<std::uint32_t>(i));
                    for (std::size_t w = 0; w < exclusion[ci].w.size(); ++w) exclusion[ci].w[w] |= sub[i].w[w];
                }
        std::vector<std::size_t> cell_order(live_cells.size());
        std::iota(cell_order.begin(), cell_order.end(), 0);
        std::sort(cell_order.begin(), cell_order.end(), [&](std::size_t a, std::size_t b) {
            if (coverers[a].size() != coverers[b].size()) return coverers[a].size() < coverers[b].size();
            return a < b;
        });

        // packing bound: cells no two of which share a coverer each demand
        // their own element
        const auto packing_lb = [&](const bitrow& want) {
            std::size_t lb = 0;
            bitrow left = want;
            for (std::size_t ci : cell_order) {
                if (!left.get(live_cells[ci])) continue;
                ++lb;
                left.and_not(exclusion[ci]);
            }
            return lb;
        };

        std::uint64_t nodes = 0;
        std::size_t best_size = best_picks.size();
        std::vector<std::size_t> cur;
        bool budget_ok = true;

        const std::function<void(const bitrow&)> dfs = [&](const bitrow& want) {
            if (!budget_ok) return;
            if (++nodes > opts.node_budget) {
                budget_ok = false;
                return;
            }
            if (!want.any()) {
                if (cur.size() < best_size) {
                    best_size = cur.size();
                    best_picks = cur;
                }
                return;
            }
            if (cur.size() + packing_lb(want) >= best_size) return;
            // branch on the rarest still-wanted cell
            std::size_t pick_ci = live_cells.size();
            for (std::size_t ci : cell_order)
                if (want.get(live_cells[ci])) {
                    pick_ci = ci;
                    break;
                }
            std::vector<std::uint32_t> cands = coverers[pick_ci];
            std::sort(cands.begin(), cands.end(), [&](std::uint32_t a, std::uint32_t b) {
                return sub[a].count_and(want) > sub[b].count_and(want);
            });
            for (std::uint32_t i : cands) {
                bitrow next = want;
                next.and_not(sub[i]);
                cur.push_back(i);
                dfs(next);
                cur.pop_back();
                if (!budget_ok) return;
            }
        };
        dfs(need);
        exact = budget_ok;
    }

    res.size = chosen.size() + best_picks.size();
    res.witness = chosen;
    for (std::size_t i : best_picks) res.witness.push_back(idx[i]);
    std::sort(res.witness.begin(), res.witness.end());
    res.exact = exact;
    return res;
}

inline std::size_t minimal_subcover_size(const finite_cover& u, const subcover_options& opts = {}) {
    return minimal_subcover(u, opts).size;
}

// H(U) = log N(U), natural log.
inline double cover_entropy(const finite_cover& u, const subcover_options& opts = {}) {
    return std::log(static_cast<double>(minimal_subcover_size(u, opts)));
}

// Re-verify a subcover witness exactly: union of the chosen elements must
// still cover the space.
inline bool witness_covers(const finite_cover& u, const std::vector<std::size_t>& witness) {
    std::vector<interval_set> chosen;
    chosen.reserve(witness.size());
    for (std::size_t i : witness) chosen.push_back(u[i]);
    return covers_space(u.ambient(), chosen);
}

}  // namespace cocompact
