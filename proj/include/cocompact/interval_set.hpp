#pragma once

#include "rational.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace cocompact {

// Interval endpoint: an exact rational, or one of the symbolic infinities.
class endpoint {
public:
    endpoint() : kind_(0), v_(0) {}
    endpoint(rational v) : kind_(0), v_(std::move(v)) {}
    endpoint(long long v) : kind_(0), v_(v) {}
    static endpoint neg_inf() { endpoint e; e.kind_ = -1; return e; }
    static endpoint pos_inf() { endpoint e; e.kind_ = 1; return e; }

    bool is_neg_inf() const { return kind_ < 0; }
    bool is_pos_inf() const { return kind_ > 0; }
    bool is_finite() const { return kind_ == 0; }
    const rational& value() const {
        if (kind_ != 0) throw std::logic_error("endpoint: value() of infinity");
        return v_;
    }

    friend bool operator==(const endpoint& a, const endpoint& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != 0 || a.v_ == b.v_;
    }
    friend bool operator<(const endpoint& a, const endpoint& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        return a.kind_ == 0 && a.v_ < b.v_;
    }
    friend bool operator!=(const endpoint& a, const endpoint& b) { return !(a == b); }
    friend bool operator>(const endpoint& a, const endpoint& b) { return b < a; }
    friend bool operator<=(const endpoint& a, const endpoint& b) { return !(b < a); }
    friend bool operator>=(const endpoint& a, const endpoint& b) { return !(a < b); }

    std::string str() const {
        if (kind_ < 0) return "-inf";
        if (kind_ > 0) return "+inf";
        return v_.str();
    }

private:
    int kind_;  // -1, 0, +1
    rational v_;
};

// Open interval (lo, hi) with lo < hi; lo may be -inf, hi may be +inf.
struct open_interval {
    endpoint lo, hi;
};

inline bool operator==(const open_interval& a, const open_interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

// Closed interval [lo, hi] where a side is closed only if finite; used for
// complements and compact sets. lo == hi encodes a singleton.
struct closed_interval {
    endpoint lo, hi;
    bool is_bounded() const { return lo.is_finite() && hi.is_finite(); }
    bool contains(const rational& x) const {
        const endpoint e{x};
        return lo <= e && e <= hi;
    }
};

inline bool operator==(const closed_interval& a, const closed_interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

using closed_set = std::vector<closed_interval>;  // disjoint, sorted

// An open subset of the extended real line, kept as a normalized (sorted,
// pairwise disjoint, non-adjacent) finite union of open intervals. Open
// intervals that merely share an endpoint, like (0,1) and (1,2), stay
// separate: their union is not an interval.
class interval_set {
public:
    interval_set() = default;

    static interval_set empty() { return {}; }
    static interval_set whole_line() { return of(endpoint::neg_inf(), endpoint::pos_inf()); }
    static interval_set of(endpoint lo, endpoint hi) {
        interval_set s;
        if (!(lo < hi)) throw invalid_input("interval_set: left endpoint must be < right endpoint");
        s.ivs_.push_back({std::move(lo), std::move(hi)});
        return s;
    }
    static interval_set of(rational lo, rational hi) { return of(endpoint(std::move(lo)), endpoint(std::move(hi))); }

    // Validates and normalizes raw intervals (merging overlaps). Idempotent.
    static interval_set normalize(std::vector<open_interval> raw);

    bool is_empty() const { return ivs_.empty(); }
    bool is_whole_line() const {
        return ivs_.size() == 1 && ivs_[0].lo.is_neg_inf() && ivs_[0].hi.is_pos_inf();
    }
    std::size_t size() const { return ivs_.size(); }
    const std::vector<open_interval>& intervals() const { return ivs_; }
    const open_interval& operator[](std::size_t i) const { return ivs_[i]; }

    bool contains_point(const rational& x) const;

    friend bool operator==(const interval_set& a, const interval_set& b) { return a.ivs_ == b.ivs_; }
    friend bool operator!=(const interval_set& a, const interval_set& b) { return !(a.ivs_ == b.ivs_); }
    friend bool operator<(const interval_set& a, const interval_set& b);  // arbitrary total order for dedup

    std::string str() const;

private:
    std::vector<open_interval> ivs_;
    friend interval_set set_union(const interval_set&, const interval_set&);
    friend interval_set intersect(const interval_set&, const interval_set&);
};

inline interval_set interval_set::normalize(std::vector<open_interval> raw) {
    for (const auto& iv : raw)
        if (!(iv.lo < iv.hi)) throw invalid_input("interval_set: malformed interval (left >= right)");
    std::sort(raw.begin(), raw.end(), [](const open_interval& a, const open_interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    interval_set out;
    for (auto& iv : raw) {
        if (!out.ivs_.empty() && iv.lo < out.ivs_.back().hi) {
            if (out.ivs_.back().hi < iv.hi) out.ivs_.back().hi = iv.hi;
        } else {
            out.ivs_.push_back(std::move(iv));
        }
    }
    return out;
}

inline bool interval_set::contains_point(const rational& x) const {
    const endpoint e{x};
    // first interval with hi > x
    auto it = std::lower_bound(ivs_.begin(), ivs_.end(), e, [](const open_interval& iv, const endpoint& p) {
        return iv.hi <= p;
    });
    return it != ivs_.end() && it->lo < e;
}

inline bool operator<(const interval_set& a, const interval_set& b) {
    const auto cmp = [](const open_interval& x, const open_interval& y) {
        if (x.lo != y.lo) return x.lo < y.lo ? -1 : 1;
        if (x.hi != y.hi) return x.hi < y.hi ? -1 : 1;
        return 0;
    };
    const std::size_t n = std::min(a.ivs_.size(), b.ivs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = cmp(a.ivs_[i], b.ivs_[i]); c != 0) return c < 0;
    return a.ivs_.size() < b.ivs_.size();
}

inline interval_set set_union(const interval_set& a, const interval_set& b) {
    std::vector<open_interval> raw;
    raw.reserve(a.size() + b.size());
    raw.insert(raw.end(), a.intervals().begin(), a.intervals().end());
    raw.insert(raw.end(), b.intervals().begin(), b.intervals().end());
    return interval_set::normalize(std::move(raw));
}

// Exact intersection. When one side has many more components, components of
// the small side are matched against the big side by binary search.
inline interval_set intersect(const interval_set& a, const interval_set& b) {
    const interval_set& small = a.size() <= b.size() ? a : b;
    const interval_set& big = a.size() <= b.size() ? b : a;
    interval_set out;
    if (small.is_empty()) return out;
    const auto& bv = big.intervals();
    for (const auto& s : small.intervals()) {
        // first component of big with hi > s.lo
        auto it = std::lower_bound(bv.begin(), bv.end(), s.lo, [](const open_interval& iv, const endpoint& p) {
            return iv.hi <= p;
        });
        for (; it != bv.end() && it->lo < s.hi; ++it) {
            endpoint lo = std::max(s.lo, it->lo);
            endpoint hi = std::min(s.hi, it->hi);
            if (lo < hi) out.ivs_.push_back({std::move(lo), std::move(hi)});
        }
    }
    // pieces come out sorted and disjoint already
    return out;
}

// Closed complement R \ a as disjoint closed intervals (rays, intervals,
// or singleton points where two open components share an endpoint).
inline closed_set complement(const interval_set& a) {
    closed_set out;
    if (a.is_empty()) {
        out.push_back({endpoint::neg_inf(), endpoint::pos_inf()});
        return out;
    }
    const auto& iv = a.intervals();
    if (!iv.front().lo.is_neg_inf()) out.push_back({endpoint::neg_inf(), iv.front().lo});
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) out.push_back({iv[i].hi, iv[i + 1].lo});
    if (!iv.back().hi.is_pos_inf()) out.push_back({iv.back().hi, endpoint::pos_inf()});
    return out;
}

inline bool is_bounded(const closed_set& c) {
    for (const auto& iv : c)
        if (!iv.is_bounded()) return false;
    return true;
}

// Complement is compact iff it is closed (always) and bounded.
inline bool is_cocompact(const interval_set& a) { return is_bounded(complement(a)); }

// sup(a) - inf(a); 0 for the empty set by convention, +inf when unbounded.
inline ext_rational diameter(const interval_set& a) {
    if (a.is_empty()) return ext_rational(rational(0));
    const endpoint& lo = a.intervals().front().lo;
    const endpoint& hi = a.intervals().back().hi;
    if (!lo.is_finite() || !hi.is_finite()) return ext_rational::infinity();
    return ext_rational(hi.value() - lo.value());
}

// Subset test: every component of b lies inside a component of a.
inline bool contains(const interval_set& a, const interval_set& b) {
    const auto& av = a.intervals();
    for (const auto& iv : b.intervals()) {
        auto it = std::lower_bound(av.begin(), av.end(), iv.lo, [](const open_interval& x, const endpoint& p) {
            return x.hi <= p;
        });
        if (it == av.end() || !(it->lo <= iv.lo && iv.hi <= it->hi)) return false;
    }
    return true;
}

// inf{|x - y| : y not in a}; 0 when x is outside a, +inf when a = R.
inline ext_rational dist_to_complement(const interval_set& a, const rational& x) {
    const endpoint e{x};
    const auto& av = a.intervals();
    auto it = std::lower_bound(av.begin(), av.end(), e, [](const open_interval& iv, const endpoint& p) {
        return iv.hi <= p;
    });
    if (it == av.end() || !(it->lo < e)) return ext_rational(rational(0));
    if (it->lo.is_neg_inf() && it->hi.is_pos_inf()) return ext_rational::infinity();
    if (it->lo.is_neg_inf()) return ext_rational(it->hi.value() - x);
    if (it->hi.is_pos_inf()) return ext_rational(x - it->lo.value());
    return ext_rational(std::min(x - it->lo.value(), it->hi.value() - x));
}

inline std::string interval_set::str() const {
    if (ivs_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < ivs_.size(); ++i) {
        if (i) s += " u ";
        s += "(" + ivs_[i].lo.str() + "," + ivs_[i].hi.str() + ")";
    }
    return s;
}

// --- closed-set helpers (used for complements, Bowen compact cores) ---

inline closed_set closed_normalize(closed_set raw) {
    for (const auto& iv : raw)
        if (iv.hi < iv.lo) throw invalid_input("closed_set: malformed interval");
    std::sort(raw.begin(), raw.end(), [](const closed_interval& a, const closed_interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    closed_set out;
    for (auto& iv : raw) {
        if (!out.empty() && iv.lo <= out.back().hi) {  // closed intervals touching at a point do merge
            if (out.back().hi < iv.hi) out.back().hi = iv.hi;
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

inline closed_set closed_union(const closed_set& a, const closed_set& b) {
    closed_set raw = a;
    raw.insert(raw.end(), b.begin(), b.end());
    return closed_normalize(std::move(raw));
}

inline bool closed_contains_point(const closed_set& c, const rational& x) {
    for (const auto& iv : c)
        if (iv.contains(x)) return true;
    return false;
}

inline closed_set closed_intersect(const closed_set& a, const closed_set& b) {
    closed_set out;
    for (const auto& x : a)
        for (const auto& y : b) {
            endpoint lo = std::max(x.lo, y.lo);
            endpoint hi = std::min(x.hi, y.hi);
            if (lo <= hi && !(lo == hi && !lo.is_finite())) out.push_back({std::move(lo), std::move(hi)});
        }
    return closed_normalize(std::move(out));
}

// Smallest compact interval containing a bounded closed set.
inline std::optional<closed_interval> bounding_interval(const closed_set& c) {
    if (c.empty()) return std::nullopt;
    if (!is_bounded(c)) throw invalid_input("bounding_interval: unbounded set");
    return closed_interval{c.front().lo, c.back().hi};
}

// Compact subset of the line; degenerate (single point) allowed.
struct compact_interval {
    rational lo, hi;
    compact_interval(rational l, rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw invalid_input("compact_interval: left > right");
    }
    rational width() const { return hi - lo; }
    bool contains(const rational& x) const { return lo <= x && x <= hi; }
};

}  // namespace cocompact
