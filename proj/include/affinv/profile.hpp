#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "poset.hpp"

namespace affinv {

// An ideal of (Rect, precedes2) stored as one height per column: column x
// holds the points (x, c..h(x)), and h(x) = c - 1 marks an empty column.
struct Profile {
    Rect host;
    std::vector<coord> h;

    Profile() = default;
    Profile(Rect r, std::vector<coord> heights) : host(r), h(std::move(heights)) {}

    static Profile empty(Rect r) { return Profile(r, std::vector<coord>(r.width(), r.c - 1)); }
    static Profile full(Rect r) { return Profile(r, std::vector<coord>(r.width(), r.d)); }

    coord at(coord x) const { return h[static_cast<size_t>(x - host.a)]; }
    coord& at(coord x) { return h[static_cast<size_t>(x - host.a)]; }
    bool contains(Point2 u) const { return host.contains(u) && u.y <= at(u.x); }

    bool is_empty() const {
        return std::all_of(h.begin(), h.end(), [&](coord v) { return v < host.c; });
    }
    bool is_full() const {
        return std::all_of(h.begin(), h.end(), [&](coord v) { return v == host.d; });
    }
    coord size() const {
        coord s = 0;
        for (coord v : h) s += v - host.c + 1;
        return s;
    }

    std::set<Point2> points() const {
        std::set<Point2> s;
        for (coord x = host.a; x <= host.b; ++x)
            for (coord y = host.c; y <= at(x); ++y) s.insert({x, y});
        return s;
    }

    bool operator==(const Profile&) const = default;
    auto operator<=>(const Profile& o) const { return h <=> o.h; }
};

namespace detail {

inline void require_same_host(const Rect& r1, const Rect& r2) {
    if (!(r1 == r2)) throw HostMismatch("operands live in different rectangles");
}

} // namespace detail

// Height of the highest point (x + dx, .) below (x, y) in the D order.
inline coord reach(coord y, coord dx, coord p) {
    if (dx == 0) return y;
    if (dx > 0) return y - p * p * dx;
    return y + floor_div(-dx, p);
}

// Smallest height a column may have to stay below the excluded point q when
// it sits dx columns to the right of q (dx may be negative): the column must
// end strictly below q.y + gap(dx).
inline coord up_gap(coord dx, coord p) {
    if (dx >= 0) return -floor_div(dx, p);
    return p * p * (-dx);
}

inline bool is_ideal(const Profile& s, coord p) {
    const Rect& R = s.host;
    for (coord x = R.a; x <= R.b; ++x) {
        coord hx = s.at(x);
        if (hx < R.c - 1 || hx > R.d) return false;
    }
    for (coord x = R.a; x <= R.b; ++x) {
        coord hx = s.at(x);
        if (hx < R.c) continue;
        for (coord x2 = R.a; x2 <= R.b; ++x2) {
            coord need = reach(hx, x2 - x, p);
            if (need < R.c) continue;
            if (s.at(x2) < std::min(need, R.d)) return false;
        }
    }
    return true;
}

// [src + D + (dx, dy)] intersected with target.
inline Profile dilate(const Profile& src, coord dx, coord dy, const Rect& target, coord p) {
    Profile out = Profile::empty(target);
    const Rect& S = src.host;
    for (coord x = S.a; x <= S.b; ++x) {
        coord hx = src.at(x);
        if (hx < S.c) continue;
        for (coord x2 = target.a; x2 <= target.b; ++x2) {
            coord v = reach(hx + dy, x2 - (x + dx), p);
            if (v < target.c) continue;
            out.at(x2) = std::max(out.at(x2), std::min(v, target.d));
        }
    }
    return out;
}

// Largest ideal of target containing none of the points in excluded.
inline Profile largest_excluding(const Rect& target, const std::vector<Point2>& excluded, coord p) {
    Profile out = Profile::full(target);
    for (Point2 q : excluded) {
        for (coord x2 = target.a; x2 <= target.b; ++x2) {
            coord cap = q.y + up_gap(x2 - q.x, p) - 1;
            out.at(x2) = std::min(out.at(x2), std::max(cap, target.c - 1));
        }
    }
    return out;
}

inline Profile smallest_containing(const Rect& target, const std::vector<Point2>& pts, coord p) {
    Profile seed = Profile::empty(target);
    for (Point2 u : pts) {
        if (!target.contains(u)) throw OutOfRange("point outside the rectangle");
        seed.at(u.x) = std::max(seed.at(u.x), u.y);
    }
    return dilate(seed, 0, 0, target, p);
}

inline Profile meet(const Profile& s, const Profile& t) {
    detail::require_same_host(s.host, t.host);
    Profile out = s;
    for (size_t k = 0; k < out.h.size(); ++k) out.h[k] = std::min(s.h[k], t.h[k]);
    return out;
}

inline Profile join(const Profile& s, const Profile& t) {
    detail::require_same_host(s.host, t.host);
    Profile out = s;
    for (size_t k = 0; k < out.h.size(); ++k) out.h[k] = std::max(s.h[k], t.h[k]);
    return out;
}

inline bool leq(const Profile& s, const Profile& t) {
    detail::require_same_host(s.host, t.host);
    for (size_t k = 0; k < s.h.size(); ++k)
        if (s.h[k] > t.h[k]) return false;
    return true;
}

inline Profile restrict_to(const Profile& s, const Rect& sub) {
    if (!s.host.contains(sub)) throw HostMismatch("restriction target is not inside the host");
    Profile out = Profile::empty(sub);
    for (coord x = sub.a; x <= sub.b; ++x) {
        coord v = s.at(x);
        if (v >= sub.c) out.at(x) = std::min(v, sub.d);
    }
    return out;
}

inline Profile shift(const Profile& s, coord dx, coord dy) {
    Profile out(s.host.shifted(dx, dy), s.h);
    for (coord& v : out.h) v += dy;
    return out;
}

inline Profile lowest_extension(const Profile& z, const Rect& big, coord p) {
    if (!big.contains(z.host)) throw HostMismatch("extension target does not contain the host");
    return dilate(z, 0, 0, big, p);
}

inline Profile highest_extension(const Profile& z, const Rect& big, coord p) {
    if (!big.contains(z.host)) throw HostMismatch("extension target does not contain the host");
    std::vector<Point2> q;
    const Rect& S = z.host;
    for (coord x = S.a; x <= S.b; ++x)
        if (z.at(x) < S.d) q.push_back({x, z.at(x) + 1});
    return largest_excluding(big, q, p);
}

inline Profile from_points(const Rect& host, const std::set<Point2>& pts) {
    Profile out = Profile::empty(host);
    for (coord x = host.a; x <= host.b; ++x) {
        coord y = host.c;
        while (y <= host.d && pts.count({x, y})) ++y;
        out.at(x) = y - 1;
    }
    for (Point2 u : pts)
        if (!host.contains(u) || u.y > out.at(u.x)) throw NotAnIdeal("point set has a hole in a column");
    return out;
}

// Visits every ideal s with lower <= s <= upper, in lexicographic order of
// the height vector. The callback returns false to stop early.
inline bool enumerate_profiles(const Profile& lower, const Profile& upper, coord p,
                               const std::function<bool(const Profile&)>& visit) {
    detail::require_same_host(lower.host, upper.host);
    if (!leq(lower, upper)) throw BoundsInverted("lower bound is not below upper bound");
    const Rect R = lower.host;
    const coord w = R.width();
    Profile cur = Profile::empty(R);
    std::function<bool(coord)> rec = [&](coord k) -> bool {
        if (k == w) return visit(cur);
        coord x = R.a + k;
        coord lo = lower.h[k], hi = upper.h[k];
        for (coord j = 0; j < k; ++j) {
            coord x0 = R.a + j, h0 = cur.h[j];
            if (h0 >= R.c) {
                coord need = reach(h0, x - x0, p);
                if (need >= R.c) lo = std::max(lo, std::min(need, R.d));
            }
            if (h0 < R.d) hi = std::min(hi, std::max(R.c - 1, h0 - floor_div(x - x0, p)));
        }
        for (coord v = lo; v <= hi; ++v) {
            cur.h[k] = v;
            if (!rec(k + 1)) return false;
        }
        cur.h[k] = R.c - 1;
        return true;
    };
    return rec(0);
}

} // namespace affinv
