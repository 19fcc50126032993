#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "profile.hpp"

namespace affinv {

// Boundary of an ideal of host, stored by its corners. No corners means the
// empty walk.
struct Walk {
    Rect host;
    std::vector<Point2> pts;

    Walk() = default;
    explicit Walk(Rect r) : host(r) {}
    Walk(Rect r, std::vector<Point2> corners) : host(r), pts(std::move(corners)) {}

    bool is_empty() const { return pts.empty(); }
    bool operator==(const Walk&) const = default;
};

struct IdealSet2 {
    Rect host;
    std::set<Point2> pts;
    bool operator==(const IdealSet2&) const = default;
};

inline bool validate_walk(const Walk& w, coord p) {
    if (w.is_empty()) return true;
    const Rect& R = w.host;
    const auto& q = w.pts;
    for (Point2 u : q)
        if (!R.contains(u)) return false;
    const size_t k = q.size() - 1;
    if (!(q[0].x == R.a || q[0].y == R.d)) return false;
    if (!(q[k].x == R.b || q[k].y == R.c)) return false;
    // +1 horizontal, -1 vertical
    std::vector<int> kind;
    for (size_t i = 0; i < k; ++i) {
        coord dx = q[i + 1].x - q[i].x, dy = q[i + 1].y - q[i].y;
        if (dy == 0 && dx >= 1 && dx <= p) kind.push_back(1);
        else if (dx == 0 && dy <= -1 && dy >= -p * p) kind.push_back(-1);
        else return false;
        if (i > 0 && kind[i] == kind[i - 1]) return false;
    }
    if (k > 0) {
        if (q[0].x >= R.a && q[0].x < R.b && q[0].y == R.d && kind.front() != -1) return false;
        if (q[k].x == R.b && q[k].y >= R.c && q[k].y < R.d && kind.back() != 1) return false;
        if (kind.front() == 1 && q[1].x - q[0].x > p - 1) return false;
        if (kind.back() == -1 && q[k - 1].y - q[k].y > p * p - 1) return false;
    }
    return true;
}

// Column heights of the ideal bounded by w; no validation.
inline Profile to_profile(const Walk& w) {
    Profile out = Profile::empty(w.host);
    coord best = w.host.c - 1;
    size_t i = w.pts.size();
    for (coord x = w.host.b; x >= w.host.a; --x) {
        while (i > 0 && w.pts[i - 1].x >= x) best = std::max(best, w.pts[--i].y);
        out.at(x) = best;
    }
    return out;
}

inline Walk to_walk(const Profile& s) {
    const Rect& R = s.host;
    Walk w(R);
    std::vector<Point2> outer;
    for (coord x = R.a; x <= R.b; ++x) {
        coord hx = s.at(x);
        if (hx < R.c) break;
        if (x == R.b || s.at(x + 1) != hx) outer.push_back({x, hx});
    }
    if (outer.empty()) return w;
    if (outer.front().y < R.d && outer.front().x > R.a) w.pts.push_back({R.a, outer.front().y});
    for (size_t j = 0; j < outer.size(); ++j) {
        w.pts.push_back(outer[j]);
        if (j + 1 < outer.size()) w.pts.push_back({outer[j].x, outer[j + 1].y});
    }
    if (outer.back().x < R.b && outer.back().y > R.c) w.pts.push_back({outer.back().x, R.c});
    return w;
}

inline Profile checked_profile(const Walk& w, coord p) {
    if (!validate_walk(w, p)) throw InvalidWalk("sequence is not a walk of its rectangle");
    return to_profile(w);
}

inline IdealSet2 iota(const Walk& w, coord p) {
    return IdealSet2{w.host, checked_profile(w, p).points()};
}

inline Walk omega(const Profile& s, coord p) {
    if (!is_ideal(s, p)) throw NotAnIdeal("column heights are not closed under the order");
    return to_walk(s);
}

inline Walk omega(const IdealSet2& s, coord p) {
    for (Point2 u : s.pts) {
        if (!s.host.contains(u)) throw NotAnIdeal("point outside the rectangle");
        for (coord x = s.host.a; x <= s.host.b; ++x)
            for (coord y = s.host.c; y <= s.host.d; ++y)
                if (precedes2({x, y}, u, p) && !s.pts.count({x, y}))
                    throw NotAnIdeal("set is not downward closed");
    }
    return to_walk(from_points(s.host, s.pts));
}

inline bool walk_leq(const Walk& w1, const Walk& w2) { return leq(to_profile(w1), to_profile(w2)); }
inline Walk meet(const Walk& w1, const Walk& w2) { return to_walk(meet(to_profile(w1), to_profile(w2))); }
inline Walk join(const Walk& w1, const Walk& w2) { return to_walk(join(to_profile(w1), to_profile(w2))); }
inline Walk restrict_to(const Walk& w, const Rect& sub) { return to_walk(restrict_to(to_profile(w), sub)); }

inline Walk shift(const Walk& w, coord dx, coord dy) {
    Walk out(w.host.shifted(dx, dy));
    for (Point2 u : w.pts) out.pts.push_back({u.x + dx, u.y + dy});
    return out;
}

inline Walk highest_extension(const Walk& z, const Rect& big, coord p) {
    return to_walk(highest_extension(to_profile(z), big, p));
}

inline Walk lowest_extension(const Walk& z, const Rect& big, coord p) {
    return to_walk(lowest_extension(to_profile(z), big, p));
}

inline Walk full_walk(const Rect& r) { return Walk(r, {{r.b, r.d}}); }

enum class Extremal { LowestStart, HighestStart, LowestEnd, HighestEnd, LowestThrough };

// Extremal members of the walks starting at, ending at, or passing through
// an anchor. A walk starts at (x, d) when column x is the last one of full
// height, and at (a, y) with y < d when column a has height y; it ends at
// (b, y) when column b has height y, and at (x, c) with x < b when x is the
// last nonempty column.
inline bool passes_through(const Walk& w, Point2 q) {
    for (size_t k = 0; k < w.pts.size(); ++k) {
        Point2 u = w.pts[k], v = k + 1 < w.pts.size() ? w.pts[k + 1] : w.pts[k];
        if (std::min(u.x, v.x) <= q.x && q.x <= std::max(u.x, v.x) && std::min(u.y, v.y) <= q.y &&
            q.y <= std::max(u.y, v.y))
            return true;
    }
    return false;
}

inline Profile extremal_profile(const Rect& R, Point2 anchor, Extremal kind, coord p) {
    if (!R.contains(anchor)) throw NoSuchWalk("anchor outside the rectangle");
    auto lowest = [&] { return smallest_containing(R, {anchor}, p); };
    auto highest_without = [&](Point2 q) {
        if (!R.contains(q)) return Profile::full(R);
        return largest_excluding(R, {q}, p);
    };
    Profile out = Profile::empty(R);
    switch (kind) {
    case Extremal::LowestThrough:
        out = lowest();
        break;
    case Extremal::LowestStart:
    case Extremal::HighestStart: {
        Point2 next;
        if (anchor.y == R.d) next = {anchor.x + 1, R.d};
        else if (anchor.x == R.a) next = {R.a, anchor.y + 1};
        else throw NoSuchWalk("no walk starts at an interior point");
        out = kind == Extremal::LowestStart ? lowest() : highest_without(next);
        break;
    }
    case Extremal::LowestEnd:
    case Extremal::HighestEnd: {
        Point2 next;
        if (anchor.x == R.b) next = {R.b, anchor.y + 1};
        else if (anchor.y == R.c) next = {anchor.x + 1, R.c};
        else throw NoSuchWalk("no walk ends at an interior point");
        out = kind == Extremal::LowestEnd ? lowest() : highest_without(next);
        break;
    }
    }
    // the candidate is extremal whenever the family is nonempty; if it is
    // not itself a member, the family is empty
    Walk w = to_walk(out);
    bool member = kind == Extremal::LowestThrough ? passes_through(w, anchor)
                  : kind == Extremal::LowestStart || kind == Extremal::HighestStart
                      ? !w.is_empty() && w.pts.front() == anchor
                      : !w.is_empty() && w.pts.back() == anchor;
    if (!member) throw NoSuchWalk("no walk of this kind through the anchor");
    return out;
}

inline Walk extremal_walk(const Rect& R, Point2 anchor, Extremal kind, coord p) {
    return to_walk(extremal_profile(R, anchor, kind, p));
}

inline std::optional<Point2> walk_start(const Walk& w) {
    if (w.is_empty()) return std::nullopt;
    return w.pts.front();
}

inline std::optional<Point2> walk_end(const Walk& w) {
    if (w.is_empty()) return std::nullopt;
    return w.pts.back();
}

} // namespace affinv
