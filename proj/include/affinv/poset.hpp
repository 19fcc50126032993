#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace affinv {

using coord = std::int64_t;

inline bool is_prime(coord p) {
    if (p < 2) return false;
    for (coord d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// b^k with overflow detection.
inline coord checked_pow(coord b, int k) {
    coord r = 1;
    for (int i = 0; i < k; ++i) {
        if (b != 0 && r > std::numeric_limits<coord>::max() / b)
            throw CapExceeded("integer overflow in " + std::to_string(b) + "^" + std::to_string(k));
        r *= b;
    }
    return r;
}

inline coord floor_div(coord a, coord b) {
    coord q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline coord floor_mod(coord a, coord b) { return a - b * floor_div(a, b); }

struct Params {
    coord p = 2;
    int m = 3;
    int e = 3;
    int r = 3;
    coord n = 0;

    Params() = default;
    Params(coord p_, int m_, int r_) : p(p_), m(m_), r(r_) {
        if (!is_prime(p)) throw InvalidParams("p must be prime, got " + std::to_string(p));
        if (m <= 0 || m % 3 != 0) throw InvalidParams("m must be a positive multiple of 3, got " + std::to_string(m));
        if (r != 1 && r != 3) throw InvalidParams("r must be 1 or 3, got " + std::to_string(r));
        n = (m / 3) * (p - 1);
    }
};

struct Point2 {
    coord x = 0, y = 0;
    auto operator<=>(const Point2&) const = default;
};

struct Point3 {
    coord x = 0, y = 0, z = 0;
    auto operator<=>(const Point3&) const = default;
    coord operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

struct Rect {
    coord a = 0, b = 0, c = 0, d = 0;

    Rect() = default;
    Rect(coord a_, coord b_, coord c_, coord d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a > b || c > d) throw InvalidParams("rectangle needs a <= b and c <= d");
    }
    static Rect square(coord lo, coord hi) { return Rect(lo, hi, lo, hi); }

    coord width() const { return b - a + 1; }
    coord height() const { return d - c + 1; }
    bool contains(Point2 u) const { return u.x >= a && u.x <= b && u.y >= c && u.y <= d; }
    bool contains(const Rect& o) const { return o.a >= a && o.b <= b && o.c >= c && o.d <= d; }
    Rect shifted(coord h, coord v) const { return Rect(a + h, b + h, c + v, d + v); }
    bool operator==(const Rect&) const = default;
};

// u precedes v iff (u - v) P has no positive coordinate, P the circulant with
// P[i][j] = p^((i - j) mod e).
inline bool precedes_generic(const std::vector<coord>& u, const std::vector<coord>& v, coord p) {
    const int e = static_cast<int>(u.size());
    std::vector<coord> pw(e);
    for (int k = 0; k < e; ++k) pw[k] = checked_pow(p, k);
    for (int j = 0; j < e; ++j) {
        coord s = 0;
        for (int i = 0; i < e; ++i) s += (u[i] - v[i]) * pw[((i - j) % e + e) % e];
        if (s > 0) return false;
    }
    return true;
}

inline std::array<coord, 3> times_P(Point3 w, coord p) {
    const coord p2 = p * p;
    return {w.x + p * w.y + p2 * w.z, p2 * w.x + w.y + p * w.z, p * w.x + p2 * w.y + w.z};
}

inline bool precedes3(Point3 u, Point3 v, coord p) {
    auto t = times_P(Point3{u.x - v.x, u.y - v.y, u.z - v.z}, p);
    return t[0] <= 0 && t[1] <= 0 && t[2] <= 0;
}

inline bool precedes3(Point3 u, Point3 v, const Params& P) { return precedes3(u, v, P.p); }

inline bool in_D(coord dx, coord dy, coord p) { return dx + p * dy <= 0 && p * p * dx + dy <= 0; }

inline bool precedes2(Point2 u, Point2 v, coord p) { return in_D(u.x - v.x, u.y - v.y, p); }

// Cross-section of the cone at height c, an anchored copy of D. For c < 0
// the anchor (-c/p, 0) is rational; membership is tested multiplied by p.
struct ConeSection {
    coord c = 0;
    coord p = 2;

    // Anchor scaled by p when c < 0, exact when c >= 0.
    Point2 anchor_numerator() const { return c >= 0 ? Point2{0, -c * p} : Point2{-c, 0}; }
    coord anchor_denominator() const { return c >= 0 ? 1 : p; }

    bool contains(Point2 w) const {
        if (c >= 0) return in_D(w.x, w.y + c * p, p);
        return p * w.x + c + p * p * w.y <= 0 && p * p * w.x + p * c + w.y <= 0;
    }
};

inline ConeSection cone_section(coord c, coord p) { return ConeSection{c, p}; }

inline std::pair<Point2, Point2> lemma31_shifts(coord c, coord p) {
    coord a = floor_div(c, p), b = floor_mod(c, p);
    return {Point2{a, 0}, Point2{a + 1, -p * p + p * b}};
}

inline Point3 rotate(Point3 u) { return Point3{u.y, u.z, u.x}; }

} // namespace affinv
