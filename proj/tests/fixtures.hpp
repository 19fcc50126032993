#pragma once

// Walks transcribed from the worked figures, plus small helpers shared by the
// unit tests and the acceptance runner.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "affinv/affinv.hpp"
#include "affinv/oracle.hpp"

namespace fx {

using namespace affinv;
using Set2 = oracle::Set2;

inline Walk W(coord n, std::vector<Point2> pts) { return Walk(Rect::square(0, n), std::move(pts)); }

// Backward slicing, p = 3, n = 8.
namespace back8 {
inline constexpr coord p = 3, n = 8;
inline std::map<coord, Walk> layers() {
    return {
        {8, W(n, {{0, 1}, {1, 1}, {1, 0}})},
        {7, W(n, {{0, 3}, {0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}})},
        {6, W(n, {{0, 4}, {1, 4}, {1, 2}, {3, 2}, {3, 1}, {4, 1}, {4, 0}, {6, 0}})},
        {5, W(n, {{0, 4}, {2, 4}, {2, 3}, {4, 3}, {4, 2}, {5, 2}, {5, 1}, {8, 1}})},
        {4, W(n, {{0, 6}, {0, 5}, {3, 5}, {3, 4}, {5, 4}, {5, 3}, {8, 3}})},
        {3, W(n, {{0, 6}, {0, 5}, {3, 5}, {3, 4}, {5, 4}, {5, 3}, {8, 3}})},
        {2, W(n, {{1, 8}, {1, 6}, {3, 6}, {3, 4}, {5, 4}, {5, 3}, {8, 3}})},
        {1, W(n, {{2, 8}, {2, 7}, {4, 7}, {4, 6}, {7, 6}, {7, 3}, {8, 3}})},
        {0, W(n, {{6, 8}, {6, 6}, {7, 6}, {7, 5}, {8, 5}})},
    };
}
inline std::map<coord, coord> alphas() { return {{7, 1}, {6, 2}, {5, 2}, {4, 2}, {3, 2}, {2, 2}, {1, 2}, {0, 2}}; }
inline Walk X7() { return W(n, {{0, 1}, {1, 1}, {1, 0}}); }
inline Walk Y7() { return W(n, {{0, 4}, {1, 4}, {1, 2}, {4, 2}, {4, 1}, {7, 1}, {7, 0}, {8, 0}}); }
inline Walk Y6() { return W(n, {{0, 6}, {0, 5}, {1, 5}, {1, 4}, {2, 4}, {2, 2}, {5, 2}, {5, 1}, {8, 1}}); }
inline Walk X1() { return W(n, {{1, 8}, {1, 6}, {3, 6}, {3, 5}, {4, 5}, {4, 4}, {6, 4}, {6, 3}, {8, 3}}); }
inline Walk Y1() { return W(n, {{3, 8}, {3, 7}, {5, 7}, {5, 6}, {8, 6}}); }
// the two shifted terms joined into X_1; they coincide here
inline Walk B1() { return W(n, {{0, 6}, {1, 6}, {1, 5}, {4, 5}, {4, 4}, {6, 4}, {6, 3}, {8, 3}}); }
} // namespace back8

// Forward slicing, p = 3, n = 6.
namespace fwd6 {
inline constexpr coord p = 3, n = 6;
inline std::map<coord, Walk> layers() {
    return {
        {0, W(n, {{5, 6}, {5, 1}, {6, 1}})},
        {1, W(n, {{5, 6}, {5, 0}})},
        {2, W(n, {{3, 6}, {3, 3}, {5, 3}, {5, 0}})},
        {3, W(n, {{0, 5}, {1, 5}, {1, 4}, {3, 4}, {3, 1}, {5, 1}, {5, 0}})},
        {4, W(n, {{0, 3}, {2, 3}, {2, 1}, {3, 1}, {3, 0}})},
        {5, W(n, {{0, 2}, {1, 2}, {1, 0}})},
        {6, W(n, {{0, 1}, {1, 1}, {1, 0}})},
    };
}
inline std::map<coord, coord> betas() { return {{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}}; }
inline std::map<coord, Walk> lower() {
    return {
        {1, W(n, {{0, 4}, {2, 4}, {2, 3}, {5, 3}, {5, 0}})},
        {2, W(n, {{0, 4}, {2, 4}, {2, 3}, {5, 3}, {5, 0}})},
        {3, W(n, {{0, 4}, {0, 3}, {3, 3}, {3, 0}, {5, 0}})},
        {4, W(n, {{0, 2}, {1, 2}, {1, 1}, {3, 1}, {3, 0}})},
        {6, Walk(Rect::square(0, n))},
    };
}
inline std::map<coord, Walk> upper() {
    auto L = layers();
    return {
        {1, L[0]},
        {2, W(n, {{4, 6}, {4, 4}, {5, 4}, {5, 0}})},
        {3, W(n, {{3, 6}, {3, 3}, {4, 3}, {4, 1}, {5, 1}, {5, 0}})},
        {4, W(n, {{0, 5}, {1, 5}, {1, 4}, {3, 4}, {3, 1}, {4, 1}, {4, 0}})},
        {5, L[4]},
        {6, L[5]},
    };
}
} // namespace fwd6

// Symmetric layers, p = 3, n = 6; layer j lives in [0,j]^2.
namespace sym6 {
inline constexpr coord p = 3, n = 6;
inline std::vector<Walk> layers() {
    return {
        W(0, {{0, 0}}),
        W(1, {{1, 1}}),
        W(2, {{2, 2}}),
        W(3, {{1, 3}, {1, 2}, {2, 2}, {2, 1}, {3, 1}}),
        W(4, {{0, 4}, {0, 2}, {2, 2}, {2, 1}, {3, 1}, {3, 0}, {4, 0}}),
        W(5, {{0, 2}, {1, 2}, {1, 1}, {3, 1}, {3, 0}, {4, 0}}),
        W(6, {{0, 1}, {1, 1}, {1, 0}}),
    };
}
inline std::map<coord, Walk> lower() {
    return {
        {1, Walk(Rect::square(0, 1))},
        {2, Walk(Rect::square(0, 2))},
        {3, Walk(Rect::square(0, 3))},
        {4, W(4, {{0, 0}, {1, 0}})},
        {5, W(5, {{0, 1}, {0, 0}})},
        {6, Walk(Rect::square(0, 6))},
    };
}
inline std::map<coord, Walk> upper() {
    return {
        {1, W(1, {{1, 1}})},
        {2, W(2, {{2, 2}})},
        {3, W(3, {{3, 3}})},
        {4, W(4, {{1, 4}, {1, 2}, {2, 2}, {2, 1}, {4, 1}})},
        {5, W(5, {{0, 5}, {0, 2}, {2, 2}, {2, 1}, {3, 1}, {3, 0}, {5, 0}})},
        {6, W(6, {{0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}, {3, 0}})},
    };
}
// slices of the symmetrized union of all seven layers, over [0,6]^2
inline std::vector<Walk> cumulative() {
    return {
        W(6, {{1, 6}, {1, 5}, {2, 5}, {2, 4}, {5, 4}, {5, 1}, {6, 1}}),
        W(6, {{1, 6}, {1, 5}, {2, 5}, {2, 3}, {5, 3}, {5, 1}, {6, 1}}),
        W(6, {{0, 5}, {1, 5}, {1, 4}, {2, 4}, {2, 2}, {4, 2}, {4, 1}, {5, 1}, {5, 0}}),
        W(6, {{0, 5}, {1, 5}, {1, 2}, {2, 2}, {2, 1}, {3, 1}, {3, 0}, {4, 0}}),
        W(6, {{0, 5}, {0, 2}, {2, 2}, {2, 1}, {3, 1}, {3, 0}, {4, 0}}),
        W(6, {{0, 2}, {1, 2}, {1, 1}, {3, 1}, {3, 0}, {4, 0}}),
        W(6, {{0, 1}, {1, 1}, {1, 0}}),
    };
}
} // namespace sym6

// The 14-point ideal with p = 3, m = 6, r = 1 and its 42 exponents.
namespace ex12 {
inline std::set<Point3> ideal() {
    return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
            {1, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
}
inline std::vector<std::uint64_t> exponents() {
    return {0,   1,   2,   3,   4,   6,   9,   10,  12,  13,  18,  27,  28,  29,
            30,  36,  39,  54,  55,  81,  82,  84,  87,  90,  91,  108, 117, 162,
            165, 243, 244, 246, 247, 252, 261, 270, 273, 324, 325, 351, 486, 495};
}
} // namespace ex12

inline Set2 pts(const Profile& s) { return s.points(); }
inline Set2 pts(const Walk& w, coord p) { return iota(w, p).pts; }
inline Profile prof(const Rect& R, const Set2& s) { return from_points(R, s); }

// A random ideal of R built from a few generators and exclusions.
inline Profile random_ideal(std::mt19937_64& rng, const Rect& R, coord p) {
    std::uniform_int_distribution<int> kind(0, 9);
    int k = kind(rng);
    if (k == 0) return Profile::empty(R);
    if (k == 1) return Profile::full(R);
    std::uniform_int_distribution<coord> X(R.a, R.b), Y(R.c, R.d);
    std::uniform_int_distribution<int> cnt(1, 4);
    std::vector<Point2> in, out;
    for (int t = cnt(rng); t > 0; --t) in.push_back({X(rng), Y(rng)});
    Profile s = smallest_containing(R, in, p);
    if (k >= 6) {
        for (int t = cnt(rng); t > 0; --t) out.push_back({X(rng), Y(rng)});
        Profile t = largest_excluding(R, out, p);
        s = k >= 8 ? meet(s, t) : join(s, t);
    }
    return s;
}

} // namespace fx
