#pragma once

// Brute-force ground truth. Everything here works on explicit point sets and
// the raw order predicates; nothing depends on walks or column profiles.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "poset.hpp"

namespace affinv::oracle {

using Mask = std::vector<char>;

struct FinitePoset {
    std::vector<Point3> pts;
    std::vector<std::vector<char>> below; // below[i][j]: pts[i] strictly precedes pts[j]
    std::map<Point3, int> index;

    int size() const { return static_cast<int>(pts.size()); }

    template <class Rel>
    FinitePoset(std::vector<Point3> points, Rel rel) : pts(std::move(points)) {
        const int N = size();
        below.assign(N, std::vector<char>(N, 0));
        for (int i = 0; i < N; ++i) index[pts[i]] = i;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (i != j && rel(pts[i], pts[j])) below[i][j] = 1;
    }

    bool is_partial_order() const {
        const int N = size();
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (below[i][j] && below[j][i]) return false;
                if (!below[i][j]) continue;
                for (int k = 0; k < N; ++k)
                    if (below[j][k] && !below[i][k]) return false;
            }
        return true;
    }
};

inline FinitePoset box3(coord n, coord p) {
    std::vector<Point3> v;
    for (coord z = 0; z <= n; ++z)
        for (coord y = 0; y <= n; ++y)
            for (coord x = 0; x <= n; ++x) v.push_back({x, y, z});
    return FinitePoset(v, [p](Point3 a, Point3 b) { return precedes3(a, b, p); });
}

inline FinitePoset product_box3(coord n) {
    std::vector<Point3> v;
    for (coord z = 0; z <= n; ++z)
        for (coord y = 0; y <= n; ++y)
            for (coord x = 0; x <= n; ++x) v.push_back({x, y, z});
    return FinitePoset(v, [](Point3 a, Point3 b) { return a.x <= b.x && a.y <= b.y && a.z <= b.z; });
}

inline FinitePoset rect2(coord a, coord b, coord c, coord d, coord p) {
    std::vector<Point3> v;
    for (coord y = c; y <= d; ++y)
        for (coord x = a; x <= b; ++x) v.push_back({x, y, 0});
    return FinitePoset(v, [p](Point3 u, Point3 w) { return precedes2({u.x, u.y}, {w.x, w.y}, p); });
}

enum class Symmetry { None, Rotation };

// Calls visit on every down-set, optionally only the rotation-fixed ones.
// Points are decided in order of their number of strict predecessors, which
// is a linear extension of any finite order.
inline void for_each_ideal(const FinitePoset& P, Symmetry sym, const std::function<void(const Mask&)>& visit) {
    const int N = P.size();
    if (N > 80) throw TooLarge("poset has more than 80 points");
    std::vector<int> npred(N, 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) npred[j] += P.below[i][j];

    std::vector<std::vector<int>> groups;
    std::vector<char> seen(N, 0);
    for (int i = 0; i < N; ++i) {
        if (seen[i]) continue;
        std::vector<int> g{i};
        seen[i] = 1;
        if (sym == Symmetry::Rotation) {
            Point3 u = P.pts[i];
            for (int k = 0; k < 2; ++k) {
                u = rotate(u);
                auto it = P.index.find(u);
                if (it == P.index.end()) throw TooLarge("poset is not closed under rotation");
                if (!seen[it->second]) {
                    seen[it->second] = 1;
                    g.push_back(it->second);
                }
            }
        }
        groups.push_back(g);
    }
    std::stable_sort(groups.begin(), groups.end(), [&](const auto& g1, const auto& g2) {
        return npred[g1[0]] < npred[g2[0]];
    });

    Mask in(N, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == groups.size()) {
            visit(in);
            return;
        }
        rec(k + 1);
        bool ok = true;
        for (int u : groups[k])
            for (int w = 0; w < N && ok; ++w)
                if (P.below[w][u] && !in[w]) ok = false;
        if (!ok) return;
        for (int u : groups[k]) in[u] = 1;
        rec(k + 1);
        for (int u : groups[k]) in[u] = 0;
    };
    rec(0);
}

inline std::vector<Mask> brute_ideals(const FinitePoset& P, Symmetry sym) {
    std::vector<Mask> out;
    for_each_ideal(P, sym, [&](const Mask& m) { out.push_back(m); });
    return out;
}

inline long long count_ideals(const FinitePoset& P, Symmetry sym) {
    long long c = 0;
    for_each_ideal(P, sym, [&](const Mask&) { ++c; });
    return c;
}

// Raw subset filter, for cross-checking the recursion on tiny posets.
inline std::vector<Mask> brute_ideals_by_subsets(const FinitePoset& P, Symmetry sym) {
    const int N = P.size();
    if (N > 18) throw TooLarge("subset filter limited to 18 points");
    std::vector<Mask> out;
    for (long long bits = 0; bits < (1LL << N); ++bits) {
        Mask m(N);
        for (int i = 0; i < N; ++i) m[i] = (bits >> i) & 1;
        bool ok = true;
        for (int u = 0; u < N && ok; ++u) {
            if (!m[u]) continue;
            for (int w = 0; w < N && ok; ++w)
                if (P.below[w][u] && !m[w]) ok = false;
            if (sym == Symmetry::Rotation) {
                auto it = P.index.find(rotate(P.pts[u]));
                if (it == P.index.end() || !m[it->second]) ok = false;
            }
        }
        if (ok) out.push_back(m);
    }
    return out;
}

inline std::set<Point3> to_points(const FinitePoset& P, const Mask& m) {
    std::set<Point3> s;
    for (int i = 0; i < P.size(); ++i)
        if (m[i]) s.insert(P.pts[i]);
    return s;
}

// ---- 2D sets ---------------------------------------------------------------

using Set2 = std::set<Point2>;

inline bool in_rect(Point2 u, coord a, coord b, coord c, coord d) {
    return u.x >= a && u.x <= b && u.y >= c && u.y <= d;
}

inline bool is_ideal2(const Set2& s, const Rect& R, coord p) {
    for (Point2 u : s) {
        if (!R.contains(u)) return false;
        for (coord x = R.a; x <= R.b; ++x)
            for (coord y = R.c; y <= R.d; ++y)
                if (precedes2({x, y}, u, p) && !s.count({x, y})) return false;
    }
    return true;
}

// [J + D + (dx, dy)] intersected with R.
inline Set2 dilate2(const Set2& J, coord dx, coord dy, const Rect& R, coord p) {
    Set2 out;
    for (coord x = R.a; x <= R.b; ++x)
        for (coord y = R.c; y <= R.d; ++y)
            for (Point2 u : J)
                if (precedes2({x, y}, {u.x + dx, u.y + dy}, p)) {
                    out.insert({x, y});
                    break;
                }
    return out;
}

inline bool subset(const Set2& a, const Set2& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Set2 intersect(const Set2& s, const Rect& R) {
    Set2 out;
    for (Point2 u : s)
        if (R.contains(u)) out.insert(u);
    return out;
}

inline Set2 shift2(const Set2& s, coord dx, coord dy) {
    Set2 out;
    for (Point2 u : s) out.insert({u.x + dx, u.y + dy});
    return out;
}

enum class Which { Largest, Smallest };

inline Set2 brute_extension(const Set2& J, const Rect& small, const Rect& big, Which which, coord p) {
    if (big.width() > 12 || big.height() > 12) throw TooLarge("rectangle larger than 12x12");
    if (which == Which::Smallest) return dilate2(J, 0, 0, big, p);
    Set2 out;
    for (coord x = big.a; x <= big.b; ++x)
        for (coord y = big.c; y <= big.d; ++y) {
            bool ok = true;
            for (coord qx = small.a; qx <= small.b && ok; ++qx)
                for (coord qy = small.c; qy <= small.d && ok; ++qy)
                    if (!J.count({qx, qy}) && precedes2({qx, qy}, {x, y}, p)) ok = false;
            if (ok) out.insert({x, y});
        }
    return out;
}

// Every ideal of R, from the generic recursion.
inline std::vector<Set2> all_ideals2(const Rect& R, coord p) {
    FinitePoset P = rect2(R.a, R.b, R.c, R.d, p);
    std::vector<Set2> out;
    for_each_ideal(P, Symmetry::None, [&](const Mask& m) {
        Set2 s;
        for (int i = 0; i < P.size(); ++i)
            if (m[i]) s.insert({P.pts[i].x, P.pts[i].y});
        out.push_back(s);
    });
    return out;
}

// ---- layer candidates ------------------------------------------------------

// layers[z] holds the ideal at height z; zs lists the heights that are set.
// Checks that adding J at height i keeps the union downward closed in
// R x [zlo, zhi].
inline bool closed_with(const std::map<coord, Set2>& layers, coord i, const Set2& J, const Rect& R, coord p) {
    auto member = [&](Point3 w) {
        if (w.z == i) return J.count({w.x, w.y}) > 0;
        auto it = layers.find(w.z);
        return it != layers.end() && it->second.count({w.x, w.y}) > 0;
    };
    for (auto& [z, L] : layers) {
        // points of the new layer below points of the old layers
        for (Point2 u : L)
            for (coord x = R.a; x <= R.b; ++x)
                for (coord y = R.c; y <= R.d; ++y)
                    if (precedes3({x, y, i}, {u.x, u.y, z}, p) && !member({x, y, i})) return false;
        for (Point2 u : J)
            for (coord x = R.a; x <= R.b; ++x)
                for (coord y = R.c; y <= R.d; ++y)
                    if (precedes3({x, y, z}, {u.x, u.y, i}, p) && !member({x, y, z})) return false;
    }
    return true;
}

// All ideals J of [0,n]^2 such that the layers together with J at height i
// form an ideal of the slab they occupy.
inline std::vector<Set2> brute_layer_candidates(const std::map<coord, Set2>& layers, coord i, coord n, coord p) {
    if (n > 3) throw TooLarge("layer oracle limited to n <= 3");
    Rect U = Rect::square(0, n);
    std::vector<Set2> out;
    for (auto& J : all_ideals2(U, p))
        if (closed_with(layers, i, J, U, p)) out.push_back(J);
    return out;
}

// The raw condition family for a new layer i of a backward sequence
// (layers above i) or a forward one (layers below i).
inline bool lemma41_backward(const std::map<coord, Set2>& layers, coord i, const Set2& Ji, coord n, coord p) {
    Rect U = Rect::square(0, n);
    for (auto& [j, Jj] : layers) {
        if (j <= i) continue;
        if (!subset(dilate2(Ji, 0, -(j - i) * p, U, p), Jj)) return false;
        coord c = j - i, a = c / p, b = c % p;
        if (!subset(dilate2(Jj, a, 0, U, p), Ji)) return false;
        if (!subset(dilate2(Jj, a + 1, -p * p + p * b, U, p), Ji)) return false;
    }
    return true;
}

inline bool lemma41_forward(const std::map<coord, Set2>& layers, coord i, const Set2& Ji, coord n, coord p) {
    Rect U = Rect::square(0, n);
    for (auto& [j, Jj] : layers) {
        if (j >= i) continue;
        if (!subset(dilate2(Jj, 0, -(i - j) * p, U, p), Ji)) return false;
        coord c = i - j, a = c / p, b = c % p;
        if (!subset(dilate2(Ji, a, 0, U, p), Jj)) return false;
        if (!subset(dilate2(Ji, a + 1, -p * p + p * b, U, p), Jj)) return false;
    }
    return true;
}

// ---- symmetric layers ------------------------------------------------------

using Set3 = std::set<Point3>;

inline Set3 symmetrize(const std::vector<Set2>& prefix) {
    Set3 s;
    for (size_t j = 0; j < prefix.size(); ++j)
        for (Point2 u : prefix[j]) {
            Point3 v{u.x, u.y, static_cast<coord>(j)};
            for (int k = 0; k < 3; ++k) {
                s.insert(v);
                v = rotate(v);
            }
        }
    return s;
}

inline bool is_ideal3(const Set3& s, coord lo, coord hi, coord p) {
    for (Point3 u : s) {
        if (u.x < lo || u.x > hi || u.y < lo || u.y > hi || u.z < lo || u.z > hi) return false;
        for (coord x = lo; x <= hi; ++x)
            for (coord y = lo; y <= hi; ++y)
                for (coord z = lo; z <= hi; ++z)
                    if (!s.count({x, y, z}) && precedes3({x, y, z}, u, p)) return false;
    }
    return true;
}

inline bool is_rotation_fixed(const Set3& s) {
    for (Point3 u : s)
        if (!s.count(rotate(u))) return false;
    return true;
}

// J_i (an ideal of [0,i]^2) is acceptable after the prefix when the
// symmetrized union is an ideal of [0,i]^3 whose slice at z = i is J_i.
inline bool sym_extends(const std::vector<Set2>& prefix, const Set2& Ji, coord p) {
    coord i = static_cast<coord>(prefix.size());
    std::vector<Set2> all = prefix;
    all.push_back(Ji);
    Set3 s = symmetrize(all);
    for (Point3 u : s)
        if (u.z == i && !Ji.count({u.x, u.y})) return false;
    return is_ideal3(s, 0, i, p);
}

inline std::vector<Set2> brute_sym_candidates(const std::vector<Set2>& prefix, coord p) {
    coord i = static_cast<coord>(prefix.size());
    std::vector<Set2> out;
    for (auto& J : all_ideals2(Rect::square(0, i), p))
        if (sym_extends(prefix, J, p)) out.push_back(J);
    return out;
}

} // namespace affinv::oracle
