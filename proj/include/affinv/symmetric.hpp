#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slicing.hpp"

namespace affinv {

// Layer j is an ideal of [0,j]^2.
struct SymLayerSequence {
    std::vector<Walk> walks;
};

// Slices J_{i,j} (0 <= j < i) of the symmetrized prefix, each over [0,i-1]^2.
struct CumulativeLayers {
    coord i = 0;
    std::vector<Profile> slices;
};

inline CumulativeLayers accumulate(const std::vector<Profile>& layers, coord i) {
    if (static_cast<coord>(layers.size()) < i) throw OutOfRange("prefix shorter than the requested height");
    CumulativeLayers cum{i, {}};
    if (i == 0) return cum;
    const Rect R = Rect::square(0, i - 1);
    for (coord j = 0; j < i; ++j) {
        std::vector<std::vector<char>> g(i, std::vector<char>(i, 0));
        const Profile& Jj = layers[j];
        for (coord x = 0; x <= j; ++x)
            for (coord y = 0; y <= Jj.at(x); ++y) g[x][y] = 1;
        for (coord jp = j; jp < i; ++jp) {
            const Profile& K = layers[jp];
            for (coord b = 0; b <= K.at(j); ++b) g[b][jp] = 1;
            for (coord a = 0; a <= jp; ++a)
                if (K.at(a) >= j) g[jp][a] = 1;
        }
        Profile s = Profile::empty(R);
        for (coord x = 0; x < i; ++x) {
            coord y = 0;
            while (y < i && g[x][y]) ++y;
            s.at(x) = y - 1;
            for (coord t = y; t < i; ++t)
                if (g[x][t]) throw InconsistentInput("symmetrized prefix is not an ideal");
        }
        cum.slices.push_back(s);
    }
    return cum;
}

inline CumulativeLayers accumulate_layers(const SymLayerSequence& seq, coord i, coord p) {
    std::vector<Profile> layers;
    for (size_t j = 0; j < seq.walks.size(); ++j) {
        if (!(seq.walks[j].host == Rect::square(0, static_cast<coord>(j))))
            throw HostMismatch("layer j must be a walk of [0,j]^2");
        layers.push_back(checked_profile(seq.walks[j], p));
    }
    return accumulate(layers, i);
}

inline std::optional<coord> sym_beta(const CumulativeLayers& cum, coord p) {
    const coord i = cum.i;
    for (coord b = p - 1; b >= 1; --b)
        if (i - b >= 0 && !cum.slices[i - b].is_full()) return b;
    return std::nullopt;
}

inline std::pair<Profile, Profile> symmetric_bounds(const CumulativeLayers& cum, coord p) {
    const coord i = cum.i;
    if (i < 1) throw OutOfRange("bounds are defined from height 1 on");
    const Rect R = Rect::square(0, i);
    const Profile& top = cum.slices[i - 1];
    Profile S = restrict_to(lowest_extension(shift(top, 0, -p), Rect(0, i, -p, i), p), R);
    Profile T = highest_extension(top, R, p);
    if (i - p >= 0) {
        Profile hi = highest_extension(cum.slices[i - p], Rect(0, i + 1, 0, i), p);
        T = meet(T, shift(restrict_to(hi, Rect(1, i + 1, 0, i)), -1, 0));
    }
    if (auto b = sym_beta(cum, p)) {
        coord v = -p * p + p * *b;
        Profile hi = highest_extension(cum.slices[i - *b], Rect(0, i + 1, v, i), p);
        T = meet(T, shift(restrict_to(hi, Rect(1, i + 1, v, v + i)), -1, -v));
    }
    return {S, T};
}

enum class LayerType { I = 1, II = 2, III = 3 };

inline LayerType classify_type(const Profile& J, coord i) {
    if (i >= 0 && J.at(i) >= 0) return LayerType::III;
    if (i - 1 >= 0 && J.at(i - 1) >= 0) return LayerType::II;
    return LayerType::I;
}

namespace detail {

inline coord max_y_in_column(const Profile& J, coord x) { return J.at(x); }

inline coord max_x_in_row(const Profile& J, coord y) {
    coord best = -1;
    for (coord x = J.host.a; x <= J.host.b; ++x)
        if (J.at(x) >= y) best = x;
    return best;
}

} // namespace detail

enum class SymCheck { Direct, ViaMaxima };

// Conditions for J_i (an ideal of [0,i]^2) to extend a consistent prefix
// whose symmetrized slices are cum. Direct evaluates all five conditions on
// 3D sets; ViaMaxima replaces the last one by the column/row maxima test.
inline bool consistent_sym(const Profile& Ji, const CumulativeLayers& cum, coord p, SymCheck how = SymCheck::Direct) {
    const coord i = cum.i;
    auto inJ = [&](coord x, coord y) { return x >= 0 && y >= 0 && x <= i && y <= i && y <= Ji.at(x); };
    auto inPrev = [&](Point3 w) { return w.z < i && w.y <= cum.slices[w.z].at(w.x); };

    // (1) palindromic ends, read as the set condition they stand for: the
    // top row and the right column hold the same coordinates. The endpoint
    // form alone misses walks that end on x = i but start below y = i.
    Walk W = to_walk(Ji);
    if (!W.is_empty() && W.pts.front().y == i) {
        Point2 s = W.pts.front(), e = W.pts.back();
        if (!(s.x == e.y && s.y == e.x)) return false;
    }
    for (coord t = 0; t <= i; ++t)
        if (inJ(t, i) != inJ(i, t)) return false;
    // (2) new layer over the old cube
    for (coord x = 0; x <= i; ++x)
        for (coord y = 0; y <= Ji.at(x); ++y) {
            Point3 u{x, y, i};
            for (coord a = 0; a < i; ++a)
                for (coord b = 0; b < i; ++b)
                    for (coord c = 0; c < i; ++c)
                        if (precedes3({a, b, c}, u, p) && !inPrev({a, b, c})) return false;
        }
    // (3) old cube over the new layer
    for (coord z = 0; z < i; ++z)
        for (coord x = 0; x < i; ++x)
            for (coord y = 0; y <= cum.slices[z].at(x); ++y)
                for (coord a = 0; a <= i; ++a)
                    for (coord b = 0; b <= i; ++b)
                        if (precedes3({a, b, i}, {x, y, z}, p) && !inJ(a, b)) return false;
    // (4) and (5): the rotated faces y = i and x = i
    const bool check5 = how == SymCheck::Direct;
    for (coord x = 0; x <= i; ++x)
        for (coord y = 0; y <= Ji.at(x); ++y) {
            Point3 u{x, y, i};
            for (coord s = 0; s <= i; ++s)
                for (coord t = 0; t <= i; ++t) {
                    if (precedes3({s, i, t}, u, p) && !inJ(t, s)) return false;
                    if (check5 && precedes3({i, s, t}, u, p) && !inJ(s, t)) return false;
                }
        }
    if (!check5 && i >= p) {
        coord lhs = detail::max_y_in_column(Ji, i - 1);
        coord rhs = detail::max_x_in_row(Ji, i - p);
        if (lhs >= 0 && lhs > rhs) return false;
    }
    return true;
}

inline bool is_consistent_sym(coord i, const IdealSet2& Ji, const SymLayerSequence& seq, coord p,
                              SymCheck how = SymCheck::Direct) {
    if (!(Ji.host == Rect::square(0, i))) throw HostMismatch("layer i must live in [0,i]^2");
    if (i == 0) return true;
    return consistent_sym(from_points(Ji.host, Ji.pts), accumulate_layers(seq, i, p), p, how);
}

// Every ideal J_i of [0,i]^2 consistent with the prefix behind cum, grouped
// by type: first type I, then type II by increasing v, then type III by
// increasing u.
inline void enumerate_layer_sym(const CumulativeLayers& cum, coord p, const std::function<bool(const Profile&)>& visit) {
    const coord i = cum.i;
    const Rect R = Rect::square(0, i);
    if (i == 0) {
        if (!visit(Profile::empty(R))) return;
        visit(Profile::full(R));
        return;
    }
    auto [S, T] = symmetric_bounds(cum, p);
    auto ext = [&](const Rect& r, Point2 q, Extremal k) { return extremal_profile(r, q, k, p); };
    bool go = true;
    auto run = [&](const Profile& lo, const Profile& hi, const std::function<bool(const Profile&)>& emit) {
        if (!go) return;
        if (!leq(lo, hi)) throw std::logic_error("gated walk family has inverted bounds");
        enumerate_profiles(lo, hi, p, [&](const Profile& s) {
            go = emit(s);
            return go;
        });
    };

    // type I
    if (!S.contains({0, i}) && !S.contains({i - 1, 0})) {
        Profile A = largest_excluding(R, {{0, i}}, p);
        Profile B = largest_excluding(R, {{i - 1, 0}}, p);
        run(S, meet(meet(T, A), B), [&](const Profile& s) {
            if (classify_type(s, i) != LayerType::I) throw std::logic_error("type I family left its type");
            return visit(s);
        });
    }

    // type II
    if (!S.contains({0, i}) && !S.contains({i, 0})) {
        const Rect R2(0, i - 1, 0, i);
        Profile A = largest_excluding(R, {{0, i}}, p);
        for (coord v = 0; v < p * p && p * v < (p - 1) * i + 1 && go; ++v) {
            if (!T.contains({i - 1, v}) || S.contains({i - 1, v + 1})) continue;
            if (i >= p && !T.contains({v, i - p})) continue;
            Profile E = i >= p ? ext(R, {v, i - p}, Extremal::LowestThrough) : Profile::empty(R);
            Profile C = ext(R2, {i - 1, v}, Extremal::LowestEnd);
            Profile D = ext(R2, {i - 1, v}, Extremal::HighestEnd);
            Profile G = join(restrict_to(join(S, E), R2), C);
            Profile L = meet(restrict_to(meet(T, A), R2), D);
            run(G, L, [&](const Profile& s) {
                Profile full = Profile::empty(R);
                for (coord x = 0; x < i; ++x) full.at(x) = s.at(x);
                return visit(full);
            });
        }
    }

    // type III
    for (coord u = 0; u <= i && go; ++u) {
        if (!T.contains({i, u}) || !T.contains({u, i})) continue;
        if (S.contains({i, u + 1}) || S.contains({u + 1, i})) continue;
        Profile F = ext(R, {u, i}, Extremal::LowestStart);
        Profile G = ext(R, {u, i}, Extremal::HighestStart);
        Profile M = ext(R, {i, u}, Extremal::LowestEnd);
        Profile N = ext(R, {i, u}, Extremal::HighestEnd);
        run(join(join(S, F), M), meet(meet(T, G), N), visit);
    }
}

// Every rotation-fixed ideal of [0,n]^3, given by its layers J_0..J_n.
inline BigInt enumerate_all_r1(const Params& P, Shard shard,
                               const std::function<bool(const std::vector<Profile>&)>& visit) {
    if (P.r != 1) throw InvalidParams("symmetric enumeration is the r = 1 case");
    const coord n = P.n, p = P.p;
    const coord split = std::min<coord>(1, n);
    std::vector<Profile> layers;
    BigInt total = 0;
    bool stop = false;
    coord k = 0;
    std::function<void(coord)> rec = [&](coord i) {
        if (i > n) {
            ++total;
            if (visit && !visit(layers)) stop = true;
            return;
        }
        CumulativeLayers cum = accumulate(layers, i);
        enumerate_layer_sym(cum, p, [&](const Profile& s) {
            if (i == split && !shard.takes(k++)) return true;
            layers.push_back(s);
            rec(i + 1);
            layers.pop_back();
            return !stop;
        });
    };
    rec(0);
    return total;
}

inline BigInt count_all_r1(const Params& P, Shard shard = {}) { return enumerate_all_r1(P, shard, nullptr); }

// 3D points of the ideal assembled from symmetric layers.
inline std::set<Point3> sym_points(const std::vector<Profile>& layers) {
    std::set<Point3> s;
    for (size_t j = 0; j < layers.size(); ++j)
        for (Point2 u : layers[j].points()) {
            Point3 v{u.x, u.y, static_cast<coord>(j)};
            for (int t = 0; t < 3; ++t) {
                s.insert(v);
                v = rotate(v);
            }
        }
    return s;
}

inline std::set<Point3> layer_points(const std::vector<Profile>& layers) {
    std::set<Point3> s;
    for (size_t j = 0; j < layers.size(); ++j)
        for (Point2 u : layers[j].points()) s.insert({u.x, u.y, static_cast<coord>(j)});
    return s;
}

} // namespace affinv
