#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walk.hpp"

namespace affinv {

using BigInt = boost::multiprecision::cpp_int;

enum class Direction { Forward, Backward };

// Layers J_i of U = [0,n]^2 indexed by height; a layer may be unassigned.
struct LayerSequence {
    Direction dir = Direction::Backward;
    coord n = 0;
    std::map<coord, Walk> walks;
};

struct BoundsPair {
    Walk lower, upper;
};

using Layers = std::vector<std::optional<Profile>>;

struct Shard {
    coord total = 1;
    coord index = 0;
    bool takes(coord k) const { return total <= 1 || k % total == index; }
};

namespace detail {

inline Rect U_of(coord n) { return Rect::square(0, n); }

inline const Profile& layer_at(const Layers& L, coord j) {
    if (j < 0 || j >= static_cast<coord>(L.size()) || !L[j]) throw InconsistentInput("layer is not assigned");
    return *L[j];
}

inline bool assigned(const Layers& L, coord j) {
    return j >= 0 && j < static_cast<coord>(L.size()) && L[j].has_value();
}

inline Layers to_layers(const LayerSequence& seq, coord p) {
    Layers L(seq.n + 1);
    for (auto& [j, w] : seq.walks) {
        if (j < 0 || j > seq.n) throw OutOfRange("layer height outside [0,n]");
        if (!(w.host == U_of(seq.n))) throw HostMismatch("layer walk is not a walk of [0,n]^2");
        L[j] = checked_profile(w, p);
    }
    return L;
}

} // namespace detail

inline std::optional<coord> alpha_of(coord i, const Layers& L, coord n, coord p) {
    for (coord a = p - 1; a >= 1; --a)
        if (i + a <= n && detail::assigned(L, i + a) && !L[i + a]->is_empty()) return a;
    return std::nullopt;
}

inline std::optional<coord> beta_of(coord i, const Layers& L, coord p) {
    for (coord b = p - 1; b >= 1; --b)
        if (i - b >= 0 && detail::assigned(L, i - b) && !L[i - b]->is_full()) return b;
    return std::nullopt;
}

inline std::pair<Profile, Profile> backward_bounds(coord i, const Layers& L, coord n, coord p) {
    const Rect U = detail::U_of(n);
    Profile X = Profile::empty(U), Y = Profile::full(U);
    if (i + 1 <= n) {
        const Profile& W1 = detail::layer_at(L, i + 1);
        X = join(X, W1);
        Profile hi = highest_extension(W1, Rect(0, n, -p, n), p);
        Y = shift(restrict_to(hi, Rect(0, n, -p, -p + n)), 0, p);
    }
    if (i + p <= n) {
        Profile lo = lowest_extension(shift(detail::layer_at(L, i + p), 1, 0), Rect(0, n + 1, 0, n), p);
        X = join(X, restrict_to(lo, U));
    }
    if (auto a = alpha_of(i, L, n, p)) {
        coord v = -p * p + p * *a;
        Profile lo = lowest_extension(shift(detail::layer_at(L, i + *a), 1, v), Rect(0, n + 1, v, n), p);
        X = join(X, restrict_to(lo, U));
    }
    return {X, Y};
}

inline std::pair<Profile, Profile> forward_bounds(coord i, const Layers& L, coord n, coord p) {
    const Rect U = detail::U_of(n);
    Profile X = Profile::empty(U), Y = Profile::full(U);
    if (i - 1 >= 0) {
        const Profile& W1 = detail::layer_at(L, i - 1);
        X = restrict_to(lowest_extension(shift(W1, 0, -p), Rect(0, n, -p, n), p), U);
        Y = meet(Y, W1);
    }
    if (i - p >= 0) {
        Profile hi = highest_extension(detail::layer_at(L, i - p), Rect(0, n + 1, 0, n), p);
        Y = meet(Y, shift(restrict_to(hi, Rect(1, n + 1, 0, n)), -1, 0));
    }
    if (auto b = beta_of(i, L, p)) {
        coord v = -p * p + p * *b;
        Profile hi = highest_extension(detail::layer_at(L, i - *b), Rect(0, n + 1, v, n), p);
        Y = meet(Y, shift(restrict_to(hi, Rect(1, n + 1, v, v + n)), -1, -v));
    }
    return {X, Y};
}

// The four conditions characterising a new layer of a backward sequence.
inline bool consistent_backward(coord i, const Profile& Ji, const Layers& L, coord n, coord p) {
    const Rect U = detail::U_of(n);
    if (i + 1 <= n) {
        const Profile& J1 = detail::layer_at(L, i + 1);
        if (!leq(J1, Ji)) return false;
        if (!leq(dilate(Ji, 0, -p, U, p), J1)) return false;
    }
    if (i + p <= n && !leq(dilate(detail::layer_at(L, i + p), 1, 0, U, p), Ji)) return false;
    if (auto a = alpha_of(i, L, n, p))
        if (!leq(dilate(detail::layer_at(L, i + *a), 1, -p * p + p * *a, U, p), Ji)) return false;
    return true;
}

inline bool consistent_forward(coord i, const Profile& Ji, const Layers& L, coord n, coord p) {
    const Rect U = detail::U_of(n);
    if (i - 1 >= 0) {
        const Profile& J1 = detail::layer_at(L, i - 1);
        if (!leq(Ji, J1)) return false;
        if (!leq(dilate(J1, 0, -p, U, p), Ji)) return false;
    }
    if (i - p >= 0 && !leq(dilate(Ji, 1, 0, U, p), detail::layer_at(L, i - p))) return false;
    if (auto b = beta_of(i, L, p))
        if (!leq(dilate(Ji, 1, -p * p + p * *b, U, p), detail::layer_at(L, i - *b))) return false;
    return true;
}

// ---- walk-level API --------------------------------------------------------

inline std::optional<coord> alpha(coord i, const LayerSequence& seq, coord p) {
    return alpha_of(i, detail::to_layers(seq, p), seq.n, p);
}

inline std::optional<coord> beta(coord i, const LayerSequence& seq, coord p) {
    return beta_of(i, detail::to_layers(seq, p), p);
}

inline bool is_consistent_backward(coord i, const IdealSet2& Ji, const LayerSequence& seq, coord p) {
    return consistent_backward(i, from_points(Ji.host, Ji.pts), detail::to_layers(seq, p), seq.n, p);
}

inline bool is_consistent_forward(coord i, const IdealSet2& Ji, const LayerSequence& seq, coord p) {
    return consistent_forward(i, from_points(Ji.host, Ji.pts), detail::to_layers(seq, p), seq.n, p);
}

namespace detail {

inline void verify_suffix(coord i, const Layers& L, coord n, coord p) {
    for (coord j = n; j > i; --j) {
        Layers above(n + 1);
        for (coord k = j + 1; k <= n; ++k) above[k] = L[k];
        if (!consistent_backward(j, layer_at(L, j), above, n, p))
            throw InconsistentInput("layers above the target height are not backward consistent");
    }
}

inline void verify_prefix(coord i, const Layers& L, coord n, coord p) {
    for (coord j = 0; j < i; ++j) {
        Layers below(n + 1);
        for (coord k = 0; k < j; ++k) below[k] = L[k];
        if (!consistent_forward(j, layer_at(L, j), below, n, p))
            throw InconsistentInput("layers below the target height are not forward consistent");
    }
}

} // namespace detail

inline BoundsPair backward_bounds(coord i, const LayerSequence& seq, coord p, bool verify = false) {
    Layers L = detail::to_layers(seq, p);
    if (verify) detail::verify_suffix(i, L, seq.n, p);
    auto [X, Y] = backward_bounds(i, L, seq.n, p);
    return {to_walk(X), to_walk(Y)};
}

inline BoundsPair forward_bounds(coord i, const LayerSequence& seq, coord p, bool verify = false) {
    Layers L = detail::to_layers(seq, p);
    if (verify) detail::verify_prefix(i, L, seq.n, p);
    auto [X, Y] = forward_bounds(i, L, seq.n, p);
    return {to_walk(X), to_walk(Y)};
}

inline void enumerate_interval(const Walk& lower, const Walk& upper, coord p,
                               const std::function<void(const Walk&)>& visit) {
    if (!(lower.host == upper.host)) throw HostMismatch("bounds live in different rectangles");
    enumerate_profiles(checked_profile(lower, p), checked_profile(upper, p), p, [&](const Profile& s) {
        visit(to_walk(s));
        return true;
    });
}

inline BigInt count_interval(const Profile& lower, const Profile& upper, coord p) {
    BigInt c = 0;
    enumerate_profiles(lower, upper, p, [&](const Profile&) {
        ++c;
        return true;
    });
    return c;
}

// Every ideal of [0,n]^3, one layer at a time. visit receives the layers in
// height order 0..n and returns false to stop.
inline BigInt enumerate_all_r3(const Params& P, Direction dir, Shard shard,
                               const std::function<bool(const std::vector<Profile>&)>& visit) {
    if (P.r != 3) throw InvalidParams("slicing enumeration is the r = 3 case");
    const coord n = P.n, p = P.p;
    Layers L(n + 1);
    BigInt total = 0;
    bool stop = false;
    std::vector<Profile> out(n + 1);
    std::function<void(coord, coord)> rec = [&](coord step, coord i) {
        if (step > n) {
            ++total;
            if (visit) {
                for (coord j = 0; j <= n; ++j) out[j] = *L[j];
                if (!visit(out)) stop = true;
            }
            return;
        }
        auto [X, Y] = dir == Direction::Backward ? backward_bounds(i, L, n, p) : forward_bounds(i, L, n, p);
        if (!visit && step == n && !stop && shard.total <= 1) {
            total += count_interval(X, Y, p);
            return;
        }
        coord k = 0;
        enumerate_profiles(X, Y, p, [&](const Profile& s) {
            if (step == 0 && !shard.takes(k++)) return true;
            L[i] = s;
            rec(step + 1, dir == Direction::Backward ? i - 1 : i + 1);
            L[i].reset();
            return !stop;
        });
    };
    rec(0, dir == Direction::Backward ? n : 0);
    return total;
}

inline BigInt count_all_r3(const Params& P, Direction dir = Direction::Backward, Shard shard = {}) {
    return enumerate_all_r3(P, dir, shard, nullptr);
}

// ---- six equivalent forms of one shifted containment -----------------------

namespace detail {

inline std::set<Point2> dilate_set(const std::set<Point2>& J, coord dx, coord dy, const Rect& R, coord p) {
    std::set<Point2> out;
    for (coord x = R.a; x <= R.b; ++x)
        for (coord y = R.c; y <= R.d; ++y)
            for (Point2 u : J)
                if (precedes2({x, y}, {u.x + dx, u.y + dy}, p)) {
                    out.insert({x, y});
                    break;
                }
    return out;
}

inline bool contained(const std::set<Point2>& a, const std::set<Point2>& b) {
    for (Point2 u : a)
        if (!b.count(u)) return false;
    return true;
}

} // namespace detail

// J, K ideals of U = [0,n]^2; a, b >= 0.
inline std::array<bool, 6> lemma42_equivalent(const IdealSet2& J, const IdealSet2& K, coord a, coord b, coord p) {
    const Rect U = J.host;
    if (!(K.host == U) || U.a != 0 || U.c != 0 || U.b != U.d) throw HostMismatch("both ideals must live in [0,n]^2");
    const coord n = U.b;
    const Rect big(0, a + n, -b, n);
    std::set<Point2> Kbar;
    for (coord x = big.a; x <= big.b; ++x)
        for (coord y = big.c; y <= big.d; ++y) {
            bool ok = true;
            for (coord qx = 0; qx <= n && ok; ++qx)
                for (coord qy = 0; qy <= n && ok; ++qy)
                    if (!K.pts.count({qx, qy}) && precedes2({qx, qy}, {x, y}, p)) ok = false;
            if (ok) Kbar.insert({x, y});
        }
    std::array<bool, 6> r{};
    r[0] = detail::contained(detail::dilate_set(J.pts, a, -b, U, p), K.pts);
    {
        bool ok = true;
        for (Point2 u : J.pts) {
            Point2 v{u.x + a, u.y - b};
            if (!Kbar.count(v) || !U.shifted(a, -b).contains(v)) ok = false;
        }
        r[1] = ok;
    }
    r[2] = detail::contained(detail::dilate_set(J.pts, a, -b, big, p), Kbar);

    Walk W = omega(J, p), Z = omega(K, p);
    Walk low = lowest_extension(shift(W, a, -b), big, p);
    Walk high = highest_extension(Z, big, p);
    r[3] = walk_leq(restrict_to(low, U), Z);
    r[4] = walk_leq(shift(W, a, -b), restrict_to(high, Rect(a, a + n, -b, -b + n)));
    r[5] = walk_leq(low, high);
    return r;
}

} // namespace affinv
