#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"

using namespace affinv;
using fx::Set2;

namespace {

Walk fig6() { return Walk(Rect::square(0, 10), {{0, 9}, {1, 9}, {1, 7}, {3, 7}, {3, 3}, {5, 3}, {5, 0}}); }

// Every corner sequence validate_walk accepts, by depth-first search over steps.
std::vector<Walk> all_walks(const Rect& R, coord p) {
    std::vector<Walk> out{Walk(R)};
    std::vector<Point2> cur;
    std::function<void(int)> go = [&](int last) {
        Walk w(R, cur);
        if (validate_walk(w, p)) out.push_back(w);
        Point2 u = cur.back();
        if (last != 1)
            for (coord dx = 1; dx <= p && u.x + dx <= R.b; ++dx) {
                cur.push_back({u.x + dx, u.y});
                go(1);
                cur.pop_back();
            }
        if (last != -1)
            for (coord dy = 1; dy <= p * p && u.y - dy >= R.c; ++dy) {
                cur.push_back({u.x, u.y - dy});
                go(-1);
                cur.pop_back();
            }
    };
    for (coord x = R.a; x <= R.b; ++x)
        for (coord y = R.c; y <= R.d; ++y)
            if (x == R.a || y == R.d) {
                cur = {{x, y}};
                go(0);
            }
    return out;
}

// q lies on the boundary of s: in s, and its upper right neighbour is not
bool on_boundary(const Set2& s, Point2 q) { return s.count(q) && !s.count({q.x + 1, q.y + 1}); }

} // namespace

TEST(Validate, Examples) {
    EXPECT_TRUE(validate_walk(fig6(), 2));
    EXPECT_FALSE(validate_walk(Walk(Rect::square(0, 2), {{0, 0}, {2, 0}}), 2));
    EXPECT_TRUE(validate_walk(Walk(Rect::square(0, 4)), 2));
    // corners must stay inside the host
    EXPECT_FALSE(validate_walk(Walk(Rect::square(0, 2), {{0, 3}, {1, 3}, {1, 0}}), 2));
    // steps must alternate
    EXPECT_FALSE(validate_walk(Walk(Rect::square(0, 4), {{0, 4}, {0, 3}, {0, 1}, {1, 1}, {1, 0}}), 2));
}

TEST(Iota, Examples) {
    auto s = iota(fig6(), 2);
    EXPECT_EQ(s.pts.size(), 44u);
    EXPECT_TRUE(oracle::is_ideal2(s.pts, s.host, 2));
    EXPECT_TRUE(iota(Walk(Rect::square(0, 3)), 2).pts.empty());
    EXPECT_EQ(iota(full_walk(Rect(1, 3, 2, 5)), 2).pts.size(), 12u);
    EXPECT_THROW(iota(Walk(Rect::square(0, 2), {{0, 0}, {2, 0}}), 2), InvalidWalk);
}

TEST(Omega, Examples) {
    Rect R = Rect::square(0, 2);
    EXPECT_TRUE(omega(IdealSet2{R, {}}, 2).is_empty());
    EXPECT_EQ(omega(IdealSet2{R, Profile::full(R).points()}, 2), Walk(R, {{2, 2}}));
    EXPECT_EQ(omega(IdealSet2{R, {{0, 0}, {1, 0}}}, 2), Walk(R, {{0, 0}, {1, 0}}));
    // (0,1) precedes (2,0) at p = 2
    EXPECT_THROW(omega(IdealSet2{R, {{0, 0}, {1, 0}, {2, 0}}}, 2), NotAnIdeal);
    EXPECT_THROW(omega(IdealSet2{R, {{1, 1}}}, 2), NotAnIdeal);
}

TEST(Bijection, WalksAndIdealsCorrespond) {
    for (coord p : {2, 3})
        for (Rect R : {Rect::square(0, 3), Rect(0, 4, 0, 2), Rect(0, 1, 0, 5), Rect(2, 2, 1, 4), Rect(0, 3, 1, 1),
                       Rect(1, 1, 1, 1)}) {
            auto walks = all_walks(R, p);
            auto ideals = oracle::all_ideals2(R, p);
            ASSERT_EQ(walks.size(), ideals.size()) << p << " " << R.a << R.b << R.c << R.d;
            std::set<Set2> seen;
            for (const Walk& w : walks) {
                auto s = iota(w, p);
                ASSERT_TRUE(oracle::is_ideal2(s.pts, R, p));
                ASSERT_TRUE(seen.insert(s.pts).second);
                ASSERT_EQ(omega(s, p), w);
            }
            for (const Set2& s : ideals) {
                Walk w = omega(IdealSet2{R, s}, p);
                ASSERT_TRUE(validate_walk(w, p));
                ASSERT_EQ(iota(w, p).pts, s);
            }
        }
}

TEST(Order, WalkLeq) {
    Walk w = fig6();
    EXPECT_TRUE(walk_leq(Walk(w.host), w));
    EXPECT_TRUE(walk_leq(w, w));
    EXPECT_TRUE(walk_leq(w, full_walk(w.host)));
    EXPECT_FALSE(walk_leq(full_walk(w.host), w));
    EXPECT_THROW(walk_leq(w, Walk(Rect::square(0, 9))), HostMismatch);
}

TEST(Lattice, IdentitiesAndLaws) {
    const coord p = 3;
    Rect R = Rect::square(0, 6);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        Walk a = to_walk(fx::random_ideal(rng, R, p)), b = to_walk(fx::random_ideal(rng, R, p)),
             c = to_walk(fx::random_ideal(rng, R, p));
        ASSERT_EQ(meet(a, full_walk(R)), a);
        ASSERT_EQ(join(a, Walk(R)), a);
        ASSERT_EQ(meet(a, a), a);
        ASSERT_EQ(join(a, a), a);
        ASSERT_EQ(meet(a, b), meet(b, a));
        ASSERT_EQ(join(a, b), join(b, a));
        ASSERT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
        ASSERT_EQ(join(join(a, b), c), join(a, join(b, c)));
        ASSERT_EQ(meet(a, join(a, b)), a);
        ASSERT_EQ(join(a, meet(a, b)), a);
        ASSERT_TRUE(walk_leq(meet(a, b), a));
        ASSERT_TRUE(walk_leq(a, join(a, b)));

        Set2 sa = fx::pts(a, p), sb = fx::pts(b, p), both, either = sa;
        for (Point2 u : sa)
            if (sb.count(u)) both.insert(u);
        either.insert(sb.begin(), sb.end());
        ASSERT_EQ(fx::pts(meet(a, b), p), both);
        ASSERT_EQ(fx::pts(join(a, b), p), either);
    }
    EXPECT_THROW(meet(fig6(), Walk(Rect::square(0, 9))), HostMismatch);
}

TEST(Restrict, Examples) {
    Walk w = fig6();
    EXPECT_EQ(restrict_to(w, w.host), w);
    EXPECT_TRUE(restrict_to(Walk(w.host), Rect(2, 5, 1, 3)).is_empty());
    Rect sub(0, 3, 0, 7);
    Walk r = restrict_to(w, sub);
    EXPECT_EQ(fx::pts(r, 2), oracle::intersect(fx::pts(w, 2), sub));
    EXPECT_EQ(r, Walk(sub, {{3, 7}}));
    // column 0 is full in the smaller host, so the walk starts at (1,9)
    EXPECT_EQ(restrict_to(w, Rect(0, 5, 0, 9)), Walk(Rect(0, 5, 0, 9), {{1, 9}, {1, 7}, {3, 7}, {3, 3}, {5, 3}}));
    EXPECT_THROW(restrict_to(w, Rect(0, 11, 0, 3)), HostMismatch);
}

TEST(Shift, Translates) {
    Walk w = fig6();
    EXPECT_EQ(shift(w, 0, 0), w);
    EXPECT_EQ(shift(shift(w, 1, -2), -1, 2), w);
    Walk s = shift(w, 3, -4);
    EXPECT_EQ(fx::pts(s, 2), oracle::shift2(fx::pts(w, 2), 3, -4));
}

TEST(Extension, Examples) {
    Rect small = Rect::square(0, 1), big = Rect::square(0, 2);
    EXPECT_EQ(highest_extension(full_walk(small), big, 2), full_walk(big));
    EXPECT_TRUE(highest_extension(Walk(big), big, 2).is_empty());
    EXPECT_EQ(highest_extension(Walk(small, {{0, 0}, {1, 0}}), big, 2), Walk(big, {{0, 0}, {1, 0}}));
    EXPECT_TRUE(lowest_extension(Walk(small), big, 2).is_empty());
    EXPECT_EQ(lowest_extension(full_walk(small), small, 2), full_walk(small));
    EXPECT_THROW(highest_extension(full_walk(big), small, 2), HostMismatch);
}

TEST(Extension, MatchesBruteForce) {
    std::mt19937_64 rng(5);
    for (coord p : {2, 3, 5}) {
        std::uniform_int_distribution<coord> lo(0, 3), len(0, 3), grow(0, 3);
        for (int t = 0; t < 400; ++t) {
            coord a = lo(rng), c = lo(rng);
            Rect small(a, a + len(rng), c, c + len(rng));
            Rect big(small.a - std::min(small.a, grow(rng)), small.b + grow(rng), small.c - std::min(small.c, grow(rng)),
                     small.d + grow(rng));
            Walk z = to_walk(fx::random_ideal(rng, small, p));
            Set2 J = fx::pts(z, p);
            ASSERT_EQ(fx::pts(highest_extension(z, big, p), p),
                      oracle::brute_extension(J, small, big, oracle::Which::Largest, p));
            ASSERT_EQ(fx::pts(lowest_extension(z, big, p), p),
                      oracle::brute_extension(J, small, big, oracle::Which::Smallest, p));
        }
    }
}

TEST(Extremal, MatchesBruteForce) {
    const Extremal kinds[] = {Extremal::LowestStart, Extremal::HighestStart, Extremal::LowestEnd,
                              Extremal::HighestEnd, Extremal::LowestThrough};
    for (coord p : {2, 3})
        for (Rect R : {Rect::square(0, 4), Rect(0, 3, 0, 5), Rect(0, 4, 1, 2), Rect(1, 3, 0, 3)}) {
            auto ideals = oracle::all_ideals2(R, p);
            for (coord x = R.a; x <= R.b; ++x)
                for (coord y = R.c; y <= R.d; ++y)
                    for (Extremal k : kinds) {
                        Point2 q{x, y};
                        std::vector<Set2> fam;
                        for (const Set2& s : ideals) {
                            Walk w = omega(IdealSet2{R, s}, p);
                            bool in = false;
                            switch (k) {
                            case Extremal::LowestStart:
                            case Extremal::HighestStart: in = !w.is_empty() && w.pts.front() == q; break;
                            case Extremal::LowestEnd:
                            case Extremal::HighestEnd: in = !w.is_empty() && w.pts.back() == q; break;
                            case Extremal::LowestThrough: in = on_boundary(s, q); break;
                            }
                            if (in) fam.push_back(s);
                        }
                        if (fam.empty()) {
                            ASSERT_THROW(extremal_walk(R, q, k, p), NoSuchWalk);
                            continue;
                        }
                        Walk got = extremal_walk(R, q, k, p);
                        ASSERT_TRUE(validate_walk(got, p));
                        Set2 g = fx::pts(got, p);
                        bool low = k == Extremal::LowestStart || k == Extremal::LowestEnd ||
                                   k == Extremal::LowestThrough;
                        ASSERT_NE(std::find(fam.begin(), fam.end(), g), fam.end()) << x << "," << y;
                        for (const Set2& s : fam) ASSERT_TRUE(low ? oracle::subset(g, s) : oracle::subset(s, g));
                    }
        }
}

TEST(Extremal, LowestThroughExample) {
    Rect R = Rect::square(0, 6);
    Walk e = extremal_walk(R, {1, 3}, Extremal::LowestThrough, 3);
    EXPECT_EQ(fx::pts(e, 3), fx::pts(to_walk(smallest_containing(R, {{1, 3}}, 3)), 3));
    EXPECT_THROW(extremal_walk(R, {7, 0}, Extremal::LowestThrough, 3), NoSuchWalk);
    EXPECT_THROW(extremal_walk(R, {2, 2}, Extremal::HighestStart, 3), NoSuchWalk);
}
