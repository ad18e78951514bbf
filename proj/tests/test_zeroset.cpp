#include "schilling/zeroset.hpp"

#include "zeroset_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace schilling;

namespace {

ZeroSet band(const Rat& lo, const Rat& hi, bool locl = true, bool hicl = true) {
    return insert(ZeroSet{}, Interval{Bound{Bound::Kind::Finite, lo, locl},
                                      Bound{Bound::Kind::Finite, hi, hicl}});
}

} // namespace

TEST_CASE("insert merges flag-aware") {
    // [0,1) abutting [1,2] merges into [0,2]
    ZeroSet s = band(Rat(0), Rat(1), true, false);
    s = insert(s, Interval{Bound::at(Rat(1)), Bound::at(Rat(2))});
    REQUIRE(s.intervals().size() == 1);
    CHECK(s.intervals()[0] == Interval{Bound::at(Rat(0)), Bound::at(Rat(2))});
    CHECK(s.atoms().empty());

    // (0,1) + atom 1 + (1,2) becomes (0,2)
    ZeroSet t = band(Rat(0), Rat(1), false, false);
    t = insert(t, Rat(1));
    t = insert(t, Interval{Bound::open(Rat(1)), Bound::open(Rat(2))});
    REQUIRE(t.intervals().size() == 1);
    CHECK(t.intervals()[0] == Interval{Bound::open(Rat(0)), Bound::open(Rat(2))});
    CHECK(member(t, Rat(1)));
    CHECK(!member(t, Rat(0)));

    // (0,1) + (1,2) stays two components; 1 is not covered
    ZeroSet u = band(Rat(0), Rat(1), false, false);
    u = insert(u, Interval{Bound::open(Rat(1)), Bound::open(Rat(2))});
    CHECK(u.intervals().size() == 2);
    CHECK(!member(u, Rat(1)));

    CHECK_THROWS_AS(insert(ZeroSet{}, Interval{Bound::open(Rat(2)), Bound::open(Rat(1))}),
                    MalformedIntervalError);
    CHECK_THROWS_AS(insert(ZeroSet{}, Interval{Bound::open(Rat(1)), Bound::open(Rat(1))}),
                    MalformedIntervalError);
}

TEST_CASE("infinite rays and membership beyond Q") {
    ZeroSet s;
    s = insert(s, Interval{Bound::neg_inf(), Bound::open(Rat(-1, 2))});
    s = insert(s, Interval{Bound::open(Rat(1, 2)), Bound::pos_inf()});
    CHECK(member(s, Rat(3, 2)));  // Q + 1 with Q = 1/2
    CHECK(member(s, Rat(-100)));
    CHECK(!member(s, Rat(1, 2)));
    CHECK(!member(s, Rat(0)));
}

TEST_CASE("contains is endpoint-flag aware") {
    CHECK(contains(band(Rat(0), Rat(2)), Interval{Bound::at(Rat(1, 2)), Bound::at(Rat(3, 2))}));
    CHECK(!contains(band(Rat(0), Rat(2), true, false), Rat(2)));

    // (-1/2,1/2) u {1/2} covers [0,1/2]
    ZeroSet s = band(Rat(-1, 2), Rat(1, 2), false, false);
    s = insert(s, Rat(1, 2));
    CHECK(contains(s, Interval{Bound::at(Rat(0)), Bound::at(Rat(1, 2))}));
    CHECK(!contains(s, Interval{Bound::at(Rat(-1, 2)), Bound::at(Rat(0))}));
}

TEST_CASE("translate and scale") {
    CHECK(translate(band(Rat(0), Rat(1)), Rat(1)) == band(Rat(1), Rat(2)));
    CHECK(scale(band(Rat(1), Rat(2)), Rat(1, 3)) == band(Rat(1, 3), Rat(2, 3)));
    // reflection swaps openness flags
    const ZeroSet halfOpen = band(Rat(0), Rat(1), false, true); // (0,1]
    CHECK(scale(halfOpen, Rat(-1)) == band(Rat(-1), Rat(0), true, false));
    CHECK_THROWS_AS(scale(halfOpen, Rat(0)), ZeroScaleError);
}

TEST_CASE("translate/scale are group actions") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const ZeroSet s = testing::random_tracked_set(rng, 6).set;
        const Rat a = testing::random_rat(rng);
        Rat m = testing::random_rat(rng);
        if (m == 0) m = Rat(3, 7);
        CHECK(translate(translate(s, a), -a) == s);
        CHECK(scale(scale(s, m), 1 / m) == s);
    }
}

TEST_CASE("intersect") {
    CHECK(intersect(band(Rat(0), Rat(2)), band(Rat(1), Rat(3))) == band(Rat(1), Rat(2)));
    CHECK(intersect(band(Rat(0), Rat(1), false, false), band(Rat(1), Rat(2))).empty());

    ZeroSet rays;
    rays = insert(rays, Interval{Bound::neg_inf(), Bound::open(Rat(-1, 2))});
    rays = insert(rays, Interval{Bound::open(Rat(1, 2)), Bound::pos_inf()});
    CHECK(intersect(rays, band(Rat(0), Rat(1))) == band(Rat(1, 2), Rat(1), false, true));
}

TEST_CASE("symmetrize") {
    const ZeroSet s = symmetrize(band(Rat(1), Rat(2)));
    CHECK(contains(s, Interval{Bound::at(Rat(-2)), Bound::at(Rat(-1))}));
    CHECK(contains(s, Interval{Bound::at(Rat(1)), Bound::at(Rat(2))}));
    CHECK(symmetrize(s) == s); // idempotent on symmetric input

    const ZeroSet atoms = symmetrize(insert(ZeroSet{}, Rat(2, 3)));
    CHECK(atoms.atoms() == std::vector<Rat>{Rat(-2, 3), Rat(2, 3)});
}

TEST_CASE("goal_reached") {
    CHECK(goal_reached(band(Rat(-1, 2), Rat(1, 2), false, false), Rat(1, 3)));
    CHECK(!goal_reached(band(Rat(1, 4), Rat(1, 2), false, false), Rat(1, 3)));
    // [0, q(2-Q)] for q = 2/5 covers (0, q)
    CHECK(goal_reached(band(Rat(0), Rat(8, 15)), Rat(2, 5)));
}

TEST_CASE("insert is monotone") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const ZeroSet s = testing::random_tracked_set(rng, 5).set;
        const Rat a = testing::random_rat(rng);
        CHECK(contains(insert(s, a), s));
    }
}

TEST_CASE("normalization is canonical under insert permutations") {
    std::vector<Interval> pieces = {
        Interval{Bound::at(Rat(0)), Bound::open(Rat(1))},
        Interval{Bound::at(Rat(1)), Bound::at(Rat(2))},
        Interval{Bound::open(Rat(5, 2)), Bound::open(Rat(3))},
        Interval{Bound::open(Rat(-1)), Bound::open(Rat(0))},
    };
    std::vector<Rat> atoms = {Rat(3), Rat(-1), Rat(7, 2)};

    const ZeroSet reference = ZeroSet::from_pieces(pieces, atoms);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(pieces.begin(), pieces.end(), rng);
        std::shuffle(atoms.begin(), atoms.end(), rng);
        ZeroSet s;
        for (const auto& iv : pieces) s = insert(s, iv);
        for (const auto& a : atoms) s = insert(s, a);
        CHECK(s == reference);
    }
}

TEST_CASE("membership agrees with the naive operation-log oracle") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> opsd(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const testing::TrackedSet t = testing::random_tracked_set(rng, opsd(rng));
        for (int p = 0; p < 25; ++p) {
            const Rat x = testing::random_rat(rng);
            CHECK(member(t.set, x) == testing::naive_member(t.log, x));
        }
    }
}

TEST_CASE("interval cap is a reported failure") {
    std::vector<Interval> many;
    for (long k = 0; k < 10; ++k)
        many.push_back(Interval{Bound::open(Rat(2 * k)), Bound::open(Rat(2 * k + 1))});
    CHECK_THROWS_AS(ZeroSet::from_pieces(many, {}, 4), IntervalBudgetExceeded);
}
