#include "gridlift/exact.hpp"

#include <doctest.h>

#include <random>

using namespace gridlift;

namespace {

Point2 pt(long x, long y) { return {ExactRat(x), ExactRat(y)}; }

}  // namespace

TEST_CASE("orient2d examples")
{
    CHECK(orient2d(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient2d(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(orient2d(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orient2d(IntPoint2{0, 0}, IntPoint2{1, 0}, IntPoint2{0, 1}) == 1);
}

TEST_CASE("slope examples")
{
    CHECK(slope(pt(0, 0), pt(2, 1)) == make_rat(1, 2));
    CHECK(slope(pt(0, 0), pt(1, 0)) == 0);
    CHECK(slope(pt(-1, 0), pt(0, 1)) == 1);
    CHECK_THROWS_AS(slope(pt(3, 0), pt(3, 5)), VerticalEdge);
}

TEST_CASE("plane_through and eval_plane examples")
{
    Plane a = plane_through({0, 0, 0}, {1, 0, 0}, {0, 1, 1});
    CHECK(a == Plane{0, 1, 0});
    CHECK(eval_plane(a, 7, 3) == 3);

    Plane b = plane_through({0, 0, 5}, {1, 0, 5}, {0, 1, 5});
    CHECK(b == Plane{0, 0, 5});
    CHECK(eval_plane(b, -4, 9) == 5);

    Plane c = plane_through({0, 0, 0}, {2, 0, 2}, {0, 3, 3});
    CHECK(c == Plane{1, 1, 0});
    CHECK(eval_plane(c, 2, 3) == 5);

    CHECK_THROWS_AS(plane_through({0, 0, 0}, {1, 1, 4}, {2, 2, 1}), DegenerateFace);
}

TEST_CASE("side_of_plane")
{
    Plane c = plane_through({0, 0, 0}, {2, 0, 2}, {0, 3, 3});
    CHECK(side_of_plane(c, {1, 1, 3}) == 1);
    CHECK(side_of_plane(c, {1, 1, 2}) == 0);
    CHECK(side_of_plane(c, {1, 1, 1}) == -1);
}

TEST_CASE("rational helpers")
{
    CHECK(make_rat(6, -4) == make_rat(-3, 2));
    CHECK(make_rat(6, -4).get_den() == 2);
    CHECK(gridlift::floor(make_rat(-3, 2)) == -2);
    CHECK(gridlift::ceil(make_rat(-3, 2)) == -1);
    CHECK(gridlift::floor(make_rat(5, 2)) == 2);
    CHECK(gridlift::ceil(make_rat(5, 2)) == 3);
    CHECK(gridlift::floor(ExactRat(4)) == 4);
    CHECK(bit_length(0) == 0);
    CHECK(bit_length(255) == 8);
    CHECK(bit_length(-256) == 9);
    CHECK(parse_int("-123456789012345678901234567890") * 10 ==
          parse_int("-1234567890123456789012345678900"));
    CHECK(to_string(parse_int("32702465")) == "32702465");
    CHECK(to_string(make_rat(-3, 2)) == "-3/2");
    CHECK_THROWS(parse_int("12x"));
    CHECK_THROWS(parse_int(""));
}

TEST_CASE("lexicographic order puts y first")
{
    CHECK(lex_yx_less({5, 1}, {1, 2}));
    CHECK(lex_yx_less({1, 2}, {2, 2}));
    CHECK_FALSE(lex_yx_less({2, 2}, {2, 2}));
}

TEST_CASE("property: orientation is antisymmetric")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int k = 0; k < 500; ++k) {
        Point2 p = pt(d(rng), d(rng)), q = pt(d(rng), d(rng)), r = pt(d(rng), d(rng));
        CHECK(orient2d(p, q, r) == -orient2d(q, p, r));
        CHECK(orient2d(p, q, r) == orient2d(q, r, p));
    }
}

TEST_CASE("property: plane through three points reproduces their heights")
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> d(-50, 50);
    int tried = 0;
    while (tried < 300) {
        Point3 p[3];
        for (auto& x : p)
            x = {d(rng), d(rng), d(rng)};
        if (orient2d(IntPoint2{p[0].x, p[0].y}, IntPoint2{p[1].x, p[1].y}, IntPoint2{p[2].x, p[2].y}) == 0)
            continue;
        ++tried;
        Plane pl = plane_through(p[0], p[1], p[2]);
        for (const auto& x : p)
            CHECK(eval_plane(pl, x.x, x.y) == ExactRat(x.z));
    }
}

TEST_CASE("property: slope is translation invariant")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int k = 0; k < 300; ++k) {
        IntPoint2 p{d(rng), d(rng)}, q{d(rng), d(rng)};
        if (p.x == q.x)
            continue;
        IntPoint2 t{d(rng), d(rng)};
        CHECK(slope(p, q) == slope(IntPoint2{p.x + t.x, p.y + t.y}, IntPoint2{q.x + t.x, q.y + t.y}));
    }
}

TEST_CASE("exactness at large magnitudes")
{
    ExactInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 80);
    Plane pl = plane_through({0, 0, big}, {1, 0, big + 1}, {0, 1, big - 1});
    CHECK(eval_plane(pl, 3, 2) == ExactRat(big + 1));
    CHECK(side_of_plane(pl, {3, 2, big + 2}) == 1);
}
