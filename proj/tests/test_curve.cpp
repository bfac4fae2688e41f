#include <doctest.h>

#include "eulerian/curve.hpp"
#include "oracles.hpp"

using namespace eulerian;

namespace {

const Curve kFamilyHalf(Rat(-770), Rat(146625)); // the m = 1/2 curve
const Point kGen = Point::unchecked(Rat(245), Rat(2100));

} // namespace

TEST_CASE("curve construction rejects singular cubics") {
    CHECK_THROWS_AS(Curve(Rat(1), Rat(0)), singular_curve);   // B = 0
    CHECK_THROWS_AS(Curve(Rat(2), Rat(1)), singular_curve);   // A^2 = 4B
    CHECK_NOTHROW(Curve(Rat(0), Rat(1)));
}

TEST_CASE("membership") {
    CHECK(on_curve(kFamilyHalf, kGen));
    CHECK(on_curve(kFamilyHalf, Point::infinity()));
    CHECK(on_curve(kFamilyHalf, Point::unchecked(Rat(0), Rat(0)))); // the B*K term keeps (0,0) on every curve
    CHECK_FALSE(on_curve(kFamilyHalf, Point::unchecked(Rat(1), Rat(1))));
    CHECK_NOTHROW(Point::affine(kFamilyHalf, Rat(245), Rat(2100)));
    CHECK_THROWS_AS(Point::affine(kFamilyHalf, Rat(245), Rat(2101)), not_on_curve);
}

TEST_CASE("group law basics") {
    CHECK(add(kFamilyHalf, kGen, Point::infinity()) == kGen);
    CHECK(add(kFamilyHalf, Point::infinity(), kGen) == kGen);
    CHECK(add(kFamilyHalf, kGen, negate(kGen)).is_infinity());

    const Point doubled = add(kFamilyHalf, kGen, kGen);
    CHECK(doubled.K() == Rat(187489, 441));
    CHECK(doubled.J() == Rat(651232, 9261));
    CHECK(on_curve(kFamilyHalf, doubled));
}

TEST_CASE("scalar multiples") {
    CHECK(scalar_mul(kFamilyHalf, Int(0), kGen).is_infinity());
    CHECK(scalar_mul(kFamilyHalf, Int(1), kGen) == kGen);
    const Point p2 = scalar_mul(kFamilyHalf, Int(2), kGen);
    CHECK(p2 == Point::unchecked(Rat(187489, 441), Rat(651232, 9261)));
    CHECK(scalar_mul(kFamilyHalf, Int(-1), kGen) == negate(kGen));

    // k1*P + k2*P = (k1+k2)*P for small multiples
    for (int k1 = 0; k1 <= 4; ++k1)
        for (int k2 = 0; k2 <= 4; ++k2) {
            Point lhs = add(kFamilyHalf, scalar_mul(kFamilyHalf, Int(k1), kGen),
                            scalar_mul(kFamilyHalf, Int(k2), kGen));
            Point rhs = scalar_mul(kFamilyHalf, Int(k1 + k2), kGen);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("group law closure, commutativity, associativity on sampled points") {
    std::vector<Point> sample;
    for (int k = 1; k <= 5; ++k)
        sample.push_back(scalar_mul(kFamilyHalf, Int(k), kGen));
    sample.push_back(Point::infinity());
    sample.push_back(Point::unchecked(Rat(345), Rat(0))); // torsion

    for (const Point& p : sample)
        for (const Point& q : sample) {
            Point s = add(kFamilyHalf, p, q);
            CHECK(on_curve(kFamilyHalf, s));
            CHECK(s == add(kFamilyHalf, q, p));
        }
    for (const Point& p : sample)
        for (const Point& q : sample)
            for (const Point& r : sample) {
                Point lhs = add(kFamilyHalf, add(kFamilyHalf, p, q), r);
                Point rhs = add(kFamilyHalf, p, add(kFamilyHalf, q, r));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("two torsion") {
    // roots of K^2 - 770K + 146625: discriminant 6400 = 80^2
    auto roots = oracle::quadratic_roots(Rat(1), Rat(-770), Rat(146625));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(345));
    CHECK(roots[1] == Rat(425));

    auto tors = two_torsion(kFamilyHalf);
    REQUIRE(tors.size() == 3);
    CHECK(tors[0] == Point::unchecked(Rat(0), Rat(0)));
    CHECK(tors[1] == Point::unchecked(Rat(345), Rat(0)));
    CHECK(tors[2] == Point::unchecked(Rat(425), Rat(0)));
    for (const Point& t : tors) {
        CHECK(on_curve(kFamilyHalf, t));
        CHECK(add(kFamilyHalf, t, t).is_infinity());
    }

    // k^2 + 20478k + 99801585: discriminant 20142144 = 4488^2, roots -12483, -7995
    auto roots2 = oracle::quadratic_roots(Rat(1), Rat(20478), Rat(99801585));
    REQUIRE(roots2.size() == 2);
    CHECK(roots2[0] == Rat(-12483));
    CHECK(roots2[1] == Rat(-7995));
    auto tors2 = two_torsion(Curve(Rat(20478), Rat(99801585)));
    REQUIRE(tors2.size() == 3);
    CHECK(tors2[1].K() == Rat(-12483));
    CHECK(tors2[2].K() == Rat(-7995));

    // K^2 + 1 has no rational root
    auto tors3 = two_torsion(Curve(Rat(0), Rat(1)));
    REQUIRE(tors3.size() == 1);
    CHECK(tors3[0].K() == Rat(0));
}

TEST_CASE("integer point scan hits the published points") {
    auto pts = integer_point_scan(kFamilyHalf, Int(245), Int(245));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == Point::unchecked(Rat(245), Rat(2100)));

    auto zero = integer_point_scan(kFamilyHalf, Int(0), Int(0));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Point::unchecked(Rat(0), Rat(0)));

    auto neg = integer_point_scan(Curve(Rat(20478), Rat(99801585)), Int(-9984), Int(-9984));
    REQUIRE(neg.size() == 1);
    CHECK(neg[0] == Point::unchecked(Rat(-9984), Rat(222768))); // non-negative J representative
}

TEST_CASE("scan agrees with the direct per-K oracle") {
    auto check_range = [](const Curve& c, long lo, long hi) {
        auto got = integer_point_scan(c, Int(lo), Int(hi));
        auto want = oracle::integer_points(c, lo, hi);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].K() == Rat(want[i].first));
            CHECK(got[i].J() == want[i].second);
            CHECK(on_curve(c, got[i]));
        }
    };
    check_range(kFamilyHalf, -500, 500);
    check_range(Curve(Rat(20478), Rat(99801585)), -12600, 100);
    // rational coefficients exercise the denominator-clearing path
    check_range(Curve(Rat(13941, 25), Rat(1288872, 25)), -500, 500);
    check_range(Curve(Rat(-7, 3), Rat(5, 9)), -50, 50);
}

TEST_CASE("empty and reversed ranges") {
    CHECK(integer_point_scan(kFamilyHalf, Int(246), Int(250)).empty());
    CHECK(integer_point_scan(kFamilyHalf, Int(10), Int(5)).empty());
}
