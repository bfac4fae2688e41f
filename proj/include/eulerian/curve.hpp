#pragma once

#include <vector>

#include "eulerian/rational.hpp"

namespace eulerian {

// Rational elliptic curve in the fixed shape J^2 = K^3 + A*K^2 + B*K.
// Every curve this library touches has a rational two-torsion point at
// K = 0, which is exactly this shape.
struct Curve {
    Rat A, B;

    // Nonsingularity: the cubic K(K^2 + AK + B) must have no repeated root,
    // i.e. B != 0 and A^2 - 4B != 0.
    Curve(Rat a, Rat b);

    bool operator==(const Curve& o) const { return A == o.A && B == o.B; }
};

// A rational point: affine (K, J) or the identity at infinity.
// Affine construction goes through Point::affine, which checks membership.
class Point {
  public:
    Point() : inf_(true) {} // the identity
    static Point infinity() { return Point(); }
    static Point affine(const Curve& c, Rat k, Rat j);
    // For results of the group law / scans, where membership holds by
    // construction.
    static Point unchecked(Rat k, Rat j) { return Point(std::move(k), std::move(j)); }

    bool is_infinity() const { return inf_; }
    const Rat& K() const { return k_; }
    const Rat& J() const { return j_; }

    bool operator==(const Point& o) const {
        if (inf_ || o.inf_)
            return inf_ == o.inf_;
        return k_ == o.k_ && j_ == o.j_;
    }

  private:
    Point(Rat k, Rat j) : inf_(false), k_(std::move(k)), j_(std::move(j)) {}
    bool inf_;
    Rat k_, j_;
};

bool on_curve(const Curve& c, const Point& p);

Point negate(const Point& p);

// Chord-and-tangent group law with infinity as identity. All cases (equal
// points, inverse points, vertical chords) are defined; inputs must lie on c.
Point add(const Curve& c, const Point& p, const Point& q);

// k*p by double-and-add; 0*p = infinity, (-k)*p = negate(k*p).
Point scalar_mul(const Curve& c, const Int& k, const Point& p);

// All affine points with J = 0: K = 0 plus the rational roots (if any) of
// K^2 + AK + B, decided by an exact square test on the discriminant.
// Returned with K ascending after the leading (0, 0).
std::vector<Point> two_torsion(const Curve& c);

// Every (K, J) with integer K in [k_lo, k_hi] whose curve value is a
// perfect square; J is the non-negative root, order is ascending K.
std::vector<Point> integer_point_scan(const Curve& c, const Int& k_lo, const Int& k_hi);

} // namespace eulerian
