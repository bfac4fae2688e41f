#include "eulerian/curve.hpp"

#include <algorithm>

namespace eulerian {

namespace {

Rat curve_rhs(const Curve& c, const Rat& k) {
    return ((k + c.A) * k + c.B) * k; // K^3 + A K^2 + B K
}

} // namespace

Curve::Curve(Rat a, Rat b) : A(std::move(a)), B(std::move(b)) {
    if (B.is_zero() || sq(A) == Rat(4) * B)
        throw singular_curve("singular curve: A=" + A.str() + " B=" + B.str());
}

Point Point::affine(const Curve& c, Rat k, Rat j) {
    Point p(std::move(k), std::move(j));
    if (!on_curve(c, p))
        throw not_on_curve("(" + p.K().str() + ", " + p.J().str() + ") is not on the curve");
    return p;
}

bool on_curve(const Curve& c, const Point& p) {
    if (p.is_infinity())
        return true;
    return sq(p.J()) == curve_rhs(c, p.K());
}

Point negate(const Point& p) {
    if (p.is_infinity())
        return p;
    return Point::unchecked(p.K(), -p.J());
}

Point add(const Curve& c, const Point& p, const Point& q) {
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;

    const Rat &k1 = p.K(), &j1 = p.J(), &k2 = q.K(), &j2 = q.J();
    Rat slope;
    if (k1 == k2) {
        if (j1 == -j2)
            return Point::infinity(); // vertical chord (includes doubling a 2-torsion point)
        // tangent at a doubled point
        slope = (Rat(3) * sq(k1) + Rat(2) * c.A * k1 + c.B) / (Rat(2) * j1);
    } else {
        slope = (j2 - j1) / (k2 - k1);
    }
    Rat k3 = sq(slope) - c.A - k1 - k2;
    Rat j3 = slope * (k1 - k3) - j1;
    return Point::unchecked(std::move(k3), std::move(j3));
}

Point scalar_mul(const Curve& c, const Int& k, const Point& p) {
    if (sgn(k) == 0 || p.is_infinity())
        return Point::infinity();
    Int n = k < 0 ? Int(-k) : k;
    Point acc = Point::infinity();
    Point base = p;
    while (sgn(n) > 0) {
        if (mpz_odd_p(n.get_mpz_t()))
            acc = add(c, acc, base);
        n >>= 1;
        if (sgn(n) > 0)
            base = add(c, base, base);
    }
    return k < 0 ? negate(acc) : acc;
}

std::vector<Point> two_torsion(const Curve& c) {
    std::vector<Point> pts;
    pts.push_back(Point::unchecked(Rat(0), Rat(0)));
    Rat disc = sq(c.A) - Rat(4) * c.B;
    if (is_square(disc)) {
        Rat root = sqrt_exact(disc);
        Rat half(Int(1), Int(2));
        Rat k1 = (-c.A - root) * half;
        Rat k2 = (-c.A + root) * half;
        // disc != 0 on a nonsingular curve, so k1 < k2
        pts.push_back(Point::unchecked(k1, Rat(0)));
        pts.push_back(Point::unchecked(k2, Rat(0)));
    }
    return pts;
}

std::vector<Point> integer_point_scan(const Curve& c, const Int& k_lo, const Int& k_hi) {
    std::vector<Point> pts;
    if (k_lo > k_hi)
        return pts;

    // Work on the integer cubic W(K) = d^2 * (K^3 + A K^2 + B K) where d
    // clears both denominators; W is a square exactly when the curve value
    // is, and J = sqrt(W)/d. Evaluation is incremental: finite differences
    // make the per-K cost three additions plus the square test.
    Int d;
    mpz_lcm(d.get_mpz_t(), c.A.den().get_mpz_t(), c.B.den().get_mpz_t());
    const Int d2 = d * d;
    const Int c3 = d2;
    const Int c2 = (c.A * Rat(d2)).num();
    const Int c1 = (c.B * Rat(d2)).num();

    const Int& k0 = k_lo;
    Int w = ((c3 * k0 + c2) * k0 + c1) * k0;
    Int d1 = c3 * (3 * k0 * (k0 + 1) + 1) + c2 * (2 * k0 + 1) + c1;
    Int dd2 = 6 * c3 * (k0 + 1) + 2 * c2;
    const Int dd3 = 6 * c3;

    for (Int k = k_lo; k <= k_hi; ++k) {
        if (is_square(w)) {
            Int j = isqrt_floor(w);
            pts.push_back(Point::unchecked(Rat(k), Rat(j, d)));
        }
        w += d1;
        d1 += dd2;
        dd2 += dd3;
    }
    return pts;
}

} // namespace eulerian
