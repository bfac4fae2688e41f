#pragma once

#include <optional>
#include <vector>

#include "eulerian/curve.hpp"
#include "eulerian/tuples.hpp"

namespace eulerian {

// The x = 2 family: for each rational m = p/q there is an elliptic curve
// whose non-torsion rational points yield square Eulerian triples
// {4, y^2, z^2} with y = param_t(2, m) and z = param_t(2, n).

// J^2 = K^3 - 2(p^4 - 4p^2q^2 + 25q^4) K^2
//         + (p^8 - 8p^6q^2 - 34p^4q^4 - 200p^2q^6 + 625q^8) K.
// Requires gcd(p, q) = 1, q >= 1, p != 0.
Curve curve_for_m(const Int& p, const Int& q);

// n = J / (2 p q K). Throws two_torsion_error when K = 0.
Rat n_from_point(const Int& p, const Int& q, const Point& pt);

// Roots (2, param_t(2, p/q), param_t(2, n)); nullopt when the point leads
// to a degenerate tuple (z = 0 or a collision of absolute values).
std::optional<SquareTuple> triple_from(const Int& p, const Int& q, const Point& pt);

struct FamilyTriple {
    int k; // the multiple of the generator that produced this triple
    Point point;
    Rat n;
    SquareTuple triple;
};

// Triples from k*gen for k = 1..kmax, each verified Eulerian; degenerate
// multiples (torsion hits) are skipped. Throws not_on_curve if gen is not
// on curve_for_m(p, q).
std::vector<FamilyTriple> family(const Int& p, const Int& q, const Point& gen, int kmax);

} // namespace eulerian
