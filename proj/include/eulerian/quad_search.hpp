#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eulerian/curve.hpp"
#include "eulerian/tuples.hpp"

namespace eulerian {

// Two-stage search for square Eulerian quadruples {x^2, y^2, z^2, w^2}:
// a curve family indexed by x = e/f and m = g/h produces triples
// (x, y, z); a second curve in (x, y) proposes w; the only identity not
// guaranteed by construction is pair_val(w^2, z^2).

struct TripleParams {
    Int e, f; // x = e/f, both positive, coprime
    Int g, h; // m = g/h, h positive, g nonzero, coprime
};

// The integer-coefficient curve whose rational points carry the third
// triple member: J^2 = K^3 + A K^2 + B K with
//   A = -2(e^4h^4 + 2e^2f^2h^4 + f^4(g^4 - 4g^2h^2 + h^4))
//   B = e^8h^8 + 4e^6f^2h^8 - 2e^4f^4h^4(g^4 + 4g^2h^2 - 3h^4)
//       - 4e^2f^6h^4(g^4 + 4g^2h^2 - h^4)
//       + f^8(g^8 - 8g^6h^2 + 14g^4h^4 - 8g^2h^6 + h^8).
Curve curve_AB(const Int& e, const Int& f, const Int& g, const Int& h);

// n = J / (2 f^2 h^2 K m) with m = g/h. Throws two_torsion_error at K = 0.
Rat n_from_point4(const TripleParams& params, const Point& pt);

// The w-stage curve V^2 = U^3 + (x^2(2y^2+1) + y^2) U^2
//                        + x^2 y^2 (y^2+1)(x^2+1) U.
// Singular exactly when |x| = |y| (the torsion discriminant is (x^2-y^2)^2).
Curve w_curve(const Rat& x, const Rat& y);

// Integer model of w_curve under (U, V) -> (c^2 U, c^3 V) with
// c = den(x) * den(y), which always clears both coefficients.
struct ScaledCurve {
    Curve curve;
    Int scale; // c
};
ScaledCurve w_curve_integer(const Rat& x, const Rat& y);

// r = V / (y (x^2(y^2+1) + U)) on the rational w-curve; w = param_t(x, r).
// Throws pole_error when the denominator vanishes.
Rat r_from_point(const Rat& x, const Rat& y, const Point& pt);

struct IntRange {
    Int lo, hi;
};

struct SearchBounds {
    Int x_height_max;  // max(e, f)
    Int m_height_max;  // max(|g|, h)
    IntRange k_range;  // integer K window on the triple-stage curves
    IntRange u_range;  // integer U window on the w-stage integer models
};

enum class HitClass { full, near_miss5 };

struct SearchHit {
    TripleParams params;
    Point k_point;  // scanned triple-stage point (non-negative J)
    Point u_point;  // scanned w-stage point on the integer model
    Int u_scale;    // the c behind u_point
    std::vector<Rat> roots; // |x|,|y|,|z|,|w| sorted ascending
    std::vector<PairReport> pairs; // all six, indices into roots
    HitClass cls;
};

// Canonical dedup key: the sorted absolute roots in text form.
std::string hit_key(const SearchHit& hit);

// One deterministic work unit: everything reachable from a single
// (e, f, g, h). Hits are raw (deduplicated only within the unit).
std::vector<SearchHit> search_unit(const TripleParams& params, const SearchBounds& bounds);

// Deterministic unit order: lexicographic on (e+f, e, g+h, g); only
// positive g is enumerated (the curve is even in g and every back-map is
// odd, so negative g reproduces the same tuples).
std::vector<TripleParams> enumerate_units(const SearchBounds& bounds);

// Full in-process search with global dedup; emits hits in stream order.
void search(const SearchBounds& bounds, const std::function<void(const SearchHit&)>& emit);

} // namespace eulerian
