#pragma once

#include "eulerian/rational.hpp"

namespace eulerian {

// Degree-4 polynomial with rational coefficients, degree-descending.
struct Quartic {
    Rat a4, a3, a2, a1, a0;

    Quartic(Rat c4, Rat c3, Rat c2, Rat c1, Rat c0)
        : a4(std::move(c4)), a3(std::move(c3)), a2(std::move(c2)),
          a1(std::move(c1)), a0(std::move(c0)) {
        if (a4.is_zero())
            throw std::invalid_argument("quartic leading coefficient is zero");
    }
};

struct Quadratic {
    Rat q2, q1, q0;

    Quadratic(Rat c2, Rat c1, Rat c0)
        : q2(std::move(c2)), q1(std::move(c1)), q0(std::move(c0)) {
        if (q2.is_zero())
            throw std::invalid_argument("quadratic leading coefficient is zero");
    }

    bool operator==(const Quadratic& o) const {
        return q2 == o.q2 && q1 == o.q1 && q0 == o.q0;
    }
};

Rat eval(const Quartic& p, const Rat& t);
Rat eval(const Quadratic& p, const Rat& t);

// Result of completing the square on a quartic with square leading
// coefficient: Q(g) - (alpha g^2 + beta g + gamma)^2 is linear, and root
// is its zero, so Q(root) is a perfect square.
struct SquareCompletion {
    Rat alpha, beta, gamma;
    Rat root;
};

// Requires is_square(a4). Throws not_a_square if a4 is not a square, and
// degenerate_descent when the residual has no linear term (Q is a square
// of a quadratic plus a constant).
SquareCompletion complete_square_descend(const Quartic& q);

// Second intersection of the slope-g line through the anchor (f0, e0) with
// the conic e^2 = Q(f). Requires e0^2 = Q(f0) exactly (bad_anchor) and
// g^2 != q2 (pole_error). The returned f satisfies Q(f) = (e0 + g(f-f0))^2.
Rat conic_param(const Quadratic& q, const Rat& f0, const Rat& e0, const Rat& g);

} // namespace eulerian
