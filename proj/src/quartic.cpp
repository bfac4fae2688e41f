#include "eulerian/quartic.hpp"

namespace eulerian {

Rat eval(const Quartic& p, const Rat& t) {
    return (((p.a4 * t + p.a3) * t + p.a2) * t + p.a1) * t + p.a0;
}

Rat eval(const Quadratic& p, const Rat& t) {
    return (p.q2 * t + p.q1) * t + p.q0;
}

SquareCompletion complete_square_descend(const Quartic& q) {
    if (!is_square(q.a4))
        throw not_a_square(q.a4.str());
    const Rat alpha = sqrt_exact(q.a4); // positive root by convention
    const Rat two_alpha = Rat(2) * alpha;
    const Rat beta = q.a3 / two_alpha;
    const Rat gamma = (q.a2 - sq(beta)) / two_alpha;

    // Q(g) - (alpha g^2 + beta g + gamma)^2 = (a1 - 2 beta gamma) g + (a0 - gamma^2)
    const Rat linear = q.a1 - Rat(2) * beta * gamma;
    if (linear.is_zero())
        throw degenerate_descent("quartic is a square of a quadratic plus a constant");
    Rat root = (sq(gamma) - q.a0) / linear;
    return SquareCompletion{alpha, beta, gamma, std::move(root)};
}

Rat conic_param(const Quadratic& q, const Rat& f0, const Rat& e0, const Rat& g) {
    if (sq(e0) != eval(q, f0))
        throw bad_anchor("(" + f0.str() + ", " + e0.str() + ") is not on the conic");
    const Rat g2 = sq(g);
    if (g2 == q.q2)
        throw pole_error("slope " + g.str() + " meets the conic at infinity");
    return (g2 * f0 + q.q2 * f0 + q.q1 - Rat(2) * e0 * g) / (g2 - q.q2);
}

} // namespace eulerian
