#include "eulerian/triple_equation.hpp"

#include <stdexcept>

#include "eulerian/curve.hpp"

namespace eulerian {

TripleSystem::TripleSystem(Rat s1, Rat s2, Rat s3) : s_{std::move(s1), std::move(s2), std::move(s3)} {
    for (int i = 0; i < 3; ++i) {
        if (s_[i].is_zero())
            throw math_error("system constants must be nonzero");
        a_[i] = sqrt_exact(s_[i]); // throws not_a_square for non-squares
    }
    if (s_[0] == s_[1] || s_[0] == s_[2] || s_[1] == s_[2])
        throw math_error("system constants must be distinct");
    f0_ = (s_[0] + Rat(1)) / (Rat(2) * a_[0]);
}

Rat x_from_f(const TripleSystem& sys, const Rat& f) {
    if (f.is_zero())
        throw math_error("f = 0 has no finite x");
    return (sys.s(0) + Rat(1) - Rat(2) * sys.a(0) * f) / sq(f);
}

namespace {

// (si+1) * x_from_f(f) + si, times f^2 and the square (v1*vi)^2, expanded.
// With si = (ui/vi)^2 the coefficients are plain integers.
Quadratic residual(const TripleSystem& sys, int i) {
    const Rat scale(sys.a(0).den() * sys.a(i).den());
    const Rat sigma = sq(scale);
    return Quadratic(sys.s(i) * sigma,
                     Rat(-2) * sys.a(0) * (sys.s(i) + Rat(1)) * sigma,
                     (sys.s(0) + Rat(1)) * (sys.s(i) + Rat(1)) * sigma);
}

} // namespace

std::pair<Quadratic, Quadratic> residual_quadratics(const TripleSystem& sys) {
    return {residual(sys, 1), residual(sys, 2)};
}

TripleSolution solve(const TripleSystem& sys) {
    const auto [q1, q2] = residual_quadratics(sys);
    const Rat f0 = sys.f0();
    const Rat e0 = sqrt_exact(eval(q1, f0)); // the anchor value is (v1 v2 a2 f0)^2

    // Line of slope g through the anchor: f(g) = N(g) / D(g) with
    // N = f0 g^2 - 2 e0 g + (q2 f0 + q1), D = g^2 - q2. Substituting into
    // the second quadratic and clearing D^2 leaves a quartic in g; the
    // multiplier lambda^2 makes its coefficients integral.
    const Rat n2 = f0;
    const Rat n1 = Rat(-2) * e0;
    const Rat n0 = q1.q2 * f0 + q1.q1;
    Int lambda;
    mpz_lcm(lambda.get_mpz_t(), n2.den().get_mpz_t(), n1.den().get_mpz_t());
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), n0.den().get_mpz_t());
    const Rat lam(lambda);

    const Rat N2 = n2 * lam, N1 = n1 * lam, N0 = n0 * lam; // lambda * N, integer
    const Rat D2 = lam, D0 = -q1.q2 * lam;                 // lambda * D, integer

    // q2.q2 * N^2 + q2.q1 * N * D + q2.q0 * D^2, collected by degree.
    const Rat c4 = q2.q2 * N2 * N2 + q2.q1 * N2 * D2 + q2.q0 * D2 * D2;
    const Rat c3 = q2.q2 * Rat(2) * N2 * N1 + q2.q1 * N1 * D2;
    const Rat c2 = q2.q2 * (Rat(2) * N2 * N0 + N1 * N1) + q2.q1 * (N2 * D0 + N0 * D2) +
                   q2.q0 * Rat(2) * D2 * D0;
    const Rat c1 = q2.q2 * Rat(2) * N1 * N0 + q2.q1 * N1 * D0;
    const Rat c0 = q2.q2 * N0 * N0 + q2.q1 * N0 * D0 + q2.q0 * D0 * D0;
    const Quartic quart(c4, c3, c2, c1, c0);

    // The leading coefficient is lambda^2 * Q2(f0) = (lambda v1 v3 a3 f0)^2;
    // a non-square here means the pipeline itself is broken.
    if (!is_square(quart.a4))
        throw std::logic_error("descent quartic lost its square leading coefficient");

    const SquareCompletion desc = complete_square_descend(quart);
    const Rat f_star = conic_param(q1, f0, e0, desc.root);
    if (f_star.is_zero())
        throw math_error("descent landed on f = 0");
    if (f_star == f0)
        throw trivial_solution("descent reproduced the anchor (x = 0)");
    const Rat x = x_from_f(sys, f_star);
    if (x.is_zero())
        throw trivial_solution("descent produced x = 0");

    TripleSolution sol{x, {}, desc.root, f_star};
    for (int i = 0; i < 3; ++i) {
        const Rat value = (sys.s(i) + Rat(1)) * x + sys.s(i);
        if (!is_square(value))
            throw std::logic_error("solution failed verification at constraint " + std::to_string(i));
        sol.roots[i] = sqrt_exact(value);
    }
    return sol;
}

CheckReport verify_known_curve_points() {
    CheckReport rep;
    auto check = [&rep](std::string name, bool pass, std::string detail = "") {
        rep.items.push_back({std::move(name), pass, std::move(detail)});
    };

    // Rank-2 curve behind the Diophantus system, with its two generators.
    const Curve diow(Rat(20478), Rat(99801585));
    const Point g1 = Point::unchecked(Rat(-9984), Rat(-222768));
    const Point g2 = Point::unchecked(Rat(-8379), Rat(-114912));
    check("generator (-9984,-222768) on j^2=k^3+20478k^2+99801585k", on_curve(diow, g1));
    check("generator (-8379,-114912) on j^2=k^3+20478k^2+99801585k", on_curve(diow, g2));

    // The first generator's slope g = -543/8 chains to f = 269/147 and
    // x = -50176/72361 through the same conic used by solve().
    const TripleSystem dio(Rat(Int(25), Int(9)), Rat(Int(64), Int(9)), Rat(Int(196), Int(9)));
    const auto [q1, q2] = residual_quadratics(dio);
    const Rat e0 = sqrt_exact(eval(q1, dio.f0()));
    const Rat f = conic_param(q1, dio.f0(), e0, Rat(Int(-543), Int(8)));
    check("g=-543/8 gives f=269/147", f == Rat(Int(269), Int(147)), f.str());
    const Rat x = x_from_f(dio, f);
    check("f=269/147 gives x=-50176/72361", x == Rat(Int(-50176), Int(72361)), x.str());
    bool all_sq = true;
    for (int i = 0; i < 3; ++i)
        all_sq = all_sq && is_square((dio.s(i) + Rat(1)) * x + dio.s(i));
    check("x=-50176/72361 satisfies the system", all_sq);

    // Fermat-case curve: the printed u gives a square curve value.
    const Rat au(Int("10450883424805"));
    const Rat bu(Int("26734915668323655104674200"));
    const Rat u(Int("-9390695817653070336"), Int("2019241"));
    const Rat value = ((u + au) * u + bu) * u;
    check("u-point on v^2=u^3+10450883424805u^2+...u is square", is_square(value),
          is_square(value) ? sqrt_exact(value).str() : value.str());

    return rep;
}

} // namespace eulerian
