#include "eulerian/triple_family.hpp"

#include <stdexcept>

namespace eulerian {

Curve curve_for_m(const Int& p, const Int& q) {
    if (sgn(p) == 0 || sgn(q) <= 0)
        throw std::invalid_argument("m = p/q needs p != 0 and q >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument("p and q must be coprime");

    const Int p2 = p * p, q2 = q * q;
    const Int p4 = p2 * p2, q4 = q2 * q2;
    const Int a = -2 * (p4 - 4 * p2 * q2 + 25 * q4);
    const Int b = p4 * p4 - 8 * p4 * p2 * q2 - 34 * p4 * q4 - 200 * p2 * q4 * q2 + 625 * q4 * q4;
    return Curve(Rat(a), Rat(b));
}

Rat n_from_point(const Int& p, const Int& q, const Point& pt) {
    if (pt.is_infinity() || pt.K().is_zero())
        throw two_torsion_error("n is undefined at K = 0");
    return pt.J() / (Rat(2 * p * q) * pt.K());
}

std::optional<SquareTuple> triple_from(const Int& p, const Int& q, const Point& pt) {
    const Rat n = n_from_point(p, q, pt);
    const Rat two(2);
    if (sq(n) == Rat(5))
        return std::nullopt; // parameterization pole (cannot occur for rational n, kept for symmetry)
    SquareTuple t({two, param_t(two, Rat(p, q)), param_t(two, n)});
    if (t.degenerate())
        return std::nullopt;
    return t;
}

std::vector<FamilyTriple> family(const Int& p, const Int& q, const Point& gen, int kmax) {
    const Curve c = curve_for_m(p, q);
    if (!on_curve(c, gen))
        throw not_on_curve("generator is not on the m = " + Rat(p, q).str() + " curve");
    if (kmax < 1)
        throw std::invalid_argument("kmax must be at least 1");

    std::vector<FamilyTriple> out;
    Point pt = gen;
    for (int k = 1; k <= kmax; ++k, pt = add(c, pt, gen)) {
        if (pt.is_infinity() || pt.K().is_zero() || pt.J().is_zero())
            continue; // torsion combination, leads to z = 0
        auto t = triple_from(p, q, pt);
        if (!t)
            continue;
        if (!is_eulerian(*t).ok())
            continue; // unreachable for curve points; kept as a guard
        out.push_back(FamilyTriple{k, pt, n_from_point(p, q, pt), std::move(*t)});
    }
    return out;
}

} // namespace eulerian
