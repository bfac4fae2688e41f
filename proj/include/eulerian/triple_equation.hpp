#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/quartic.hpp"
#include "eulerian/rational.hpp"

namespace eulerian {

// Fermat's "triple equation": given square constants s1, s2, s3, find a
// rational x with (si + 1) x + si a square for all three. Solved by the
// substitution (s1+1)x + s1 = (a1 + f x)^2, a conic parameterization for
// the second condition, and completing the square on the quartic the third
// condition leaves behind.
class TripleSystem {
  public:
    // Each si must be a nonzero perfect square; all distinct.
    TripleSystem(Rat s1, Rat s2, Rat s3);

    const Rat& s(int i) const { return s_[i]; }     // i in 0..2
    const Rat& a(int i) const { return a_[i]; }     // positive root of s_i
    const Rat& f0() const { return f0_; }           // (s1+1)/(2 a1), where x = 0

  private:
    std::array<Rat, 3> s_;
    std::array<Rat, 3> a_;
    Rat f0_;
};

// The nonzero root of (s1+1)x + s1 = (a1 + f x)^2:
// x = ((s1+1) - 2 a1 f) / f^2. Requires f != 0.
Rat x_from_f(const TripleSystem& sys, const Rat& f);

// Substitutes x_from_f into (si+1)x + si for i = 2, 3 and clears the
// denominator with the square (v1*vi)^2 f^2, where vi = den(ai). The results
// are integer-coefficient quadratics in f that must be perfect squares.
std::pair<Quadratic, Quadratic> residual_quadratics(const TripleSystem& sys);

struct TripleSolution {
    Rat x;
    std::array<Rat, 3> roots; // sqrt of (si+1)x + si, i = 0..2
    Rat g_star;               // root found by the quartic descent
    Rat f_star;               // conic parameter behind x
};

// Full descent pipeline. Throws degenerate_descent / pole_error when the
// algebra collapses, trivial_solution when it lands back on x = 0.
// The returned x is always re-verified against all three conditions.
TripleSolution solve(const TripleSystem& sys);

struct CheckReport {
    struct Item {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass)
                return false;
        return true;
    }
};

// Regression checks for the published curve data attached to this solver:
// the rank-2 curve behind the Diophantus system with its two generators and
// the g = -543/8 chain, and the point on the Fermat-case curve.
CheckReport verify_known_curve_points();

} // namespace eulerian
