#pragma once

#include <stdexcept>
#include <string>

namespace eulerian {

// Base for "the mathematics said no" conditions. The CLI maps these to
// exit code 1, as opposed to malformed input (std::invalid_argument,
// exit code 2).
struct math_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct division_by_zero : math_error {
    division_by_zero() : math_error("division by zero") {}
};

struct not_a_square : math_error {
    explicit not_a_square(std::string val)
        : math_error("not a perfect square: " + val), value(std::move(val)) {}
    std::string value;
};

struct singular_curve : math_error {
    explicit singular_curve(const std::string& what) : math_error(what) {}
};

struct not_on_curve : math_error {
    explicit not_on_curve(const std::string& what) : math_error(what) {}
};

// Map through a two-torsion point (K = 0, or J = 0 where a slope is needed).
struct two_torsion_error : math_error {
    explicit two_torsion_error(const std::string& what) : math_error(what) {}
};

// A parameterization hit its pole (line parallel to asymptote, r^2 = x^2+1, ...).
struct pole_error : math_error {
    explicit pole_error(const std::string& what) : math_error(what) {}
};

// Completing the square left no linear term to solve.
struct degenerate_descent : math_error {
    explicit degenerate_descent(const std::string& what) : math_error(what) {}
};

// conic_param was given an anchor that is not on the conic.
struct bad_anchor : math_error {
    explicit bad_anchor(const std::string& what) : math_error(what) {}
};

// A pipeline produced x = 0 (the already-known trivial solution).
struct trivial_solution : math_error {
    explicit trivial_solution(const std::string& what) : math_error(what) {}
};

struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace eulerian
