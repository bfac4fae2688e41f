#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eulerian/rational.hpp"

namespace eulerian {

// The defining pair identity: a*b + a + b, equal to (a+1)(b+1) - 1.
Rat pair_val(const Rat& a, const Rat& b);

// Candidate Eulerian tuple {t1^2, ..., tm^2}, stored by its roots ti.
// A tuple is degenerate when some root is zero or two roots agree in
// absolute value; verifiers flag that instead of treating it as a plain
// failure, because the search must discard such tuples, not count them.
struct SquareTuple {
    std::vector<Rat> roots;

    explicit SquareTuple(std::vector<Rat> r) : roots(std::move(r)) {}

    std::size_t size() const { return roots.size(); }
    std::vector<Rat> squares() const;
    bool degenerate() const;
};

struct PairReport {
    std::size_t i, j;
    Rat value;
    bool square;
    std::optional<Rat> root; // present iff square
};

enum class TupleStatus { eulerian, not_eulerian, degenerate };

struct VerifyResult {
    TupleStatus status;
    std::vector<PairReport> pairs;

    bool ok() const { return status == TupleStatus::eulerian; }
};

// All m(m-1)/2 pair reports for pair_val(ti^2, tj^2); status eulerian iff
// every value is a square (degenerate tuples are reported as degenerate,
// with the pair table still filled in). Requires m >= 2.
VerifyResult is_eulerian(const SquareTuple& t);

// Diophantus' extra property for triples: ti^2*tj^2 + tk^2 a square for all
// three splits. Reports use (i, j) for the product pair. Requires m = 3.
VerifyResult product_plus_third(const SquareTuple& t);

// t = 2xr/(x^2+1-r^2): the rational parameterization of
// (x^2+1) t^2 + x^2 = square, with root ((x^2+1+r^2) x / (x^2+1-r^2)).
// Throws pole_error when r^2 = x^2+1.
Rat param_t(const Rat& x, const Rat& r);

} // namespace eulerian
