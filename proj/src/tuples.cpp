#include "eulerian/tuples.hpp"

#include <stdexcept>

namespace eulerian {

Rat pair_val(const Rat& a, const Rat& b) { return a * b + a + b; }

std::vector<Rat> SquareTuple::squares() const {
    std::vector<Rat> s;
    s.reserve(roots.size());
    for (const Rat& r : roots)
        s.push_back(sq(r));
    return s;
}

bool SquareTuple::degenerate() const {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].is_zero())
            return true;
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (abs(roots[i]) == abs(roots[j]))
                return true;
    }
    return false;
}

namespace {

PairReport make_report(std::size_t i, std::size_t j, Rat value) {
    PairReport rep{i, j, std::move(value), false, std::nullopt};
    rep.square = is_square(rep.value);
    if (rep.square)
        rep.root = sqrt_exact(rep.value);
    return rep;
}

} // namespace

VerifyResult is_eulerian(const SquareTuple& t) {
    if (t.size() < 2)
        throw std::invalid_argument("tuple needs at least two members");
    const std::vector<Rat> s = t.squares();
    VerifyResult res{TupleStatus::eulerian, {}};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            res.pairs.push_back(make_report(i, j, pair_val(s[i], s[j])));
            if (!res.pairs.back().square)
                res.status = TupleStatus::not_eulerian;
        }
    if (t.degenerate())
        res.status = TupleStatus::degenerate;
    return res;
}

VerifyResult product_plus_third(const SquareTuple& t) {
    if (t.size() != 3)
        throw std::invalid_argument("product_plus_third needs exactly three members");
    const std::vector<Rat> s = t.squares();
    VerifyResult res{TupleStatus::eulerian, {}};
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
        if (i > j)
            std::swap(i, j);
        res.pairs.push_back(make_report(i, j, s[i] * s[j] + s[k]));
        if (!res.pairs.back().square)
            res.status = TupleStatus::not_eulerian;
    }
    if (t.degenerate())
        res.status = TupleStatus::degenerate;
    return res;
}

Rat param_t(const Rat& x, const Rat& r) {
    const Rat denom = sq(x) + Rat(1) - sq(r);
    if (denom.is_zero())
        throw pole_error("r^2 = x^2 + 1 at r = " + r.str());
    return Rat(2) * x * r / denom;
}

} // namespace eulerian
