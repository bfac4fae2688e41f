#include "eulerian/rational.hpp"

#include <cctype>
#include <ostream>

namespace eulerian {

Rat::Rat(const Int& n, const Int& d) {
    if (sgn(d) == 0)
        throw division_by_zero();
    v_ = mpq_class(n, d);
    v_.canonicalize(); // reduces and moves the sign into the numerator
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero())
        throw division_by_zero();
    return Rat(mpq_class(v_ / o.v_), raw_tag{});
}

Rat Rat::parse(std::string_view text) {
    const std::string_view full = text;
    auto fail = [&] { throw parse_error("malformed rational: \"" + std::string(full) + "\""); };

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto digits = [&](std::string_view s) {
        if (s.empty())
            fail();
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail();
    };

    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    digits(num);
    digits(den);

    Int n(std::string(num), 10), d(std::string(den), 10);
    if (sgn(d) == 0)
        fail();
    if (negative)
        n = -n;
    return Rat(n, d);
}

std::string Rat::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string to_string(const Rat& q) { return q.str(); }

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

Int isqrt_floor(const Int& n) {
    if (sgn(n) < 0)
        throw math_error("isqrt_floor of negative " + n.get_str());
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    // mpz_perfect_square_p is exact: quadratic-residue filters, then a
    // root-and-resquare check. No false positives or negatives.
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& q) {
    return !q.is_negative() && is_square(q.num()) && is_square(q.den());
}

Rat sqrt_exact(const Rat& q) {
    if (q.is_negative())
        throw not_a_square(q.str());
    Int n = q.num(), d = q.den();
    Int rn = isqrt_floor(n), rd = isqrt_floor(d);
    if (rn * rn != n || rd * rd != d)
        throw not_a_square(q.str());
    return Rat(rn, rd);
}

} // namespace eulerian
