#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "eulerian/errors.hpp"

namespace eulerian {

// Arbitrary-precision signed integer. GMP carries all big arithmetic here;
// no floating point exists anywhere in the numeric core.
using Int = mpz_class;

// Exact rational scalar, always in canonical form: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1. Every rational quantity in the library is a Rat.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    explicit Rat(const Int& n) : v_(n) {}
    Rat(const Int& n, const Int& d);
    Rat(long n, long d) : Rat(Int(n), Int(d)) {}

    // Parses "num", "num/den", with optional leading sign and no whitespace.
    static Rat parse(std::string_view text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_), raw_tag{}); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_), raw_tag{}); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_), raw_tag{}); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_), raw_tag{}); }
    Rat operator/(const Rat& o) const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rat& o) const {
        int c = cmp(v_, o.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    // "num/den", den omitted when 1. This is the canonical text form shared
    // by the CLI and the JSONL outputs.
    std::string str() const;

  private:
    struct raw_tag {};
    Rat(mpq_class v, raw_tag) : v_(std::move(v)) {} // already canonical
    mpq_class v_;
};

inline Rat abs(const Rat& q) { return q.is_negative() ? -q : q; }
inline Rat sq(const Rat& q) { return q * q; }

std::string to_string(const Rat& q);
std::ostream& operator<<(std::ostream& os, const Rat& q);

// Largest r with r^2 <= n. Throws math_error for n < 0.
Int isqrt_floor(const Int& n);

bool is_square(const Int& n);

// A rational in canonical form is a square iff num and den both are.
bool is_square(const Rat& q);

// Non-negative exact root; throws not_a_square (carrying q) otherwise.
Rat sqrt_exact(const Rat& q);

} // namespace eulerian
