#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace orbifold {

// Exact rational over int64 with a positive, reduced denominator.
// Intermediate products use 128-bit arithmetic; results that do not fit
// in 64 bits raise GuardError instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    static Rational from_i128(__int128 n, __int128 d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Representative of *this + Z in [0, 1).
    Rational frac() const;
    // Always "p/q", including q = 1.
    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

// Integer power with overflow guard.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace orbifold
