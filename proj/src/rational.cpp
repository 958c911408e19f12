#include "orbifold/rational.hpp"

#include <limits>
#include <ostream>

#include "orbifold/errors.hpp"

namespace orbifold {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw GuardError("rational overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_i128(n, d); }

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw PreconditionError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational Rational::operator-() const { return from_i128(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_i128(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    // Cross-reduce first so that products of reduced fractions stay small.
    __int128 g1 = gcd128(num_, o.den_);
    __int128 g2 = gcd128(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    __int128 n = (num_ / g1) * (o.num_ / g2);
    __int128 d = (den_ / g2) * (o.den_ / g1);
    return *this = from_i128(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw PreconditionError("division by zero");
    return *this *= from_i128(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
}

Rational Rational::frac() const {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    return Rational(r, den_);
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw ParseError("rational:" + text);
            return Rational(n);
        }
        std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
        std::int64_t n = std::stoll(ns, &used);
        if (used != ns.size()) throw ParseError("rational:" + text);
        std::int64_t d = std::stoll(ds, &used);
        if (used != ds.size() || d == 0) throw ParseError("rational:" + text);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw ParseError("rational:" + text);
    }
}

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) throw PreconditionError("negative exponent");
    __int128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min())
            throw GuardError("integer power overflow");
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace orbifold
