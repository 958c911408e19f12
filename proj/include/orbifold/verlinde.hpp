#pragma once

#include <array>
#include <string>

#include "orbifold/rational.hpp"

namespace orbifold {

// a + b*xi in Q(xi), xi a primitive cube root of unity (xi^2 = -1 - xi).
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(Rational a, Rational b = Rational(0)) : a_(a), b_(b) {}
    static CycloNum xi_pow(int n);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_rational() const { return b_ == Rational(0); }
    // xi -> xi^2
    CycloNum conj() const { return {a_ - b_, -b_}; }
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    CycloNum inverse() const;
    std::string str() const;

    friend CycloNum operator+(const CycloNum& x, const CycloNum& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend CycloNum operator-(const CycloNum& x, const CycloNum& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend CycloNum operator-(const CycloNum& x) { return {-x.a_, -x.b_}; }
    friend CycloNum operator*(const CycloNum& x, const CycloNum& y) {
        return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_};
    }
    friend CycloNum operator/(const CycloNum& x, const CycloNum& y) { return x * y.inverse(); }
    friend bool operator==(const CycloNum&, const CycloNum&) = default;

private:
    Rational a_{0};
    Rational b_{0};
};

struct SParameters {
    Rational s00;
    Rational lambda1;
    CycloNum mu1cubed;
    CycloNum mu2cubed;
};

// Requires l = 0 mod 4 and 2d <= l.
SParameters s_parameters(int length, int dim);

struct VerlindeResult {
    int length = 0;
    int dim = 0;
    SParameters s;
    std::array<std::int64_t, 3> n{};  // N6, N7, N8
};

// Evaluates N^{6,7,8}_{3,3} from the twisted S-matrix rows.
VerlindeResult verlinde_twisted(int length, int dim);
// Agreement with the twisted fusion coefficients (eps-indexed) and the solved multiset.
bool crosscheck_case_v(int length, int dim);

}  // namespace orbifold
