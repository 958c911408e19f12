#include "orbifold/verlinde.hpp"

#include <algorithm>
#include <functional>

#include "orbifold/errors.hpp"
#include "orbifold/fusion.hpp"

namespace orbifold {

CycloNum CycloNum::xi_pow(int n) {
    switch (((n % 3) + 3) % 3) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        default: return {Rational(-1), Rational(-1)};
    }
}

CycloNum CycloNum::inverse() const {
    const Rational n = norm();
    if (n == Rational(0)) throw std::domain_error("CycloNum: division by zero");
    const CycloNum c = conj();
    return {c.a_ / n, c.b_ / n};
}

std::string CycloNum::str() const { return a_.str() + " + " + b_.str() + "*xi"; }

SParameters s_parameters(int length, int dim) {
    if (length <= 0 || length % 4 != 0) throw PreconditionError("l must be a positive multiple of 4");
    if (dim < 0 || 2 * dim > length) throw PreconditionError("need 0 <= 2d <= l");
    SParameters s;
    // S00^2 * 9 |C^perp/C| = 1 with |C^perp/C| = 4^{l-2d}.
    s.s00 = Rational(1, 3 * ipow(2, length - 2 * dim));
    s.lambda1 = Rational(1);
    s.mu1cubed = CycloNum::xi_pow(length);
    s.mu2cubed = CycloNum::xi_pow(2 * length);
    return s;
}

VerlindeResult verlinde_twisted(int length, int dim) {
    VerlindeResult r;
    r.length = length;
    r.dim = dim;
    r.s = s_parameters(length, dim);
    const CycloNum third(Rational(1, 3));
    const CycloNum lam = third * CycloNum(r.s.lambda1);
    for (int k = 0; k < 3; ++k) {
        // Three vacuum-like columns contribute 3 (lambda1/3)^3 / S00; the six
        // twisted columns contribute 3 ((xi^{2k} mu1/3)^3 + (xi^k mu2/3)^3) / (lambda1/3),
        // only cubes of mu entering.
        const CycloNum mu1 = CycloNum::xi_pow(2 * k) * r.s.mu1cubed;
        const CycloNum mu2 = CycloNum::xi_pow(k) * r.s.mu2cubed;
        const CycloNum cube27(Rational(1, 27));
        const CycloNum value = CycloNum(Rational(3)) * lam * lam * lam / CycloNum(r.s.s00) +
                               CycloNum(Rational(3)) * cube27 * (mu1 + mu2) / lam;
        if (!value.is_rational() || !value.a().is_integer() || value.a() < Rational(0))
            throw std::logic_error("Verlinde coefficient not a nonnegative integer: " + value.str());
        r.n[static_cast<std::size_t>(k)] = value.a().num();
    }
    return r;
}

bool crosscheck_case_v(int length, int dim) {
    const VerlindeResult v = verlinde_twisted(length, dim);
    const auto coeff = twisted_coefficients(length, dim);
    for (std::size_t k = 0; k < 3; ++k)
        if (static_cast<std::uint64_t>(v.n[k]) != coeff[k]) return false;
    std::array<std::uint64_t, 3> sorted{};
    for (std::size_t k = 0; k < 3; ++k) sorted[k] = static_cast<std::uint64_t>(v.n[k]);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return sorted == solve_twisted_system(length, dim);
}

}  // namespace orbifold
