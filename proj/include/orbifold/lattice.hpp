#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "orbifold/codes.hpp"
#include "orbifold/rational.hpp"

namespace orbifold {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;

// a + b*xi with xi^2 = -1 - xi.
struct EisensteinInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend EisensteinInt operator+(EisensteinInt x, EisensteinInt y) { return {x.a + y.a, x.b + y.b}; }
    friend EisensteinInt operator-(EisensteinInt x, EisensteinInt y) { return {x.a - y.a, x.b - y.b}; }
    friend EisensteinInt operator*(EisensteinInt x, EisensteinInt y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend bool operator==(EisensteinInt, EisensteinInt) = default;
    EisensteinInt conj() const { return {a - b, -b}; }
    std::int64_t norm() const { return a * a - a * b + b * b; }
};

// Reduction Z[xi] -> Z[xi]/2Z[xi] = F4 with xi -> w.
Elem reduce_mod2(EisensteinInt x);
// The lift used for K12 generators: 0, 1, xi, 1 + xi.
EisensteinInt lift_f4(Elem e);

// Lattice given by integer basis rows in an ambient frame whose inner product
// is <x, y> = x * form * y^T / denom.
//
// Two frames are used: the sqrt(2)A2 frame (coordinates in beta1, beta2 per
// copy, scaled by 6, form blocks [[4,-2],[-2,4]], denom 36) and the Eisenstein
// frame (coordinates a, b of a + b*xi, form blocks [[2,-1],[-1,2]], denom 2,
// i.e. <x, y> = Re sum x_i conj(y_i)).
struct LatticeBasis {
    IntMatrix vectors;
    IntMatrix form;
    std::int64_t denom = 1;

    int rank() const { return static_cast<int>(vectors.rows()); }
    int ambient_dim() const { return static_cast<int>(vectors.cols()); }
    Rational inner(const IntVector& x, const IntVector& y) const;
    Rational norm(const IntVector& x) const { return inner(x, x); }
    Rational gram(int i, int j) const { return inner(vectors.row(i), vectors.row(j)); }
    Rational det() const;
    // Exact membership test; the basis is kept in Hermite normal form.
    bool contains(const IntVector& x) const;
};

IntMatrix sqrt2a2_form(int length);
IntMatrix eisenstein_form(int length);

// Hermite normal form of the row lattice generated by `gens` (full column rank required).
IntMatrix hermite_normal_form(IntMatrix gens);
// Exact determinant via fraction-free elimination.
Rational determinant(const IntMatrix& m);

// Representative of L^{(i,j)} in one copy, in the scaled sqrt(2)A2 frame.
IntVector coset_vector(Elem i, Elem j);
// Concatenation over the l copies.
IntVector coset_vector(const Word& lambda, const Word& delta);

// L_{C x D}; C over F4, D over F3, both self-orthogonal and of equal length.
LatticeBasis build_lattice(const LinearCode& c, const LinearCode& d);
// Same construction without the self-orthogonality requirement (used for duals).
LatticeBasis code_lattice(const LinearCode& c, const LinearCode& d);

bool is_even(const LatticeBasis& b);

struct DualReport {
    bool pairs_integral = false;
    Rational index;            // [L_{C^perp x D^perp} : L_{C x D}]
    Rational gram_det;         // det gram(L_{C x D})
    std::uint64_t quotient = 0;  // |C^perp/C| * |D^perp/D|
    bool ok() const { return pairs_integral && index == gram_det && Rational(static_cast<std::int64_t>(quotient)) == index; }
};
DualReport verify_dual(const LinearCode& c, const LinearCode& d);

// Coxeter-Todd lattice in the Eisenstein frame.
LatticeBasis k12();

class NotFound : public std::runtime_error {
public:
    explicit NotFound(const Rational& bound) : std::runtime_error("no vector within bound " + bound.str()), bound_(bound) {}
    const Rational& bound() const { return bound_; }

private:
    Rational bound_;
};

// Calls `visit` for every vector shift + v (v in the lattice) with norm <= bound.
void enumerate_coset(const LatticeBasis& b, const IntVector& shift, const Rational& bound,
                     const std::function<void(const IntVector&, const Rational&)>& visit);
// Minimal norm over shift + lattice; throws NotFound if nothing lies within bound.
Rational min_norm_coset(const LatticeBasis& b, const IntVector& shift, const Rational& bound);
// Retries min_norm_coset, doubling the bound on NotFound.
Rational min_norm_coset_auto(const LatticeBasis& b, const IntVector& shift, Rational bound = Rational(4));
// Number of coset vectors of each norm up to bound.
std::map<Rational, std::uint64_t> norm_counts(const LatticeBasis& b, const IntVector& shift, const Rational& bound);

}  // namespace orbifold
