#include "orbifold/lattice.hpp"

#include <cmath>
#include <numeric>

#include "orbifold/errors.hpp"

namespace orbifold {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw GuardError("integer overflow in lattice arithmetic");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw GuardError("integer overflow in lattice arithmetic");
    return r;
}

void row_axpy(IntMatrix& m, Eigen::Index dst, std::int64_t q, Eigen::Index src) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

IntMatrix block_form(int length, std::int64_t diag, std::int64_t off) {
    IntMatrix f = IntMatrix::Zero(2 * length, 2 * length);
    for (int k = 0; k < length; ++k) {
        f(2 * k, 2 * k) = diag;
        f(2 * k + 1, 2 * k + 1) = diag;
        f(2 * k, 2 * k + 1) = off;
        f(2 * k + 1, 2 * k) = off;
    }
    return f;
}

}  // namespace

Elem reduce_mod2(EisensteinInt x) {
    auto odd = [](std::int64_t v) { return (v % 2 + 2) % 2; };
    return static_cast<Elem>(odd(x.a) | (odd(x.b) << 1));
}

EisensteinInt lift_f4(Elem e) {
    switch (e) {
        case 0: return {0, 0};
        case 1: return {1, 0};
        case kOmega: return {0, 1};
        default: return {1, 1};
    }
}

Rational LatticeBasis::inner(const IntVector& x, const IntVector& y) const {
    __int128 s = 0;
    for (Eigen::Index i = 0; i < form.rows(); ++i) {
        if (x(i) == 0) continue;
        for (Eigen::Index j = 0; j < form.cols(); ++j)
            if (form(i, j) != 0) s += static_cast<__int128>(x(i)) * form(i, j) * y(j);
    }
    return Rational::from_i128(s, denom);
}

Rational LatticeBasis::det() const {
    const int n = rank();
    // Gram over a common denominator keeps the determinant small.
    IntMatrix num(n, n);
    std::int64_t den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = std::lcm(den, gram(i, j).den());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational g = gram(i, j) * Rational(den);
            num(i, j) = g.num();
        }
    return determinant(num) / Rational(ipow(den, n));
}

bool LatticeBasis::contains(const IntVector& x) const {
    IntVector r = x;
    for (int i = 0; i < rank(); ++i) {
        std::int64_t p = vectors(i, i);
        if (r(i) % p != 0) return false;
        std::int64_t q = r(i) / p;
        for (int c = 0; c < ambient_dim(); ++c) r(c) = checked_sub(r(c), checked_mul(q, vectors(i, c)));
    }
    return r.isZero();
}

IntMatrix sqrt2a2_form(int length) { return block_form(length, 4, -2); }
IntMatrix eisenstein_form(int length) { return block_form(length, 2, -1); }

IntMatrix hermite_normal_form(IntMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index col = 0; col < cols; ++col) {
        if (r == rows) throw PreconditionError("generators do not have full rank");
        // Euclid on this column among the remaining rows.
        while (true) {
            Eigen::Index best = -1;
            for (Eigen::Index i = r; i < rows; ++i)
                if (m(i, col) != 0 && (best < 0 || std::llabs(m(i, col)) < std::llabs(m(best, col)))) best = i;
            if (best < 0) throw PreconditionError("generators do not have full rank");
            m.row(r).swap(m.row(best));
            bool clean = true;
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (m(i, col) == 0) continue;
                row_axpy(m, i, m(i, col) / m(r, col), r);
                if (m(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(r, col) < 0) m.row(r) = -m.row(r);
        for (Eigen::Index i = 0; i < r; ++i) row_axpy(m, i, floor_div(m(i, col), m(r, col)), r);
        ++r;
    }
    return m.topRows(cols);
}

Rational determinant(const IntMatrix& in) {
    const Eigen::Index n = in.rows();
    if (n != in.cols()) throw PreconditionError("determinant of a non-square matrix");
    if (n == 0) return Rational(1);
    std::vector<__int128> a(static_cast<std::size_t>(n * n));
    auto at = [&](Eigen::Index i, Eigen::Index j) -> __int128& { return a[static_cast<std::size_t>(i * n + j)]; };
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) at(i, j) = in(i, j);
    const __int128 limit = static_cast<__int128>(1) << 100;
    int sign = 1;
    __int128 prev = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return Rational(0);
            for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) {
                __int128 v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                at(i, j) = v / prev;
                if (at(i, j) > limit || at(i, j) < -limit) throw GuardError("determinant overflow");
            }
        prev = at(k, k);
    }
    return Rational::from_i128(sign * at(n - 1, n - 1), 1);
}

IntVector coset_vector(Elem i, Elem j) {
    static const std::int64_t ci[4][2] = {{0, 0}, {0, 3}, {-3, -3}, {3, 0}};
    static const std::int64_t cj[3][2] = {{0, 0}, {-2, 2}, {2, -2}};
    IntVector v(2);
    v << ci[i][0] + cj[j][0], ci[i][1] + cj[j][1];
    return v;
}

IntVector coset_vector(const Word& lambda, const Word& delta) {
    if (lambda.size() != delta.size()) throw PreconditionError("length mismatch");
    IntVector v(2 * lambda.size());
    for (int k = 0; k < lambda.size(); ++k) v.segment(2 * k, 2) = coset_vector(lambda[k], delta[k]);
    return v;
}

LatticeBasis code_lattice(const LinearCode& c, const LinearCode& d) {
    if (c.field() != Field::F4 || d.field() != Field::F3) throw PreconditionError("expected an F4 code and an F3 code");
    if (c.length() != d.length()) throw PreconditionError("codes have different lengths");
    const int n = c.length();
    std::vector<IntVector> gens;
    for (int k = 0; k < 2 * n; ++k) {
        IntVector e = IntVector::Zero(2 * n);
        e(k) = 6;
        gens.push_back(e);
    }
    const Word zero3(n), zero4(n);
    // As an additive group C is spanned by g and w*g for each F4 generator g.
    for (const Word& g : c.gens()) {
        gens.push_back(coset_vector(g, zero3));
        gens.push_back(coset_vector(scale(Field::F4, kOmega, g), zero3));
    }
    for (const Word& g : d.gens()) gens.push_back(coset_vector(zero4, g));
    IntMatrix m(static_cast<Eigen::Index>(gens.size()), 2 * n);
    for (std::size_t i = 0; i < gens.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = gens[i];
    LatticeBasis b;
    b.vectors = hermite_normal_form(m);
    b.form = sqrt2a2_form(n);
    b.denom = 36;
    return b;
}

LatticeBasis build_lattice(const LinearCode& c, const LinearCode& d) {
    if (c.field() != Field::F4 || d.field() != Field::F3) throw PreconditionError("expected an F4 code and an F3 code");
    if (!is_self_orthogonal(c) || !is_self_orthogonal(d)) throw PreconditionError("codes must be self-orthogonal");
    return code_lattice(c, d);
}

bool is_even(const LatticeBasis& b) {
    for (int i = 0; i < b.rank(); ++i) {
        Rational n = b.gram(i, i);
        if (!n.is_integer() || n.num() % 2 != 0) return false;
        for (int j = i + 1; j < b.rank(); ++j)
            if (!b.gram(i, j).is_integer()) return false;
    }
    return true;
}

DualReport verify_dual(const LinearCode& c, const LinearCode& d) {
    LatticeBasis l = build_lattice(c, d);
    LatticeBasis ld = code_lattice(dual_code(c), dual_code(d));
    DualReport r;
    r.pairs_integral = true;
    for (int i = 0; i < ld.rank(); ++i)
        for (int j = 0; j < l.rank(); ++j)
            if (!l.inner(ld.vectors.row(i), l.vectors.row(j)).is_integer()) r.pairs_integral = false;
    Rational dl = determinant(l.vectors), dd = determinant(ld.vectors);
    r.index = dl / dd;
    if (r.index < Rational(0)) r.index = -r.index;
    r.gram_det = l.det();
    r.quotient = quotient_size(c) * quotient_size(d);
    return r;
}

LatticeBasis k12() {
    const LinearCode h = builtin("hexacode");
    const int n = h.length();
    std::vector<IntVector> gens;
    for (int k = 0; k < 2 * n; ++k) {
        IntVector e = IntVector::Zero(2 * n);
        e(k) = 2;
        gens.push_back(e);
    }
    auto lift = [&](const Word& w) {
        IntVector v(2 * n);
        for (int k = 0; k < n; ++k) {
            EisensteinInt x = lift_f4(w[k]);
            v(2 * k) = x.a;
            v(2 * k + 1) = x.b;
        }
        return v;
    };
    for (const Word& g : h.gens()) {
        gens.push_back(lift(g));
        gens.push_back(lift(scale(Field::F4, kOmega, g)));
    }
    IntMatrix m(static_cast<Eigen::Index>(gens.size()), 2 * n);
    for (std::size_t i = 0; i < gens.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = gens[i];
    LatticeBasis b;
    b.vectors = hermite_normal_form(m);
    b.form = eisenstein_form(n);
    b.denom = 2;
    return b;
}

void enumerate_coset(const LatticeBasis& b, const IntVector& shift, const Rational& bound,
                     const std::function<void(const IntVector&, const Rational&)>& visit) {
    const int n = b.rank();
    if (n > 12) throw GuardError("enumeration rank exceeds 12");
    if (n != b.ambient_dim()) throw PreconditionError("enumeration needs a full-rank basis");
    const Eigen::MatrixXd basis = b.vectors.cast<double>();
    const Eigen::MatrixXd gram = basis * b.form.cast<double>() * basis.transpose() / static_cast<double>(b.denom);
    // Shift in basis coordinates: shift = c * basis.
    const Eigen::VectorXd c = basis.transpose().fullPivLu().solve(shift.cast<double>().transpose());
    const Eigen::MatrixXd r = gram.llt().matrixU();
    Eigen::VectorXd qd(n);
    Eigen::MatrixXd qo = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        qd(i) = r(i, i) * r(i, i);
        for (int j = i + 1; j < n; ++j) qo(i, j) = r(i, j) / r(i, i);
    }
    // Floating point only prunes the search; every candidate is re-measured exactly.
    const double limit = static_cast<double>(bound.num()) / static_cast<double>(bound.den());
    const double slack = 1e-7 * (1.0 + limit);
    Eigen::VectorXd y(n);
    std::vector<std::int64_t> x(static_cast<std::size_t>(n));
    std::function<void(int, double)> rec = [&](int i, double rem) {
        double t = c(i);
        for (int j = i + 1; j < n; ++j) t += qo(i, j) * y(j);
        double radius = std::sqrt(std::max(0.0, (rem + slack) / qd(i)));
        auto lo = static_cast<std::int64_t>(std::ceil(-t - radius - 1e-9));
        auto hi = static_cast<std::int64_t>(std::floor(-t + radius + 1e-9));
        for (std::int64_t xi = lo; xi <= hi; ++xi) {
            double u = static_cast<double>(xi) + t;
            double used = qd(i) * u * u;
            if (used > rem + slack) continue;
            x[static_cast<std::size_t>(i)] = xi;
            y(i) = static_cast<double>(xi) + c(i);
            if (i == 0) {
                IntVector v = shift;
                for (int k = 0; k < n; ++k)
                    if (x[static_cast<std::size_t>(k)] != 0)
                        for (int col = 0; col < n; ++col)
                            v(col) += checked_mul(x[static_cast<std::size_t>(k)], b.vectors(k, col));
                Rational nv = b.norm(v);
                if (nv <= bound) visit(v, nv);
            } else {
                rec(i - 1, rem - used);
            }
        }
    };
    rec(n - 1, limit);
}

Rational min_norm_coset(const LatticeBasis& b, const IntVector& shift, const Rational& bound) {
    bool found = false;
    Rational best;
    enumerate_coset(b, shift, bound, [&](const IntVector&, const Rational& nv) {
        if (!found || nv < best) best = nv;
        found = true;
    });
    if (!found) throw NotFound(bound);
    return best;
}

Rational min_norm_coset_auto(const LatticeBasis& b, const IntVector& shift, Rational bound) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            return min_norm_coset(b, shift, bound);
        } catch (const NotFound&) {
            bound *= Rational(2);
        }
    }
    throw GuardError("min_norm_coset retry limit reached");
}

std::map<Rational, std::uint64_t> norm_counts(const LatticeBasis& b, const IntVector& shift, const Rational& bound) {
    std::map<Rational, std::uint64_t> counts;
    enumerate_coset(b, shift, bound, [&](const IntVector&, const Rational& nv) { ++counts[nv]; });
    return counts;
}

}  // namespace orbifold
