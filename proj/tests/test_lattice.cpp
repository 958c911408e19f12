#include <random>

#include "doctest.h"
#include "orbifold/errors.hpp"
#include "orbifold/lattice.hpp"

using namespace orbifold;

namespace {

struct Pair {
    const char* name;
    LinearCode c;
    LinearCode d;
};

std::vector<Pair> test_pairs() {
    return {
        {"trivial l=1", builtin("trivial:F4:1"), builtin("trivial:F3:1")},
        {"trivial l=3", builtin("trivial:F4:3"), builtin("trivial:F3:3")},
        {"hexacode", builtin("hexacode"), builtin("trivial:F3:6")},
        {"B", builtin("B"), builtin("trivial:F3:2")},
        {"BxB tetracode", direct_sum(builtin("B"), builtin("B")), builtin("tetracode")},
        {"B+0 x (111)", direct_sum(builtin("B"), builtin("trivial:F4:1")), LinearCode(Field::F3, 3, {Word::from({1, 1, 1})})},
    };
}

// Counts lattice vectors by norm over a coefficient box; independent of the pruning search.
std::map<Rational, std::uint64_t> box_counts(const LatticeBasis& b, const IntVector& shift, int box, const Rational& bound) {
    std::map<Rational, std::uint64_t> out;
    const int n = b.rank();
    std::vector<int> x(static_cast<std::size_t>(n), -box);
    while (true) {
        IntVector v = shift;
        for (int k = 0; k < n; ++k) v += x[static_cast<std::size_t>(k)] * b.vectors.row(k);
        Rational nv = b.norm(v);
        if (nv <= bound) ++out[nv];
        int k = 0;
        while (k < n && x[static_cast<std::size_t>(k)] == box) x[static_cast<std::size_t>(k++)] = -box;
        if (k == n) break;
        ++x[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace

TEST_CASE("Eisenstein integers") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> u(-9, 9);
    for (int t = 0; t < 500; ++t) {
        EisensteinInt x{u(rng), u(rng)}, y{u(rng), u(rng)}, z{u(rng), u(rng)};
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(x.conj().conj() == x);
        CHECK((x * x.conj()).b == 0);
        CHECK((x * x.conj()).a == x.norm());
        CHECK(x.norm() >= 0);
        CHECK((x.norm() == 0) == (x == EisensteinInt{0, 0}));
        // Reduction mod 2 is a ring map onto F4 with kernel 2Z[xi].
        CHECK(reduce_mod2(x + y) == add(Field::F4, reduce_mod2(x), reduce_mod2(y)));
        CHECK(reduce_mod2(x * y) == mul(Field::F4, reduce_mod2(x), reduce_mod2(y)));
        CHECK((reduce_mod2(x) == 0) == (x.a % 2 == 0 && x.b % 2 == 0));
    }
    const EisensteinInt xi{0, 1};
    CHECK(xi * xi == EisensteinInt{-1, -1});
    CHECK(xi * xi * xi == EisensteinInt{1, 0});
    CHECK(reduce_mod2(xi) == kOmega);
    for (Elem e = 0; e < 4; ++e) CHECK(reduce_mod2(lift_f4(e)) == e);
}

TEST_CASE("coset vectors") {
    CHECK(coset_vector(0, 0) == IntVector::Zero(2));
    CHECK(coset_vector(0, 1) == (IntVector(2) << -2, 2).finished());
    CHECK(coset_vector(1, 0) == (IntVector(2) << 0, 3).finished());
    LatticeBasis one = build_lattice(builtin("trivial:F4:1"), builtin("trivial:F3:1"));
    CHECK(one.norm(coset_vector(1, 0)) == Rational(1));
    CHECK(one.norm(coset_vector(0, 1)) == Rational(4, 3));
    CHECK(one.norm(coset_vector(kOmega, 0)) == Rational(1));
    CHECK(one.norm(coset_vector(kOmegaBar, 0)) == Rational(1));
    // i -> coset vector is additive modulo L, and so is j.
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b)
            CHECK(one.contains(coset_vector(a, 0) + coset_vector(b, 0) - coset_vector(add(Field::F4, a, b), 0)));
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b)
            CHECK(one.contains(coset_vector(0, a) + coset_vector(0, b) - coset_vector(0, add(Field::F3, a, b))));
    CHECK_FALSE(one.contains(coset_vector(1, 0)));
}

TEST_CASE("Hermite normal form and determinants") {
    IntMatrix m(3, 2);
    m << 4, 6, 6, 4, 2, 2;
    IntMatrix h = hermite_normal_form(m);
    CHECK(h.rows() == 2);
    CHECK(h(1, 0) == 0);
    CHECK(determinant(h) == Rational(h(0, 0) * h(1, 1)));
    CHECK(std::llabs(h(0, 0) * h(1, 1)) == 4);
    IntMatrix block(2, 2);
    block << 4, -2, -2, 4;
    CHECK(determinant(block) == Rational(12));
    IntMatrix p(3, 3);
    p << 0, 1, 2, 1, 0, 3, 4, -3, 8;
    CHECK(determinant(p) == Rational(-2));
}

TEST_CASE("L_{C x D} determinant, evenness and index") {
    for (const Pair& p : test_pairs()) {
        CAPTURE(p.name);
        LatticeBasis b = build_lattice(p.c, p.d);
        const int l = p.c.length();
        const std::int64_t cd = static_cast<std::int64_t>(p.c.size() * p.d.size());
        CHECK(b.det() == Rational(ipow(12, l), cd * cd));
        CHECK(is_even(b));
        // Index over (sqrt2 A2)^l, whose scaled basis is 6*I.
        Rational idx = Rational(ipow(6, 2 * l)) / determinant(b.vectors);
        CHECK(idx == Rational(cd));
        DualReport r = verify_dual(p.c, p.d);
        CHECK(r.pairs_integral);
        CHECK(r.index == r.gram_det);
        CHECK(r.ok());
    }
    CHECK(verify_dual(builtin("trivial:F4:1"), builtin("trivial:F3:1")).index == Rational(12));
    CHECK(verify_dual(builtin("hexacode"), builtin("trivial:F3:6")).index == Rational(729));
    CHECK(build_lattice(builtin("hexacode"), builtin("trivial:F3:6")).det() == Rational(729));
    CHECK_THROWS_AS(build_lattice(builtin("full:F4:2"), builtin("trivial:F3:2")), PreconditionError);
    CHECK_THROWS_AS(build_lattice(builtin("B"), builtin("trivial:F3:3")), PreconditionError);
}

TEST_CASE("codewords lift into the lattice") {
    LinearCode c = builtin("hexacode"), d = builtin("trivial:F3:6");
    LatticeBasis b = build_lattice(c, d);
    for (const Word& w : c.codewords()) CHECK(b.contains(coset_vector(w, Word(6))));
    LinearCode t = builtin("tetracode");
    LatticeBasis bt = build_lattice(direct_sum(builtin("B"), builtin("B")), t);
    for (const Word& w : t.codewords()) CHECK(bt.contains(coset_vector(Word(4), w)));
    CHECK_FALSE(bt.contains(coset_vector(Word(4), Word::from({1, 0, 0, 0}))));
}

TEST_CASE("short vector enumeration agrees with a box search") {
    LatticeBasis a2 = build_lattice(builtin("trivial:F4:1"), builtin("trivial:F3:1"));
    CHECK(min_norm_coset(a2, IntVector::Zero(2), Rational(6)) == Rational(0));
    auto counts = norm_counts(a2, IntVector::Zero(2), Rational(4));
    CHECK(counts[Rational(4)] == 6);
    CHECK(min_norm_coset(a2, coset_vector(0, 1), Rational(6)) == Rational(4, 3));
    CHECK(min_norm_coset(a2, coset_vector(1, 0), Rational(6)) == Rational(1));
    CHECK_THROWS_AS(min_norm_coset(a2, coset_vector(0, 1), Rational(1)), NotFound);
    CHECK(min_norm_coset_auto(a2, coset_vector(0, 1), Rational(1, 8)) == Rational(4, 3));

    LatticeBasis b = build_lattice(builtin("B"), builtin("trivial:F3:2"));
    for (Elem i = 0; i < 4; ++i)
        for (Elem j = 0; j < 3; ++j) {
            IntVector s = coset_vector(Word::from({i, 0}), Word::from({j, 0}));
            CHECK(norm_counts(b, s, Rational(8)) == box_counts(b, s, 5, Rational(8)));
        }
}

TEST_CASE("minimum is independent of the coset representative") {
    LatticeBasis b = build_lattice(builtin("B"), builtin("trivial:F3:2"));
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> u(-3, 3);
    IntVector s = coset_vector(Word::from({1, 0}), Word::from({1, 2}));
    Rational m = min_norm_coset_auto(b, s);
    for (int t = 0; t < 20; ++t) {
        IntVector v = s;
        for (int k = 0; k < b.rank(); ++k) v += u(rng) * b.vectors.row(k);
        CHECK(min_norm_coset_auto(b, v) == m);
    }
}

TEST_CASE("coset norms are constant mod 2") {
    LatticeBasis b = build_lattice(builtin("hexacode"), builtin("trivial:F3:6"));
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> u(-4, 4);
    for (auto s : {coset_vector(Word(6), Word::from({1, 0, 0, 0, 0, 0})), coset_vector(Word(6), Word::from({1, 2, 1, 0, 0, 0})),
                   coset_vector(builtin("hexacode").gens()[0], Word::from({0, 0, 1, 0, 0, 0}))}) {
        Rational ref = b.norm(s);
        for (int t = 0; t < 100; ++t) {
            IntVector v = s;
            for (int k = 0; k < b.rank(); ++k) v += u(rng) * b.vectors.row(k);
            Rational diff = b.norm(v) - ref;
            CHECK(diff.is_integer());
            CHECK(diff.num() % 2 == 0);
        }
    }
}

TEST_CASE("K12 and L_{H x 0}") {
    LatticeBasis k = k12();
    LatticeBasis l = build_lattice(builtin("hexacode"), builtin("trivial:F3:6"));
    CHECK(k.rank() == 12);
    CHECK(k.det() == Rational(729));
    CHECK(is_even(k));
    // The frame form is Re sum x_i conj(y_i).
    IntVector x = k.vectors.row(3), y = k.vectors.row(7);
    Rational re = 0;
    for (int i = 0; i < 6; ++i) {
        EisensteinInt p = EisensteinInt{x(2 * i), x(2 * i + 1)} * EisensteinInt{y(2 * i), y(2 * i + 1)}.conj();
        re += Rational(2 * p.a - p.b, 2);
    }
    CHECK(k.inner(x, y) == re);
    // Every basis vector reduces mod 2 into the hexacode.
    LinearCode h = builtin("hexacode");
    for (int r = 0; r < 12; ++r) {
        Word w(6);
        for (int i = 0; i < 6; ++i) w[i] = reduce_mod2({k.vectors(r, 2 * i), k.vectors(r, 2 * i + 1)});
        CHECK(h.contains(w));
    }
    auto ck = norm_counts(k, IntVector::Zero(12), Rational(6));
    auto cl = norm_counts(l, IntVector::Zero(12), Rational(6));
    CHECK(ck == cl);
    CHECK(ck[Rational(0)] == 1);
    CHECK(ck.count(Rational(2)) == 0);
    CHECK(ck[Rational(4)] == 756);
    CHECK(ck[Rational(6)] == 4032);
    CHECK(min_norm_coset(k, k.vectors.row(0), Rational(6)) == Rational(0));
}
