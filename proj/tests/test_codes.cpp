#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/codes.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/rational.hpp"

using namespace orbifold;

namespace {

std::set<Word> words_of(const LinearCode& c) {
    auto v = c.codewords();
    return {v.begin(), v.end()};
}

LinearCode random_code(std::mt19937_64& rng, Field f, int n, int k) {
    std::uniform_int_distribution<int> sym(0, field_size(f) - 1);
    std::vector<Word> rows;
    for (int r = 0; r < k; ++r) {
        Word w(n);
        for (int i = 0; i < n; ++i) w[i] = static_cast<Elem>(sym(rng));
        rows.push_back(w);
    }
    return LinearCode(f, n, rows);
}

}  // namespace

TEST_CASE("F4 arithmetic") {
    const Field f = Field::F4;
    for (Elem x = 0; x < 4; ++x) {
        CHECK(add(f, x, x) == 0);
        CHECK(conj(f, conj(f, x)) == x);
    }
    CHECK(mul(f, kOmega, kOmega) == kOmegaBar);
    CHECK(mul(f, kOmega, kOmegaBar) == 1);
    CHECK(conj(f, 0) == 0);
    CHECK(conj(f, 1) == 1);
    CHECK(conj(f, kOmega) == kOmegaBar);
    CHECK(add(f, 1, kOmega) == kOmegaBar);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b)
            for (Elem c = 0; c < 4; ++c) {
                CHECK(mul(f, a, add(f, b, c)) == add(f, mul(f, a, b), mul(f, a, c)));
                CHECK(mul(f, a, mul(f, b, c)) == mul(f, mul(f, a, b), c));
            }
    for (Elem a = 1; a < 4; ++a) CHECK(mul(f, a, inv(f, a)) == 1);
}

TEST_CASE("F3 arithmetic and word text") {
    const Field f = Field::F3;
    CHECK(add(f, 2, 2) == 1);
    CHECK(neg(f, 1) == 2);
    CHECK(mul(f, 2, 2) == 1);
    Word w = parse_word(Field::F4, "0,1,w,W");
    CHECK(word_str(Field::F4, w) == "0,1,w,W");
    CHECK_THROWS_AS(parse_word(Field::F3, "0,w"), ParseError);
    CHECK_THROWS_AS(parse_word(Field::F3, "0,,1"), ParseError);
}

TEST_CASE("canonical form is unique per subspace") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Field f = t % 2 ? Field::F4 : Field::F3;
        LinearCode a = random_code(rng, f, 5, 3);
        // Same span from shuffled combinations of the canonical rows.
        std::vector<Word> rows;
        for (const Word& g : a.gens()) rows.push_back(add(f, g, a.gens().front()));
        rows.push_back(a.gens().front());
        std::reverse(rows.begin(), rows.end());
        CHECK(LinearCode(f, 5, rows) == a);
        CHECK(words_of(a) == oracle::closure(f, 5, a.gens()));
    }
}

TEST_CASE("dual code") {
    SUBCASE("trivial code has the full space as dual") {
        LinearCode t = builtin("trivial:F4:3");
        CHECK(dual_code(t) == builtin("full:F4:3"));
    }
    SUBCASE("hexacode and B are self-dual") {
        CHECK(dual_code(builtin("hexacode")) == builtin("hexacode"));
        LinearCode b = builtin("B");
        CHECK(dual_code(b) == b);
        CHECK(words_of(dual_code(b)) == oracle::brute_dual(Field::F4, 2, words_of(b)));
    }
    SUBCASE("agrees with brute force on random codes") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 40; ++t) {
            Field f = t % 2 ? Field::F4 : Field::F3;
            int n = 2 + t % 4;
            LinearCode c = random_code(rng, f, n, 1 + t % n);
            LinearCode d = dual_code(c);
            CHECK(d.dim() == n - c.dim());
            CHECK(dual_code(d) == c);
            CHECK(words_of(d) == oracle::brute_dual(f, n, words_of(c)));
            CHECK(c.size() * d.size() == static_cast<std::uint64_t>(words_of(builtin("full:" + field_name(f) + ":" + std::to_string(n))).size()));
        }
    }
}

TEST_CASE("self-orthogonality predicates") {
    CHECK(is_self_orthogonal(builtin("trivial:F3:4")));
    CHECK_FALSE(is_self_dual(builtin("trivial:F3:4")));
    LinearCode h = builtin("hexacode");
    CHECK(h.length() == 6);
    CHECK(h.dim() == 3);
    CHECK(is_self_dual(h));
    LinearCode t = builtin("tetracode");
    CHECK(t.length() == 4);
    CHECK(t.dim() == 2);
    CHECK(is_self_dual(t));
    CHECK(words_of(t) == oracle::brute_dual(Field::F3, 4, words_of(t)));
    CHECK(is_self_dual(builtin("B")));
    CHECK_FALSE(is_self_orthogonal(builtin("full:F3:2")));
    CHECK_THROWS_AS(builtin("octacode"), PreconditionError);
}

TEST_CASE("even F4 codes are exactly the Hermitian self-orthogonal ones") {
    auto check = [](const LinearCode& c) {
        bool even = true;
        for (const Word& w : c.codewords()) even = even && w.weight() % 2 == 0;
        CHECK(even == is_self_orthogonal(c));
    };
    for (auto name : {"hexacode", "B", "trivial:F4:3", "full:F4:2"}) check(builtin(name));
    check(direct_sum(builtin("B"), builtin("B")));
    // Random subcodes of the full space up to length 5.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + t % 5;
        check(random_code(rng, Field::F4, n, 1 + static_cast<int>(rng() % static_cast<unsigned>(n))));
    }
    // Subcodes of the hexacode are even and self-orthogonal.
    LinearCode h = builtin("hexacode");
    check(LinearCode(Field::F4, 6, {h.gens()[0]}));
    check(LinearCode(Field::F4, 6, {h.gens()[0], h.gens()[2]}));
}

TEST_CASE("self-orthogonal F4 codes are closed under multiplication by w") {
    for (auto c : {builtin("hexacode"), builtin("B"), direct_sum(builtin("B"), builtin("B"))})
        for (const Word& w : c.codewords()) CHECK(c.contains(scale(Field::F4, kOmega, w)));
}

TEST_CASE("weight enumerators") {
    CHECK(weight_enumerator(builtin("trivial:F4:3")).coeffs == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(weight_enumerator(builtin("B")).coeffs == std::vector<std::int64_t>{1, 0, 3});
    WeightEnumerator h = weight_enumerator(builtin("hexacode"));
    CHECK(h.coeffs == std::vector<std::int64_t>{1, 0, 0, 0, 45, 0, 18});
    CHECK(h.evaluate(1, 1) == 64);
    // Independent count through the closure oracle.
    std::vector<std::int64_t> counts(7, 0);
    for (const Word& w : oracle::closure(Field::F4, 6, builtin("hexacode").gens())) ++counts[static_cast<std::size_t>(w.weight())];
    CHECK(counts == h.coeffs);
}

TEST_CASE("w_prime") {
    CHECK(w_prime(builtin("trivial:F4:4")).total() == 0);
    CHECK(w_prime(builtin("hexacode")).evaluate(1, 1) == 21);
    CHECK(w_prime(builtin("B")).evaluate(1, 1) == 1);
    CHECK_THROWS_AS(w_prime(builtin("full:F4:2")), PreconditionError);
    CHECK_THROWS_AS(w_prime(builtin("tetracode")), PreconditionError);
}

TEST_CASE("w_congruence matches enumeration") {
    CHECK(w_congruence(1, 0).coeffs == std::vector<std::int64_t>{1, 0});
    CHECK(w_congruence(1, 1).coeffs == std::vector<std::int64_t>{0, 1});
    for (int n = 1; n <= 7; ++n) {
        std::vector<std::vector<std::int64_t>> brute(3, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
        for (const Word& x : oracle::all_vectors(Field::F3, n)) {
            int s = 0;
            for (int i = 0; i < n; ++i) s += x[i];
            ++brute[static_cast<std::size_t>(s % 3)][static_cast<std::size_t>(x.weight())];
        }
        std::int64_t total = 0;
        for (int e = 0; e < 3; ++e) {
            WeightEnumerator we = w_congruence(n, e);
            CHECK(we.coeffs == brute[static_cast<std::size_t>(e)]);
            CHECK(we.evaluate(1, 1) == ipow(3, n - 1));
            total += we.evaluate(1, 1);
        }
        CHECK(total == ipow(3, n));
    }
    for (int n = 8; n <= 24; n += 4)
        for (int e = 0; e < 3; ++e) CHECK(w_congruence(n, e).total() == ipow(3, n - 1));
}

TEST_CASE("coset representatives are lex-minimal") {
    CHECK(coset_reps(builtin("hexacode")).size() == 1);
    CHECK(coset_reps(builtin("trivial:F3:2")).size() == 9);
    auto check = [](const LinearCode& c) {
        auto reps = coset_reps(c);
        auto code = words_of(c);
        auto dual = dual_code(c);
        CHECK(reps.size() == dual.size() / c.size());
        std::set<Word> seen;
        for (const Word& r : reps) {
            CHECK(dual.contains(r));
            CHECK(oracle::brute_coset_min(c.field(), r, code) == r);
            CHECK(c.reduce(r) == r);
            seen.insert(r);
        }
        CHECK(seen.size() == reps.size());
        // Every dual vector lands on one of the representatives.
        for (const Word& x : dual.codewords()) {
            Word m = oracle::brute_coset_min(c.field(), x, code);
            CHECK(c.reduce(x) == m);
            CHECK(seen.count(m) == 1);
        }
    };
    check(builtin("tetracode"));
    check(LinearCode(Field::F3, 3, {Word::from({1, 1, 1})}));
    check(direct_sum(builtin("B"), builtin("B")));
    check(LinearCode(Field::F4, 4, {Word::from({1, 1, 1, 1})}));
    check(builtin("trivial:F4:2"));
}

TEST_CASE("tau orbits") {
    LinearCode bb = direct_sum(builtin("B"), builtin("B"));
    CHECK(coset_reps(bb).size() == 1);
    CHECK(tau_orbits(bb).size() == 1);
    LinearCode b00 = direct_sum(builtin("B"), builtin("trivial:F4:2"));
    auto orbits = tau_orbits(b00);
    CHECK(coset_reps(b00).size() == 16);
    CHECK(orbits.size() == 1 + 5);
    CHECK(orbits.front().is_zero());
    CHECK(tau_orbits(builtin("hexacode")).size() == 1);
    CHECK(tau_orbits(builtin("trivial:F4:1")).size() == 2);
    // Orbits partition the cosets into the zero class and classes of size 3.
    std::map<Word, int> size;
    for (const Word& r : coset_reps(b00)) ++size[tau_orbit_rep(b00, r)];
    for (auto& [rep, n] : size) CHECK(n == (rep.is_zero() ? 1 : 3));
    for (const Word& r : orbits) CHECK(tau_orbit_rep(b00, r) == r);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(coset_reps(builtin("trivial:F4:8")), GuardError);
    CHECK_NOTHROW(coset_reps(builtin("trivial:F3:10")));
    CHECK_THROWS_AS(coset_reps(builtin("trivial:F3:11")), GuardError);
    CHECK_THROWS_AS(builtin("full:F4:25").codewords(), GuardError);
}

TEST_CASE("code file round trip") {
    for (auto name : {"hexacode", "tetracode", "B", "trivial:F3:4", "full:F4:3"}) {
        LinearCode c = builtin(name);
        std::string text = write_code(c);
        CHECK(read_code(text) == c);
        CHECK(write_code(read_code(text)) == text);
    }
    CHECK(write_code(builtin("B")) == "F4\n1 1\n");
    CHECK(read_code("F4\n1 0 0 1 W w\n0 1 0 1 w W\n0 0 1 1 1 1\n") == builtin("hexacode"));
    auto line_of = [](const std::string& text) {
        try {
            read_code(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("ok");
    };
    CHECK(line_of("F5\n1 1\n") == "1");
    CHECK(line_of("F3\n1 1\n1 w\n") == "3");
    CHECK(line_of("F3\n1 1\n1 1 1\n") == "3");
    CHECK(line_of("") == "1");
}
