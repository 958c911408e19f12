#pragma once

// Brute-force reference computations used only by the tests. They avoid the
// row-echelon machinery of the library on purpose.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "orbifold/codes.hpp"

namespace oracle {

using orbifold::Elem;
using orbifold::Field;
using orbifold::Word;

// Every vector of F^n, in counting order.
inline std::vector<Word> all_vectors(Field f, int n) {
    int q = orbifold::field_size(f);
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(q);
    std::vector<Word> out;
    for (std::uint64_t k = 0; k < count; ++k) {
        Word w(n);
        std::uint64_t m = k;
        for (int i = 0; i < n; ++i) {
            w[i] = static_cast<Elem>(m % static_cast<std::uint64_t>(q));
            m /= static_cast<std::uint64_t>(q);
        }
        out.push_back(w);
    }
    return out;
}

// Closure of the generators under addition and scalar multiples.
inline std::set<Word> closure(Field f, int n, const std::vector<Word>& gens) {
    std::set<Word> s{Word(n)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Word> cur(s.begin(), s.end());
        for (const Word& a : cur)
            for (const Word& g : gens)
                for (Elem c = 1; c < orbifold::field_size(f); ++c)
                    if (s.insert(orbifold::add(f, a, orbifold::scale(f, c, g))).second) grew = true;
    }
    return s;
}

inline Elem naive_inner(Field f, const Word& a, const Word& b) {
    int s = 0;
    for (int i = 0; i < a.size(); ++i) {
        if (f == Field::F3) {
            s = (s + a[i] * b[i]) % 3;
        } else {
            // conj swaps w and W; products via the F4 multiplication
            Elem cb = b[i] == 2 ? 3 : b[i] == 3 ? 2 : b[i];
            s ^= orbifold::mul(f, a[i], cb);
        }
    }
    return static_cast<Elem>(s);
}

inline std::set<Word> brute_dual(Field f, int n, const std::set<Word>& code) {
    std::set<Word> d;
    for (const Word& x : all_vectors(f, n)) {
        bool ok = true;
        for (const Word& c : code)
            if (naive_inner(f, x, c) != 0) {
                ok = false;
                break;
            }
        if (ok) d.insert(x);
    }
    return d;
}

// Minimal element of x + code by direct scan.
inline Word brute_coset_min(Field f, const Word& x, const std::set<Word>& code) {
    Word best = x;
    for (const Word& c : code) best = std::min(best, orbifold::add(f, x, c));
    return best;
}

}  // namespace oracle
