#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbifold/field.hpp"

namespace orbifold {

// A linear code stored by its reduced row echelon generator matrix, so two
// codes compare equal exactly when they span the same subspace.
class LinearCode {
public:
    LinearCode() = default;
    // Rows may be dependent or zero; the result is reduced to canonical form.
    LinearCode(Field field, int length, const std::vector<Word>& rows);

    Field field() const { return field_; }
    int length() const { return length_; }
    int dim() const { return static_cast<int>(gens_.size()); }
    const std::vector<Word>& gens() const { return gens_; }
    const std::vector<int>& pivots() const { return pivots_; }
    // Number of codewords, q^d.
    std::uint64_t size() const;

    // Reduces w modulo the code: the result is the lexicographically least
    // element of w + C (pivot columns cleared).
    Word reduce(const Word& w) const;
    bool contains(const Word& w) const { return reduce(w).is_zero(); }
    // All codewords in a fixed order; guarded by d <= 24.
    std::vector<Word> codewords() const;

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    Field field_ = Field::F3;
    int length_ = 0;
    std::vector<Word> gens_;
    std::vector<int> pivots_;
};

LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

// Hermitian dual for F4, Euclidean dual for F3.
LinearCode dual_code(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

// coeffs[w] = number of vectors of Hamming weight w (coefficient of X^{l-w} Y^w).
struct WeightEnumerator {
    std::vector<std::int64_t> coeffs;

    std::int64_t total() const;
    // W(x, y) for integer arguments.
    std::int64_t evaluate(std::int64_t x, std::int64_t y) const;
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

inline constexpr int kMaxEnumDim = 24;
inline constexpr std::uint64_t kMaxQuotient = 59049;  // 3^10

WeightEnumerator weight_enumerator(const LinearCode& c);
// (W_C - X^l)/3 for a self-orthogonal F4 code.
WeightEnumerator w_prime(const LinearCode& c);
// Weight enumerator of {x in Z3^l : sum x_i = eps mod 3}.
WeightEnumerator w_congruence(int length, int eps);

// Lex-minimal representatives of c^perp / c.
std::vector<Word> coset_reps(const LinearCode& c);
std::uint64_t quotient_size(const LinearCode& c);

// Canonical representative of the tau-orbit {x, wx, w^2 x} + C for an F4 code.
// Throws PreconditionError for a nonzero coset fixed by multiplication by w.
Word tau_orbit_rep(const LinearCode& c, const Word& x);
// The zero orbit first, then the nonzero orbits in ascending order.
std::vector<Word> tau_orbits(const LinearCode& c);

// Names: hexacode, tetracode, B, trivial:<F>:<l>, full:<F>:<l>.
LinearCode builtin(const std::string& name);

// Plain text format: field name on line 1, then one generator row per line.
std::string write_code(const LinearCode& c);
LinearCode read_code(const std::string& text);
LinearCode read_code_file(const std::string& path);

}  // namespace orbifold
