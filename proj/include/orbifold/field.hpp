#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace orbifold {

enum class Field : std::uint8_t { F4, F3 };

// F4 elements use the two-bit encoding 0=00, 1=01, w=10, W=11 (W = w^2 = conj(w)),
// so addition is XOR. F3 elements are 0, 1, 2 with arithmetic mod 3.
using Elem = std::uint8_t;

inline constexpr Elem kOmega = 2;
inline constexpr Elem kOmegaBar = 3;

int field_size(Field f);
Elem add(Field f, Elem a, Elem b);
Elem sub(Field f, Elem a, Elem b);
Elem neg(Field f, Elem a);
Elem mul(Field f, Elem a, Elem b);
Elem inv(Field f, Elem a);
// Frobenius x -> x^2 on F4, identity on F3.
Elem conj(Field f, Elem a);

char symbol(Field f, Elem a);
// Returns false on an unknown symbol.
bool parse_symbol(Field f, char c, Elem& out);

std::string field_name(Field f);
Field parse_field(const std::string& name);

inline constexpr int kMaxLength = 32;

// A vector of length at most kMaxLength over one of the two fields. Fixed
// storage keeps labels allocation free in the hot fusion loops.
struct Word {
    std::array<Elem, kMaxLength> sym{};
    std::uint8_t len = 0;

    Word() = default;
    explicit Word(int length);
    static Word from(const std::vector<int>& values);

    Elem operator[](int i) const { return sym[static_cast<std::size_t>(i)]; }
    Elem& operator[](int i) { return sym[static_cast<std::size_t>(i)]; }
    int size() const { return len; }
    bool is_zero() const;
    int weight() const;

    friend bool operator==(const Word& a, const Word& b);
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

Word add(Field f, const Word& a, const Word& b);
Word sub(Field f, const Word& a, const Word& b);
Word scale(Field f, Elem c, const Word& a);
// Hermitian product sum a_i conj(b_i) on F4, Euclidean on F3.
Elem inner(Field f, const Word& a, const Word& b);

// Comma separated symbols, e.g. "0,1,w".
std::string word_str(Field f, const Word& w);
Word parse_word(Field f, const std::string& text);

}  // namespace orbifold
