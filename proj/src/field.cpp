#include "orbifold/field.hpp"

#include "orbifold/errors.hpp"

namespace orbifold {

namespace {

// Rows/columns in encoding order 0, 1, w, W.
constexpr Elem kF4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
constexpr Elem kF4Inv[4] = {0, 1, 3, 2};

}  // namespace

int field_size(Field f) { return f == Field::F4 ? 4 : 3; }

Elem add(Field f, Elem a, Elem b) {
    if (f == Field::F4) return static_cast<Elem>(a ^ b);
    return static_cast<Elem>((a + b) % 3);
}

Elem neg(Field f, Elem a) {
    if (f == Field::F4) return a;
    return static_cast<Elem>((3 - a) % 3);
}

Elem sub(Field f, Elem a, Elem b) { return add(f, a, neg(f, b)); }

Elem mul(Field f, Elem a, Elem b) {
    if (f == Field::F4) return kF4Mul[a][b];
    return static_cast<Elem>((a * b) % 3);
}

Elem inv(Field f, Elem a) {
    if (a == 0) throw PreconditionError("inverse of zero");
    if (f == Field::F4) return kF4Inv[a];
    return a;  // 1*1 = 2*2 = 1 mod 3
}

Elem conj(Field f, Elem a) { return f == Field::F4 ? kF4Mul[a][a] : a; }

char symbol(Field f, Elem a) {
    if (f == Field::F4) return "01wW"[a];
    return static_cast<char>('0' + a);
}

bool parse_symbol(Field f, char c, Elem& out) {
    switch (c) {
        case '0': out = 0; return true;
        case '1': out = 1; return true;
        case '2': out = 2; return f == Field::F3;
        case 'w': out = kOmega; return f == Field::F4;
        case 'W': out = kOmegaBar; return f == Field::F4;
        default: return false;
    }
}

std::string field_name(Field f) { return f == Field::F4 ? "F4" : "F3"; }

Field parse_field(const std::string& name) {
    if (name == "F4") return Field::F4;
    if (name == "F3") return Field::F3;
    throw ParseError("field:" + name);
}

Word::Word(int length) {
    if (length < 0 || length > kMaxLength)
        throw GuardError("word length " + std::to_string(length) + " exceeds " + std::to_string(kMaxLength));
    len = static_cast<std::uint8_t>(length);
}

Word Word::from(const std::vector<int>& values) {
    Word w(static_cast<int>(values.size()));
    for (int i = 0; i < w.size(); ++i) w[i] = static_cast<Elem>(values[static_cast<std::size_t>(i)]);
    return w;
}

bool Word::is_zero() const {
    for (int i = 0; i < len; ++i)
        if (sym[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

int Word::weight() const {
    int w = 0;
    for (int i = 0; i < len; ++i) w += sym[static_cast<std::size_t>(i)] != 0;
    return w;
}

bool operator==(const Word& a, const Word& b) {
    if (a.len != b.len) return false;
    for (int i = 0; i < a.len; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.len != b.len) return a.len <=> b.len;
    for (int i = 0; i < a.len; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

Word add(Field f, const Word& a, const Word& b) {
    if (a.len != b.len) throw PreconditionError("word length mismatch");
    Word r(a.len);
    for (int i = 0; i < a.len; ++i) r[i] = add(f, a[i], b[i]);
    return r;
}

Word sub(Field f, const Word& a, const Word& b) {
    if (a.len != b.len) throw PreconditionError("word length mismatch");
    Word r(a.len);
    for (int i = 0; i < a.len; ++i) r[i] = sub(f, a[i], b[i]);
    return r;
}

Word scale(Field f, Elem c, const Word& a) {
    Word r(a.len);
    for (int i = 0; i < a.len; ++i) r[i] = mul(f, c, a[i]);
    return r;
}

Elem inner(Field f, const Word& a, const Word& b) {
    if (a.len != b.len) throw PreconditionError("word length mismatch");
    Elem s = 0;
    for (int i = 0; i < a.len; ++i) s = add(f, s, mul(f, a[i], conj(f, b[i])));
    return s;
}

std::string word_str(Field f, const Word& w) {
    std::string s;
    for (int i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += symbol(f, w[i]);
    }
    return s;
}

Word parse_word(Field f, const std::string& text) {
    std::vector<int> vals;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Elem e = 0;
        if (tok.size() != 1 || !parse_symbol(f, tok[0], e)) throw ParseError("symbol:" + tok);
        vals.push_back(e);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(vals.size()) > kMaxLength) throw GuardError("word length exceeds 32");
    return Word::from(vals);
}

}  // namespace orbifold
