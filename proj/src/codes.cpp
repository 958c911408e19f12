#include "orbifold/codes.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "orbifold/errors.hpp"
#include "orbifold/rational.hpp"

namespace orbifold {

namespace {

void rref(Field f, std::vector<Word>& rows, std::vector<int>& pivots, int length) {
    pivots.clear();
    std::size_t r = 0;
    for (int col = 0; col < length && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        rows[r] = scale(f, inv(f, rows[r][col]), rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            rows[i] = sub(f, rows[i], scale(f, rows[i][col], rows[r]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
}

// All F-linear combinations of `basis`, in counting order of the coefficients.
std::vector<Word> span(Field f, int length, const std::vector<Word>& basis) {
    std::uint64_t q = static_cast<std::uint64_t>(field_size(f));
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) count *= q;
    std::vector<Word> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        Word w(length);
        std::uint64_t m = n;
        for (const Word& b : basis) {
            Elem c = static_cast<Elem>(m % q);
            m /= q;
            if (c) w = add(f, w, scale(f, c, b));
        }
        out.push_back(w);
    }
    return out;
}

}  // namespace

LinearCode::LinearCode(Field field, int length, const std::vector<Word>& rows)
    : field_(field), length_(length), gens_(rows) {
    if (length < 1 || length > kMaxLength) throw GuardError("code length must be in [1, 32]");
    for (const Word& w : gens_)
        if (w.size() != length) throw PreconditionError("generator length mismatch");
    rref(field_, gens_, pivots_, length_);
}

std::uint64_t LinearCode::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < dim(); ++i) s *= static_cast<std::uint64_t>(field_size(field_));
    return s;
}

Word LinearCode::reduce(const Word& w) const {
    Word r = w;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        Elem c = r[pivots_[i]];
        if (c) r = sub(field_, r, scale(field_, c, gens_[i]));
    }
    return r;
}

std::vector<Word> LinearCode::codewords() const {
    if (dim() > kMaxEnumDim) throw GuardError("code dimension exceeds enumeration bound 24");
    return span(field_, length_, gens_);
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    if (a.field() != b.field()) throw PreconditionError("direct sum of codes over different fields");
    int n = a.length() + b.length();
    std::vector<Word> rows;
    for (const Word& g : a.gens()) {
        Word w(n);
        for (int i = 0; i < a.length(); ++i) w[i] = g[i];
        rows.push_back(w);
    }
    for (const Word& g : b.gens()) {
        Word w(n);
        for (int i = 0; i < b.length(); ++i) w[a.length() + i] = g[i];
        rows.push_back(w);
    }
    return LinearCode(a.field(), n, rows);
}

LinearCode dual_code(const LinearCode& c) {
    Field f = c.field();
    int n = c.length();
    // x is orthogonal to g iff sum x_i conj(g_i) = 0, so take the null space of conj(G).
    std::vector<Word> rows;
    for (const Word& g : c.gens()) {
        Word h(n);
        for (int i = 0; i < n; ++i) h[i] = conj(f, g[i]);
        rows.push_back(h);
    }
    std::vector<int> piv;
    rref(f, rows, piv, n);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Word> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Word v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) v[piv[r]] = neg(f, rows[r][free]);
        basis.push_back(v);
    }
    return LinearCode(f, n, basis);
}

bool is_self_orthogonal(const LinearCode& c) {
    for (const Word& a : c.gens())
        for (const Word& b : c.gens())
            if (inner(c.field(), a, b) != 0) return false;
    return true;
}

bool is_self_dual(const LinearCode& c) { return 2 * c.dim() == c.length() && is_self_orthogonal(c); }

std::int64_t WeightEnumerator::total() const {
    std::int64_t s = 0;
    for (auto a : coeffs) s += a;
    return s;
}

std::int64_t WeightEnumerator::evaluate(std::int64_t x, std::int64_t y) const {
    int n = static_cast<int>(coeffs.size()) - 1;
    Rational s = 0;
    for (int w = 0; w <= n; ++w) s += Rational(coeffs[static_cast<std::size_t>(w)]) * ipow(x, n - w) * ipow(y, w);
    return s.num();
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
    WeightEnumerator we;
    we.coeffs.assign(static_cast<std::size_t>(c.length()) + 1, 0);
    for (const Word& w : c.codewords()) ++we.coeffs[static_cast<std::size_t>(w.weight())];
    return we;
}

WeightEnumerator w_prime(const LinearCode& c) {
    if (c.field() != Field::F4) throw PreconditionError("w_prime requires an F4 code");
    if (!is_self_orthogonal(c)) throw PreconditionError("w_prime requires a self-orthogonal code");
    WeightEnumerator we = weight_enumerator(c);
    we.coeffs[0] -= 1;
    for (auto& a : we.coeffs) {
        if (a % 3 != 0) throw PreconditionError("code is not closed under multiplication by w");
        a /= 3;
    }
    return we;
}

WeightEnumerator w_congruence(int length, int eps) {
    if (length < 1 || length > kMaxEnumDim) throw GuardError("w_congruence length must be in [1, 24]");
    eps = ((eps % 3) + 3) % 3;
    // count[w][s]: vectors of the prefix with weight w and coordinate sum s mod 3.
    std::vector<std::array<std::int64_t, 3>> count(static_cast<std::size_t>(length) + 1, {0, 0, 0});
    count[0][0] = 1;
    for (int pos = 0; pos < length; ++pos) {
        auto next = std::vector<std::array<std::int64_t, 3>>(count.size(), {0, 0, 0});
        for (std::size_t w = 0; w < count.size(); ++w)
            for (int s = 0; s < 3; ++s) {
                std::int64_t v = count[w][static_cast<std::size_t>(s)];
                if (!v) continue;
                next[w][static_cast<std::size_t>(s)] += v;
                next[w + 1][static_cast<std::size_t>((s + 1) % 3)] += v;
                next[w + 1][static_cast<std::size_t>((s + 2) % 3)] += v;
            }
        count.swap(next);
    }
    WeightEnumerator we;
    for (auto& row : count) we.coeffs.push_back(row[static_cast<std::size_t>(eps)]);
    return we;
}

std::uint64_t quotient_size(const LinearCode& c) {
    int k = c.length() - 2 * c.dim();
    if (k < 0) throw PreconditionError("code is not self-orthogonal");
    std::uint64_t s = 1;
    for (int i = 0; i < k; ++i) {
        s *= static_cast<std::uint64_t>(field_size(c.field()));
        if (s > kMaxQuotient) return s;
    }
    return s;
}

std::vector<Word> coset_reps(const LinearCode& c) {
    if (!is_self_orthogonal(c)) throw PreconditionError("coset_reps requires a self-orthogonal code");
    if (quotient_size(c) > kMaxQuotient) throw GuardError("coset space exceeds 3^10");
    // Reduced dual generators vanish on the pivot columns of c, and so does
    // every combination of them; each combination is already lex-minimal.
    const LinearCode dual = dual_code(c);
    std::vector<Word> rows;
    for (const Word& g : dual.gens()) rows.push_back(c.reduce(g));
    std::vector<int> piv;
    rref(c.field(), rows, piv, c.length());
    std::vector<Word> reps = span(c.field(), c.length(), rows);
    std::sort(reps.begin(), reps.end());
    return reps;
}

Word tau_orbit_rep(const LinearCode& c, const Word& x) {
    if (c.field() != Field::F4) throw PreconditionError("tau orbits are defined for F4 codes");
    Word a = c.reduce(x);
    Word b = c.reduce(scale(Field::F4, kOmega, x));
    Word d = c.reduce(scale(Field::F4, kOmegaBar, x));
    if (!a.is_zero() && a == b)
        throw PreconditionError("unsupported: coset " + word_str(Field::F4, a) + " is fixed by w");
    return std::min({a, b, d});
}

std::vector<Word> tau_orbits(const LinearCode& c) {
    std::set<Word> orbits;
    for (const Word& r : coset_reps(c)) orbits.insert(tau_orbit_rep(c, r));
    return {orbits.begin(), orbits.end()};
}

namespace {

// Hexacode generators; Hermitian self-duality is checked by the tests.
constexpr int kHexacode[3][6] = {
    {1, 0, 0, 1, kOmegaBar, kOmega},
    {0, 1, 0, 1, kOmega, kOmegaBar},
    {0, 0, 1, 1, 1, 1},
};
constexpr int kTetracode[2][4] = {
    {1, 0, 1, 1},
    {0, 1, 1, 2},
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

}  // namespace

LinearCode builtin(const std::string& name) {
    if (name == "hexacode") {
        std::vector<Word> rows;
        for (const auto& r : kHexacode) rows.push_back(Word::from({r, r + 6}));
        return LinearCode(Field::F4, 6, rows);
    }
    if (name == "tetracode") {
        std::vector<Word> rows;
        for (const auto& r : kTetracode) rows.push_back(Word::from({r, r + 4}));
        return LinearCode(Field::F3, 4, rows);
    }
    if (name == "B") return LinearCode(Field::F4, 2, {Word::from({1, 1})});
    auto parts = split(name, ':');
    if (parts.size() == 3 && (parts[0] == "trivial" || parts[0] == "full")) {
        Field f = parse_field(parts[1]);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(parts[2], &used);
            if (used != parts[2].size()) throw ParseError("builtin:" + name);
        } catch (const std::logic_error&) {
            throw ParseError("builtin:" + name);
        }
        if (n < 1 || n > kMaxLength) throw GuardError("code length must be in [1, 32]");
        if (parts[0] == "trivial") return LinearCode(f, n, {});
        std::vector<Word> rows;
        for (int i = 0; i < n; ++i) {
            Word w(n);
            w[i] = 1;
            rows.push_back(w);
        }
        return LinearCode(f, n, rows);
    }
    throw PreconditionError("unknown builtin code:" + name);
}

std::string write_code(const LinearCode& c) {
    std::string out = field_name(c.field()) + "\n";
    std::vector<Word> rows = c.gens();
    // A zero row records the length of the zero code.
    if (rows.empty()) rows.emplace_back(c.length());
    for (const Word& w : rows) {
        for (int i = 0; i < w.size(); ++i) {
            if (i) out += ' ';
            out += symbol(c.field(), w[i]);
        }
        out += '\n';
    }
    return out;
}

LinearCode read_code(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Field f = Field::F3;
    bool have_field = false;
    int length = -1;
    std::vector<Word> rows;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (!have_field) {
            if (toks.size() != 1 || (toks[0] != "F4" && toks[0] != "F3")) throw ParseError(std::to_string(lineno));
            f = parse_field(toks[0]);
            have_field = true;
            continue;
        }
        if (length == -1) length = static_cast<int>(toks.size());
        if (static_cast<int>(toks.size()) != length || length > kMaxLength) throw ParseError(std::to_string(lineno));
        Word w(length);
        for (int i = 0; i < length; ++i) {
            const std::string& t = toks[static_cast<std::size_t>(i)];
            Elem e = 0;
            if (t.size() != 1 || !parse_symbol(f, t[0], e)) throw ParseError(std::to_string(lineno));
            w[i] = e;
        }
        rows.push_back(w);
    }
    if (!have_field) throw ParseError(std::to_string(lineno + 1));
    if (length < 1) throw ParseError(std::to_string(lineno + 1));
    return LinearCode(f, length, rows);
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("file:" + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_code(ss.str());
}

}  // namespace orbifold
