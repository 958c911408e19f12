#include "orbifold/registry.hpp"

#include <algorithm>

#include "orbifold/errors.hpp"
#include "orbifold/lattice.hpp"

namespace orbifold {

ModuleLabel ModuleLabel::u0(const Word& del, int eps) {
    ModuleLabel m;
    m.sector = Sector::U0;
    m.eps = static_cast<std::uint8_t>(((eps % 3) + 3) % 3);
    m.del = del;
    return m;
}

ModuleLabel ModuleLabel::uc(const Word& lam, const Word& del) {
    ModuleLabel m;
    m.sector = Sector::UC;
    m.lam = lam;
    m.del = del;
    return m;
}

ModuleLabel ModuleLabel::tw(int twist, const Word& eta, int eps) {
    ModuleLabel m;
    m.sector = Sector::TW;
    m.twist = static_cast<std::uint8_t>(twist);
    m.eps = static_cast<std::uint8_t>(((eps % 3) + 3) % 3);
    m.del = eta;
    return m;
}

std::string to_string(const ModuleLabel& m) {
    switch (m.sector) {
        case Sector::U0:
            return "U0:d=" + word_str(Field::F3, m.del) + ":e=" + std::to_string(m.eps);
        case Sector::UC:
            return "UC:l=" + word_str(Field::F4, m.lam) + ":d=" + word_str(Field::F3, m.del);
        case Sector::TW:
            return "TW:s=" + std::to_string(m.twist) + ":h=" + word_str(Field::F3, m.del) + ":e=" + std::to_string(m.eps);
    }
    return {};
}

CodePair::CodePair(LinearCode c, LinearCode d) : c_(std::move(c)), d_(std::move(d)) {
    if (c_.field() != Field::F4 || d_.field() != Field::F3) throw PreconditionError("C must be an F4 code and D an F3 code");
    if (c_.length() != d_.length()) throw PreconditionError("C and D have different lengths");
    if (!is_self_orthogonal(c_)) throw PreconditionError("C is not Hermitian self-orthogonal");
    if (!is_self_orthogonal(d_)) throw PreconditionError("D is not self-orthogonal");
    c_dual_ = dual_code(c_);
    d_dual_ = dual_code(d_);
    c_quotient_ = quotient_size(c_);
    d_quotient_ = quotient_size(d_);
    d_cosets_ = coset_reps(d_);
    orbits_ = tau_orbits(c_);
    orbits_.erase(orbits_.begin());  // zero orbit
}

ModuleLabel CodePair::vacuum() const { return ModuleLabel::u0(Word(length()), 0); }

void CodePair::validate(const ModuleLabel& m) const {
    const int n = length();
    auto bad = [&](const std::string& why) { throw PreconditionError("label " + to_string(m) + ": " + why); };
    if (m.del.size() != n) bad("wrong length");
    if (!d_dual_.contains(m.del)) bad("coset datum not in D^perp");
    if (d_.reduce(m.del) != m.del) bad("coset datum not canonical");
    if (m.eps > 2) bad("eps out of range");
    switch (m.sector) {
        case Sector::U0:
            if (m.twist != 0 || m.lam.size() != 0) bad("unexpected fields");
            break;
        case Sector::UC:
            if (c_self_dual()) bad("no UC modules when C is self-dual");
            if (m.twist != 0 || m.eps != 0) bad("unexpected fields");
            if (m.lam.size() != n) bad("wrong length");
            if (!c_dual_.contains(m.lam) || c_.contains(m.lam)) bad("orbit datum not in C^perp \\ C");
            if (tau_orbit_rep(c_, m.lam) != m.lam) bad("orbit datum not canonical");
            break;
        case Sector::TW:
            if (m.twist != 1 && m.twist != 2) bad("twist must be 1 or 2");
            if (m.lam.size() != 0) bad("unexpected fields");
            break;
    }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string field_value(const std::string& part, const std::string& key, const std::string& text) {
    if (part.rfind(key + "=", 0) != 0) throw ParseError("label:" + text);
    return part.substr(key.size() + 1);
}

int small_int(const std::string& s, int lo, int hi, const std::string& text) {
    if (s.size() != 1 || s[0] < '0' + lo || s[0] > '0' + hi) throw ParseError("label:" + text);
    return s[0] - '0';
}

}  // namespace

ModuleLabel CodePair::parse(const std::string& text) const {
    auto parts = split(text, ':');
    ModuleLabel m;
    if (parts.size() == 3 && parts[0] == "U0") {
        m = ModuleLabel::u0(parse_word(Field::F3, field_value(parts[1], "d", text)),
                            small_int(field_value(parts[2], "e", text), 0, 2, text));
        m.del = d_.reduce(m.del);
    } else if (parts.size() == 3 && parts[0] == "UC") {
        m = ModuleLabel::uc(parse_word(Field::F4, field_value(parts[1], "l", text)),
                            parse_word(Field::F3, field_value(parts[2], "d", text)));
        if (m.lam.size() != length()) throw PreconditionError("label " + text + ": wrong length");
        if (!c_dual_.contains(m.lam) || c_.contains(m.lam)) throw PreconditionError("label " + text + ": orbit datum not in C^perp \\ C");
        m.lam = tau_orbit_rep(c_, m.lam);
        m.del = d_.reduce(m.del);
    } else if (parts.size() == 4 && parts[0] == "TW") {
        m = ModuleLabel::tw(small_int(field_value(parts[1], "s", text), 1, 2, text),
                            parse_word(Field::F3, field_value(parts[2], "h", text)),
                            small_int(field_value(parts[3], "e", text), 0, 2, text));
        m.del = d_.reduce(m.del);
    } else {
        throw ParseError("label:" + text);
    }
    if (m.del.size() != length()) throw PreconditionError("label " + text + ": wrong length");
    validate(m);
    return m;
}

std::uint64_t module_count(const CodePair& p) {
    const std::uint64_t s = p.d_quotient();
    return 3 * s + s * (p.c_quotient() - 1) / 3 + 6 * s;
}

std::vector<ModuleLabel> list_modules(const CodePair& p) {
    std::vector<ModuleLabel> out;
    for (const Word& del : p.d_cosets()) {
        for (int e = 0; e < 3; ++e) out.push_back(ModuleLabel::u0(del, e));
        for (const Word& lam : p.nonzero_orbits()) out.push_back(ModuleLabel::uc(lam, del));
        for (int s = 1; s <= 2; ++s)
            for (int e = 0; e < 3; ++e) out.push_back(ModuleLabel::tw(s, del, e));
    }
    std::vector<std::pair<std::string, ModuleLabel>> keyed;
    keyed.reserve(out.size());
    for (auto& m : out) keyed.emplace_back(to_string(m), m);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = keyed[i].second;
    return out;
}

Rational qdim(const ModuleLabel& m, const CodePair& p) {
    p.validate(m);
    switch (m.sector) {
        case Sector::U0: return Rational(1);
        case Sector::UC: return Rational(3);
        case Sector::TW: return Rational(ipow(2, p.length() - 2 * p.dim_c()));
    }
    return {};
}

Rational qdim_via_enumerators(const ModuleLabel& m, const CodePair& p) {
    p.validate(m);
    const int n = p.length();
    const WeightEnumerator wc = weight_enumerator(p.c());
    const WeightEnumerator wp = w_prime(p.c());
    const std::int64_t w0 = w_congruence(n, 0).evaluate(1, 1);
    const WeightEnumerator we = w_congruence(n, m.eps);
    switch (m.sector) {
        case Sector::U0:
            return Rational(we.evaluate(1, 1) + wp.evaluate(1, 1)) / Rational(w0 + wp.evaluate(1, 1));
        case Sector::UC:
            // |C| 3^l = W_C(3,3) and 3^l W'_C(1,1) = W'_C(3,3) by homogeneity.
            return Rational(wc.evaluate(3, 3)) / Rational(w0 + wp.evaluate(3, 3));
        case Sector::TW:
            return Rational(we.evaluate(2, 2)) / Rational(w0 + wp.evaluate(3, 3));
    }
    return {};
}

Rational weight_mod1(const ModuleLabel& m, const CodePair& p) {
    p.validate(m);
    std::int64_t sq = 0;
    for (int i = 0; i < m.del.size(); ++i) sq += m.del[i] * m.del[i];
    switch (m.sector) {
        case Sector::U0:
            return Rational(2 * sq, 3).frac();
        case Sector::TW:
            return Rational(10 * p.length() - 3 * (sq + m.eps), 9).frac();
        case Sector::UC: {
            LatticeBasis frame;
            frame.form = sqrt2a2_form(p.length());
            frame.denom = 36;
            IntVector v = coset_vector(m.lam, m.del);
            return (frame.norm(v) / Rational(2)).frac();
        }
    }
    return {};
}

ModuleLabel contragredient(const ModuleLabel& m, const CodePair& p) {
    p.validate(m);
    const Word minus = p.canon_d(scale(Field::F3, 2, m.del));
    switch (m.sector) {
        case Sector::U0: return ModuleLabel::u0(minus, 3 - m.eps);
        case Sector::UC: return ModuleLabel::uc(m.lam, minus);
        case Sector::TW: return ModuleLabel::tw(3 - m.twist, m.del, m.eps);
    }
    return m;
}

Rational glob_dimension(const CodePair& p) {
    Rational g = 0;
    for (const ModuleLabel& m : list_modules(p)) {
        Rational q = qdim(m, p);
        g += q * q;
    }
    return g;
}

bool verify_glob_conjecture(const CodePair& p) {
    const auto cq = static_cast<std::int64_t>(p.c_quotient());
    const auto dq = static_cast<std::int64_t>(p.d_quotient());
    const Rational glob_v = Rational(cq * dq);
    const Rational g = glob_dimension(p);
    return g == Rational(9 * cq * dq) && g == Rational(9) * glob_v;
}

}  // namespace orbifold
