#include "orbifold/quadspace.hpp"

#include <algorithm>

#include "orbifold/errors.hpp"
#include "orbifold/fusion.hpp"

namespace orbifold {

namespace {

int m3(int x) { return ((x % 3) + 3) % 3; }

std::size_t word_index(const Word& a) {
    std::size_t k = 0;
    for (int i = a.size() - 1; i >= 0; --i) k = 3 * k + a[i];
    return k;
}

Word word_at(std::size_t k, int n) {
    Word w(n);
    for (int i = 0; i < n; ++i, k /= 3) w[i] = static_cast<Elem>(k % 3);
    return w;
}

GroupCoord unit(int i) {
    GroupCoord e{};
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

}  // namespace

std::size_t coord_index(const GroupCoord& x) {
    std::size_t k = 0;
    for (int i = 7; i >= 0; --i) k = 3 * k + static_cast<std::size_t>(m3(x[static_cast<std::size_t>(i)]));
    return k;
}

GroupCoord coord_at(std::size_t index) {
    GroupCoord x{};
    for (auto& c : x) {
        c = static_cast<int>(index % 3);
        index /= 3;
    }
    return x;
}

GroupCoord coord_add(const GroupCoord& x, const GroupCoord& y) {
    GroupCoord z{};
    for (std::size_t i = 0; i < 8; ++i) z[i] = m3(x[i] + y[i]);
    return z;
}

GroupCoord apply_matrix(const F3Matrix& m, const GroupCoord& x) {
    GroupCoord y{};
    for (int i = 0; i < 8; ++i) {
        int s = 0;
        for (int j = 0; j < 8; ++j) s += m(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = m3(s);
    }
    return y;
}

std::uint64_t classical_singular_count(int q, int m, int sign) {
    const auto qq = static_cast<std::int64_t>(q);
    std::int64_t total = ipow(qq, 2 * m - 1) + sign * (ipow(qq, m) - ipow(qq, m - 1));
    return static_cast<std::uint64_t>(total);
}

int f3_rank(Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> m) {
    m = m.unaryExpr([](int x) { return m3(x); });
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        m.row(piv).swap(m.row(rank));
        const int inv = m(rank, c);  // 1 and 2 are self-inverse mod 3
        m.row(rank) = (m.row(rank) * inv).unaryExpr([](int x) { return m3(x); });
        for (int r = 0; r < m.rows(); ++r)
            if (r != rank && m(r, c) != 0) m.row(r) = (m.row(r) - m(r, c) * m.row(rank)).unaryExpr([](int x) { return m3(x); });
        ++rank;
    }
    return rank;
}

F3Matrix f3_inverse(const F3Matrix& m) {
    Eigen::Matrix<int, 8, 16> a;
    a << m.unaryExpr([](int x) { return m3(x); }), F3Matrix::Identity();
    for (int c = 0; c < 8; ++c) {
        int piv = -1;
        for (int r = c; r < 8; ++r)
            if (a(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw PreconditionError("matrix is singular over F3");
        a.row(piv).swap(a.row(c));
        a.row(c) = (a.row(c) * a(c, c)).unaryExpr([](int x) { return m3(x); });
        for (int r = 0; r < 8; ++r)
            if (r != c && a(r, c) != 0) a.row(r) = (a.row(r) - a(r, c) * a.row(c)).unaryExpr([](int x) { return m3(x); });
    }
    return a.rightCols(8);
}

QuadSpace::QuadSpace()
    : pair_(builtin("hexacode"), builtin("trivial:F3:6")), lattice_(build_lattice(pair_.c(), pair_.d())) {
    frame_.form = sqrt2a2_form(6);
    frame_.denom = 36;
    qf_.resize(729);
    for (std::size_t k = 0; k < 729; ++k) qf_[k] = q_lattice(word_at(k, 6));
    qtable_.resize(kQuadSize);
    for (std::size_t k = 0; k < kQuadSize; ++k) qtable_[k] = qform(phi_inverse(coord_at(k)));
}

GroupCoord QuadSpace::phi(const ModuleLabel& m) const {
    pair_.validate(m);
    GroupCoord x{};
    const int sign = m.sector == Sector::TW && m.twist == 1 ? -1 : 1;
    for (int i = 0; i < 6; ++i) x[static_cast<std::size_t>(i)] = m3(sign * m.del[i]);
    switch (m.sector) {
        case Sector::U0: x[6] = m.eps; x[7] = 0; break;
        case Sector::TW: x[6] = m.twist == 1 ? m.eps : m3(-m.eps); x[7] = m.twist; break;
        case Sector::UC: throw PreconditionError("no UC modules over the hexacode");
    }
    return x;
}

ModuleLabel QuadSpace::phi_inverse(const GroupCoord& x) const {
    Word a(6);
    const int s = m3(x[7]);
    for (int i = 0; i < 6; ++i) a[i] = static_cast<Elem>(m3(s == 1 ? -x[static_cast<std::size_t>(i)] : x[static_cast<std::size_t>(i)]));
    switch (s) {
        case 0: return ModuleLabel::u0(a, m3(x[6]));
        case 1: return ModuleLabel::tw(1, a, m3(x[6]));
        default: return ModuleLabel::tw(2, a, m3(-x[6]));
    }
}

int QuadSpace::q_lattice(const Word& a) const {
    const IntVector v = coset_vector(Word(6), a);
    const Rational n3 = Rational(3) * frame_.norm(v);
    if (!n3.is_integer()) throw std::logic_error("3<a,a> is not an integer");
    return m3(static_cast<int>(n3.num() % 3));
}

Rational QuadSpace::inner3(const Word& a, const Word& b) const {
    return Rational(3) * frame_.inner(coset_vector(Word(6), a), coset_vector(Word(6), b));
}

int QuadSpace::qform(const ModuleLabel& m) const {
    pair_.validate(m);
    const int qa = qf_[word_index(m.del)];
    return m.sector == Sector::U0 ? qa : m3(qa + m.eps + 1);
}

int QuadSpace::bform(const ModuleLabel& u, const ModuleLabel& w) const {
    const FusionVector uw = fuse(u, w, pair_);
    if (uw.size() != 1 || uw.begin()->second != 1) throw std::logic_error("product is not a simple current");
    return m3(2 * (qform(uw.begin()->first) - qform(u) - qform(w)));
}

int QuadSpace::polar(const GroupCoord& u, const GroupCoord& w) const { return m3(qform(coord_add(u, w)) - qform(u) - qform(w)); }

int QuadSpace::bform(const GroupCoord& u, const GroupCoord& w) const { return m3(2 * polar(u, w)); }

F3Matrix QuadSpace::polar_gram() const {
    F3Matrix g;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g(i, j) = polar(unit(i), unit(j));
    return g;
}

bool QuadSpace::verify_phi() const {
    std::vector<char> seen(kQuadSize, 0);
    const auto labels = list_modules(pair_);
    if (labels.size() != kQuadSize) return false;
    for (const ModuleLabel& m : labels) {
        const std::size_t k = coord_index(phi(m));
        if (seen[k] || phi_inverse(phi(m)) != m) return false;
        seen[k] = 1;
    }
    // With associativity of fuse, agreement on generators extends to all products.
    for (int i = 0; i < 8; ++i) {
        const ModuleLabel g = phi_inverse(unit(i));
        for (const ModuleLabel& w : labels) {
            const FusionVector gw = fuse(g, w, pair_);
            if (gw.size() != 1 || gw.begin()->second != 1) return false;
            if (phi(gw.begin()->first) != coord_add(unit(i), phi(w))) return false;
        }
    }
    return true;
}

bool QuadSpace::verify_bilinear() const {
    const F3Matrix g = polar_gram();
    if (g != g.transpose()) return false;
    std::vector<GroupCoord> all(kQuadSize);
    for (std::size_t k = 0; k < kQuadSize; ++k) all[k] = coord_at(k);
    for (std::size_t i = 0; i < kQuadSize; ++i) {
        const GroupCoord gu = apply_matrix(g, all[i]);
        for (std::size_t j = i; j < kQuadSize; ++j) {
            int s = 0;
            for (std::size_t t = 0; t < 8; ++t) s += gu[t] * all[j][t];
            if (m3(s) != polar(all[i], all[j])) return false;
        }
    }
    return true;
}

std::vector<FormItem> QuadSpace::verify_form_items() const {
    // 3<a,b> per coordinate pair, from the lattice frame.
    LatticeBasis one;
    one.form = sqrt2a2_form(1);
    one.denom = 36;
    int c3[3][3];
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const Rational r = Rational(3) * one.inner(coset_vector(0, static_cast<Elem>(j)), coset_vector(0, static_cast<Elem>(k)));
            if (!r.is_integer()) throw std::logic_error("3<a,b> is not an integer");
            c3[j][k] = static_cast<int>(r.num());
        }
    std::vector<FormItem> items{{"S.S = 3<a,b>", 0, 0},
                                {"S.T = 6<a,b> + 2x", 0, 0},
                                {"S.Tcheck = 3<a,b> + x", 0, 0},
                                {"T.T = Tcheck.Tcheck = 3<a,b> + 2(x+y-1)", 0, 0},
                                {"Tcheck.T = T.Tcheck = 6<a,b> + x+y-1", 0, 0}};
    // phi of S^a[x], T^a[x], Tcheck^a[x], indexed by kind, a, x.
    std::vector<GroupCoord> img(3 * 729 * 3);
    auto at = [&](int kind, std::size_t ia, int x) -> const GroupCoord& { return img[(static_cast<std::size_t>(kind) * 729 + ia) * 3 + static_cast<std::size_t>(x)]; };
    for (std::size_t ia = 0; ia < 729; ++ia)
        for (int x = 0; x < 3; ++x) {
            const Word a = word_at(ia, 6);
            img[ia * 3 + static_cast<std::size_t>(x)] = phi(ModuleLabel::u0(a, x));
            img[(729 + ia) * 3 + static_cast<std::size_t>(x)] = phi(ModuleLabel::tw(1, a, x));
            img[(2 * 729 + ia) * 3 + static_cast<std::size_t>(x)] = phi(ModuleLabel::tw(2, a, x));
        }
    auto check = [&](FormItem& it, const GroupCoord& u, const GroupCoord& w, int expect) {
        ++it.checked;
        if (bform(u, w) != m3(expect)) ++it.mismatches;
    };
    for (std::size_t ia = 0; ia < 729; ++ia) {
        const Word a = word_at(ia, 6);
        for (std::size_t ib = 0; ib < 729; ++ib) {
            const Word b = word_at(ib, 6);
            int ab3 = 0;
            for (int i = 0; i < 6; ++i) ab3 += c3[a[i]][b[i]];
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y) {
                    check(items[0], at(0, ia, x), at(0, ib, y), ab3);
                    check(items[1], at(0, ia, x), at(1, ib, y), 2 * ab3 + 2 * x);
                    check(items[2], at(0, ia, x), at(2, ib, y), ab3 + x);
                    check(items[3], at(1, ia, x), at(1, ib, y), ab3 + 2 * (x + y - 1));
                    check(items[3], at(2, ia, x), at(2, ib, y), ab3 + 2 * (x + y - 1));
                    check(items[4], at(2, ia, x), at(1, ib, y), 2 * ab3 + x + y - 1);
                    check(items[4], at(1, ia, x), at(2, ib, y), 2 * ab3 + x + y - 1);
                }
        }
    }
    return items;
}

TypeReport QuadSpace::classify_type() const {
    TypeReport r;
    r.singular = static_cast<std::uint64_t>(std::count(qtable_.begin(), qtable_.end(), 0));
    r.plus_count = classical_singular_count(3, 4, +1);
    r.minus_count = classical_singular_count(3, 4, -1);
    if (r.singular == r.minus_count)
        r.type = "minus";
    else if (r.singular == r.plus_count)
        r.type = "plus";
    else
        throw std::logic_error("singular count matches neither type");
    return r;
}

int QuadSpace::radical_dim() const { return 8 - f3_rank(polar_gram()); }

std::vector<GroupCoord> QuadSpace::radical_brute() const {
    std::vector<GroupCoord> out;
    for (std::size_t k = 0; k < kQuadSize; ++k) {
        const GroupCoord x = coord_at(k);
        bool zero = true;
        for (int i = 0; i < 8 && zero; ++i) zero = bform(x, unit(i)) == 0;
        if (zero) out.push_back(x);
    }
    return out;
}

Rational QuadSpace::min_weight(const GroupCoord& x) const {
    if (coord_index(x) == 0) return Rational(0);
    switch (qform(x)) {
        case 0: return Rational(1);
        case 1: return Rational(2, 3);
        default: return Rational(4, 3);
    }
}

Rational QuadSpace::lattice_min_weight(const Word& a) const {
    if (a.is_zero()) throw PreconditionError("zero coset contains the vacuum");
    return min_norm_coset_auto(lattice_, coset_vector(Word(6), a)) / Rational(2);
}

std::map<Rational, std::uint64_t> QuadSpace::weight_histogram() const {
    std::map<Rational, std::uint64_t> h;
    for (std::size_t k = 0; k < kQuadSize; ++k) ++h[min_weight(coord_at(k))];
    return h;
}

namespace {

// Orthogonal basis for sign*q with diagonal (1, ..., 1, d); columns of the result.
F3Matrix standard_frame(const QuadSpace& qs, int sign, int& last) {
    auto q = [&](const GroupCoord& x) { return m3(sign * qs.qform(x)); };
    auto pol = [&](const GroupCoord& x, const GroupCoord& y) { return m3(sign * qs.polar(x, y)); };
    std::vector<GroupCoord> rest;
    for (int i = 0; i < 8; ++i) rest.push_back(unit(i));
    std::vector<GroupCoord> basis;
    while (!rest.empty()) {
        std::size_t pick = rest.size();
        for (std::size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
            if (q(rest[i]) != 0) pick = i;
        if (pick == rest.size()) {
            for (std::size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
                for (std::size_t j = i + 1; j < rest.size(); ++j)
                    if (pol(rest[i], rest[j]) != 0) {
                        rest[i] = coord_add(rest[i], rest[j]);
                        pick = i;
                        break;
                    }
        }
        if (pick == rest.size()) throw std::logic_error("degenerate form");
        const GroupCoord f = rest[pick];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
        // pol(f, f) = 2 q(f), invertible; project the rest onto f^perp.
        const int inv = m3(2 * q(f)) == 1 ? 1 : 2;
        for (auto& w : rest) {
            const int c = m3(pol(w, f) * inv);
            for (std::size_t t = 0; t < 8; ++t) w[t] = m3(w[t] - c * f[t]);
        }
        basis.push_back(f);
    }
    // Pair up non-square values: 2x^2 + 2y^2 = u^2 + v^2 with u = x+y, v = x-y.
    std::stable_partition(basis.begin(), basis.end(), [&](const GroupCoord& x) { return q(x) == 1; });
    auto first2 = std::find_if(basis.begin(), basis.end(), [&](const GroupCoord& x) { return q(x) == 2; });
    for (auto it = first2; it != basis.end() && std::next(it) != basis.end(); it += 2) {
        const GroupCoord x = *it, y = *std::next(it);
        GroupCoord u{}, v{};
        for (std::size_t t = 0; t < 8; ++t) {
            u[t] = m3(x[t] + y[t]);
            v[t] = m3(x[t] - y[t]);
        }
        *it = u;
        *std::next(it) = v;
    }
    std::stable_partition(basis.begin(), basis.end(), [&](const GroupCoord& x) { return q(x) == 1; });
    last = q(basis.back());
    F3Matrix m;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) m(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
}

}  // namespace

F3Matrix QuadSpace::construct_eta() const {
    int dplus = 0, dminus = 0;
    const F3Matrix fplus = standard_frame(*this, 1, dplus);
    const F3Matrix fminus = standard_frame(*this, -1, dminus);
    if (dplus != dminus) throw std::logic_error("q and -q have different discriminants");
    const F3Matrix eta = (fplus * f3_inverse(fminus)).unaryExpr([](int x) { return m3(x); });
    if (!is_anti_isometry(eta)) throw std::logic_error("constructed map is not an isometry");
    return eta;
}

bool QuadSpace::is_anti_isometry(const F3Matrix& eta) const {
    if (f3_rank(eta) != 8) return false;
    for (std::size_t k = 0; k < kQuadSize; ++k) {
        const GroupCoord x = coord_at(k);
        if (qform(apply_matrix(eta, x)) != m3(-qform(x))) return false;
    }
    return true;
}

Subspace QuadSpace::build_s_eta(const F3Matrix& eta) const {
    Subspace s;
    s.leftCols(8) = F3Matrix::Identity();
    s.rightCols(8) = eta.transpose().unaryExpr([](int x) { return m3(x); });
    return s;
}

F3Matrix QuadSpace::recover_eta(const Subspace& s) const {
    const F3Matrix p1 = s.leftCols(8);
    const F3Matrix p2 = s.rightCols(8);
    if (f3_rank(p1) != 8) throw PreconditionError("first projection of S is not injective");
    return (p2.transpose() * f3_inverse(p1.transpose())).unaryExpr([](int x) { return m3(x); });
}

SEtaReport QuadSpace::check_s_eta(const F3Matrix& eta) const {
    SEtaReport r;
    r.isometry = is_anti_isometry(eta);
    const Subspace s = build_s_eta(eta);
    r.dimension = f3_rank(s);
    r.totally_singular = true;
    bool first = true;
    for (std::size_t k = 0; k < kQuadSize; ++k) {
        const GroupCoord a = coord_at(k);
        const GroupCoord b = apply_matrix(eta, a);
        if (m3(qform(a) + qform(b)) != 0) r.totally_singular = false;
        if (k == 0) continue;
        const Rational w = min_weight(a) + min_weight(b);
        if (first || w < r.min_weight) r.min_weight = w;
        first = false;
    }
    r.recovered = recover_eta(s) == eta.unaryExpr([](int x) { return m3(x); });
    return r;
}

}  // namespace orbifold
