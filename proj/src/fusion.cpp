#include "orbifold/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "orbifold/errors.hpp"

namespace orbifold {

int xi(int n) { return ((n % 3) + 3) % 3 == 0 ? 2 : -1; }

namespace {

void add_term(FusionVector& v, const ModuleLabel& m, std::uint64_t k) {
    if (k != 0) v[m] += k;
}

Word f3_add(const Word& a, const Word& b) { return add(Field::F3, a, b); }
Word f3_scale(int s, const Word& a) { return scale(Field::F3, static_cast<Elem>(((s % 3) + 3) % 3), a); }

bool before(const ModuleLabel& a, const ModuleLabel& b) {
    if (a.sector != b.sector) return a.sector < b.sector;
    return a.twist <= b.twist;
}

FusionVector fuse_ordered(const ModuleLabel& a, const ModuleLabel& b, const CodePair& p) {
    FusionVector out;
    if (a.sector == Sector::U0) {
        const Word del = p.canon_d(f3_add(a.del, b.del));
        switch (b.sector) {
            case Sector::U0: add_term(out, ModuleLabel::u0(del, a.eps + b.eps), 1); break;
            case Sector::UC: add_term(out, ModuleLabel::uc(b.lam, del), 1); break;
            case Sector::TW: {
                const int i = b.twist;
                add_term(out, ModuleLabel::tw(i, p.canon_d(f3_add(b.del, f3_scale(-i, a.del))), i * a.eps + b.eps), 1);
                break;
            }
        }
        return out;
    }
    if (a.sector == Sector::UC && b.sector == Sector::UC) {
        const Word del = p.canon_d(f3_add(a.del, b.del));
        int degenerate = 0;
        Elem w = 1;
        for (int h = 0; h < 3; ++h, w = mul(Field::F4, w, kOmega)) {
            const Word mu = add(Field::F4, a.lam, scale(Field::F4, w, b.lam));
            if (p.c().contains(mu)) {
                ++degenerate;
                for (int e = 0; e < 3; ++e) add_term(out, ModuleLabel::u0(del, e), 1);
            } else {
                add_term(out, ModuleLabel::uc(p.canon_orbit(mu), del), 1);
            }
        }
        if (degenerate > 1) throw std::logic_error("two degenerate summands in UC x UC");
        return out;
    }
    if (a.sector == Sector::UC) {
        const int i = b.twist;
        const Word eta = p.canon_d(f3_add(b.del, f3_scale(-i, a.del)));
        for (int r = 0; r < 3; ++r) add_term(out, ModuleLabel::tw(i, eta, r), 1);
        return out;
    }
    // Both twisted.
    if (a.twist != b.twist) {
        const Word diff = p.canon_d(f3_add(b.del, f3_scale(-1, a.del)));
        add_term(out, ModuleLabel::u0(diff, a.eps - b.eps), 1);
        for (const Word& g : p.nonzero_orbits()) add_term(out, ModuleLabel::uc(g, diff), 1);
        return out;
    }
    const auto coeff = twisted_coefficients(p.length(), p.dim_c());
    const Word eta = p.canon_d(f3_scale(-1, f3_add(a.del, b.del)));
    for (int e = 0; e < 3; ++e) add_term(out, ModuleLabel::tw(3 - a.twist, eta, e - a.eps - b.eps), coeff[static_cast<std::size_t>(e)]);
    return out;
}

}  // namespace

FusionVector fuse(const ModuleLabel& a, const ModuleLabel& b, const CodePair& p) {
    p.validate(a);
    p.validate(b);
    return before(a, b) ? fuse_ordered(a, b, p) : fuse_ordered(b, a, p);
}

FusionVector fuse(const FusionVector& a, const FusionVector& b, const CodePair& p) {
    FusionVector out;
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b)
            for (const auto& [z, k] : fuse(x, y, p)) add_term(out, z, m * n * k);
    return out;
}

Rational qdim(const FusionVector& v, const CodePair& p) {
    Rational s = 0;
    for (const auto& [m, k] : v) s += Rational(static_cast<std::int64_t>(k)) * qdim(m, p);
    return s;
}

std::string to_string(const FusionVector& v) {
    std::vector<std::pair<std::string, std::uint64_t>> terms;
    for (const auto& [m, k] : v) terms.emplace_back(to_string(m), k);
    std::sort(terms.begin(), terms.end());
    std::string s;
    for (const auto& [l, k] : terms) {
        if (!s.empty()) s += " + ";
        if (k != 1) s += std::to_string(k) + "*";
        s += l;
    }
    return s.empty() ? "0" : s;
}

std::array<std::uint64_t, 3> twisted_coefficients(int length, int dim) {
    const int k = length - 2 * dim;
    if (k < 0) throw PreconditionError("2d > l");
    const std::int64_t top = ipow(2, k);
    const std::int64_t sign = length % 2 == 0 ? 1 : -1;
    std::array<std::uint64_t, 3> c{};
    for (int e = 0; e < 3; ++e) {
        const std::int64_t n = top + sign * xi(length - e);
        if (n < 0 || n % 3 != 0) throw std::logic_error("non-integral twisted coefficient");
        c[static_cast<std::size_t>(e)] = static_cast<std::uint64_t>(n / 3);
    }
    return c;
}

std::array<std::uint64_t, 3> solve_twisted_system(int length, int dim) {
    const int k = length - 2 * dim;
    if (k < 0) throw PreconditionError("2d > l");
    if (k > 24) throw GuardError("l - 2d > 24");
    const __int128 s = static_cast<__int128>(1) << k;
    const __int128 e2 = (s * s - 1) / 3;
    std::vector<std::array<std::uint64_t, 3>> found;
    for (__int128 z = 0; z <= s; ++z) {
        const __int128 sum = s - z;          // x + y
        const __int128 prod = e2 - z * sum;  // xy
        const __int128 disc = sum * sum - 4 * prod;
        if (prod < 0 || disc < 0) continue;
        auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(disc)));
        while (r * r > disc) --r;
        while ((r + 1) * (r + 1) <= disc) ++r;
        if (r * r != disc || (sum + r) % 2 != 0) continue;
        const __int128 x = (sum + r) / 2, y = (sum - r) / 2;
        if (y < 0 || x * x + y * y + z * z != e2 + 1) continue;
        std::array<std::uint64_t, 3> sol{static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y), static_cast<std::uint64_t>(z)};
        std::sort(sol.begin(), sol.end(), std::greater<>());
        found.push_back(sol);
    }
    if (found.empty()) throw std::logic_error("twisted system has no solution");
    for (const auto& f : found)
        if (f != found.front()) throw std::logic_error("twisted system solution not unique");
    return found.front();
}

bool FusionMatrix::is_permutation() const {
    std::vector<int> hits(labels.size(), 0);
    for (const auto& row : rows) {
        if (row.size() != 1 || row[0].second != 1) return false;
        ++hits[row[0].first];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool FusionMatrix::is_identity() const {
    for (std::size_t b = 0; b < rows.size(); ++b)
        if (rows[b].size() != 1 || rows[b][0].first != b || rows[b][0].second != 1) return false;
    return true;
}

FusionMatrix fusion_matrix(const ModuleLabel& a, const CodePair& p) {
    if (module_count(p) > kMaxMatrixLabels) throw GuardError("fusion matrix needs at most 10000 labels");
    FusionMatrix m;
    m.labels = list_modules(p);
    std::map<ModuleLabel, std::size_t> index;
    for (std::size_t i = 0; i < m.labels.size(); ++i) index[m.labels[i]] = i;
    m.rows.resize(m.labels.size());
    for (std::size_t b = 0; b < m.labels.size(); ++b) {
        for (const auto& [c, k] : fuse(a, m.labels[b], p)) m.rows[b].emplace_back(index.at(c), k);
        std::sort(m.rows[b].begin(), m.rows[b].end());
    }
    return m;
}

std::vector<FusionEntry> fusion_table(const CodePair& p) {
    if (module_count(p) > kMaxTableLabels) throw GuardError("fusion table needs at most 400 labels");
    const auto labels = list_modules(p);
    std::vector<FusionEntry> out;
    out.reserve(labels.size() * labels.size());
    for (const auto& a : labels)
        for (const auto& b : labels) out.push_back({a, b, fuse(a, b, p)});
    return out;
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

void fail(CheckResult& r, std::string what) {
    ++r.failures;
    if (r.counterexamples.size() < kMaxCounterexamples * 4) r.counterexamples.push_back(std::move(what));
}

void finish(CheckResult& r) {
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    r.counterexamples.erase(std::unique(r.counterexamples.begin(), r.counterexamples.end()), r.counterexamples.end());
    if (r.counterexamples.size() > kMaxCounterexamples) r.counterexamples.resize(kMaxCounterexamples);
}

void merge(CheckResult& into, CheckResult&& part) {
    into.checked += part.checked;
    into.failures += part.failures;
    for (auto& s : part.counterexamples) into.counterexamples.push_back(std::move(s));
}

std::string tuple_str(std::initializer_list<const ModuleLabel*> ls) {
    std::string s = "(";
    for (const ModuleLabel* l : ls) {
        if (s.size() > 1) s += ", ";
        s += to_string(*l);
    }
    return s + ")";
}

// Products of label pairs, memoized in full mode.
class Products {
public:
    Products(const CodePair& p, const std::vector<ModuleLabel>& labels, bool cache) : p_(p), labels_(labels) {
        for (std::size_t i = 0; i < labels.size(); ++i) index_[labels[i]] = i;
        if (!cache) return;
        table_.resize(labels.size() * labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j) table_[i * labels.size() + j] = fuse(labels[i], labels[j], p);
    }

    FusionVector get(const ModuleLabel& a, const ModuleLabel& b) const {
        if (table_.empty()) return fuse(a, b, p_);
        return table_[index_.at(a) * labels_.size() + index_.at(b)];
    }

    FusionVector get(const FusionVector& a, const ModuleLabel& b) const {
        FusionVector out;
        for (const auto& [x, m] : a)
            for (const auto& [z, k] : get(x, b)) out[z] += m * k;
        return out;
    }

    FusionVector get(const ModuleLabel& a, const FusionVector& b) const {
        FusionVector out;
        for (const auto& [y, n] : b)
            for (const auto& [z, k] : get(a, y)) out[z] += n * k;
        return out;
    }

private:
    const CodePair& p_;
    const std::vector<ModuleLabel>& labels_;
    std::map<ModuleLabel, std::size_t> index_;
    std::vector<FusionVector> table_;
};

std::uint64_t coefficient(const FusionVector& v, const ModuleLabel& m) {
    auto it = v.find(m);
    return it == v.end() ? 0 : it->second;
}

template <class Work>
CheckResult run_parallel(const std::string& name, std::size_t n, unsigned threads, Work work) {
    CheckResult total;
    total.name = name;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<CheckResult> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) work(i, parts[t]);
        });
    for (auto& th : pool) th.join();
    for (auto& part : parts) merge(total, std::move(part));
    finish(total);
    return total;
}

}  // namespace

VerifyReport verify_suite(const CodePair& p, const VerifyOptions& opt) {
    const auto labels = list_modules(p);
    const std::size_t n = labels.size();
    if (opt.full && n > kMaxFullLabels) throw GuardError("full verification needs at most 100 labels");
    VerifyReport rep;
    rep.mode = opt.full ? "full" : "sampled:" + std::to_string(opt.samples);
    rep.seed = opt.seed;
    rep.labels = n;
    rep.c_self_dual = p.c_self_dual();
    const unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    const Products prod(p, labels, opt.full);
    const ModuleLabel vac = p.vacuum();

    // Pairs and triples under test, as label indices.
    std::vector<std::array<std::size_t, 2>> pairs;
    std::vector<std::array<std::size_t, 3>> triples;
    if (opt.full) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pairs.push_back({i, j});
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::uint64_t s = 0; s < opt.samples; ++s) pairs.push_back({pick(rng), pick(rng)});
        for (std::uint64_t s = 0; s < opt.samples; ++s) triples.push_back({pick(rng), pick(rng), pick(rng)});
    }

    rep.checks.push_back(run_parallel("vacuum unit", n, threads, [&](std::size_t i, CheckResult& r) {
        const ModuleLabel& a = labels[i];
        ++r.checked;
        const FusionVector unit{{a, 1}};
        if (prod.get(vac, a) != unit || prod.get(a, vac) != unit) fail(r, tuple_str({&a}));
    }));

    rep.checks.push_back(run_parallel("commutativity", pairs.size(), threads, [&](std::size_t k, CheckResult& r) {
        const ModuleLabel &a = labels[pairs[k][0]], &b = labels[pairs[k][1]];
        ++r.checked;
        if (prod.get(a, b) != prod.get(b, a)) fail(r, tuple_str({&a, &b}));
    }));

    const std::size_t ntriples = opt.full ? n * n * n : triples.size();
    rep.checks.push_back(run_parallel("associativity", ntriples, threads, [&](std::size_t k, CheckResult& r) {
        std::size_t i, j, l;
        if (opt.full) {
            i = k / (n * n);
            j = (k / n) % n;
            l = k % n;
        } else {
            i = triples[k][0];
            j = triples[k][1];
            l = triples[k][2];
        }
        const ModuleLabel &a = labels[i], &b = labels[j], &c = labels[l];
        ++r.checked;
        if (prod.get(prod.get(a, b), c) != prod.get(a, prod.get(b, c))) fail(r, tuple_str({&a, &b, &c}));
    }));

    rep.checks.push_back(run_parallel("duality", pairs.size(), threads, [&](std::size_t k, CheckResult& r) {
        const ModuleLabel &a = labels[pairs[k][0]], &b = labels[pairs[k][1]];
        const FusionVector ab = prod.get(a, b), ba = prod.get(b, a);
        const ModuleLabel bd = contragredient(b, p);
        for (const auto& [c, m] : ab) {
            ++r.checked;
            const ModuleLabel cd = contragredient(c, p);
            if (coefficient(ba, c) != m || coefficient(prod.get(a, cd), bd) != m) fail(r, tuple_str({&a, &b, &c}));
        }
    }));

    rep.checks.push_back(run_parallel("vacuum in a x a'", n, threads, [&](std::size_t i, CheckResult& r) {
        const ModuleLabel& a = labels[i];
        ++r.checked;
        if (coefficient(prod.get(a, contragredient(a, p)), vac) != 1) fail(r, tuple_str({&a}));
    }));

    rep.checks.push_back(run_parallel("qdim multiplicative", pairs.size(), threads, [&](std::size_t k, CheckResult& r) {
        const ModuleLabel &a = labels[pairs[k][0]], &b = labels[pairs[k][1]];
        ++r.checked;
        if (qdim(prod.get(a, b), p) != qdim(a, p) * qdim(b, p)) fail(r, tuple_str({&a, &b}));
    }));

    if (p.c_self_dual()) {
        rep.checks.push_back(run_parallel("group closure", pairs.size(), threads, [&](std::size_t k, CheckResult& r) {
            const ModuleLabel &a = labels[pairs[k][0]], &b = labels[pairs[k][1]];
            ++r.checked;
            const FusionVector ab = prod.get(a, b);
            if (ab.size() != 1 || ab.begin()->second != 1) fail(r, tuple_str({&a, &b}));
        }));
        rep.checks.push_back(run_parallel("order divides 3", n, threads, [&](std::size_t i, CheckResult& r) {
            const ModuleLabel& a = labels[i];
            ++r.checked;
            const FusionVector a3 = prod.get(prod.get(a, a), a);
            if (a3 != FusionVector{{vac, 1}}) fail(r, tuple_str({&a}));
        }));
        std::uint64_t exponent = 1;
        for (const ModuleLabel& a : labels) {
            FusionVector x{{a, 1}};
            std::uint64_t k = 1;
            while (x != FusionVector{{vac, 1}} && k <= n) {
                x = prod.get(x, a);
                ++k;
            }
            exponent = std::lcm(exponent, k);
        }
        rep.group_exponent = exponent;
        rep.checks.push_back(run_parallel("inverse is contragredient", n, threads, [&](std::size_t i, CheckResult& r) {
            const ModuleLabel& a = labels[i];
            ++r.checked;
            if (prod.get(a, contragredient(a, p)) != FusionVector{{vac, 1}}) fail(r, tuple_str({&a}));
        }));
        CheckResult order;
        order.name = "group order 9|D^perp/D|";
        order.checked = 1;
        if (n != 9 * p.d_quotient()) fail(order, std::to_string(n));
        rep.checks.push_back(order);
    } else {
        rep.notes.push_back("TW(1) x TW(2) products include UC summands with D-coset eta2 - eta1; this branch only occurs when C is not self-dual");
    }
    return rep;
}

}  // namespace orbifold
