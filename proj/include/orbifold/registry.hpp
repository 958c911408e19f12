#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "orbifold/codes.hpp"
#include "orbifold/rational.hpp"

namespace orbifold {

enum class Sector : std::uint8_t { U0, UC, TW };

// Irreducible module of the orbifold, identified by canonical coset data:
//   U0: V_{C x (del + D)}[eps]
//   UC: V_{(lam + C) x (del + D)}, lam a canonical nonzero tau-orbit representative
//   TW: the tau^twist-twisted module with eta = del, eigenspace eps
// Unused fields stay zero so that structural comparison is label equality.
struct ModuleLabel {
    Sector sector = Sector::U0;
    std::uint8_t twist = 0;
    std::uint8_t eps = 0;
    Word lam;
    Word del;

    static ModuleLabel u0(const Word& del, int eps);
    static ModuleLabel uc(const Word& lam, const Word& del);
    static ModuleLabel tw(int twist, const Word& eta, int eps);

    friend bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
    friend std::strong_ordering operator<=>(const ModuleLabel&, const ModuleLabel&) = default;
};

// Text grammar: U0:d=<vec>:e=<0|1|2>, UC:l=<vec>:d=<vec>, TW:s=<1|2>:h=<vec>:e=<0|1|2>.
std::string to_string(const ModuleLabel& m);

// Validated pair (C, D) with the coset data every label operation needs.
class CodePair {
public:
    CodePair(LinearCode c, LinearCode d);

    const LinearCode& c() const { return c_; }
    const LinearCode& d() const { return d_; }
    int length() const { return c_.length(); }
    int dim_c() const { return c_.dim(); }
    bool c_self_dual() const { return c_quotient_ == 1; }
    std::uint64_t c_quotient() const { return c_quotient_; }
    std::uint64_t d_quotient() const { return d_quotient_; }
    const std::vector<Word>& d_cosets() const { return d_cosets_; }
    const std::vector<Word>& nonzero_orbits() const { return orbits_; }

    Word canon_d(const Word& x) const { return d_.reduce(x); }
    Word canon_orbit(const Word& x) const { return tau_orbit_rep(c_, x); }

    ModuleLabel vacuum() const;
    // Throws PreconditionError when the label does not belong to this pair.
    void validate(const ModuleLabel& m) const;
    ModuleLabel parse(const std::string& text) const;

private:
    LinearCode c_, d_, c_dual_, d_dual_;
    std::uint64_t c_quotient_ = 1, d_quotient_ = 1;
    std::vector<Word> d_cosets_;
    std::vector<Word> orbits_;
};

// 3s + s(|C^perp/C| - 1)/3 + 6s with s = |D^perp/D|.
std::uint64_t module_count(const CodePair& p);
// All labels, sorted by their text form.
std::vector<ModuleLabel> list_modules(const CodePair& p);

Rational qdim(const ModuleLabel& m, const CodePair& p);
Rational qdim_via_enumerators(const ModuleLabel& m, const CodePair& p);
Rational weight_mod1(const ModuleLabel& m, const CodePair& p);
ModuleLabel contragredient(const ModuleLabel& m, const CodePair& p);

Rational glob_dimension(const CodePair& p);
// glob(V^tau) = 9 |C^perp/C| |D^perp/D| = 9 glob(V_{L_{C x D}}).
bool verify_glob_conjecture(const CodePair& p);

}  // namespace orbifold
