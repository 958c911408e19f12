#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orbifold/lattice.hpp"
#include "orbifold/registry.hpp"

namespace orbifold {

// Coordinates (v_1..v_6, t, s) over F3 of the fusion group of V^tau_{K12}.
using GroupCoord = std::array<int, 8>;
using F3Matrix = Eigen::Matrix<int, 8, 8>;

inline constexpr int kQuadDim = 8;
inline constexpr std::size_t kQuadSize = 6561;

std::size_t coord_index(const GroupCoord& x);
GroupCoord coord_at(std::size_t index);
GroupCoord coord_add(const GroupCoord& x, const GroupCoord& y);
GroupCoord apply_matrix(const F3Matrix& m, const GroupCoord& x);

// Singular vectors (zero included) of a non-degenerate quadratic form of the
// given type on F_q^{2m}: q^{2m-1} + sign (q^m - q^{m-1}).
std::uint64_t classical_singular_count(int q, int m, int sign);

struct TypeReport {
    std::string type;  // "plus" or "minus"
    std::uint64_t singular = 0;
    std::uint64_t plus_count = 0;
    std::uint64_t minus_count = 0;
};

struct FormItem {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
};

struct SEtaReport {
    bool isometry = false;          // q(eta(a)) = -q(a) for all a
    int dimension = 0;
    bool totally_singular = false;
    Rational min_weight;            // over nonzero elements
    bool recovered = false;         // recover_eta(build_s_eta(eta)) == eta
    bool ok() const { return isometry && dimension == 8 && totally_singular && min_weight == Rational(2) && recovered; }
};

// S_eta as 8 generators (a, eta(a)) in F3^16.
using Subspace = Eigen::Matrix<int, 8, 16>;

// The quadratic space on the 3^8 irreducible V^tau_{K12}-modules, labelled as
// S = U0, T = TW(1), Tcheck = TW(2) over C = hexacode, D = 0.
class QuadSpace {
public:
    QuadSpace();

    const CodePair& pair() const { return pair_; }
    const LatticeBasis& lattice() const { return lattice_; }

    GroupCoord phi(const ModuleLabel& m) const;
    ModuleLabel phi_inverse(const GroupCoord& x) const;

    // 3 <v, v> mod 3 for a representative v of the coset with D-datum a.
    int q_lattice(const Word& a) const;
    // 3 <v, w> for representatives; exact integer.
    Rational inner3(const Word& a, const Word& b) const;

    int qform(const ModuleLabel& m) const;
    int qform(const GroupCoord& x) const { return qtable_[coord_index(x)]; }
    // 2 (q(u w) - q(u) - q(w)) with 2 = 1/2 in F3; B(r, r) = q(r).
    int bform(const ModuleLabel& u, const ModuleLabel& w) const;
    int bform(const GroupCoord& u, const GroupCoord& w) const;
    // q(u w) - q(u) - q(w); polar(r, r) = 2 q(r).
    int polar(const GroupCoord& u, const GroupCoord& w) const;
    F3Matrix polar_gram() const;

    // phi(u w) = phi(u) + phi(w) for u in a generating set and all w, via fuse.
    bool verify_phi() const;
    // B(u, w) = u^T G w / 2 over all pairs.
    bool verify_bilinear() const;
    // The four closed forms for B across sectors, compared exhaustively.
    std::vector<FormItem> verify_form_items() const;

    TypeReport classify_type() const;
    int radical_dim() const;
    // Elements r with B(r, .) = 0, by brute force.
    std::vector<GroupCoord> radical_brute() const;

    Rational min_weight(const GroupCoord& x) const;
    Rational min_weight(const ModuleLabel& m) const { return min_weight(phi(m)); }
    // Half the minimal norm of the lattice coset with D-datum a (a != 0).
    Rational lattice_min_weight(const Word& a) const;
    std::map<Rational, std::uint64_t> weight_histogram() const;

    // An isometry (R, -q) -> (R, q) obtained by diagonalizing both forms.
    F3Matrix construct_eta() const;
    bool is_anti_isometry(const F3Matrix& eta) const;
    Subspace build_s_eta(const F3Matrix& eta) const;
    F3Matrix recover_eta(const Subspace& s) const;
    SEtaReport check_s_eta(const F3Matrix& eta) const;

private:
    CodePair pair_;
    LatticeBasis lattice_;
    LatticeBasis frame_;
    std::vector<int> qtable_;
    std::vector<int> qf_;  // q_F by D-datum index
};

// Inverse over F3; throws PreconditionError when singular.
F3Matrix f3_inverse(const F3Matrix& m);
int f3_rank(Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> m);

}  // namespace orbifold
