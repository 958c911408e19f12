#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbifold/registry.hpp"

namespace orbifold {

// Formal nonnegative combination of labels; zero coefficients are never stored.
using FusionVector = std::map<ModuleLabel, std::uint64_t>;

// xi^n + xi^{2n} for a primitive cube root of unity xi.
int xi(int n);

FusionVector fuse(const ModuleLabel& a, const ModuleLabel& b, const CodePair& p);
FusionVector fuse(const FusionVector& a, const FusionVector& b, const CodePair& p);
Rational qdim(const FusionVector& v, const CodePair& p);
std::string to_string(const FusionVector& v);

// coeff(eps) = (2^{l-2d} + (-1)^l Xi(l - eps)) / 3 for the same-sector twisted product.
std::array<std::uint64_t, 3> twisted_coefficients(int length, int dim);
// The nonnegative solution {x, y, z} of x+y+z = 2^k, xy+yz+zx = (4^k-1)/3,
// x^2+y^2+z^2 = xy+yz+zx+1 with k = l - 2d, sorted descending.
std::array<std::uint64_t, 3> solve_twisted_system(int length, int dim);

inline constexpr std::size_t kMaxMatrixLabels = 10000;

// Sparse N(a): rows[b] lists (c, N(a,b;c)) with indices into `labels`.
struct FusionMatrix {
    std::vector<ModuleLabel> labels;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows;
    bool is_permutation() const;
    bool is_identity() const;
};
FusionMatrix fusion_matrix(const ModuleLabel& a, const CodePair& p);

struct FusionEntry {
    ModuleLabel a, b;
    FusionVector result;
};
inline constexpr std::size_t kMaxTableLabels = 400;
// Every ordered pair (a, b) in list order.
std::vector<FusionEntry> fusion_table(const CodePair& p);

struct CheckResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> counterexamples;  // sorted, capped
    bool ok() const { return failures == 0; }
};

struct VerifyOptions {
    bool full = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 picks hardware concurrency
};

struct VerifyReport {
    std::string mode;
    std::uint64_t seed = 0;
    std::size_t labels = 0;
    bool c_self_dual = false;
    std::uint64_t group_exponent = 0;  // self-dual C only: lcm of label orders
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool ok() const;
};

inline constexpr std::size_t kMaxFullLabels = 100;
VerifyReport verify_suite(const CodePair& p, const VerifyOptions& opt);

}  // namespace orbifold
