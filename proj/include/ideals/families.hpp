#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ideals/graph.hpp"

// Label-class combinatorics for G_n(Z_m). Vertices with label D form the
// class W_D; cliques correspond exactly to unions of classes over an
// intersecting family of nonempty subsets of S', which makes the clique
// number an exact optimization over maximal intersecting families. Pairing
// classes with their complements yields the matching coloring.

namespace ideals {

inline constexpr unsigned kDefaultFamilyLimit = 6;       // max s' for family search
inline constexpr std::size_t kDefaultOmegaOracleLimit = 512;  // non-isolated vertices
inline constexpr std::size_t kDefaultChiOracleLimit = 64;     // non-isolated vertices

/// Thrown when an exact search is asked to run past its configured limit.
class LimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Class sizes |W_D| for every D ⊆ S'. Masks are compressed: bit k stands
/// for the k-th smallest element of S'.
class FamilyWeightTable {
public:
    /// Closed-form table: |W_D| = prod_{i in D} beta_i * prod_{i in S\D}
    /// (alpha_i - beta_i + 1), minus 1 when D = S' (excludes d = 1), minus 1
    /// when D = {} (excludes d = m).
    static FamilyWeightTable closed_form(const ModulePair& pair);

    const ModulePair& pair() const { return pair_; }
    std::uint32_t subset_count() const { return std::uint32_t(weights_.size()); }
    std::uint64_t weight(std::uint32_t compressed_mask) const { return weights_[compressed_mask]; }
    std::uint64_t total() const;

private:
    explicit FamilyWeightTable(ModulePair pair) : pair_(std::move(pair)) {}
    ModulePair pair_;
    std::vector<std::uint64_t> weights_;  // indexed by compressed mask
};

/// Collection of nonempty compressed label masks, pairwise intersecting.
struct IntersectingFamily {
    std::vector<std::uint32_t> sets;  // sorted ascending

    bool is_intersecting() const;
};

/// Vertices of a clique, identified by their divisor values.
struct CliqueCertificate {
    std::vector<std::uint64_t> members;

    std::size_t size() const { return members.size(); }
};

/// Per-vertex colors aligned with the deterministic vertex order of
/// IdealGraph::build for the same m.
struct ColoringCertificate {
    std::vector<int> colors;
    int color_count = 0;
    bool pairing_complete = true;  // false when the greedy fallback had to extend
};

struct OmegaFamilyResult {
    std::uint64_t omega = 0;
    IntersectingFamily family;
    CliqueCertificate clique;
};

/// Exact clique number as the max of sum |W_D| over intersecting families,
/// by backtracking over complement pairs. An edgeless nonempty graph reports
/// omega = 1 with a single-vertex clique; the empty graph reports 0.
/// Throws LimitError when s' exceeds the limit.
OmegaFamilyResult omega_via_families(const ModulePair& pair, unsigned s_prime_limit = kDefaultFamilyLimit);

struct OmegaOracleResult {
    std::uint64_t omega = 0;
    CliqueCertificate clique;
};

/// Exact clique number by branch-and-bound on the adjacency matrix,
/// independent of the family machinery. Throws LimitError when the graph has
/// more than vertex_limit non-isolated vertices.
OmegaOracleResult omega_oracle(const IdealGraph& g, std::size_t vertex_limit = kDefaultOmegaOracleLimit);

/// max{beta_j * prod_{i != j}(alpha_i + 1) - 1 : beta_j != 0}.
std::uint64_t omega_lower_bound(const ModulePair& pair);

/// Coloring built from the omega-maximizing family: W_Gamma gets distinct
/// colors, each class outside Gamma maps injectively into the colors of its
/// complement class, label-empty vertices reuse color 0. Always returns a
/// verified proper coloring; when alpha_i <= 2*beta_i - 1 holds on S' the
/// color count equals the clique number.
ColoringCertificate chi_via_pairing(const ModulePair& pair, unsigned s_prime_limit = kDefaultFamilyLimit);

struct ChiOracleResult {
    int chi = 0;
    ColoringCertificate coloring;
};

/// Exact chromatic number: clique lower bound, greedy upper bound, then
/// DSATUR-style backtracking between them. Throws LimitError past the limit.
ChiOracleResult chi_oracle(const IdealGraph& g, std::size_t vertex_limit = kDefaultChiOracleLimit);

/// 2^(s'-1) * prod_{i in S'} beta_i * prod_{i in S\S'} (alpha_i + 1) - 1
/// when alpha_i = 2*beta_i - 1 for every i in S'; nullopt otherwise.
/// In that regime the value is both the clique and the chromatic number.
std::optional<std::uint64_t> omega_chi_closed_form(const ModulePair& pair);

/// True iff the coloring is proper for the graph.
bool verify_coloring(const IdealGraph& g, const ColoringCertificate& c);

/// True iff the listed divisors are pairwise adjacent vertices of G_n(Z_m).
bool verify_clique(const ModulePair& pair, const CliqueCertificate& c);

}  // namespace ideals
