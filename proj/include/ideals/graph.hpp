#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ideals/arith.hpp"

// Construction of G_n(Z_m): the graph on the nontrivial ideals dZ_m of Z_m
// (d | m, d != 1, m) where d1Z_m ~ d2Z_m iff n does not divide lcm(d1, d2).
// Requires n | m so that Z_n is a Z_m-module. Also a truncated finite window
// of the analogous graph over Z, plus the metric invariants of both.

namespace ideals {

/// Symmetric irreflexive adjacency matrix backed by 64-bit words.
class BitMatrix {
public:
    explicit BitMatrix(std::size_t n)
        : n_(n), words_(n == 0 ? 1 : (n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }

    bool edge(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    void set_edge(std::size_t i, std::size_t j);

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits_.data() + i * words_, words_};
    }

    std::size_t words_per_row() const { return words_; }
    std::size_t degree(std::size_t i) const;
    std::size_t edge_count() const;
    std::vector<std::size_t> neighbors(std::size_t i) const;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Validated (m, n) pair with n | m. n's exponents are index-aligned to m's
/// primes (beta[i] = 0 where the i-th prime of m does not divide n).
struct ModulePair {
    Factorization m_fact;
    ExponentVec beta;              // aligned exponents of n
    std::uint64_t n_value = 0;
    std::uint32_t s_prime_mask = 0;  // bit i set iff beta[i] != 0 (0-based)
    unsigned s_prime = 0;            // popcount of s_prime_mask

    /// Throws std::invalid_argument if m < 2, n < 2, or n does not divide m
    /// (message "n must divide m").
    static ModulePair create(std::uint64_t m, std::uint64_t n);

    std::uint64_t m() const { return m_fact.value(); }
    std::uint64_t n() const { return n_value; }
    std::size_t s() const { return m_fact.prime_count(); }

    /// Label D_d = {i : r[i] < beta[i]} as a bitmask over m's prime indices.
    std::uint32_t label_of(const ExponentVec& r) const;

    /// Pack a label (subset of S') into s' contiguous bits, and back.
    std::uint32_t compress_label(std::uint32_t global) const;
    std::uint32_t expand_label(std::uint32_t compressed) const;
};

struct DivisorVertex {
    ExponentVec exps;       // r, aligned to m's primes
    std::uint64_t value;    // d
    std::uint32_t label;    // D_d bitmask, always a subset of s_prime_mask
};

/// Diameter over the whole vertex set: no vertices at all, a finite value,
/// or infinity (any disconnection, including isolated vertices).
struct Diameter {
    enum class Kind { empty, finite, infinite };
    Kind kind = Kind::empty;
    int value = 0;

    static Diameter empty() { return {Kind::empty, 0}; }
    static Diameter finite(int v) { return {Kind::finite, v}; }
    static Diameter infinite() { return {Kind::infinite, 0}; }
    bool is_finite() const { return kind == Kind::finite; }
    bool operator==(const Diameter&) const = default;
};

struct GraphStats {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::size_t> degree_sequence;  // sorted non-increasing
    bool is_regular = false;
    bool is_complete = false;
    bool is_connected = false;
    std::size_t components = 0;
    Diameter diameter;
    std::optional<int> girth;  // nullopt = no cycle
    std::size_t isolated_count = 0;
};

class IdealGraph {
public:
    /// Build G_n(Z_m). Vertex order is ascending lexicographic on exponent
    /// vectors, so it is the same for every n with the same m.
    static IdealGraph build(std::uint64_t m, std::uint64_t n);
    static IdealGraph build(ModulePair pair);

    const ModulePair& pair() const { return pair_; }
    const std::vector<DivisorVertex>& vertices() const { return vertices_; }
    const BitMatrix& adjacency() const { return adj_; }

    /// Indices of the degree-0 vertices.
    std::vector<std::size_t> isolated_vertices() const;

    Diameter diameter() const { return stats().diameter; }
    std::optional<int> girth() const { return stats().girth; }

    /// Full invariant record, computed once on first use and cached.
    const GraphStats& stats() const;

    IdealGraph(IdealGraph&&) = default;
    IdealGraph& operator=(IdealGraph&&) = default;

private:
    IdealGraph(ModulePair pair, std::vector<DivisorVertex> vertices, BitMatrix adj);

    ModulePair pair_;
    std::vector<DivisorVertex> vertices_;
    BitMatrix adj_;

    struct StatsCache {
        std::once_flag once;
        GraphStats stats;
    };
    mutable std::unique_ptr<StatsCache> cache_;
};

/// Finite window of the intersection graph over Z with module Z_n:
/// vertices kZ for 2 <= k <= bound, k1 ~ k2 iff n does not divide lcm(k1, k2).
struct TruncatedZGraph {
    std::uint64_t n = 0;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> vertices;  // 2..bound
    BitMatrix adj{0};

    GraphStats stats() const;
};

TruncatedZGraph build_truncated_z_graph(std::uint64_t n, std::uint64_t bound);

// Stats machinery shared by both graph kinds.
std::size_t component_count(const BitMatrix& adj);
Diameter diameter_of(const BitMatrix& adj);
std::optional<int> girth_of(const BitMatrix& adj);
GraphStats compute_stats(const BitMatrix& adj);

}  // namespace ideals
