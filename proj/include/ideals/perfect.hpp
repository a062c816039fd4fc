#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ideals/graph.hpp"

// Perfectness of G_n(Z_m): the closed-form criterion (s' <= 4) next to an
// independent bounded search for induced odd holes and antiholes, which is
// what perfection means by the strong perfect graph characterization.

namespace ideals {

inline constexpr int kDefaultHoleLimit = 9;

/// G_n(Z_m) is perfect exactly when n has at most four distinct prime divisors.
bool is_perfect_closed_form(const ModulePair& pair);

/// Shortest induced odd cycle with length in [5, max_len], as vertex indices
/// in cycle order, or nullopt if none exists within the bound. max_len must
/// be odd and >= 5. Deterministic: canonical starts, ascending neighbors.
std::optional<std::vector<std::size_t>> find_odd_hole(const BitMatrix& adj, int max_len = kDefaultHoleLimit);
std::optional<std::vector<std::size_t>> find_odd_hole(const IdealGraph& g, int max_len = kDefaultHoleLimit);

/// Same search on the complement (restricted to its non-isolated vertices);
/// indices returned refer to the original graph.
std::optional<std::vector<std::size_t>> find_odd_antihole(const IdealGraph& g, int max_len = kDefaultHoleLimit);

struct PerfectnessReport {
    bool closed_form = false;  // perfect per the prime-divisor criterion
    std::optional<std::vector<std::size_t>> hole;
    std::optional<std::vector<std::size_t>> antihole;
    bool consistent = false;
};

/// Cross-check of the two routes. When the closed form says perfect, the
/// bounded search must come up empty; when it says not perfect, a 5-hole
/// must exist and be found.
PerfectnessReport perfectness_report(const ModulePair& pair, int max_len = kDefaultHoleLimit);
PerfectnessReport perfectness_report(const IdealGraph& g, int max_len = kDefaultHoleLimit);

/// True iff cycle is an induced chordless cycle of odd length >= 5 in adj
/// (invert = true checks against the complement).
bool verify_hole(const BitMatrix& adj, const std::vector<std::size_t>& cycle, bool invert = false);

}  // namespace ideals
