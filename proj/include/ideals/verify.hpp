#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ideals/families.hpp"
#include "ideals/perfect.hpp"

// Sweep-based verification: each suite checks one statement exhaustively
// over every (m, n) with 2 <= n, n | m, m <= max_m, and reports violations
// instead of assuming. The weak-perfectness suite is a counterexample
// search, not an assertion: its clean run is evidence over the range only.

namespace ideals {

struct Violation {
    std::uint64_t m = 0, n = 0;
    std::string detail;
};

struct InstanceRecord {
    std::uint64_t m = 0, n = 0;
    bool checked = false;  // false = skipped (empty graph, hypothesis not met, or over limits)
    bool ok = true;
    std::string detail;
};

struct SweepReport {
    std::string suite;
    std::string range;
    std::size_t instances = 0;          // pairs actually checked
    std::size_t skipped_limits = 0;     // pairs skipped because of oracle limits
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;
    std::vector<InstanceRecord> log;    // filled when SweepLimits::record_instances

    bool passed() const { return violations.empty(); }
};

struct SweepLimits {
    unsigned family_limit = kDefaultFamilyLimit;
    std::size_t omega_oracle_limit = kDefaultOmegaOracleLimit;
    std::size_t chi_oracle_limit = kDefaultChiOracleLimit;
    int hole_limit = kDefaultHoleLimit;
    unsigned jobs = 0;  // 0 = hardware concurrency
    bool record_instances = false;
};

/// diam(G_n(Z_m)) in {0, 1, 2, inf} for every nonempty instance.
SweepReport sweep_diameter(std::uint64_t max_m, const SweepLimits& limits = {});

/// girth in {3, inf} for every nonempty instance.
SweepReport sweep_girth(std::uint64_t max_m, const SweepLimits& limits = {});

/// connected and regular implies complete.
SweepReport sweep_regular_complete(std::uint64_t max_m, const SweepLimits& limits = {});

/// every degree-0 vertex d has d prime or n | d.
SweepReport sweep_isolated_lemma(std::uint64_t max_m, const SweepLimits& limits = {});

/// faithful case n = m: a disconnected graph forces m = ab with coprime
/// a, b >= 2; an edgeless graph has at most two vertices.
SweepReport sweep_disconnected_decomposition(std::uint64_t max_m, const SweepLimits& limits = {});

/// faithful case n = m: number of maximal ideals <= omega + 1, and the
/// Jacobson radical generator (lcm of the primes) equals the nilradical
/// generator (smallest nilpotent element, found by independent scan).
SweepReport sweep_semilocal(std::uint64_t max_m, const SweepLimits& limits = {});

/// closed-form perfectness agrees with the bounded hole/antihole search.
SweepReport sweep_perfectness(std::uint64_t max_m, int hole_limit, const SweepLimits& limits = {});

/// lower bound <= omega, with equality at s' = 1 (beta > 1) and s' = 2;
/// closed form = omega = chi where alpha_i = 2 beta_i - 1 on S';
/// squarefree faithful instances give omega = chi = 2^(s-1) - 1;
/// family method agrees with the clique oracle wherever the oracle runs.
SweepReport sweep_bounds_and_closed_forms(std::uint64_t max_m, const SweepLimits& limits = {});

/// Counterexample search for omega != chi over instances where the
/// alpha_i <= 2 beta_i - 1 sufficient condition fails; instances it covers
/// are checked with the exact oracles, the rest are listed as skipped.
SweepReport search_weak_perfect_counterexample(std::uint64_t max_m, const SweepLimits& limits = {});

std::vector<SweepReport> run_all_sweeps(std::uint64_t max_m, const SweepLimits& limits = {});

}  // namespace ideals
