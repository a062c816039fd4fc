#pragma once

#include <cstdint>
#include <vector>

// Integer factorization and divisor-lattice arithmetic. Everything here is
// exact 64-bit; factorization is plain trial division, which is all the
// desk-scale sweeps need.

namespace ideals {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Exponent vector over the primes of a reference Factorization,
/// index-aligned with Factorization::primes().
using ExponentVec = std::vector<unsigned>;

bool is_prime(std::uint64_t u);

class Factorization {
public:
    Factorization() = default;  // empty placeholder (value 1); fill via of/from_pairs

    /// Factor u >= 2 by trial division. Throws std::invalid_argument for u < 2.
    static Factorization of(std::uint64_t u);

    /// Build from explicit (prime, exponent) pairs; validates that primes are
    /// strictly increasing, prime, and exponents >= 1.
    static Factorization from_pairs(std::vector<PrimePower> pairs);

    const std::vector<PrimePower>& pairs() const { return pairs_; }
    std::size_t prime_count() const { return pairs_.size(); }
    std::uint64_t prime(std::size_t i) const { return pairs_[i].prime; }
    unsigned exponent(std::size_t i) const { return pairs_[i].exponent; }

    /// The represented integer, reconstructed from the pairs.
    std::uint64_t value() const { return value_; }

    bool operator==(const Factorization&) const = default;

private:
    std::vector<PrimePower> pairs_;
    std::uint64_t value_ = 1;
};

/// All divisors of the factored integer as exponent vectors, in ascending
/// lexicographic order. Includes the all-zero vector (d = 1) and the full
/// vector (d = value). Size is the product of (exponent_i + 1).
std::vector<ExponentVec> divisors(const Factorization& f);

/// Value of the divisor with exponent vector r.
std::uint64_t divisor_value(const Factorization& f, const ExponentVec& r);

/// Componentwise maximum; the exponent vector of lcm(a, b).
/// Throws std::invalid_argument on mismatched lengths.
ExponentVec lcm_exponents(const ExponentVec& a, const ExponentVec& b);

/// True iff the divisor with exponents a divides the one with exponents b.
bool exponents_divide(const ExponentVec& a, const ExponentVec& b);

}  // namespace ideals
