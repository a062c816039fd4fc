#include "ideals/arith.hpp"

#include <stdexcept>
#include <string>

namespace ideals {

bool is_prime(std::uint64_t u) {
    if (u < 2) return false;
    if (u % 2 == 0) return u == 2;
    for (std::uint64_t p = 3; p <= u / p; p += 2) {
        if (u % p == 0) return false;
    }
    return true;
}

Factorization Factorization::of(std::uint64_t u) {
    if (u < 2) {
        throw std::invalid_argument("factorize: input must be >= 2, got " + std::to_string(u));
    }
    Factorization f;
    f.value_ = u;
    std::uint64_t rest = u;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) f.pairs_.push_back({p, e});
    };
    strip(2);
    for (std::uint64_t p = 3; p <= rest / p; p += 2) strip(p);
    if (rest > 1) f.pairs_.push_back({rest, 1});
    return f;
}

Factorization Factorization::from_pairs(std::vector<PrimePower> pairs) {
    if (pairs.empty()) throw std::invalid_argument("from_pairs: empty factorization");
    Factorization f;
    std::uint64_t prev = 0;
    for (const auto& pp : pairs) {
        if (pp.prime <= prev) throw std::invalid_argument("from_pairs: primes must be strictly increasing");
        if (!is_prime(pp.prime)) {
            throw std::invalid_argument("from_pairs: " + std::to_string(pp.prime) + " is not prime");
        }
        if (pp.exponent == 0) throw std::invalid_argument("from_pairs: exponents must be >= 1");
        prev = pp.prime;
        for (unsigned e = 0; e < pp.exponent; ++e) {
            unsigned __int128 next = static_cast<unsigned __int128>(f.value_) * pp.prime;
            if (next > UINT64_MAX) throw std::invalid_argument("from_pairs: value overflows 64 bits");
            f.value_ = static_cast<std::uint64_t>(next);
        }
    }
    f.pairs_ = std::move(pairs);
    return f;
}

std::vector<ExponentVec> divisors(const Factorization& f) {
    const std::size_t s = f.prime_count();
    std::size_t count = 1;
    for (std::size_t i = 0; i < s; ++i) count *= f.exponent(i) + 1;

    std::vector<ExponentVec> out;
    out.reserve(count);
    ExponentVec r(s, 0);
    // Odometer with the rightmost index fastest = ascending lexicographic order.
    while (true) {
        out.push_back(r);
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (r[i] < f.exponent(i)) {
                ++r[i];
                break;
            }
            r[i] = 0;
            if (i == 0) return out;
        }
        if (s == 0) return out;
    }
}

std::uint64_t divisor_value(const Factorization& f, const ExponentVec& r) {
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (unsigned e = 0; e < r[i]; ++e) d *= f.prime(i);
    }
    return d;
}

ExponentVec lcm_exponents(const ExponentVec& a, const ExponentVec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("lcm_exponents: mismatched lengths");
    }
    ExponentVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
    return out;
}

bool exponents_divide(const ExponentVec& a, const ExponentVec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("exponents_divide: mismatched lengths");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

}  // namespace ideals
