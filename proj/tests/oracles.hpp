#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

// Brute-force reference computations for the tests. Everything here works
// from plain integers and naive enumeration so it shares no code path with
// the library implementations it checks.

namespace oracle {

using AdjFn = std::vector<std::vector<bool>>;

inline std::vector<std::uint64_t> divisor_list(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d == 0) out.push_back(d);
    }
    return out;
}

inline std::vector<std::uint64_t> prime_list(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    return out;
}

inline unsigned multiplicity(std::uint64_t x, std::uint64_t p) {
    unsigned e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

inline bool lcm_divisible_by(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    std::uint64_t g = std::gcd(a, b);
    unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
    return l % n == 0;
}

/// Label of divisor d in G_n(Z_m) as a bitmask over the primes of m in
/// ascending order: bit i set iff mult_{p_i}(d) < mult_{p_i}(n).
inline std::uint32_t label_mask(std::uint64_t m, std::uint64_t n, std::uint64_t d) {
    auto primes = prime_list(m);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (multiplicity(d, primes[i]) < multiplicity(n, primes[i])) mask |= std::uint32_t{1} << i;
    }
    return mask;
}

// --- graph invariants on a dense boolean adjacency -------------------------

inline std::size_t max_clique(const AdjFn& adj) {
    const std::size_t n = adj.size();
    std::size_t best = 0;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        best = std::max(best, cur.size());
        for (std::size_t v = start; v < n; ++v) {
            bool ok = true;
            for (std::size_t u : cur) {
                if (!adj[u][v]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    return best;
}

inline bool colorable(const AdjFn& adj, int k) {
    const std::size_t n = adj.size();
    // Descending-degree order plus the "at most one new color" cap; both
    // preserve exactness and keep the exhaustive search tractable.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto deg = [&](std::size_t v) { return std::count(adj[v].begin(), adj[v].end(), true); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg(a) > deg(b); });
    std::vector<int> col(n, -1);
    auto rec = [&](auto&& self, std::size_t i, int used) -> bool {
        if (i == n) return true;
        std::size_t v = order[i];
        int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < n; ++u) {
                if (adj[v][u] && col[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                col[v] = c;
                if (self(self, i + 1, std::max(used, c + 1))) return true;
                col[v] = -1;
            }
        }
        return false;
    };
    return rec(rec, 0, 0);
}

inline int chromatic(const AdjFn& adj) {
    if (adj.empty()) return 0;
    for (int k = 1;; ++k) {
        if (colorable(adj, k)) return k;
    }
}

/// All-pairs shortest paths by Floyd-Warshall; -1 encodes unreachable.
inline std::vector<std::vector<long>> distances(const AdjFn& adj) {
    const std::size_t n = adj.size();
    const long inf = 1L << 40;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (adj[i][j]) d[i][j] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= inf) x = -1;
        }
    }
    return d;
}

/// Girth via an edge-deletion route: shortest cycle through edge (u, v) is
/// 1 + the shortest u-v path that avoids that edge.
inline long girth(const AdjFn& adj) {
    const std::size_t n = adj.size();
    long best = -1;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!adj[u][v]) continue;
            AdjFn cut = adj;
            cut[u][v] = cut[v][u] = false;
            auto d = distances(cut);
            if (d[u][v] >= 0 && (best < 0 || d[u][v] + 1 < best)) best = d[u][v] + 1;
        }
    }
    return best;  // -1 = acyclic
}

inline std::size_t components(const AdjFn& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adj[i][j]) parent[find(i)] = find(j);
        }
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) == i) ++count;
    }
    return count;
}

}  // namespace oracle
