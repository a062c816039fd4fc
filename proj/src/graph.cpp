#include "ideals/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace ideals {

void BitMatrix::set_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("BitMatrix: no self-loops");
    bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    bits_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

std::size_t BitMatrix::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::uint64_t w : row(i)) d += std::popcount(w);
    return d;
}

std::size_t BitMatrix::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t i = 0; i < n_; ++i) twice += degree(i);
    return twice / 2;
}

std::vector<std::size_t> BitMatrix::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            unsigned b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

ModulePair ModulePair::create(std::uint64_t m, std::uint64_t n) {
    if (m < 2 || n < 2) throw std::invalid_argument("m and n must be >= 2");
    if (m % n != 0) throw std::invalid_argument("n must divide m");
    ModulePair p;
    p.m_fact = Factorization::of(m);
    p.n_value = n;
    p.beta.assign(p.m_fact.prime_count(), 0);
    std::uint64_t rest = n;
    for (std::size_t i = 0; i < p.m_fact.prime_count(); ++i) {
        while (rest % p.m_fact.prime(i) == 0) {
            rest /= p.m_fact.prime(i);
            ++p.beta[i];
        }
        if (p.beta[i] != 0) p.s_prime_mask |= std::uint32_t{1} << i;
    }
    // n | m guarantees rest == 1 and beta[i] <= alpha[i].
    p.s_prime = std::popcount(p.s_prime_mask);
    return p;
}

std::uint32_t ModulePair::label_of(const ExponentVec& r) const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < beta[i]) mask |= std::uint32_t{1} << i;
    }
    return mask;
}

std::uint32_t ModulePair::compress_label(std::uint32_t global) const {
    std::uint32_t out = 0;
    unsigned bit = 0;
    for (std::uint32_t rest = s_prime_mask; rest; rest &= rest - 1, ++bit) {
        std::uint32_t lowest = rest & (~rest + 1);
        if (global & lowest) out |= std::uint32_t{1} << bit;
    }
    return out;
}

std::uint32_t ModulePair::expand_label(std::uint32_t compressed) const {
    std::uint32_t out = 0;
    unsigned bit = 0;
    for (std::uint32_t rest = s_prime_mask; rest; rest &= rest - 1, ++bit) {
        std::uint32_t lowest = rest & (~rest + 1);
        if (compressed & (std::uint32_t{1} << bit)) out |= lowest;
    }
    return out;
}

IdealGraph::IdealGraph(ModulePair pair, std::vector<DivisorVertex> vertices, BitMatrix adj)
    : pair_(std::move(pair)),
      vertices_(std::move(vertices)),
      adj_(std::move(adj)),
      cache_(std::make_unique<StatsCache>()) {}

IdealGraph IdealGraph::build(std::uint64_t m, std::uint64_t n) {
    return build(ModulePair::create(m, n));
}

IdealGraph IdealGraph::build(ModulePair pair) {
    std::vector<DivisorVertex> verts;
    for (auto& r : divisors(pair.m_fact)) {
        std::uint64_t d = divisor_value(pair.m_fact, r);
        if (d == 1 || d == pair.m()) continue;
        std::uint32_t label = pair.label_of(r);
        verts.push_back({std::move(r), d, label});
    }
    // Adjacency: labels must share an index, which is exactly n ∤ lcm(d1, d2).
    BitMatrix adj(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i].label & verts[j].label) adj.set_edge(i, j);
        }
    }
    return IdealGraph(std::move(pair), std::move(verts), std::move(adj));
}

std::vector<std::size_t> IdealGraph::isolated_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (adj_.degree(i) == 0) out.push_back(i);
    }
    return out;
}

const GraphStats& IdealGraph::stats() const {
    std::call_once(cache_->once, [this] { cache_->stats = compute_stats(adj_); });
    return cache_->stats;
}

TruncatedZGraph build_truncated_z_graph(std::uint64_t n, std::uint64_t bound) {
    if (n < 2 || bound < 2) throw std::invalid_argument("n and bound must be >= 2");
    TruncatedZGraph g;
    g.n = n;
    g.bound = bound;
    for (std::uint64_t k = 2; k <= bound; ++k) g.vertices.push_back(k);
    g.adj = BitMatrix(g.vertices.size());
    auto divides_lcm = [n](std::uint64_t a, std::uint64_t b) {
        std::uint64_t g0 = std::gcd(a, b);
        unsigned __int128 l = static_cast<unsigned __int128>(a / g0) * b;
        return l % n == 0;
    };
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            if (!divides_lcm(g.vertices[i], g.vertices[j])) g.adj.set_edge(i, j);
        }
    }
    return g;
}

GraphStats TruncatedZGraph::stats() const { return compute_stats(adj); }

namespace {

// BFS distances via frontier expansion over bit rows; -1 = unreachable.
std::vector<int> bfs_distances(const BitMatrix& adj, std::size_t src) {
    const std::size_t n = adj.size();
    const std::size_t words = adj.words_per_row();
    std::vector<int> dist(n, -1);
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    auto set_bit = [](std::vector<std::uint64_t>& v, std::size_t i) {
        v[i >> 6] |= std::uint64_t{1} << (i & 63);
    };
    set_bit(visited, src);
    set_bit(frontier, src);
    dist[src] = 0;
    int level = 0;
    bool more = true;
    while (more) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = frontier[w];
            while (bits) {
                std::size_t v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                auto row = adj.row(v);
                for (std::size_t x = 0; x < words; ++x) next[x] |= row[x];
            }
        }
        more = false;
        ++level;
        for (std::size_t x = 0; x < words; ++x) {
            next[x] &= ~visited[x];
            if (next[x]) more = true;
            visited[x] |= next[x];
            std::uint64_t bits = next[x];
            while (bits) {
                dist[x * 64 + std::countr_zero(bits)] = level;
                bits &= bits - 1;
            }
        }
        frontier.swap(next);
    }
    return dist;
}

}  // namespace

std::size_t component_count(const BitMatrix& adj) {
    const std::size_t n = adj.size();
    std::vector<bool> seen(n, false);
    std::size_t comps = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) continue;
        ++comps;
        auto dist = bfs_distances(adj, v);
        for (std::size_t u = 0; u < n; ++u) {
            if (dist[u] >= 0) seen[u] = true;
        }
    }
    return comps;
}

Diameter diameter_of(const BitMatrix& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return Diameter::empty();
    int diam = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto dist = bfs_distances(adj, v);
        for (std::size_t u = 0; u < n; ++u) {
            if (dist[u] < 0) return Diameter::infinite();
            diam = std::max(diam, dist[u]);
        }
    }
    return Diameter::finite(diam);
}

std::optional<int> girth_of(const BitMatrix& adj) {
    const std::size_t n = adj.size();
    int best = -1;
    // Per-root BFS; a non-tree edge (x, y) closes a cycle of length
    // dist[x] + dist[y] + 1 through the root. The minimum over all roots is
    // exact: a root on a shortest cycle realizes it.
    std::vector<int> dist(n), parent(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<std::size_t> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            if (best >= 0 && 2 * dist[x] >= best) break;
            for (std::size_t y : adj.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = static_cast<int>(x);
                    q.push(y);
                } else if (static_cast<int>(y) != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
        if (best == 3) break;
    }
    if (best < 0) return std::nullopt;
    return best;
}

GraphStats compute_stats(const BitMatrix& adj) {
    GraphStats s;
    const std::size_t n = adj.size();
    s.vertex_count = n;
    s.degree_sequence.resize(n);
    std::size_t twice = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s.degree_sequence[i] = adj.degree(i);
        twice += s.degree_sequence[i];
        if (s.degree_sequence[i] == 0) ++s.isolated_count;
    }
    s.edge_count = twice / 2;
    s.is_regular = n > 0 && std::all_of(s.degree_sequence.begin(), s.degree_sequence.end(),
                                        [&](std::size_t d) { return d == s.degree_sequence[0]; });
    s.is_complete = n > 0 && s.edge_count == n * (n - 1) / 2;
    s.components = component_count(adj);
    s.is_connected = n > 0 && s.components == 1;
    s.diameter = diameter_of(adj);
    s.girth = girth_of(adj);
    std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
    return s;
}

}  // namespace ideals
