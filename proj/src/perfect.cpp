#include "ideals/perfect.hpp"

#include <stdexcept>

namespace ideals {

bool is_perfect_closed_form(const ModulePair& pair) { return pair.s_prime <= 4; }

namespace {

// DFS over induced paths, one target length at a time (shortest first).
// Canonical form kills the symmetries: the start is the smallest vertex of
// the cycle, and the second vertex is smaller than the last.
struct HoleSearch {
    const BitMatrix& adj;
    std::size_t target;  // cycle length
    std::vector<std::size_t> path;
    std::vector<char> on_path;

    explicit HoleSearch(const BitMatrix& a, std::size_t t)
        : adj(a), target(t), on_path(a.size(), 0) {}

    bool extend() {
        const std::size_t last = path.back();
        const std::size_t start = path.front();
        for (std::size_t u = start + 1; u < adj.size(); ++u) {
            if (on_path[u] || !adj.edge(last, u)) continue;
            // No chords to interior path vertices (start and last excluded).
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (adj.edge(path[i], u)) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            bool closes = adj.edge(u, start);
            if (path.size() + 1 == target) {
                if (closes && path[1] < u) {  // canonical direction: second < last
                    path.push_back(u);
                    return true;
                }
                continue;
            }
            // A start-adjacent vertex can only be the closing one.
            if (path.size() >= 2 && closes) continue;
            path.push_back(u);
            on_path[u] = 1;
            if (extend()) return true;
            on_path[u] = 0;
            path.pop_back();
        }
        return false;
    }

    std::optional<std::vector<std::size_t>> run() {
        // The start is the minimum of the cycle, so the other target-1
        // vertices all lie above it.
        for (std::size_t v = 0; v + target <= adj.size(); ++v) {
            path.assign(1, v);
            std::fill(on_path.begin(), on_path.end(), 0);
            on_path[v] = 1;
            if (extend()) return path;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_odd_hole(const BitMatrix& adj, int max_len) {
    if (max_len < 5 || max_len % 2 == 0) {
        throw std::invalid_argument("max_len must be odd and >= 5");
    }
    for (int len = 5; len <= max_len; len += 2) {
        if (std::size_t(len) > adj.size()) break;
        HoleSearch search(adj, std::size_t(len));
        if (auto cycle = search.run()) return cycle;
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_odd_hole(const IdealGraph& g, int max_len) {
    return find_odd_hole(g.adjacency(), max_len);
}

std::optional<std::vector<std::size_t>> find_odd_antihole(const IdealGraph& g, int max_len) {
    const BitMatrix& adj = g.adjacency();
    const std::size_t n = adj.size();
    // Complement, dropping its isolated vertices (vertices universal in g):
    // they cannot lie on any induced cycle of the complement.
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj.degree(v) + 1 < n) keep.push_back(v);
    }
    BitMatrix comp(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (!adj.edge(keep[i], keep[j])) comp.set_edge(i, j);
        }
    }
    auto cycle = find_odd_hole(comp, max_len);
    if (!cycle) return std::nullopt;
    for (auto& v : *cycle) v = keep[v];
    return cycle;
}

PerfectnessReport perfectness_report(const IdealGraph& g, int max_len) {
    PerfectnessReport r;
    r.closed_form = is_perfect_closed_form(g.pair());
    r.hole = find_odd_hole(g, max_len);
    r.antihole = find_odd_antihole(g, max_len);
    if (r.closed_form) {
        r.consistent = !r.hole && !r.antihole;
    } else {
        // s' >= 5 always provides a 5-hole: the five 2-subset label classes
        // chained in a cycle pattern are all non-empty.
        r.consistent = r.hole && r.hole->size() == 5;
    }
    return r;
}

PerfectnessReport perfectness_report(const ModulePair& pair, int max_len) {
    return perfectness_report(IdealGraph::build(pair), max_len);
}

bool verify_hole(const BitMatrix& adj, const std::vector<std::size_t>& cycle, bool invert) {
    const std::size_t k = cycle.size();
    if (k < 5 || k % 2 == 0) return false;
    auto connected = [&](std::size_t a, std::size_t b) { return invert ? !adj.edge(a, b) : adj.edge(a, b); };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (cycle[i] == cycle[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (connected(cycle[i], cycle[j]) != consecutive) return false;
        }
    }
    return true;
}

}  // namespace ideals
