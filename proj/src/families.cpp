#include "ideals/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace ideals {

namespace {

bool divides_lcm_u64(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
    return l % n == 0;
}

}  // namespace

FamilyWeightTable FamilyWeightTable::closed_form(const ModulePair& pair) {
    FamilyWeightTable t(pair);
    const unsigned sp = pair.s_prime;
    const std::uint32_t full = (std::uint32_t{1} << sp) - 1;
    t.weights_.assign(std::size_t{1} << sp, 0);
    for (std::uint32_t d = 0; d <= full; ++d) {
        std::uint32_t global = t.pair_.expand_label(d);
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < t.pair_.s(); ++i) {
            if (global & (std::uint32_t{1} << i)) {
                w *= t.pair_.beta[i];
            } else {
                w *= t.pair_.m_fact.exponent(i) - t.pair_.beta[i] + 1;
            }
        }
        if (d == full) --w;  // d = 1 has label S' but is not a vertex
        if (d == 0) --w;     // d = m has label {} but is not a vertex
        t.weights_[d] = w;
    }
    return t;
}

std::uint64_t FamilyWeightTable::total() const {
    return std::accumulate(weights_.begin(), weights_.end(), std::uint64_t{0});
}

bool IntersectingFamily::is_intersecting() const {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i] == 0) return false;
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if ((sets[i] & sets[j]) == 0) return false;
        }
    }
    return true;
}

namespace {

// Backtracking over complement pairs: every maximal intersecting family of
// nonempty subsets of S' contains S' and exactly one of {D, S'\D} for each
// complementary pair, so the optimum is found among those assignments.
//
// Two phases. A branch-and-bound pass finds the best weight; a greedy pass
// then picks, pair by pair in ascending order of the smaller mask, the
// smaller mask whenever it still completes to the optimum. Since every
// smaller mask sorts below every larger one (only the larger carries the top
// bit of S'), that greedy choice is the lexicographically smallest witness.
struct FamilySearch {
    const FamilyWeightTable& table;
    std::uint32_t full;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::uint64_t> suffix_max;  // best possible weight from pair i on

    std::vector<std::uint32_t> chosen;
    std::uint64_t best_weight = 0;

    explicit FamilySearch(const FamilyWeightTable& t, unsigned sp)
        : table(t), full((std::uint32_t{1} << sp) - 1) {
        for (std::uint32_t a = 1; a < full; ++a) {
            std::uint32_t b = full ^ a;
            if (a < b) pairs.emplace_back(a, b);
        }
        suffix_max.assign(pairs.size() + 1, 0);
        for (std::size_t i = pairs.size(); i-- > 0;) {
            suffix_max[i] = suffix_max[i + 1] + std::max(table.weight(pairs[i].first), table.weight(pairs[i].second));
        }
    }

    bool consistent(std::uint32_t c) const {
        for (std::uint32_t s : chosen) {
            if ((s & c) == 0) return false;
        }
        return true;
    }

    void bound(std::size_t idx, std::uint64_t weight) {
        if (weight + suffix_max[idx] <= best_weight) return;
        if (idx == pairs.size()) {
            best_weight = weight;
            return;
        }
        for (std::uint32_t c : {pairs[idx].first, pairs[idx].second}) {
            if (consistent(c)) {
                chosen.push_back(c);
                bound(idx + 1, weight + table.weight(c));
                chosen.pop_back();
            }
        }
    }

    bool can_reach(std::size_t idx, std::uint64_t weight, std::uint64_t target) {
        if (weight + suffix_max[idx] < target) return false;
        if (idx == pairs.size()) return true;
        for (std::uint32_t c : {pairs[idx].first, pairs[idx].second}) {
            if (consistent(c)) {
                chosen.push_back(c);
                bool ok = can_reach(idx + 1, weight + table.weight(c), target);
                chosen.pop_back();
                if (ok) return true;
            }
        }
        return false;
    }

    std::vector<std::uint32_t> run() {
        const std::uint64_t base = table.weight(full);
        chosen.clear();
        best_weight = 0;
        bound(0, base);

        chosen.clear();
        std::uint64_t weight = base;
        for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
            for (std::uint32_t c : {pairs[idx].first, pairs[idx].second}) {
                if (!consistent(c)) continue;
                chosen.push_back(c);
                if (can_reach(idx + 1, weight + table.weight(c), best_weight)) {
                    weight += table.weight(c);
                    break;
                }
                chosen.pop_back();
            }
        }
        std::vector<std::uint32_t> family = chosen;
        family.push_back(full);
        std::sort(family.begin(), family.end());
        return family;
    }
};

std::vector<DivisorVertex> vertex_list(const ModulePair& pair) {
    std::vector<DivisorVertex> verts;
    for (auto& r : divisors(pair.m_fact)) {
        std::uint64_t d = divisor_value(pair.m_fact, r);
        if (d == 1 || d == pair.m()) continue;
        std::uint32_t label = pair.label_of(r);
        verts.push_back({std::move(r), d, label});
    }
    return verts;
}

}  // namespace

OmegaFamilyResult omega_via_families(const ModulePair& pair, unsigned s_prime_limit) {
    if (pair.s_prime > s_prime_limit) {
        throw LimitError("s' = " + std::to_string(pair.s_prime) + " exceeds the family search limit " +
                         std::to_string(s_prime_limit) + "; use oracle method");
    }
    auto table = FamilyWeightTable::closed_form(pair);
    FamilySearch search(table, pair.s_prime);
    OmegaFamilyResult res;
    res.family.sets = search.run();

    auto verts = vertex_list(pair);
    if (search.best_weight == 0) {
        // Only label-empty vertices exist; any single vertex is a clique.
        if (!verts.empty()) {
            res.omega = 1;
            res.clique.members.push_back(verts.front().value);
        }
        return res;
    }
    res.omega = search.best_weight;
    for (const auto& v : verts) {
        std::uint32_t compressed = pair.compress_label(v.label);
        if (v.label != 0 &&
            std::binary_search(res.family.sets.begin(), res.family.sets.end(), compressed)) {
            res.clique.members.push_back(v.value);
        }
    }
    return res;
}

std::uint64_t omega_lower_bound(const ModulePair& pair) {
    std::uint64_t best = 0;
    for (std::size_t j = 0; j < pair.s(); ++j) {
        if (pair.beta[j] == 0) continue;
        std::uint64_t w = pair.beta[j];
        for (std::size_t i = 0; i < pair.s(); ++i) {
            if (i != j) w *= pair.m_fact.exponent(i) + 1;
        }
        best = std::max(best, w - 1);
    }
    return best;
}

std::optional<std::uint64_t> omega_chi_closed_form(const ModulePair& pair) {
    std::uint64_t value = 1;
    for (std::size_t i = 0; i < pair.s(); ++i) {
        if (pair.beta[i] != 0) {
            if (pair.m_fact.exponent(i) != 2 * pair.beta[i] - 1) return std::nullopt;
            value *= pair.beta[i];
        } else {
            value *= pair.m_fact.exponent(i) + 1;
        }
    }
    value <<= pair.s_prime - 1;
    return value - 1;
}

// ---------------------------------------------------------------------------
// Branch-and-bound maximum clique (Tomita-style greedy-coloring bound).

namespace {

struct MaxCliqueSolver {
    std::size_t n, words;
    std::vector<std::uint64_t> rows;  // n * words, local vertex ids

    std::vector<int> cur, best;

    bool edge(int u, int v) const { return (rows[std::size_t(u) * words + (v >> 6)] >> (v & 63)) & 1u; }

    void expand(const std::vector<int>& cand) {
        // Greedy coloring of cand in order; color[i] is an upper bound on the
        // clique size within {cand[0..i]}.
        const std::size_t k = cand.size();
        std::vector<int> color(k);
        std::vector<std::vector<int>> classes;
        for (std::size_t i = 0; i < k; ++i) {
            int v = cand[i];
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c]) {
                    if (edge(u, v)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            color[i] = int(c) + 1;
        }
        // Re-order by color ascending (stable), then scan from the back.
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });

        std::vector<int> sorted(k);
        std::vector<int> sorted_color(k);
        for (std::size_t i = 0; i < k; ++i) {
            sorted[i] = cand[order[i]];
            sorted_color[i] = color[order[i]];
        }
        for (std::size_t i = k; i-- > 0;) {
            if (cur.size() + sorted_color[i] <= best.size()) return;
            int v = sorted[i];
            std::vector<int> next;
            for (std::size_t j = 0; j < i; ++j) {
                if (edge(sorted[j], v)) next.push_back(sorted[j]);
            }
            cur.push_back(v);
            if (next.empty()) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(next);
            }
            cur.pop_back();
        }
    }

    std::vector<int> solve() {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::sort(all.begin(), all.end(), [&](int a, int b) {
            std::size_t da = 0, db = 0;
            for (std::size_t w = 0; w < words; ++w) {
                da += std::popcount(rows[std::size_t(a) * words + w]);
                db += std::popcount(rows[std::size_t(b) * words + w]);
            }
            return da != db ? da > db : a < b;
        });
        expand(all);
        return best;
    }
};

// Local solver input: the subgraph induced on the non-isolated vertices.
struct ActiveSubgraph {
    std::vector<std::size_t> to_global;
    MaxCliqueSolver solver;
};

ActiveSubgraph active_subgraph(const BitMatrix& adj) {
    ActiveSubgraph out;
    const std::size_t n = adj.size();
    std::vector<int> local_of(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        if (adj.degree(v) > 0) {
            local_of[v] = int(out.to_global.size());
            out.to_global.push_back(v);
        }
    }
    const std::size_t k = out.to_global.size();
    out.solver.n = k;
    out.solver.words = k == 0 ? 1 : (k + 63) / 64;
    out.solver.rows.assign(k * out.solver.words, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (adj.edge(out.to_global[i], out.to_global[j])) {
                out.solver.rows[i * out.solver.words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                out.solver.rows[j * out.solver.words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
            }
        }
    }
    return out;
}

}  // namespace

OmegaOracleResult omega_oracle(const IdealGraph& g, std::size_t vertex_limit) {
    OmegaOracleResult res;
    auto sub = active_subgraph(g.adjacency());
    if (sub.to_global.size() > vertex_limit) {
        throw LimitError("clique oracle limit exceeded: " + std::to_string(sub.to_global.size()) +
                         " non-isolated vertices > " + std::to_string(vertex_limit));
    }
    if (sub.to_global.empty()) {
        if (!g.vertices().empty()) {
            res.omega = 1;
            res.clique.members.push_back(g.vertices().front().value);
        }
        return res;
    }
    std::vector<int> best = sub.solver.solve();
    res.omega = best.size();
    for (int v : best) res.clique.members.push_back(g.vertices()[sub.to_global[v]].value);
    std::sort(res.clique.members.begin(), res.clique.members.end());
    return res;
}

// ---------------------------------------------------------------------------
// Exact chromatic number: DSATUR greedy upper bound, clique lower bound,
// backtracking k-colorability in between.

namespace {

struct ColoringSolver {
    std::size_t n, words;
    const std::vector<std::uint64_t>* rows;

    bool edge(std::size_t u, std::size_t v) const {
        return ((*rows)[u * words + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words; ++w) d += std::popcount((*rows)[v * words + w]);
        return d;
    }

    // Greedy DSATUR; returns the coloring.
    std::vector<int> greedy() const {
        std::vector<int> colors(n, -1);
        std::vector<std::uint64_t> sat(n, 0);  // adjacent color sets (chi <= 64 here)
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t pick = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (colors[v] >= 0) continue;
                if (pick == n) {
                    pick = v;
                    continue;
                }
                int sv = std::popcount(sat[v]), sp = std::popcount(sat[pick]);
                if (sv > sp || (sv == sp && degree(v) > degree(pick))) pick = v;
            }
            int c = std::countr_one(sat[pick]);  // smallest absent color
            colors[pick] = c;
            for (std::size_t u = 0; u < n; ++u) {
                if (edge(pick, u) && c < 64) sat[u] |= std::uint64_t{1} << c;
            }
        }
        return colors;
    }

    bool extend(std::vector<int>& colors, std::vector<std::uint64_t>& sat, std::size_t colored, int k,
                int used) const {
        if (colored == n) return true;
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (colors[v] >= 0) continue;
            if (pick == n) {
                pick = v;
                continue;
            }
            int sv = std::popcount(sat[v]), sp = std::popcount(sat[pick]);
            if (sv > sp || (sv == sp && degree(v) > degree(pick))) pick = v;
        }
        int limit = std::min(k - 1, used);  // allow at most one brand-new color
        for (int c = 0; c <= limit; ++c) {
            if (sat[pick] & (std::uint64_t{1} << c)) continue;
            colors[pick] = c;
            std::vector<std::size_t> touched;
            for (std::size_t u = 0; u < n; ++u) {
                if (colors[u] < 0 && edge(pick, u) && !(sat[u] & (std::uint64_t{1} << c))) {
                    sat[u] |= std::uint64_t{1} << c;
                    touched.push_back(u);
                }
            }
            if (extend(colors, sat, colored + 1, k, std::max(used, c + 1))) return true;
            for (std::size_t u : touched) sat[u] &= ~(std::uint64_t{1} << c);
            colors[pick] = -1;
        }
        return false;
    }

    bool k_colorable(int k, std::vector<int>& out) const {
        std::vector<int> colors(n, -1);
        std::vector<std::uint64_t> sat(n, 0);
        if (!extend(colors, sat, 0, k, 0)) return false;
        out = std::move(colors);
        return true;
    }
};

}  // namespace

ChiOracleResult chi_oracle(const IdealGraph& g, std::size_t vertex_limit) {
    ChiOracleResult res;
    const std::size_t total = g.vertices().size();
    res.coloring.colors.assign(total, 0);
    auto sub = active_subgraph(g.adjacency());
    const std::size_t k = sub.to_global.size();
    if (k > vertex_limit) {
        throw LimitError("coloring oracle limit exceeded: " + std::to_string(k) +
                         " non-isolated vertices > " + std::to_string(vertex_limit));
    }
    if (k == 0) {
        res.chi = total == 0 ? 0 : 1;
        res.coloring.color_count = res.chi;
        return res;
    }

    ColoringSolver solver{k, sub.solver.words, &sub.solver.rows};
    std::vector<int> greedy = solver.greedy();
    int ub = *std::max_element(greedy.begin(), greedy.end()) + 1;
    int lb = int(sub.solver.solve().size());

    std::vector<int> chosen = greedy;
    int chi = ub;
    for (int kk = lb; kk < ub; ++kk) {
        std::vector<int> attempt;
        if (solver.k_colorable(kk, attempt)) {
            chosen = std::move(attempt);
            chi = kk;
            break;
        }
    }
    res.chi = chi;
    for (std::size_t i = 0; i < k; ++i) res.coloring.colors[sub.to_global[i]] = chosen[i];
    res.coloring.color_count = chi;
    if (!verify_coloring(g, res.coloring)) {
        throw std::logic_error("chi_oracle produced an improper coloring");
    }
    return res;
}

// ---------------------------------------------------------------------------
// Pairing coloring following the complement-swap construction.

ColoringCertificate chi_via_pairing(const ModulePair& pair, unsigned s_prime_limit) {
    auto fam = omega_via_families(pair, s_prime_limit);
    auto verts = vertex_list(pair);

    ColoringCertificate cert;
    cert.colors.assign(verts.size(), -1);
    if (verts.empty()) {
        cert.color_count = 0;
        return cert;
    }

    const std::uint32_t full = (std::uint32_t{1} << pair.s_prime) - 1;
    std::vector<std::vector<std::size_t>> class_members(std::size_t{1} << pair.s_prime);
    for (std::size_t v = 0; v < verts.size(); ++v) {
        class_members[pair.compress_label(verts[v].label)].push_back(v);
    }
    std::vector<bool> in_family(std::size_t{1} << pair.s_prime, false);
    for (std::uint32_t s : fam.family.sets) in_family[s] = true;

    int next_color = 0;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        std::uint32_t d = pair.compress_label(verts[v].label);
        if (d != 0 && in_family[d]) cert.colors[v] = next_color++;
    }

    std::vector<std::size_t> overflow;
    for (std::uint32_t d = 1; d < (std::uint32_t{1} << pair.s_prime); ++d) {
        if (in_family[d] || class_members[d].empty()) continue;
        const auto& targets = class_members[full ^ d];  // complement class is in the family
        for (std::size_t i = 0; i < class_members[d].size(); ++i) {
            if (i < targets.size()) {
                cert.colors[class_members[d][i]] = cert.colors[targets[i]];
            } else {
                overflow.push_back(class_members[d][i]);
            }
        }
    }

    if (next_color == 0) next_color = 1;  // edgeless graph: one color
    for (std::size_t v : class_members[0]) cert.colors[v] = 0;

    // Greedy completion; only reachable outside the alpha_i <= 2 beta_i - 1 regime.
    cert.pairing_complete = overflow.empty();
    for (std::size_t v : overflow) {
        std::vector<bool> used(verts.size() + 1, false);
        for (std::size_t u = 0; u < verts.size(); ++u) {
            if (u != v && cert.colors[u] >= 0 && (verts[u].label & verts[v].label)) {
                used[cert.colors[u]] = true;
            }
        }
        int c = 0;
        while (used[c]) ++c;
        cert.colors[v] = c;
        next_color = std::max(next_color, c + 1);
    }

    std::vector<bool> seen(std::size_t(next_color) + 1, false);
    int distinct = 0;
    for (int c : cert.colors) {
        if (!seen[c]) {
            seen[c] = true;
            ++distinct;
        }
    }
    cert.color_count = distinct;

    // Proper by construction; check anyway.
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if ((verts[i].label & verts[j].label) && cert.colors[i] == cert.colors[j]) {
                throw std::logic_error("chi_via_pairing produced an improper coloring");
            }
        }
    }
    return cert;
}

bool verify_coloring(const IdealGraph& g, const ColoringCertificate& c) {
    const std::size_t n = g.vertices().size();
    if (c.colors.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (c.colors[i] < 0) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.adjacency().edge(i, j) && c.colors[i] == c.colors[j]) return false;
        }
    }
    std::vector<bool> seen;
    int distinct = 0;
    for (int col : c.colors) {
        if (std::size_t(col) >= seen.size()) seen.resize(col + 1, false);
        if (!seen[col]) {
            seen[col] = true;
            ++distinct;
        }
    }
    return n == 0 ? c.color_count == 0 : distinct == c.color_count;
}

bool verify_clique(const ModulePair& pair, const CliqueCertificate& c) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        std::uint64_t d = c.members[i];
        if (d <= 1 || d >= pair.m() || pair.m() % d != 0) return false;
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
            if (c.members[j] == d) return false;
            if (divides_lcm_u64(pair.n(), d, c.members[j])) return false;
        }
    }
    return true;
}

}  // namespace ideals
