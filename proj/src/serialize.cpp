#include "ideals/serialize.hpp"

#include <sstream>

namespace ideals {

using nlohmann::json;

namespace {

json diameter_to_json(const Diameter& d) {
    switch (d.kind) {
        case Diameter::Kind::empty:
            return "empty";
        case Diameter::Kind::infinite:
            return "inf";
        case Diameter::Kind::finite:
            return d.value;
    }
    return nullptr;
}

json edges_to_json(const BitMatrix& adj) {
    json edges = json::array();
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
            if (adj.edge(i, j)) edges.push_back({i, j});
        }
    }
    return edges;
}

}  // namespace

json stats_to_json(const GraphStats& s) {
    return {
        {"vertex_count", s.vertex_count},
        {"edge_count", s.edge_count},
        {"degree_sequence", s.degree_sequence},
        {"is_regular", s.is_regular},
        {"is_complete", s.is_complete},
        {"is_connected", s.is_connected},
        {"components", s.components},
        {"diameter", diameter_to_json(s.diameter)},
        {"girth", s.girth ? json(*s.girth) : json("inf")},
        {"isolated_count", s.isolated_count},
    };
}

json graph_to_json(const IdealGraph& g) {
    json verts = json::array();
    for (const auto& v : g.vertices()) {
        verts.push_back({{"d", v.value}, {"exps", v.exps}, {"label_bits", v.label}});
    }
    return {
        {"m", g.pair().m()},
        {"n", g.pair().n()},
        {"vertices", verts},
        {"edges", edges_to_json(g.adjacency())},
        {"stats", stats_to_json(g.stats())},
    };
}

json zgraph_to_json(const TruncatedZGraph& g) {
    return {
        {"n", g.n},
        {"bound", g.bound},
        {"truncated_window", true},
        {"vertices", g.vertices},
        {"edges", edges_to_json(g.adj)},
        {"stats", stats_to_json(g.stats())},
    };
}

std::string graph_to_dot(const IdealGraph& g, const std::vector<std::size_t>* highlight) {
    std::vector<bool> hot(g.vertices().size(), false);
    auto on_cycle_edge = [&](std::size_t a, std::size_t b) {
        if (!highlight) return false;
        const auto& c = *highlight;
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::size_t x = c[i], y = c[(i + 1) % c.size()];
            if ((x == a && y == b) || (x == b && y == a)) return true;
        }
        return false;
    };
    if (highlight) {
        for (std::size_t v : *highlight) hot[v] = true;
    }

    std::ostringstream out;
    out << "graph ideals {\n";
    out << "  label=\"G_" << g.pair().n() << "(Z_" << g.pair().m() << ")\";\n";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        out << "  v" << i << " [label=\"" << g.vertices()[i].value << "Z_" << g.pair().m() << "\"";
        if (hot[i]) out << ", color=red";
        out << "];\n";
    }
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices().size(); ++j) {
            if (!g.adjacency().edge(i, j)) continue;
            out << "  v" << i << " -- v" << j;
            if (on_cycle_edge(i, j)) out << " [color=red]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string zgraph_to_dot(const TruncatedZGraph& g) {
    std::ostringstream out;
    out << "graph ideals_z {\n";
    out << "  label=\"G_" << g.n << "(Z), window 2.." << g.bound << "\";\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out << "  v" << i << " [label=\"" << g.vertices[i] << "Z\"];\n";
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            if (g.adj.edge(i, j)) out << "  v" << i << " -- v" << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

json family_to_json(const ModulePair& pair, const IntersectingFamily& family) {
    json out = json::array();
    for (std::uint32_t compressed : family.sets) {
        std::uint32_t global = pair.expand_label(compressed);
        json set = json::array();
        for (std::size_t i = 0; i < pair.s(); ++i) {
            if (global & (std::uint32_t{1} << i)) set.push_back(i + 1);  // 1-based prime indices
        }
        out.push_back(set);
    }
    return out;
}

json coloring_to_json(const ColoringCertificate& c) {
    return {
        {"colors", c.colors},
        {"color_count", c.color_count},
        {"pairing_complete", c.pairing_complete},
    };
}

}  // namespace ideals
