// Command-line front end: construct G_n(Z_m), compute invariants and
// certificates, export DOT/JSON, and run the verification sweeps.
//
// Exit codes: 0 ok, 1 violation or cross-check mismatch, 2 usage error,
// 3 oracle-limit skip.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "ideals/families.hpp"
#include "ideals/graph.hpp"
#include "ideals/perfect.hpp"
#include "ideals/serialize.hpp"
#include "ideals/verify.hpp"

using nlohmann::json;

namespace {

std::string family_text(const ideals::ModulePair& pair, const ideals::IntersectingFamily& family) {
    std::string out;
    for (std::uint32_t compressed : family.sets) {
        std::uint32_t global = pair.expand_label(compressed);
        out += out.empty() ? "{" : " {";
        bool first = true;
        for (std::size_t i = 0; i < pair.s(); ++i) {
            if (global & (std::uint32_t{1} << i)) {
                if (!first) out += ",";
                out += std::to_string(i + 1);
                first = false;
            }
        }
        out += "}";
    }
    return out;
}

std::string divisor_cycle_text(const ideals::IdealGraph& g, const std::vector<std::size_t>& cycle) {
    std::string out;
    for (std::size_t v : cycle) {
        if (!out.empty()) out += " ";
        out += std::to_string(g.vertices()[v].value);
    }
    return out;
}

json divisor_cycle_json(const ideals::IdealGraph& g, const std::vector<std::size_t>& cycle) {
    json out = json::array();
    for (std::size_t v : cycle) out.push_back(g.vertices()[v].value);
    return out;
}

bool theorem_38_condition(const ideals::ModulePair& pair) {
    for (std::size_t i = 0; i < pair.s(); ++i) {
        if (pair.beta[i] != 0 && pair.m_fact.exponent(i) > 2 * pair.beta[i] - 1) return false;
    }
    return true;
}

int run_graph(std::uint64_t m, std::uint64_t n, const std::string& format) {
    auto g = ideals::IdealGraph::build(m, n);
    if (format == "dot") {
        std::cout << ideals::graph_to_dot(g);
    } else {
        std::cout << ideals::graph_to_json(g).dump(2) << "\n";
    }
    return 0;
}

int run_zgraph(std::uint64_t n, std::uint64_t bound, const std::string& format) {
    auto g = ideals::build_truncated_z_graph(n, bound);
    if (format == "dot") {
        std::cout << ideals::zgraph_to_dot(g);
    } else {
        std::cout << ideals::zgraph_to_json(g).dump(2) << "\n";
    }
    return 0;
}

int run_stats(std::uint64_t m, std::uint64_t n, const std::string& format) {
    auto g = ideals::IdealGraph::build(m, n);
    json out = ideals::stats_to_json(g.stats());
    out["m"] = m;
    out["n"] = n;
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (auto& [key, value] : out.items()) {
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return 0;
}

int run_omega(std::uint64_t m, std::uint64_t n, const std::string& method, const std::string& format,
              unsigned family_limit, std::size_t oracle_limit) {
    auto pair = ideals::ModulePair::create(m, n);
    json out = {{"m", m}, {"n", n}, {"method", method}};
    bool mismatch = false;

    std::optional<ideals::OmegaFamilyResult> fam;
    std::optional<ideals::OmegaOracleResult> oracle;
    if (method == "family" || method == "both") {
        fam = ideals::omega_via_families(pair, family_limit);
        out["omega"] = fam->omega;
        out["witness_family"] = ideals::family_to_json(pair, fam->family);
        out["clique"] = fam->clique.members;
    }
    if (method == "oracle" || method == "both") {
        oracle = ideals::omega_oracle(ideals::IdealGraph::build(pair), oracle_limit);
        out["omega"] = oracle->omega;
        if (!out.contains("clique")) out["clique"] = oracle->clique.members;
    }
    if (method == "both") {
        out["methods"] = {{"family", fam->omega}, {"oracle", oracle->omega}};
        mismatch = fam->omega != oracle->omega;
        out["match"] = !mismatch;
        out["omega"] = fam->omega;
    }

    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        if (fam) {
            std::cout << "omega (family method) = " << fam->omega << "\n";
            std::cout << "witness family: " << family_text(pair, fam->family) << "\n";
        }
        if (oracle) std::cout << "omega (clique oracle) = " << oracle->omega << "\n";
        if (method == "both") std::cout << "match: " << (mismatch ? "NO" : "yes") << "\n";
    }
    return mismatch ? 1 : 0;
}

int run_chi(std::uint64_t m, std::uint64_t n, const std::string& method, const std::string& format,
            unsigned family_limit, std::size_t oracle_limit) {
    auto pair = ideals::ModulePair::create(m, n);
    json out = {{"m", m}, {"n", n}, {"method", method}};
    bool mismatch = false;
    bool exact_regime = theorem_38_condition(pair);

    std::optional<ideals::ColoringCertificate> pairing;
    std::optional<ideals::ChiOracleResult> oracle;
    if (method == "pairing" || method == "both") {
        pairing = ideals::chi_via_pairing(pair, family_limit);
        out["chi"] = pairing->color_count;
        out["coloring"] = ideals::coloring_to_json(*pairing);
        out["pairing_exact"] = exact_regime;
    }
    if (method == "oracle" || method == "both") {
        oracle = ideals::chi_oracle(ideals::IdealGraph::build(pair), oracle_limit);
        out["chi"] = oracle->chi;
        if (!out.contains("coloring")) out["coloring"] = ideals::coloring_to_json(oracle->coloring);
    }
    if (method == "both") {
        out["methods"] = {{"pairing", pairing->color_count}, {"oracle", oracle->chi}};
        // The pairing count is exact when alpha_i <= 2 beta_i - 1 on S', and
        // an upper bound otherwise.
        if (exact_regime) {
            mismatch = pairing->color_count != oracle->chi;
        } else {
            mismatch = oracle->chi > pairing->color_count;
        }
        out["match"] = !mismatch;
        out["chi"] = oracle->chi;
    }

    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        if (pairing) {
            std::cout << "chi (pairing) = " << pairing->color_count
                      << (exact_regime ? " [exact in this regime]" : " [upper bound]") << "\n";
        }
        if (oracle) std::cout << "chi (oracle) = " << oracle->chi << "\n";
        if (method == "both") std::cout << "match: " << (mismatch ? "NO" : "yes") << "\n";
    }
    return mismatch ? 1 : 0;
}

int run_perfect(std::uint64_t m, std::uint64_t n, int hole_limit, const std::string& format) {
    auto g = ideals::IdealGraph::build(m, n);
    auto report = ideals::perfectness_report(g, hole_limit);

    if (format == "dot") {
        std::cout << ideals::graph_to_dot(g, report.hole ? &*report.hole : nullptr);
        return report.consistent ? 0 : 1;
    }
    if (format == "json") {
        json out = {
            {"m", m},
            {"n", n},
            {"hole_limit", hole_limit},
            {"perfect_closed_form", report.closed_form},
            {"hole", report.hole ? divisor_cycle_json(g, *report.hole) : json(nullptr)},
            {"antihole", report.antihole ? divisor_cycle_json(g, *report.antihole) : json(nullptr)},
            {"consistent", report.consistent},
        };
        std::cout << out.dump(2) << "\n";
        return report.consistent ? 0 : 1;
    }
    std::cout << "closed form: " << (report.closed_form ? "perfect" : "not perfect") << " (n has "
              << g.pair().s_prime << " distinct prime divisors)\n";
    if (report.hole) {
        std::cout << "odd hole (length " << report.hole->size() << "): " << divisor_cycle_text(g, *report.hole)
                  << "\n";
    } else {
        std::cout << "odd hole: none up to length " << hole_limit << "\n";
    }
    if (report.antihole) {
        std::cout << "odd antihole (length " << report.antihole->size() << "): "
                  << divisor_cycle_text(g, *report.antihole) << "\n";
    } else {
        std::cout << "odd antihole: none up to length " << hole_limit << "\n";
    }
    std::cout << "consistent: " << (report.consistent ? "yes" : "NO") << "\n";
    return report.consistent ? 0 : 1;
}

json report_to_json(const ideals::SweepReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"m", v.m}, {"n", v.n}, {"detail", v.detail}});
    }
    return {
        {"suite", r.suite},
        {"range", r.range},
        {"instances", r.instances},
        {"skipped", r.skipped_limits},
        {"violations", violations},
        {"notes", r.notes},
        {"passed", r.passed()},
    };
}

void print_report_text(const ideals::SweepReport& r) {
    std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.range << "; " << r.instances
              << " instances checked, " << r.violations.size() << " violations";
    if (r.skipped_limits) std::cout << ", " << r.skipped_limits << " skipped (limits)";
    std::cout << "\n";
    for (const auto& v : r.violations) {
        std::cout << "  violation at (" << v.m << ", " << v.n << "): " << v.detail << "\n";
    }
    for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
    std::cerr << "  [" << r.suite << " took " << r.wall_seconds << "s]\n";
}

int run_verify(const std::string& suite, std::uint64_t max_m, const ideals::SweepLimits& limits,
               int hole_limit, const std::string& format) {
    std::vector<ideals::SweepReport> reports;
    if (suite == "all") {
        ideals::SweepLimits all_limits = limits;
        all_limits.hole_limit = hole_limit;
        reports = ideals::run_all_sweeps(max_m, all_limits);
    } else if (suite == "diameter") {
        reports.push_back(ideals::sweep_diameter(max_m, limits));
    } else if (suite == "girth") {
        reports.push_back(ideals::sweep_girth(max_m, limits));
    } else if (suite == "regular") {
        reports.push_back(ideals::sweep_regular_complete(max_m, limits));
    } else if (suite == "isolated") {
        reports.push_back(ideals::sweep_isolated_lemma(max_m, limits));
    } else if (suite == "disconnected") {
        reports.push_back(ideals::sweep_disconnected_decomposition(max_m, limits));
    } else if (suite == "semilocal") {
        reports.push_back(ideals::sweep_semilocal(max_m, limits));
    } else if (suite == "perfect") {
        reports.push_back(ideals::sweep_perfectness(max_m, hole_limit, limits));
    } else if (suite == "bounds") {
        reports.push_back(ideals::sweep_bounds_and_closed_forms(max_m, limits));
    } else if (suite == "weakperfect") {
        reports.push_back(ideals::search_weak_perfect_counterexample(max_m, limits));
    }

    bool all_passed = true;
    for (const auto& r : reports) {
        if (format == "json") {
            for (const auto& rec : r.log) {
                json line = {{"suite", r.suite}, {"m", rec.m},   {"n", rec.n},
                             {"checked", rec.checked}, {"ok", rec.ok}, {"detail", rec.detail}};
                std::cout << line.dump() << "\n";
            }
            std::cout << report_to_json(r).dump() << "\n";
        } else {
            print_report_text(r);
        }
        all_passed = all_passed && r.passed();
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Z_n-intersection graphs of the ideals of Z_m: construction, exact invariants, verification sweeps"};
    app.require_subcommand(1);

    std::uint64_t m = 0, n = 0, bound = 0, max_m = 0;
    std::string graph_format = "json", zgraph_format = "json", stats_format = "text";
    std::string omega_method = "family", omega_format = "text";
    std::string chi_method = "pairing", chi_format = "text";
    std::string perfect_format = "text", verify_format = "text";
    std::string suite = "all";
    int hole_limit = ideals::kDefaultHoleLimit;
    ideals::SweepLimits limits;

    auto* cmd_graph = app.add_subcommand("graph", "emit G_n(Z_m) as DOT or JSON");
    cmd_graph->add_option("--m", m, "modulus of the ring Z_m")->required();
    cmd_graph->add_option("--n", n, "modulus of the module Z_n (must divide m)")->required();
    cmd_graph->add_option("--format", graph_format, "dot|json")
        ->capture_default_str()
        ->check(CLI::IsMember({"dot", "json"}));

    auto* cmd_zgraph = app.add_subcommand("zgraph", "emit a finite window of G_{Z_n}(Z)");
    cmd_zgraph->add_option("--n", n, "module parameter")->required();
    cmd_zgraph->add_option("--bound", bound, "largest k for the window 2..k")->required();
    cmd_zgraph->add_option("--format", zgraph_format, "dot|json")
        ->capture_default_str()
        ->check(CLI::IsMember({"dot", "json"}));

    auto* cmd_stats = app.add_subcommand("stats", "graph invariants of G_n(Z_m)");
    cmd_stats->add_option("--m", m)->required();
    cmd_stats->add_option("--n", n)->required();
    cmd_stats->add_option("--format", stats_format, "text|json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_omega = app.add_subcommand("omega", "clique number with witnesses");
    cmd_omega->add_option("--m", m)->required();
    cmd_omega->add_option("--n", n)->required();
    cmd_omega->add_option("--method", omega_method, "family|oracle|both")
        ->capture_default_str()
        ->check(CLI::IsMember({"family", "oracle", "both"}));
    cmd_omega->add_option("--format", omega_format, "text|json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd_omega->add_option("--family-limit", limits.family_limit, "max s' for the family search");
    cmd_omega->add_option("--omega-limit", limits.omega_oracle_limit,
                          "max non-isolated vertices for the oracle");

    auto* cmd_chi = app.add_subcommand("chi", "chromatic number with a verified coloring");
    cmd_chi->add_option("--m", m)->required();
    cmd_chi->add_option("--n", n)->required();
    cmd_chi->add_option("--method", chi_method, "pairing|oracle|both")
        ->capture_default_str()
        ->check(CLI::IsMember({"pairing", "oracle", "both"}));
    cmd_chi->add_option("--format", chi_format, "text|json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd_chi->add_option("--family-limit", limits.family_limit, "max s' for the family search");
    cmd_chi->add_option("--chi-limit", limits.chi_oracle_limit, "max non-isolated vertices for the oracle");

    auto* cmd_perfect = app.add_subcommand("perfect", "perfectness: closed form vs bounded hole search");
    cmd_perfect->add_option("--m", m)->required();
    cmd_perfect->add_option("--n", n)->required();
    cmd_perfect->add_option("--hole-limit", hole_limit, "odd bound for the hole/antihole search");
    cmd_perfect->add_option("--format", perfect_format, "text|json|dot")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json", "dot"}));

    auto* cmd_verify = app.add_subcommand("verify", "run verification sweeps");
    cmd_verify
        ->add_option("--suite", suite,
                     "diameter|girth|regular|isolated|disconnected|semilocal|perfect|bounds|weakperfect|all")
        ->capture_default_str()
        ->check(CLI::IsMember({"diameter", "girth", "regular", "isolated", "disconnected", "semilocal",
                               "perfect", "bounds", "weakperfect", "all"}));
    cmd_verify->add_option("--max-m", max_m, "sweep every (m, n) with n | m up to this m")->required();
    cmd_verify->add_option("--jobs", limits.jobs, "worker threads (0 = hardware)");
    cmd_verify->add_option("--hole-limit", hole_limit, "bound for the perfectness suite");
    cmd_verify->add_option("--family-limit", limits.family_limit);
    cmd_verify->add_option("--omega-limit", limits.omega_oracle_limit);
    cmd_verify->add_option("--chi-limit", limits.chi_oracle_limit);
    cmd_verify->add_option("--format", verify_format, "text|json (JSON prints one line per instance)")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_graph->parsed()) return run_graph(m, n, graph_format);
        if (cmd_zgraph->parsed()) return run_zgraph(n, bound, zgraph_format);
        if (cmd_stats->parsed()) return run_stats(m, n, stats_format);
        if (cmd_omega->parsed())
            return run_omega(m, n, omega_method, omega_format, limits.family_limit, limits.omega_oracle_limit);
        if (cmd_chi->parsed())
            return run_chi(m, n, chi_method, chi_format, limits.family_limit, limits.chi_oracle_limit);
        if (cmd_perfect->parsed()) return run_perfect(m, n, hole_limit, perfect_format);
        if (cmd_verify->parsed()) {
            limits.record_instances = verify_format == "json";
            return run_verify(suite, max_m, limits, hole_limit, verify_format);
        }
    } catch (const ideals::LimitError& e) {
        std::cerr << "skipped: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
