#include "eideal/sweep.hpp"

#include "eideal/cm_recognition.hpp"
#include "eideal/glue.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace eideal {

namespace {

struct Operand {
    Graph graph;
    LeafSite site;
    std::string text;
};

Operand draw_operand(std::mt19937_64& rng, std::size_t max_pairs, std::string_view prefix) {
    const std::size_t pairs = 1 + static_cast<std::size_t>(rng() % max_pairs);
    const double density = unit_uniform(rng());
    const std::uint64_t graph_seed = rng();
    Graph g = with_prefix(random_cm_graph(pairs, density, graph_seed), prefix);
    auto sites = leaf_sites(g);
    LeafSite site = sites.at(static_cast<std::size_t>(rng() % sites.size()));
    std::string text = "random_cm_graph(" + std::to_string(pairs) + ", " + std::to_string(density) + ", " +
                       std::to_string(graph_seed) + ") leaf " + site.leaf;
    return {std::move(g), std::move(site), std::move(text)};
}

} // namespace

const char* to_string(Theorem t) {
    switch (t) {
    case Theorem::cm_values: return "cm-values";
    case Theorem::leaf: return "leaf";
    case Theorem::circ: return "circ";
    case Theorem::star: return "star";
    case Theorem::pendant: return "pendant";
    }
    return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
    for (Theorem t : {Theorem::cm_values, Theorem::leaf, Theorem::circ, Theorem::star, Theorem::pendant})
        if (name == to_string(t)) return t;
    return std::nullopt;
}

std::size_t max_pairs_within_cap(Theorem t, std::size_t cap) {
    switch (t) {
    case Theorem::cm_values: return cap / 2;             // 2k vertices
    case Theorem::leaf: return (cap + 1) / 2;            // 2k - 1
    case Theorem::circ: return (cap + 3) / 4;            // 2k + 2k - 3
    case Theorem::star: return (cap + 1) / 4;            // 2k + 2k - 1
    case Theorem::pendant: return cap >= 1 ? (cap - 1) / 2 : 0; // 2k + 1
    }
    return 0;
}

std::size_t SweepSummary::passed() const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const Trial& t) { return t.passed(); }));
}

const Trial* SweepSummary::first_counterexample() const {
    for (const auto& t : trials)
        if (!t.passed()) return &t;
    return nullptr;
}

Trial run_trial(const SweepOptions& options, std::size_t index, std::uint64_t trial_seed) {
    const std::size_t cap_pairs = max_pairs_within_cap(options.theorem, std::min(options.oracle.max_vertices, kOracleHardCap));
    const std::size_t max_pairs = std::min(options.max_pairs, cap_pairs);
    if (max_pairs == 0) throw std::invalid_argument("oracle cap too small for this sweep");

    std::mt19937_64 rng(trial_seed);
    Trial trial;
    trial.index = index;
    const Verification ver = options.verification;

    switch (options.theorem) {
    case Theorem::cm_values: {
        Operand op = draw_operand(rng, max_pairs, "");
        trial.description = op.text;
        trial.formula = cm_values(op.graph, ver);
        trial.graph = std::move(op.graph);
        break;
    }
    case Theorem::leaf: {
        Operand op = draw_operand(rng, max_pairs, "");
        trial.description = op.text;
        trial.formula = leaf_delete_values(op.graph, op.site.leaf, ver);
        trial.graph = delete_leaf(op.graph, op.site.leaf);
        break;
    }
    case Theorem::circ: {
        Operand a = draw_operand(rng, max_pairs, "g1.");
        Operand b = draw_operand(rng, max_pairs, "g2.");
        trial.description = a.text + " o " + b.text;
        trial.formula = circ_values(a.graph, a.site.leaf, b.graph, b.site.leaf, ver);
        trial.graph = circ(a.graph, a.site.leaf, b.graph, b.site.leaf, "v").graph;
        break;
    }
    case Theorem::star: {
        Operand a = draw_operand(rng, max_pairs, "g1.");
        Operand b = draw_operand(rng, max_pairs, "g2.");
        trial.description = a.text + " * " + b.text;
        trial.formula = star_values(a.graph, a.site.leaf, b.graph, b.site.leaf, ver);
        trial.graph = star_glue(a.graph, a.site.leaf, b.graph, b.site.leaf, "u").graph;
        break;
    }
    case Theorem::pendant: {
        Operand op = draw_operand(rng, max_pairs, "g1.");
        trial.description = op.text + " + pendant";
        trial.formula = {clique_sum_p2_depth(op.graph, op.site.leaf, ver), 0, std::string(kPendantDepth)};
        trial.reg_checked = false;
        trial.graph = clique_sum_p2(op.graph, op.site.leaf, "w");
        break;
    }
    }
    trial.oracle = oracle_values(trial.graph, options.oracle);
    return trial;
}

SweepSummary run_sweep(const SweepOptions& options) {
    SweepSummary summary;
    summary.theorem = options.theorem;
    summary.effective_max_pairs =
        std::min(options.max_pairs, max_pairs_within_cap(options.theorem, std::min(options.oracle.max_vertices, kOracleHardCap)));
    std::mt19937_64 master(options.seed);
    for (std::size_t k = 0; k < options.trials; ++k) summary.trials.push_back(run_trial(options, k, master()));
    return summary;
}

} // namespace eideal
