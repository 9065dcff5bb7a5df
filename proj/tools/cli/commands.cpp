#include "commands.hpp"

#include "eideal/cm_recognition.hpp"
#include "eideal/errors.hpp"
#include "eideal/formulas.hpp"
#include "eideal/glue.hpp"
#include "eideal/graph.hpp"
#include "eideal/homology.hpp"
#include "eideal/invariants.hpp"
#include "eideal/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace eideal::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kMaxVerticesEnv = "EIDEAL_MAX_VERTICES";

std::size_t resolve_cap(std::optional<std::size_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv(kMaxVerticesEnv)) {
        try {
            std::size_t used = 0;
            const unsigned long value = std::stoul(env, &used);
            if (used == std::string(env).size()) return value;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string(kMaxVerticesEnv) + " is not a non-negative integer");
    }
    return kDefaultOracleCap;
}

Json values_json(const AlgebraicValues& v, bool with_reg = true) {
    Json j;
    j["depth"] = v.depth;
    j["reg"] = with_reg ? Json(v.reg) : Json(nullptr);
    j["provenance"] = v.provenance;
    return j;
}

Json oracle_json(const OracleValues& v, const BettiTable* betti) {
    Json j;
    j["depth"] = v.depth;
    j["reg"] = v.reg;
    j["pd"] = v.pd;
    j["dim"] = v.dim;
    if (betti) {
        Json triples = Json::array();
        for (const auto& [key, value] : betti->entries()) triples.push_back({key.first, key.second, value});
        j["betti"] = std::move(triples);
    } else {
        j["betti"] = nullptr;
    }
    return j;
}

void print_betti(std::ostream& out, const BettiTable& t) {
    // Rows j - i, columns i.
    const std::size_t pd = t.projective_dimension();
    const std::size_t reg = t.regularity();
    out << "betti table (rows j-i, columns i)\n      ";
    for (std::size_t i = 0; i <= pd; ++i) out << std::setw(6) << i;
    out << '\n';
    for (std::size_t r = 0; r <= reg; ++r) {
        out << std::setw(6) << r;
        for (std::size_t i = 0; i <= pd; ++i) {
            const auto v = t.at(static_cast<int>(i), static_cast<int>(i + r));
            if (v)
                out << std::setw(6) << v;
            else
                out << std::setw(6) << '.';
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string file;
    bool oracle = false;
    bool betti = false;
    bool json = false;
    std::optional<std::size_t> max_vertices;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = read_graph_file(args.file);
    } catch (const std::exception& e) {
        err << "error: " << args.file << ": " << e.what() << '\n';
        return kInputError;
    }

    std::vector<std::string> warnings;
    const bool bip = bipartition(g).has_value();
    const CMVerdict verdict = recognize_cm(g);
    if (!verdict.is_cm()) {
        if (verdict.reason == CMRejection::isolated_vertex && bip)
            warnings.push_back("not C-M: graph has isolated vertices; the recognizer only certifies graphs without them");
        else
            warnings.push_back(std::string("not C-M: ") + to_string(verdict.reason));
    }

    InvariantReport inv;
    DepthBounds bounds;
    try {
        inv = invariant_report(g);
        bounds = depth_bounds(g);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    std::optional<AlgebraicValues> formula;
    if (verdict.is_cm())
        formula = cm_values(g, Verification::trusted);
    else if (is_path(g))
        formula = path_values(g.order());

    std::optional<OracleValues> oracle;
    std::optional<BettiTable> betti;
    if (args.oracle || args.betti) {
        try {
            OracleOptions opts;
            opts.max_vertices = resolve_cap(args.max_vertices);
            betti = hochster_betti(g, opts);
            oracle = oracle_values(*betti, g);
        } catch (const CapExceeded& e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        }
    }

    bool mismatch = false;
    if (formula && oracle && (formula->depth != oracle->depth || formula->reg != oracle->reg)) {
        mismatch = true;
        std::ostringstream msg;
        msg << "FAIL: formula (" << formula->provenance << ") gives depth " << formula->depth << ", reg "
            << formula->reg << " but oracle gives depth " << oracle->depth << ", reg " << oracle->reg;
        warnings.push_back(msg.str());
    }

    if (args.json) {
        Json j;
        j["vertices"] = g.order();
        j["edges"] = g.size();
        j["bipartite"] = bip;
        j["cm"] = verdict.is_cm();
        if (verdict.labeling) {
            Json pairs = Json::array(), relation = Json::array();
            for (const auto& [x, y] : verdict.labeling->pairs) pairs.push_back({x, y});
            for (const auto& [i, k] : verdict.labeling->order_relation) relation.push_back({i, k});
            j["labeling"] = {{"pairs", pairs}, {"relation", relation}};
        } else {
            j["labeling"] = nullptr;
        }
        j["invariants"] = {{"alpha", inv.alpha}, {"beta", inv.beta}, {"theta", inv.theta},
                           {"gamma", inv.gamma}, {"indep", inv.indep}, {"cover", inv.cover}};
        j["formula"] = formula ? values_json(*formula) : Json(nullptr);
        j["oracle"] = oracle ? oracle_json(*oracle, args.betti ? &*betti : nullptr) : Json(nullptr);
        j["warnings"] = warnings;
        out << j.dump(2) << '\n';
    } else {
        auto row = [&](const char* key) -> std::ostream& { return out << std::left << std::setw(16) << key; };
        row("graph") << args.file << '\n';
        row("vertices") << g.order() << '\n';
        row("edges") << g.size() << '\n';
        row("bipartite") << (bip ? "yes" : "no") << '\n';
        row("cohen-macaulay") << (verdict.is_cm() ? "yes" : "no") << '\n';
        if (verdict.labeling) {
            row("labeling");
            for (std::size_t k = 0; k < verdict.labeling->size(); ++k)
                out << (k ? " " : "") << "(" << verdict.labeling->pairs[k].first << ","
                    << verdict.labeling->pairs[k].second << ")";
            out << '\n';
        }
        row("invariants") << "alpha " << inv.alpha << "  beta " << inv.beta << "  theta " << inv.theta << "  gamma "
                          << inv.gamma << "  indep " << inv.indep << "  cover " << inv.cover << '\n';
        row("depth bounds") << "gamma " << bounds.lower_star << "  diameter " << bounds.lower_diam;
        if (bounds.upper_bipartite) out << "  upper " << *bounds.upper_bipartite;
        out << '\n';
        if (formula)
            row("formula") << "depth " << formula->depth << "  reg " << formula->reg << "  [" << formula->provenance
                           << "]\n";
        if (oracle)
            row("oracle") << "depth " << oracle->depth << "  reg " << oracle->reg << "  pd " << oracle->pd << "  dim "
                          << oracle->dim << '\n';
        if (formula && oracle) row("check") << (mismatch ? "FAIL" : "PASS") << '\n';
        for (const auto& w : warnings) row("warning") << w << '\n';
        if (args.betti && betti) print_betti(out, *betti);
    }
    return mismatch ? kMismatch : kOk;
}

// ---------------------------------------------------------------------------
// compose
// ---------------------------------------------------------------------------

struct ComposeArgs {
    std::string op;
    std::string g1, u1, g2, u2;
    std::string output;
    bool json = false;
    bool trusted = false;
    bool oracle = false;
    std::optional<std::size_t> max_vertices;
};

int cmd_compose(const ComposeArgs& args, std::ostream& out, std::ostream& err) {
    const Verification ver = args.trusted ? Verification::trusted : Verification::check;
    Graph result;
    AlgebraicValues predicted;
    bool reg_predicted = true;
    std::vector<std::string> warnings;
    try {
        const Graph g1 = with_prefix(read_graph_file(args.g1), "g1.");
        const std::string u1 = "g1." + args.u1;
        if (args.op == "pendant") {
            if (!args.g2.empty() || !args.u2.empty()) throw std::invalid_argument("--op pendant takes no second operand");
            predicted = {clique_sum_p2_depth(g1, u1, ver), 0, std::string(kPendantDepth)};
            reg_predicted = false;
            result = clique_sum_p2(g1, u1, "w");
        } else {
            if (args.g2.empty() || args.u2.empty()) throw std::invalid_argument("--op " + args.op + " needs --g2 and --u2");
            const Graph g2 = with_prefix(read_graph_file(args.g2), "g2.");
            const std::string u2 = "g2." + args.u2;
            Composite c;
            if (args.op == "circ") {
                predicted = circ_values(g1, u1, g2, u2, ver);
                c = circ(g1, u1, g2, u2, "v");
            } else {
                predicted = star_values(g1, u1, g2, u2, ver);
                c = star_glue(g1, u1, g2, u2, "u");
            }
            result = std::move(c.graph);
            for (GlueWarning w : c.warnings) warnings.emplace_back(to_string(w));
        }
        if (!args.output.empty()) write_graph_file(args.output, result);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    std::optional<OracleValues> oracle;
    bool mismatch = false;
    if (args.oracle) {
        try {
            OracleOptions opts;
            opts.max_vertices = resolve_cap(args.max_vertices);
            oracle = oracle_values(result, opts);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        }
        mismatch = oracle->depth != predicted.depth || (reg_predicted && oracle->reg != predicted.reg);
        if (mismatch) warnings.push_back("FAIL: prediction disagrees with oracle");
    }

    if (args.json) {
        Json j;
        j["op"] = args.op;
        j["vertices"] = result.order();
        j["edges"] = result.size();
        j["output"] = args.output.empty() ? Json(nullptr) : Json(args.output);
        j["graph"] = serialize_graph(result);
        j["formula"] = values_json(predicted, reg_predicted);
        j["oracle"] = oracle ? oracle_json(*oracle, nullptr) : Json(nullptr);
        j["warnings"] = warnings;
        out << j.dump(2) << '\n';
    } else {
        if (args.output.empty()) out << serialize_graph(result);
        out << "# vertices " << result.order() << ", edges " << result.size() << '\n';
        out << "# predicted depth " << predicted.depth;
        if (reg_predicted) out << ", reg " << predicted.reg;
        out << " [" << predicted.provenance << "]\n";
        if (oracle) out << "# oracle depth " << oracle->depth << ", reg " << oracle->reg << '\n';
        for (const auto& w : warnings) out << "# warning: " << w << '\n';
        if (!args.output.empty()) out << "# written to " << args.output << '\n';
    }
    return mismatch ? kMismatch : kOk;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::size_t pairs = 1;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    std::string dir = ".";
    bool json = false;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> files;
    try {
        fs::create_directories(args.dir);
        std::mt19937_64 seeds(args.seed);
        for (std::size_t k = 0; k < args.count; ++k) {
            const Graph g = random_cm_graph(args.pairs, args.density, seeds());
            fs::path path = fs::path(args.dir) / ("cm_" + std::to_string(args.pairs) + "_" + std::to_string(args.seed) +
                                                  "_" + std::to_string(k) + ".graph");
            write_graph_file(path, g);
            files.push_back(path.string());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    if (args.json) {
        out << Json{{"files", files}}.dump(2) << '\n';
    } else {
        for (const auto& f : files) out << f << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    std::size_t trials = 100;
    std::size_t max_pairs = 3;
    std::uint64_t seed = 1;
    bool json = false;
    bool trusted = false;
    std::optional<std::size_t> max_vertices;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    auto theorem = parse_theorem(args.theorem);
    if (!theorem) {
        err << "error: unknown theorem '" << args.theorem << "' (leaf, circ, star, pendant, cm-values)\n";
        return kInputError;
    }
    SweepOptions opts;
    opts.theorem = *theorem;
    opts.trials = args.trials;
    opts.max_pairs = args.max_pairs;
    opts.seed = args.seed;
    opts.verification = args.trusted ? Verification::trusted : Verification::check;
    SweepSummary summary;
    try {
        opts.oracle.max_vertices = resolve_cap(args.max_vertices);
        if (args.max_pairs == 0) throw std::invalid_argument("--max-pairs must be at least 1");
        summary = run_sweep(opts);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    const Trial* bad = summary.first_counterexample();
    if (args.json) {
        Json j;
        j["theorem"] = to_string(summary.theorem);
        j["trials"] = summary.trials.size();
        j["passed"] = summary.passed();
        j["failed"] = summary.failed();
        j["max_pairs"] = summary.effective_max_pairs;
        j["seed"] = args.seed;
        if (bad) {
            j["first_counterexample"] = {{"index", bad->index},
                                         {"description", bad->description},
                                         {"graph", serialize_graph(bad->graph)},
                                         {"formula", values_json(bad->formula, bad->reg_checked)},
                                         {"oracle", oracle_json(bad->oracle, nullptr)}};
        } else {
            j["first_counterexample"] = nullptr;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "theorem " << to_string(summary.theorem) << ": " << summary.passed() << "/" << summary.trials.size()
            << " passed (" << (summary.trials.empty() || summary.trials.front().reg_checked ? "depth and reg" : "depth")
            << ", operands up to " << summary.effective_max_pairs << " pairs, seed " << args.seed << ")\n";
        if (bad) {
            out << "first counterexample (trial " << bad->index << "): " << bad->description << '\n'
                << "  formula depth " << bad->formula.depth << ", reg " << bad->formula.reg << "; oracle depth "
                << bad->oracle.depth << ", reg " << bad->oracle.reg << '\n'
                << serialize_graph(bad->graph);
        }
    }
    return summary.failed() == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// check-cm
// ---------------------------------------------------------------------------

int cmd_check_cm(const std::vector<std::string>& files, bool json, std::ostream& out, std::ostream& err) {
    Json results = Json::array();
    bool all_cm = true;
    for (const auto& file : files) {
        Graph g;
        try {
            g = read_graph_file(file);
        } catch (const std::exception& e) {
            err << "error: " << file << ": " << e.what() << '\n';
            return kInputError;
        }
        const CMVerdict v = recognize_cm(g);
        all_cm = all_cm && v.is_cm();
        if (json)
            results.push_back({{"file", file}, {"cm", v.is_cm()}, {"reason", v.is_cm() ? Json(nullptr) : Json(to_string(v.reason))}});
        else
            out << file << ": " << (v.is_cm() ? std::string("C-M") : std::string("not C-M (") + to_string(v.reason) + ")")
                << '\n';
    }
    if (json) out << results.dump(2) << '\n';
    return all_cm ? kOk : kNotCM;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Depth and regularity of edge ideals of glued Cohen-Macaulay bipartite graphs", "eideal"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* a = app.add_subcommand("analyze", "Recognition, invariants, closed forms and (optionally) the oracle");
    a->add_option("file", analyze.file, "Graph file")->required();
    a->add_flag("--oracle", analyze.oracle, "Run the homology oracle");
    a->add_flag("--betti", analyze.betti, "Run the oracle and print the Betti table");
    a->add_flag("--json", analyze.json, "JSON output");
    a->add_option("--max-vertices", analyze.max_vertices, "Oracle vertex cap (env " + std::string(kMaxVerticesEnv) + ")");

    ComposeArgs compose;
    auto* c = app.add_subcommand("compose", "Glue graphs with the circle, star or pendant operation");
    c->add_option("--op", compose.op, "circ | star | pendant")->required()->check(CLI::IsMember({"circ", "star", "pendant"}));
    c->add_option("--g1", compose.g1, "First operand")->required();
    c->add_option("--u1", compose.u1, "Leaf of the first operand")->required();
    c->add_option("--g2", compose.g2, "Second operand");
    c->add_option("--u2", compose.u2, "Leaf of the second operand");
    c->add_option("-o,--output", compose.output, "Write the composite graph here");
    c->add_flag("--json", compose.json, "JSON output");
    c->add_flag("--trusted", compose.trusted, "Skip Cohen-Macaulay re-verification of the operands");
    c->add_flag("--oracle", compose.oracle, "Also run the oracle on the composite");
    c->add_option("--max-vertices", compose.max_vertices, "Oracle vertex cap");

    GenerateArgs generate;
    auto* gcmd = app.add_subcommand("generate", "Random Cohen-Macaulay bipartite graphs from random posets");
    gcmd->add_option("--pairs", generate.pairs, "Number of (x, y) pairs")->check(CLI::PositiveNumber);
    gcmd->add_option("--density", generate.density, "Forward-pair probability")->check(CLI::Range(0.0, 1.0));
    gcmd->add_option("--seed", generate.seed, "Seed");
    gcmd->add_option("--count", generate.count, "Number of graphs");
    gcmd->add_option("-o,--output", generate.dir, "Output directory");
    gcmd->add_flag("--json", generate.json, "JSON output");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Compare a closed form with the oracle on random instances");
    v->add_option("--theorem", verify.theorem, "leaf | circ | star | pendant | cm-values")->required();
    v->add_option("--trials", verify.trials, "Number of instances");
    v->add_option("--max-pairs", verify.max_pairs, "Largest operand size in pairs");
    v->add_option("--seed", verify.seed, "Seed");
    v->add_flag("--json", verify.json, "JSON output");
    v->add_flag("--trusted", verify.trusted, "Skip Cohen-Macaulay re-verification");
    v->add_option("--max-vertices", verify.max_vertices, "Oracle vertex cap");

    std::vector<std::string> check_files;
    bool check_json = false;
    auto* k = app.add_subcommand("check-cm", "Cohen-Macaulay recognition for graph files");
    k->add_option("files", check_files, "Graph files")->required();
    k->add_flag("--json", check_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if (a->parsed()) return cmd_analyze(analyze, out, err);
    if (c->parsed()) return cmd_compose(compose, out, err);
    if (gcmd->parsed()) return cmd_generate(generate, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (k->parsed()) return cmd_check_cm(check_files, check_json, out, err);
    return kInputError;
}

} // namespace eideal::cli
