#include "minforest/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "minforest/atoms.hpp"
#include "minforest/errors.hpp"
#include "minforest/fixtures.hpp"
#include "minforest/graph_io.hpp"
#include "minforest/growth.hpp"
#include "minforest/markov.hpp"
#include "minforest/oracle.hpp"
#include "minforest/tree_minima.hpp"
#include "minforest/verifier.hpp"

namespace minforest {

namespace {

using nlohmann::ordered_json;

struct GraphInput {
    std::string file;
    std::string fixture;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", file, "graph document to read");
        cmd->add_option("--fixture", fixture, "embedded example graph by name");
    }
    WeightedDigraph load() const {
        if (!file.empty() && !fixture.empty())
            throw DomainError("give either a graph file or --fixture, not both");
        if (!file.empty()) return load_graph_file(file);
        if (!fixture.empty()) return fixture_graph(fixture);
        throw DomainError("no graph given; pass a file or --fixture NAME");
    }
    std::string label() const { return file.empty() ? fixture : file; }
};

const char* sign_str(ConvexitySign s) {
    switch (s) {
        case ConvexitySign::Strict: return "strict";
        case ConvexitySign::Equal: return "equal";
        default: return "undefined";
    }
}

std::string forest_arcs_str(const SpanningForest& f) {
    const WeightedDigraph& g = f.graph();
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!f.has_out(v)) continue;
        if (!first) out += ", ";
        first = false;
        out += g.name(v) + "->" + g.name(f.out(v));
    }
    return out + "}";
}

std::string sub_arcs_str(const SubForest& s) {
    const WeightedDigraph& g = s.graph();
    std::string out = set_str(g, s.vertex_set()) + " {";
    bool first = true;
    for (auto [from, to] : s.arcs()) {
        if (!first) out += ", ";
        first = false;
        out += g.name(from) + "->" + g.name(to);
    }
    return out + "}";
}

ordered_json forest_json(const SpanningForest& f) {
    const WeightedDigraph& g = f.graph();
    ordered_json arcs = ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f.has_out(v)) arcs.push_back({g.name(v), g.name(f.out(v))});
    return arcs;
}

ordered_json sub_json(const SubForest& s) {
    const WeightedDigraph& g = s.graph();
    ordered_json arcs = ordered_json::array();
    for (auto [from, to] : s.arcs()) arcs.push_back({g.name(from), g.name(to)});
    ordered_json names = ordered_json::array();
    for (int v : s.vertex_set().elements()) names.push_back(g.name(v));
    return ordered_json{{"vertices", std::move(names)}, {"arcs", std::move(arcs)}};
}

ordered_json set_json(const WeightedDigraph& g, VertexSet d) {
    ordered_json names = ordered_json::array();
    for (int v : d.elements()) names.push_back(g.name(v));
    return names;
}

VertexSet parse_subset(const WeightedDigraph& graph, const std::vector<std::string>& names) {
    VertexSet d;
    for (const std::string& name : names) {
        int v = graph.index_of(name);
        if (v < 0) throw DomainError("unknown vertex name: " + name);
        d.add(v);
    }
    return d;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const GraphInput& input, bool histogram, const std::string& format,
                std::ostream& out) {
    WeightedDigraph graph = input.load();
    ForestAtlas atlas = enumerate_atlas(graph);
    const int n = graph.vertex_count();

    std::vector<int> populated;
    for (int k = 1; k <= n; ++k)
        if (atlas.level_nonempty(k)) populated.push_back(k);

    if (format == "machine") {
        ordered_json doc;
        doc["graph"] = {{"label", input.label()},
                        {"vertices", set_json(graph, graph.vertices())},
                        {"arc_count", static_cast<long long>(graph.arcs().size())}};
        ordered_json levels = ordered_json::array();
        for (int k = 1; k <= n; ++k) {
            ordered_json level = {{"k", k},
                                  {"forests", atlas.forest_count[static_cast<std::size_t>(k)]},
                                  {"min", atlas.profile.min_weight[static_cast<std::size_t>(k)].str()},
                                  {"minimal_family", atlas.family(k).forests.size()}};
            if (k <= n - 1) level["sign"] = sign_str(atlas.profile.sign_at(k));
            if (histogram) {
                ordered_json hist = ordered_json::array();
                for (const auto& [w, count] : atlas.histogram[static_cast<std::size_t>(k)])
                    hist.push_back({{"weight", w.str()}, {"forests", count}});
                level["histogram"] = std::move(hist);
            }
            levels.push_back(std::move(level));
        }
        doc["levels"] = std::move(levels);
        ordered_json atoms = ordered_json::array();
        for (int k : populated) {
            AtomPartition part = atom_partition(atlas, k);
            ordered_json list = ordered_json::array();
            for (int i = 0; i < part.atom_count(); ++i)
                list.push_back({{"set", set_json(graph, part.atoms[static_cast<std::size_t>(i)])},
                                {"labeled", static_cast<bool>(part.labeled[static_cast<std::size_t>(i)])}});
            atoms.push_back({{"k", k}, {"atoms", std::move(list)}});
        }
        doc["atoms"] = std::move(atoms);
        emit(out, doc);
        return 0;
    }

    out << "graph " << input.label() << ": " << n << " vertices, " << graph.arcs().size()
        << " arcs\n\n";
    out << "  k  forests  minimal  minimum   gap sign at k\n";
    for (int k = 1; k <= n; ++k) {
        char line[128];
        std::snprintf(line, sizeof line, "%3d  %7lld  %7zu  %-8s  %s\n", k,
                      atlas.forest_count[static_cast<std::size_t>(k)],
                      atlas.family(k).forests.size(),
                      atlas.profile.min_weight[static_cast<std::size_t>(k)].str().c_str(),
                      k <= n - 1 ? sign_str(atlas.profile.sign_at(k)) : "-");
        out << line;
    }
    if (histogram) {
        out << "\nweight histograms\n";
        for (int k = 1; k <= n; ++k) {
            if (atlas.histogram[static_cast<std::size_t>(k)].empty()) continue;
            out << "  k=" << k << ":";
            for (const auto& [w, count] : atlas.histogram[static_cast<std::size_t>(k)])
                out << "  " << w.str() << " x" << count;
            out << "\n";
        }
    }
    out << "\natoms (* carries a root in some minimal forest)\n";
    for (int k : populated) {
        AtomPartition part = atom_partition(atlas, k);
        out << "  k=" << k << ":";
        for (int i = 0; i < part.atom_count(); ++i)
            out << " " << set_str(graph, part.atoms[static_cast<std::size_t>(i)])
                << (part.labeled[static_cast<std::size_t>(i)] ? "*" : "");
        out << "\n";
    }
    return 0;
}

// ---- minima ----------------------------------------------------------------

int cmd_minima(const GraphInput& input, const std::vector<std::string>& names,
               const std::string& mode, const std::string& format, std::ostream& out) {
    WeightedDigraph graph = input.load();
    VertexSet d = parse_subset(graph, names);

    if (mode == "exit") {
        TreeMinimumSet exits = exit_tree_minima(graph, d);
        ExtRational decomposed = exit_tree_weight_formula(graph, d);
        if (format == "machine") {
            ordered_json doc;
            doc["subset"] = set_json(graph, d);
            doc["mode"] = "exit";
            doc["weight"] = exits.weight.str();
            doc["decomposition"] = decomposed.str();
            ordered_json trees = ordered_json::array();
            for (const SubForest& t : exits.trees) trees.push_back(sub_json(t));
            doc["trees"] = std::move(trees);
            emit(out, doc);
            return 0;
        }
        out << "exit-tree minimum on " << set_str(graph, d) << ": " << exits.weight.str()
            << " (decomposition gives " << decomposed.str() << ")\n";
        for (const SubForest& t : exits.trees) out << "  " << sub_arcs_str(t) << "\n";
        return 0;
    }

    TreeMinimaRecord rec = rooted_tree_minima(graph, d);
    if (format == "machine") {
        ordered_json doc;
        doc["subset"] = set_json(graph, d);
        doc["mode"] = "rooted";
        doc["weight"] = rec.rooted.weight.str();
        ordered_json per_root = ordered_json::array();
        for (const auto& [root, set] : rec.per_root) {
            ordered_json entry = {{"root", graph.name(root)}, {"weight", set.weight.str()}};
            ordered_json trees = ordered_json::array();
            for (const SubForest& t : set.trees) trees.push_back(sub_json(t));
            entry["trees"] = std::move(trees);
            per_root.push_back(std::move(entry));
        }
        doc["per_root"] = std::move(per_root);
        ordered_json trees = ordered_json::array();
        for (const SubForest& t : rec.rooted.trees) trees.push_back(sub_json(t));
        doc["trees"] = std::move(trees);
        emit(out, doc);
        return 0;
    }
    out << "rooted-tree minimum on " << set_str(graph, d) << ": " << rec.rooted.weight.str()
        << "\n";
    for (const SubForest& t : rec.rooted.trees) out << "  " << sub_arcs_str(t) << "\n";
    out << "per root\n";
    for (const auto& [root, set] : rec.per_root) {
        out << "  " << graph.name(root) << ": " << set.weight.str() << "\n";
        for (const SubForest& t : set.trees) out << "    " << sub_arcs_str(t) << "\n";
    }
    return 0;
}

// ---- assemble / descend ----------------------------------------------------

void emit_family(const WeightedDigraph& graph, int k, const char* source, bool guaranteed,
                 const MinimalForestFamily& family, const std::string& format,
                 std::ostream& out) {
    if (format == "machine") {
        ordered_json doc;
        doc["k"] = k;
        doc["source"] = source;
        doc["construction_applies"] = guaranteed;
        doc["weight"] = family.weight.str();
        ordered_json forests = ordered_json::array();
        for (const SpanningForest& f : family.forests) forests.push_back(forest_json(f));
        doc["forests"] = std::move(forests);
        emit(out, doc);
        return;
    }
    (void)graph;
    out << "minimal " << k << "-tree family (" << source << "): weight " << family.weight.str()
        << ", " << family.forests.size() << (family.forests.size() == 1 ? " forest" : " forests")
        << "\n";
    for (const SpanningForest& f : family.forests) out << "  " << forest_arcs_str(f) << "\n";
}

int cmd_assemble(const GraphInput& input, int k, const std::string& format, std::ostream& out) {
    WeightedDigraph graph = input.load();
    ForestAtlas atlas = enumerate_atlas(graph);
    if (k < 1 || k > graph.vertex_count()) throw DomainError("k must lie in 1..N");
    if (!atlas.level_nonempty(k)) throw DomainError("no forest has exactly " + std::to_string(k) + " trees");
    if (atlas.profile.strict_at(k)) {
        AtomTreeCatalog catalog = build_catalog(atlas, k);
        emit_family(graph, k, "per-atom assembly", true, assemble_level_k(catalog), format, out);
    } else {
        if (format != "machine")
            out << "gap sign at k=" << k
                << " is not strict; the assembly guarantee does not apply — reporting the "
                   "enumerated family\n";
        emit_family(graph, k, "enumeration", false, atlas.family(k), format, out);
    }
    return 0;
}

int cmd_descend(const GraphInput& input, int k, const std::string& format, std::ostream& out) {
    WeightedDigraph graph = input.load();
    ForestAtlas atlas = enumerate_atlas(graph);
    if (k < 2 || k > graph.vertex_count()) throw DomainError("k must lie in 2..N");
    if (!atlas.level_nonempty(k - 1))
        throw DomainError("no forest has exactly " + std::to_string(k - 1) + " trees");
    if (atlas.profile.strict_at(k)) {
        AtomTreeCatalog catalog = build_catalog(atlas, k);
        emit_family(graph, k - 1, "labeled-atom replacement", true, descend(catalog), format,
                    out);
    } else {
        if (format != "machine")
            out << "gap sign at k=" << k
                << " is not strict; the replacement guarantee does not apply — reporting the "
                   "enumerated family\n";
        emit_family(graph, k - 1, "enumeration", false, atlas.family(k - 1), format, out);
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const CampaignConfig& config, const std::string& format, std::ostream& out) {
    CampaignReport report = run_campaign(config);
    if (format == "machine")
        out << report.machine();
    else
        out << report.text();
    return report.all_passed() ? 0 : 1;
}

// ---- markov ----------------------------------------------------------------

int cmd_markov(const GraphInput& input, std::vector<double> epsilons,
               std::vector<double> lambdas, const std::string& format, std::ostream& out) {
    WeightedDigraph graph = input.load();
    ForestAtlas atlas = enumerate_atlas(graph);
    if (epsilons.empty()) epsilons = {0.05};
    if (lambdas.empty()) lambdas = {0.5, 1.0, 2.0};

    if (format == "machine") {
        ordered_json doc;
        doc["graph"] = input.label();
        ordered_json runs = ordered_json::array();
        for (double eps : epsilons) {
            CoefficientProfile profile = coefficient_profile(atlas, eps);
            MatrixForestCheck check = verify_matrix_forest(atlas, eps, lambdas);
            ordered_json levels = ordered_json::array();
            for (const CoefficientLevel& level : profile.levels) {
                ordered_json entry = {{"l", level.l},
                                      {"forests", level.forest_count},
                                      {"min", level.min_weight.str()},
                                      {"positive", level.positive}};
                if (level.positive) {
                    entry["log_coefficient"] = level.log_coefficient;
                    entry["exponent_estimate"] = level.exponent_estimate;
                    entry["gap_bound"] = level.gap_bound;
                }
                levels.push_back(std::move(entry));
            }
            runs.push_back({{"epsilon", eps},
                            {"levels", std::move(levels)},
                            {"matrix_forest",
                             {{"lambdas", lambdas},
                              {"max_relative_deviation", check.max_relative_deviation},
                              {"ill_conditioned", check.ill_conditioned}}}});
        }
        doc["runs"] = std::move(runs);
        emit(out, doc);
        return 0;
    }

    for (double eps : epsilons) {
        CoefficientProfile profile = coefficient_profile(atlas, eps);
        out << "epsilon " << eps << "\n";
        out << "  l  forests  minimum   exponent estimate  deviation bound\n";
        for (const CoefficientLevel& level : profile.levels) {
            if (level.l == 0) continue;
            char line[160];
            if (level.positive)
                std::snprintf(line, sizeof line, "%3d  %7lld  %-8s  %17.9f  %15.9f\n", level.l,
                              level.forest_count, level.min_weight.str().c_str(),
                              level.exponent_estimate, level.gap_bound);
            else
                std::snprintf(line, sizeof line, "%3d  %7lld  %-8s  %17s  %15s\n", level.l,
                              level.forest_count, level.min_weight.str().c_str(), "-", "-");
            out << line;
        }
        MatrixForestCheck check = verify_matrix_forest(atlas, eps, lambdas);
        out << "  determinant vs forest sum over " << lambdas.size()
            << " sample points: max relative deviation " << check.max_relative_deviation
            << (check.ill_conditioned ? " (ill-conditioned: scales differ by > 1e12)" : "")
            << "\n";
    }
    return 0;
}

// ---- dot -------------------------------------------------------------------

int cmd_dot(const GraphInput& input, int k, const std::string& format, std::ostream& out) {
    (void)format;
    WeightedDigraph graph = input.load();
    if (k == 0) {
        out << dot_graph(graph, input.label());
        return 0;
    }
    ForestAtlas atlas = enumerate_atlas(graph);
    if (k < 1 || k > graph.vertex_count()) throw DomainError("k must lie in 1..N");
    if (!atlas.level_nonempty(k))
        throw DomainError("no forest has exactly " + std::to_string(k) + " trees");
    AtomPartition part = atom_partition(atlas, k);
    const auto& family = atlas.family(k).forests;
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::ostringstream title;
        title << input.label() << " k=" << k << " forest " << (i + 1) << " of " << family.size();
        out << dot_forest(family[i], &part, title.str());
    }
    return 0;
}

// ---- fixtures --------------------------------------------------------------

int cmd_fixtures(const std::string& show, const std::string& format, std::ostream& out) {
    if (!show.empty()) {
        for (const Fixture& fixture : fixtures())
            if (show == fixture.name) {
                out << fixture.document;
                return 0;
            }
        throw DomainError("unknown fixture: " + show);
    }
    if (format == "machine") {
        ordered_json doc = ordered_json::array();
        for (const Fixture& fixture : fixtures()) {
            WeightedDigraph graph = fixture_graph(fixture.name);
            doc.push_back({{"name", fixture.name},
                           {"vertices", graph.vertex_count()},
                           {"arcs", static_cast<long long>(graph.arcs().size())}});
        }
        emit(out, doc);
        return 0;
    }
    for (const Fixture& fixture : fixtures()) {
        WeightedDigraph graph = fixture_graph(fixture.name);
        out << "  " << fixture.name << ": " << graph.vertex_count() << " vertices, "
            << graph.arcs().size() << " arcs\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimum-weight spanning in-forest analysis"};
    app.name("minforest");
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output form")
            ->check(CLI::IsMember({"text", "machine"}))
            ->capture_default_str();
    };

    GraphInput analyze_input;
    bool analyze_histogram = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "level table, gap signs, and atom partitions of a graph");
    analyze_input.attach(analyze);
    analyze->add_flag("--histogram", analyze_histogram, "include per-level weight histograms");
    add_format(analyze);

    GraphInput minima_input;
    std::vector<std::string> minima_names;
    std::string minima_mode = "rooted";
    CLI::App* minima =
        app.add_subcommand("minima", "minimum-weight trees on a vertex subset");
    minima_input.attach(minima);
    minima->add_option("-D,--subset", minima_names, "comma-separated vertex names")
        ->required()
        ->delimiter(',');
    minima->add_option("--mode", minima_mode, "rooted: spanning trees of the subset; exit: plus one arc out")
        ->check(CLI::IsMember({"rooted", "exit"}))
        ->capture_default_str();
    add_format(minima);

    GraphInput assemble_input;
    int assemble_k = 0;
    CLI::App* assemble = app.add_subcommand(
        "assemble", "rebuild the minimal k-tree family from per-atom minimizer trees");
    assemble_input.attach(assemble);
    assemble->add_option("-k,--trees", assemble_k, "tree count")->required();
    add_format(assemble);

    GraphInput descend_input;
    int descend_k = 0;
    CLI::App* descend_cmd = app.add_subcommand(
        "descend", "rebuild the minimal (k-1)-tree family by labeled-atom replacement");
    descend_input.attach(descend_cmd);
    descend_cmd->add_option("-k,--trees", descend_k, "tree count to descend from")->required();
    add_format(descend_cmd);

    CampaignConfig config;
    bool no_fixtures = false;
    std::string weights = "small-ints";
    CLI::App* verify = app.add_subcommand(
        "verify", "run every statement check over fixtures and random graphs");
    verify->add_option("--seed", config.seed, "campaign seed")->capture_default_str();
    verify->add_option("--instances", config.instances, "random graphs to generate")
        ->capture_default_str();
    verify->add_option("--min-n", config.min_n, "smallest vertex count")->capture_default_str();
    verify->add_option("--max-n", config.max_n, "largest vertex count")->capture_default_str();
    verify->add_option("--samples", config.samples_per_instance,
                       "replacement triples per instance")
        ->capture_default_str();
    verify->add_option("--weights", weights, "weight distribution")
        ->check(CLI::IsMember({"small-ints", "powers-of-two"}))
        ->capture_default_str();
    verify->add_option("--weight-lo", config.weight_lo, "smallest integer weight")
        ->capture_default_str();
    verify->add_option("--weight-hi", config.weight_hi, "largest integer weight")
        ->capture_default_str();
    verify->add_flag("--fixtures-only", config.fixtures_only, "skip random instances");
    verify->add_flag("--no-fixtures", no_fixtures, "skip the embedded example graphs");
    add_format(verify);

    GraphInput markov_input;
    std::vector<double> epsilons;
    std::vector<double> lambdas;
    CLI::App* markov = app.add_subcommand(
        "markov", "low-temperature coefficient exponents and the determinant cross-check");
    markov_input.attach(markov);
    markov->add_option("--epsilon", epsilons, "temperature parameter(s), positive");
    markov->add_option("--lambda", lambdas, "determinant sample points, positive");
    add_format(markov);

    GraphInput dot_input;
    int dot_k = 0;
    CLI::App* dot = app.add_subcommand(
        "dot", "graph as DOT; with -k, every minimal k-tree forest with atom clusters");
    dot_input.attach(dot);
    dot->add_option("-k,--trees", dot_k, "render the minimal family at this tree count");
    add_format(dot);

    std::string fixtures_show;
    CLI::App* fixtures_cmd =
        app.add_subcommand("fixtures", "list the embedded example graphs");
    fixtures_cmd->add_option("--show", fixtures_show, "print one fixture's document");
    add_format(fixtures_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        if (analyze->parsed())
            return cmd_analyze(analyze_input, analyze_histogram, format, out);
        if (minima->parsed())
            return cmd_minima(minima_input, minima_names, minima_mode, format, out);
        if (assemble->parsed()) return cmd_assemble(assemble_input, assemble_k, format, out);
        if (descend_cmd->parsed()) return cmd_descend(descend_input, descend_k, format, out);
        if (verify->parsed()) {
            config.include_fixtures = !no_fixtures;
            config.weights =
                weights == "powers-of-two" ? WeightMode::PowersOfTwo : WeightMode::SmallInts;
            return cmd_verify(config, format, out);
        }
        if (markov->parsed()) return cmd_markov(markov_input, epsilons, lambdas, format, out);
        if (dot->parsed()) return cmd_dot(dot_input, dot_k, format, out);
        if (fixtures_cmd->parsed()) return cmd_fixtures(fixtures_show, format, out);
    } catch (const std::exception& e) {
        err << "minforest " << sub << ": " << e.what() << "\n";
        return 1;
    }
    err << "minforest: no subcommand\n";
    return 1;
}

}  // namespace minforest
