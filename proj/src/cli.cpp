#include "ccsg/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsg/cc_algorithm.hpp"
#include "ccsg/cycle_analysis.hpp"
#include "ccsg/graph_io.hpp"
#include "ccsg/oracle.hpp"

namespace ccsg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edge_pair_json(std::pair<int, int> e) {
    return ordered_json::array({e.first + 1, e.second + 1});
}

ordered_json edge_list_json(const std::vector<std::pair<int, int>>& edges) {
    ordered_json out = ordered_json::array();
    for (auto e : edges) out.push_back(edge_pair_json(e));
    return out;
}

ordered_json clusters_json(const Clustering& clustering) {
    ordered_json out = ordered_json::array();
    for (const auto& cluster : clustering.clusters()) {
        ordered_json members = ordered_json::array();
        for (int v : cluster) members.push_back(v + 1);
        out.push_back(members);
    }
    return out;
}

ordered_json cycle_json(const Cycle& cycle) {
    ordered_json vertices = ordered_json::array();
    for (int v : cycle.vertices) vertices.push_back(v + 1);
    return ordered_json{{"vertices", vertices}, {"negative_edges", cycle.negative_count}};
}

ordered_json disagreements_json(const DisagreementReport& report) {
    return ordered_json{{"total", report.total},
                        {"negative_inside", edge_list_json(report.negative_inside)},
                        {"positive_across", edge_list_json(report.positive_across)}};
}

ordered_json report_skeleton(const std::string& input_bytes, const SignedGraph& g) {
    return ordered_json{
        {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
        {"input",
         {{"checksum", io::checksum_hex(input_bytes)},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()}}}};
}

void emit(const ordered_json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text += "\n";
    if (out_path.empty())
        std::cout << text;
    else
        io::write_file_atomic(out_path, text);
}

struct ClusterArgs {
    std::string input;
    std::string output;
    bool trace = false;
    bool post_merge = false;
};

int cmd_cluster(const ClusterArgs& args) {
    std::string bytes = io::read_file(args.input);
    SignedGraph g = io::parse_graph(bytes);
    CcResult result = run_cc(g, CcOptions{args.post_merge});
    DisagreementReport disagreements = count_disagreements(g, result.clustering);

    auto clusterable = is_clusterable(g);
    if (clusterable.clusterable && disagreements.total != 0)
        throw Error("zero-disagreement guarantee violated on a clusterable input (total=" +
                    std::to_string(disagreements.total) + ")");

    ordered_json report = report_skeleton(bytes, g);
    report["clusters"] = clusters_json(result.clustering);
    report["disagreements"] = disagreements_json(disagreements);
    report["analysis"] = ordered_json{{"clusterable", clusterable.clusterable}};
    report["merge_rounds"] = result.merge_rounds;
    if (args.trace) report["trace"] = result.trace;
    emit(report, args.output);
    return kExitOk;
}

struct AnalyzeArgs {
    std::string input;
    std::string output;
    int max_cycle_length = 0;
    bool allow_truncated = false;
};

int cmd_analyze(const AnalyzeArgs& args) {
    std::string bytes = io::read_file(args.input);
    SignedGraph g = io::parse_graph(bytes);

    auto clusterable = is_clusterable(g);
    int effective = args.max_cycle_length == 0 ? g.vertex_count() : args.max_cycle_length;
    auto cycles = enumerate_weakly_negative_cycles(g, effective);
    auto packing = max_edge_disjoint_wnc_packing(g, args.max_cycle_length, args.allow_truncated);
    auto triangle = triangle_condition_check(g);
    auto condition = condition_theorem_check(g, args.max_cycle_length, args.allow_truncated);
    auto hits = forbidden_subgraph_scan(g, ForbiddenPattern::all());

    ordered_json analysis;
    analysis["clusterable"] = clusterable.clusterable;
    if (clusterable.certificate)
        analysis["certificate"] = clusters_json(*clusterable.certificate);
    if (clusterable.witness) analysis["witness_cycle"] = cycle_json(*clusterable.witness);
    analysis["max_cycle_length"] = effective;
    analysis["truncated"] = effective < g.vertex_count();
    analysis["wnc_count"] = static_cast<int>(cycles.size());
    ordered_json witness = ordered_json::array();
    for (const Cycle& c : packing.witness) witness.push_back(cycle_json(c));
    analysis["packing"] = ordered_json{{"size", packing.size}, {"witness", witness}};
    ordered_json violations = ordered_json::array();
    for (const Cycle& c : triangle.violations) violations.push_back(cycle_json(c));
    analysis["triangle_condition"] = ordered_json{{"holds", triangle.holds},
                                                  {"violations", violations}};
    ordered_json condition_json{{"holds", condition.holds}};
    if (condition.witness) {
        ordered_json triple = ordered_json::array();
        for (const Cycle& c : *condition.witness) triple.push_back(cycle_json(c));
        condition_json["witness"] = triple;
    }
    analysis["condition_theorem"] = condition_json;
    ordered_json hits_json = ordered_json::array();
    for (const PatternHit& hit : hits) {
        ordered_json vertices = ordered_json::array();
        for (int v : hit.vertices) vertices.push_back(v + 1);
        hits_json.push_back(
            ordered_json{{"pattern", std::string(1, hit.pattern_id)}, {"vertices", vertices}});
    }
    analysis["forbidden_hits"] = hits_json;

    ordered_json report = report_skeleton(bytes, g);
    report["analysis"] = analysis;
    emit(report, args.output);
    return kExitOk;
}

struct CompareArgs {
    std::string input;
    std::string output;
    int oracle_limit = kDefaultOracleVertexLimit;
    bool post_merge = false;
};

int cmd_compare(const CompareArgs& args) {
    std::string bytes = io::read_file(args.input);
    SignedGraph g = io::parse_graph(bytes);
    ApproximationReport approx = approximation_report(g, args.oracle_limit);
    if (approx.zero_guarantee_breach)
        throw Error("zero-disagreement guarantee violated on a clusterable input");

    CcResult sol = run_cc(g, CcOptions{args.post_merge});
    ordered_json report = report_skeleton(bytes, g);
    report["clusters"] = clusters_json(sol.clustering);
    report["disagreements"] = disagreements_json(approx.sol);
    report["analysis"] = ordered_json{{"clusterable", approx.clusterable},
                                      {"triangle_condition", approx.triangle_condition},
                                      {"forbidden_free", approx.forbidden_free},
                                      {"subclass", approx.subclass}};
    report["oracle"] =
        ordered_json{{"opt", approx.opt}, {"sol", approx.sol.total}, {"ratio", approx.ratio}};
    emit(report, args.output);

    if (approx.subclass && approx.sol.total > 2 * approx.opt) {
        std::cerr << "2-approximation bound violated on a subclass instance: sol="
                  << approx.sol.total << " opt=" << approx.opt << "\n";
        return kExitRatioViolated;
    }
    return kExitOk;
}

struct GenArgs {
    std::string kind;
    std::string output;
    int n = 8;
    double p_edge = 0.5;
    double p_neg = 0.3;
    std::vector<int> sizes;
    std::uint64_t seed = 1;
    int attempts = kDefaultGenerationBudget;
};

int cmd_gen(const GenArgs& args) {
    SignedGraph graph(0);
    std::vector<std::string> comments;
    char buffer[160];
    if (args.kind == "subclass") {
        GeneratedInstance instance =
            generate_subclass_instance(args.n, args.p_edge, args.p_neg, args.seed,
                                       args.attempts);
        graph = instance.graph;
        std::snprintf(buffer, sizeof buffer,
                      "generator: subclass n=%d p_edge=%g p_neg=%g seed=%llu attempts=%d", args.n,
                      args.p_edge, args.p_neg, static_cast<unsigned long long>(args.seed),
                      instance.attempts);
        std::cout << "accepted after " << instance.attempts << " attempt(s), rejected "
                  << instance.attempts - 1 << "\n";
    } else if (args.kind == "clusterable") {
        graph = generate_clusterable_instance(args.sizes, args.p_edge, args.seed);
        std::string sizes_text;
        for (std::size_t i = 0; i < args.sizes.size(); ++i)
            sizes_text += (i ? "," : "") + std::to_string(args.sizes[i]);
        std::snprintf(buffer, sizeof buffer, "generator: clusterable sizes=%s p_edge=%g seed=%llu",
                      sizes_text.c_str(), args.p_edge,
                      static_cast<unsigned long long>(args.seed));
    } else {
        graph = generate_random_instance(args.n, args.p_edge, args.p_neg, args.seed);
        std::snprintf(buffer, sizeof buffer,
                      "generator: random n=%d p_edge=%g p_neg=%g seed=%llu", args.n, args.p_edge,
                      args.p_neg, static_cast<unsigned long long>(args.seed));
    }
    comments.emplace_back(buffer);
    io::write_file_atomic(args.output, io::serialize_graph(graph, comments));
    return kExitOk;
}

struct BenchArgs {
    std::string sizes_text = "50,100,200";
    double density = 4.0;
    double p_neg = 0.3;
    std::uint64_t seed = 1;
};

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        if (!token.empty()) sizes.push_back(std::stoi(token));
        pos = comma + 1;
    }
    return sizes;
}

int cmd_bench(const BenchArgs& args) {
    BenchReport bench = run_bench(parse_sizes(args.sizes_text), args.density, args.p_neg, args.seed);
    for (const BenchRow& row : bench.rows) {
        std::printf("n=%-6d m=%-7d time_ms=%.3f\n", row.n, row.m, row.milliseconds);
    }
    if (bench.rows.size() >= 2)
        std::printf("fitted growth exponent: %.2f\n", bench.fitted_exponent);
    return kExitOk;
}

}  // namespace

BenchReport run_bench(const std::vector<int>& sizes, double density, double p_neg,
                      std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    BenchReport report;
    for (int n : sizes) {
        double p_edge = n > 1 ? std::min(1.0, density / (n - 1)) : 0.0;
        SignedGraph g = generate_random_instance(n, p_edge, p_neg, seed + n);
        // Repeat tiny runs until the sample is long enough to time.
        int repetitions = 1;
        double ms = 0.0;
        while (true) {
            auto start = clock::now();
            for (int r = 0; r < repetitions; ++r) run_cc(g);
            auto stop = clock::now();
            ms = std::chrono::duration<double, std::milli>(stop - start).count();
            if (ms >= 20.0 || repetitions >= 256) break;
            repetitions *= 4;
        }
        report.rows.push_back({n, g.edge_count(), ms / repetitions});
    }

    // Least-squares slope of log(time) against log(n).
    std::vector<std::pair<double, double>> points;
    for (const BenchRow& row : report.rows)
        if (row.n > 1 && row.milliseconds > 0.0)
            points.emplace_back(std::log(static_cast<double>(row.n)), std::log(row.milliseconds));
    if (points.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : points) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double k = static_cast<double>(points.size());
        report.fitted_exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return report;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"correlation clustering toolkit for signed graphs"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    auto* cluster = app.add_subcommand("cluster", "run the clustering pipeline on a graph file");
    cluster->add_option("input", cluster_args.input, "graph file")->required();
    cluster->add_option("-o,--output", cluster_args.output, "report path (default: stdout)");
    cluster->add_flag("--trace", cluster_args.trace, "include the step-by-step trace");
    cluster->add_flag("--post-merge", cluster_args.post_merge,
                      "coalesce edge-free cluster pairs after the merge loop");

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "structural analysis without clustering");
    analyze->add_option("input", analyze_args.input, "graph file")->required();
    analyze->add_option("-o,--output", analyze_args.output, "report path (default: stdout)");
    analyze->add_option("--max-cycle-length", analyze_args.max_cycle_length,
                        "cycle enumeration bound (default: n)");
    analyze->add_flag("--allow-truncated", analyze_args.allow_truncated,
                      "accept an incomplete enumeration");

    CompareArgs compare_args;
    auto* compare = app.add_subcommand("compare", "pipeline result against the brute-force optimum");
    compare->add_option("input", compare_args.input, "graph file")->required();
    compare->add_option("-o,--output", compare_args.output, "report path (default: stdout)");
    compare->add_option("--oracle-limit", compare_args.oracle_limit,
                        "largest n the oracle will accept");
    compare->add_flag("--post-merge", compare_args.post_merge,
                      "coalesce edge-free cluster pairs after the merge loop");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate instance files");
    gen->add_option("kind", gen_args.kind, "subclass | clusterable | random")
        ->required()
        ->check(CLI::IsMember({"subclass", "clusterable", "random"}));
    gen->add_option("output", gen_args.output, "graph file to write")->required();
    gen->add_option("-n,--vertices", gen_args.n, "vertex count");
    gen->add_option("--p-edge", gen_args.p_edge, "edge probability");
    gen->add_option("--p-neg", gen_args.p_neg, "negative sign probability");
    gen->add_option("--sizes", gen_args.sizes, "cluster sizes for 'clusterable'")->delimiter(',');
    gen->add_option("--seed", gen_args.seed, "rng seed");
    gen->add_option("--attempts", gen_args.attempts, "rejection budget for 'subclass'");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time the pipeline on random sparse instances");
    bench->add_option("--sizes", bench_args.sizes_text, "comma-separated vertex counts");
    bench->add_option("--density", bench_args.density, "expected average degree");
    bench->add_option("--p-neg", bench_args.p_neg, "negative sign probability");
    bench->add_option("--seed", bench_args.seed, "rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*gen && gen_args.kind == "clusterable" && gen_args.sizes.empty()) {
        std::cerr << "error: 'gen clusterable' requires --sizes\n";
        return static_cast<int>(CLI::ExitCodes::RequiredError);
    }

    try {
        if (*cluster) return cmd_cluster(cluster_args);
        if (*analyze) return cmd_analyze(analyze_args);
        if (*compare) return cmd_compare(compare_args);
        if (*gen) return cmd_gen(gen_args);
        if (*bench) return cmd_bench(bench_args);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const EnumerationTruncatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTruncated;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const GenerationExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGenerationExhausted;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> storage;
    storage.push_back(kToolName);
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& arg : storage) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace ccsg::cli
