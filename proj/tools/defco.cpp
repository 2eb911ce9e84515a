// defco: defective (improper) coloring toolkit for embedded planar graphs.
//
// Subcommands: gen, solve, verify, audit, classify, lemmas, bench. Graphs
// travel between commands as embedding JSON, graph6 lines, or the JSON
// envelope solve emits; every command that reads a graph accepts every
// format the producing commands write.
//
// Exit codes: 0 success/feasible, 1 infeasible or invalid coloring,
// 2 invalid input (format, girth gate, non-planar), 3 internal invariant
// breach.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "defco/census.hpp"
#include "defco/classify.hpp"
#include "defco/discharge.hpp"
#include "defco/errors.hpp"
#include "defco/graph6.hpp"
#include "defco/jsonio.hpp"
#include "defco/named.hpp"
#include "defco/planarity.hpp"
#include "defco/random_gen.hpp"
#include "defco/solve.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace defco;

struct LoadedInput {
    SimpleGraph graph;
    std::optional<PlanarEmbedding> embedding;
    std::optional<std::vector<Color>> coloring;
};

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ContractError("cannot open output file: " + path);
    out << text;
}

LoadedInput parse_input(const std::string& text) {
    LoadedInput in;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ContractError("empty input");
    if (text[first] == '{') {
        json doc = json::parse(text);
        if (doc.contains("graph") || doc.contains("graph_g6")) {
            if (doc.contains("graph")) {
                in.embedding = embedding_from_json(doc.at("graph"));
                in.graph = in.embedding->graph();
            } else {
                in.graph = parse_graph6(doc.at("graph_g6").get<std::string>());
            }
            if (doc.contains("solve") && doc.at("solve").contains("coloring"))
                in.coloring =
                    coloring_from_json(doc.at("solve").at("coloring"), in.graph.vertex_count());
        } else {
            in.embedding = embedding_from_json(doc);
            in.graph = in.embedding->graph();
        }
        return in;
    }
    in.graph = parse_graph6(text);
    return in;
}

const PlanarEmbedding& need_embedding(LoadedInput& in) {
    if (!in.embedding) {
        auto result = embed(in.graph);
        if (std::holds_alternative<NonPlanar>(result))
            throw ContractError("input graph is not planar");
        in.embedding = std::get<PlanarEmbedding>(std::move(result));
    }
    return *in.embedding;
}

std::vector<SpecialFacePattern> load_templates(const std::string& path) {
    if (path.empty()) return default_face_templates();
    return parse_face_templates(slurp(path));
}

void echo_invocation(int argc, char** argv, std::uint64_t seed) {
    std::ostringstream line;
    line << "#";
    for (int i = 0; i < argc; ++i) line << " " << argv[i];
    line << " [seed=" << seed << " version=" << kVersion << "]";
    std::cerr << line.str() << "\n";
}

int run_gen(const std::string& family, int n, std::uint64_t seed, int count,
            const std::string& format, const std::string& out_path) {
    std::ostringstream out;
    for (int i = 0; i < count; ++i) {
        PlanarEmbedding emb = family == "random" ? gen_random(n, seed + i)
                                                 : gen_named(family, n);
        if (format == "json")
            out << embedding_to_json(emb).dump() << "\n";
        else if (format == "graph6")
            out << write_graph6(emb.graph()) << "\n";
        else if (format == "dot")
            out << to_dot(emb);
        else
            throw ContractError("gen: unknown format '" + format + "'");
    }
    emit(out_path, out.str());
    return 0;
}

int run_solve(LoadedInput& in, int d1, int d2, const std::string& strategy,
              const std::string& reduction, int depth, bool trace,
              const std::string& out_path) {
    SolveReport report;
    if (strategy == "exact") {
        report = exact_solve(in.graph, d1, d2);
    } else if (strategy == "reduce") {
        if (d1 != 3 || d2 != 4)
            throw ContractError("solve: --strategy reduce implements (3,4) only");
        ReduceOptions opts;
        opts.max_depth = depth;
        opts.record_trace = trace;
        if (reduction == "edge")
            opts.strategy = ReductionKind::EdgeRemoval;
        else if (reduction == "gadget")
            opts.strategy = ReductionKind::ThreeVertexGadget;
        else if (reduction != "vertex")
            throw ContractError("solve: unknown --reduction '" + reduction + "'");
        report = reduce_solve(need_embedding(in), opts);
    } else {
        throw ContractError("solve: unknown strategy '" + strategy + "'");
    }

    json doc;
    if (in.embedding)
        doc["graph"] = embedding_to_json(*in.embedding);
    else
        doc["graph_g6"] = write_graph6(in.graph);
    doc["solve"] = solve_report_to_json(report);
    emit(out_path, doc.dump(2) + "\n");
    return report.feasible ? 0 : 1;
}

int run_verify(LoadedInput& in, int d1, int d2, const std::string& coloring_path,
               const std::string& out_path) {
    std::vector<Color> phi;
    if (!coloring_path.empty())
        phi = coloring_from_json(json::parse(slurp(coloring_path)), in.graph.vertex_count());
    else if (in.coloring)
        phi = *in.coloring;
    else
        throw ContractError("verify: no coloring (pipe a solve envelope or pass --coloring)");

    auto res = verify(in.graph, phi, d1, d2);
    json doc{{"valid", res.valid}, {"empty_class", res.empty_class}};
    json violations = json::array();
    for (const auto& v : res.violations)
        violations.push_back({{"vertex", v.vertex}, {"same_color_degree", v.same_color_degree}});
    doc["violations"] = std::move(violations);
    emit(out_path, doc.dump(2) + "\n");
    return res.valid ? 0 : 1;
}

int run_bench(const std::string& corpus_path, int jobs, int depth, const std::string& out_path) {
    std::ifstream corpus(corpus_path);
    if (!corpus) throw ContractError("bench: cannot open corpus file " + corpus_path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(corpus, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);

    struct Row {
        bool ok = false;
        std::string error;
        int n = 0;
        int fallbacks = 0;
        double millis = 0;
    };
    std::vector<Row> rows(lines.size());
    std::atomic<std::size_t> cursor{0};

    auto worker = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= lines.size()) return;
            Row& row = rows[i];
            try {
                LoadedInput in = parse_input(lines[i]);
                const PlanarEmbedding& emb = need_embedding(in);
                row.n = emb.vertex_count();
                ReduceOptions opts;
                opts.max_depth = depth;
                auto report = reduce_solve(emb, opts);
                row.fallbacks = report.stats.fallbacks;
                row.millis = report.stats.millis;
                row.ok = report.feasible &&
                         verify(emb.graph(), report.coloring, 3, 4).valid;
                if (!row.ok) row.error = "infeasible or failed verification";
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream out;
    int failures = 0, fallbacks = 0;
    double total_ms = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        json doc{{"index", i}, {"n", row.n}, {"ok", row.ok}};
        if (!row.error.empty()) doc["error"] = row.error;
        doc["fallbacks"] = row.fallbacks;
        doc["millis"] = row.millis;
        out << doc.dump() << "\n";
        failures += row.ok ? 0 : 1;
        fallbacks += row.fallbacks;
        total_ms += row.millis;
    }
    out << json{{"graphs", rows.size()},
                {"failures", failures},
                {"fallbacks", fallbacks},
                {"total_millis", total_ms}}
               .dump()
        << "\n";
    emit(out_path, out.str());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"defective-coloring toolkit for embedded planar graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global --seed may follow the subcommand name

    std::uint64_t seed = 0;
    std::string input_path, output_path;
    app.add_option("--seed", seed, "seed for all randomness (default 0)");

    auto add_io = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("-i,--input", input_path, "input file (default stdin)");
        cmd->add_option("-o,--output", output_path, "output file (default stdout)");
    };

    auto* gen = app.add_subcommand("gen", "generate graphs");
    std::string family = "random", format = "json";
    int gen_n = 0, count = 1;
    gen->add_option("--family", family,
                    "cycle|path|star|grid|dodecahedron|subdivided(<name>)|random");
    gen->add_option("--n", gen_n, "size parameter");
    gen->add_option("--count", count, "number of graphs");
    gen->add_option("--format", format, "json|graph6|dot");
    add_io(gen, false);

    auto* solve = app.add_subcommand("solve", "decide/construct a (d1,d2)-coloring");
    int d1 = 3, d2 = 4, depth = 6;
    std::string strategy = "exact", reduction = "vertex";
    bool trace = false;
    solve->add_option("--d1", d1, "bound of the first class");
    solve->add_option("--d2", d2, "bound of the second class");
    solve->add_option("--strategy", strategy, "exact|reduce");
    solve->add_option("--reduction", reduction, "vertex|edge|gadget (reduce strategy)");
    solve->add_option("--depth", depth, "recoloring search depth (default 6)");
    solve->add_flag("--trace", trace, "record the reduction trace");
    add_io(solve);

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring");
    std::string coloring_path;
    verify_cmd->add_option("--d1", d1, "bound of the first class");
    verify_cmd->add_option("--d2", d2, "bound of the second class");
    verify_cmd->add_option("--coloring", coloring_path, "coloring JSON file");
    add_io(verify_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "run the discharging audit");
    std::string report_format = "json", templates_path;
    audit_cmd->add_option("--report", report_format, "json|dot");
    audit_cmd->add_option("--face-templates", templates_path, "template table override (JSON)");
    add_io(audit_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "vertex classes and heavy edges");
    add_io(classify_cmd);

    auto* lemmas_cmd = app.add_subcommand("lemmas", "structural checks");
    lemmas_cmd->add_option("--face-templates", templates_path, "template table override (JSON)");
    add_io(lemmas_cmd);

    auto* bench_cmd = app.add_subcommand("bench", "solve+verify a corpus");
    std::string corpus_path;
    int jobs = 1;
    bench_cmd->add_option("--corpus", corpus_path, "corpus file (graph6 or JSONL)")->required();
    bench_cmd->add_option("--jobs", jobs, "concurrent solves");
    bench_cmd->add_option("--depth", depth, "recoloring search depth");
    add_io(bench_cmd, false);

    CLI11_PARSE(app, argc, argv);
    echo_invocation(argc, argv, seed);

    try {
        if (gen->parsed()) return run_gen(family, gen_n, seed, count, format, output_path);
        if (bench_cmd->parsed()) return run_bench(corpus_path, jobs, depth, output_path);

        LoadedInput in = parse_input(slurp(input_path));
        if (solve->parsed())
            return run_solve(in, d1, d2, strategy, reduction, depth, trace, output_path);
        if (verify_cmd->parsed())
            return run_verify(in, d1, d2, coloring_path, output_path);
        if (audit_cmd->parsed()) {
            auto report = audit(need_embedding(in), load_templates(templates_path));
            if (report_format == "dot")
                emit(output_path, to_dot(*in.embedding, &report));
            else
                emit(output_path, audit_report_to_json(report).dump(2) + "\n");
            return 0;
        }
        if (classify_cmd->parsed()) {
            auto classes = classify_vertices(in.graph);
            json verts = json::array();
            for (int v = 0; v < in.graph.vertex_count(); ++v)
                verts.push_back({{"vertex", v},
                                 {"degree", classes[v].degree},
                                 {"plus_neighbors", classes[v].plus_neighbors},
                                 {"tag", tag_name(classes[v].tag)}});
            json heavy = json::array();
            for (auto [u, v] : in.graph.edges())
                if (edge_is_heavy(classes[u], classes[v])) heavy.push_back({u, v});
            emit(output_path,
                 json{{"vertices", verts}, {"heavy_edges", heavy}}.dump(2) + "\n");
            return 0;
        }
        if (lemmas_cmd->parsed()) {
            auto violations = check_lemmas(need_embedding(in), load_templates(templates_path));
            emit(output_path,
                 json{{"lemma_violations", lemma_violations_to_json(violations)}}.dump(2) + "\n");
            return 0;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "defco: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "defco: internal invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const ContractError& e) {
        std::cerr << "defco: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "defco: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
