// mapcanon: spectral graph embeddings with sign/basis canonization.
//
// Subcommands:
//   canonize   graphs -> canonized (reweighted) spectral embeddings, NDJSON
//   verify     randomized invariance simulations (sign | basis)
//   stats      corpus canonizability statistics
//   gen        graph generators (er | basis-ambiguous)

#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mapcanon/errors.hpp"
#include "mapcanon/generators.hpp"
#include "mapcanon/io.hpp"
#include "mapcanon/pipeline.hpp"
#include "mapcanon/stats.hpp"
#include "mapcanon/verify.hpp"

namespace {

constexpr const char* kVersion = "mapcanon 1.0.0";

using nlohmann::json;
using namespace mapcanon;

json config_json(const PipelineOptions& opts) {
    json j;
    j["eps_eig"] = opts.config.eps_eig;
    j["eps_zero"] = opts.config.eps_zero;
    j["eps_group"] = opts.config.eps_group;
    j["c"] = opts.config.c;
    j["hash_digits"] = opts.config.hash_digits;
    j["sign"] = opts.sign == SignMethod::map ? "map" : "polynomial";
    j["basis"] = opts.basis == BasisMethod::map ? "map" : "strong";
    j["hash_propagate"] = opts.hash_propagate;
    j["reweight"] = opts.reweight;
    return j;
}

json embedding_json(const CanonizedEmbedding& emb, const PipelineOptions& opts) {
    json j;
    j["n"] = emb.n;
    j["k"] = emb.k;
    auto& cols = j["columns"] = json::array();
    for (int c = 0; c < emb.k; ++c) {
        json col;
        col["eigenvalue"] = emb.columns[c].eigenvalue;
        col["eigenspace"] = emb.columns[c].eigenspace;
        col["status"] = to_string(emb.columns[c].status);
        if (emb.columns[c].detail != 0) col["detail"] = emb.columns[c].detail;
        auto& values = col["values"] = json::array();
        for (int i = 0; i < emb.n; ++i) values.push_back(emb.values(i, c));
        cols.push_back(std::move(col));
    }
    j["config"] = config_json(opts);
    j["version"] = kVersion;
    return j;
}

json report_json(const SimulationReport& r) {
    json j;
    j["p_correct"] = r.p_correct;
    j["q_correct"] = r.q_correct;
    j["pq_correct"] = r.pq_correct;
    j["total"] = r.total;
    j["seed"] = r.seed;
    j["eps"] = r.eps;
    j["regenerated"] = r.regenerated;
    j["max_deviation"] = r.max_deviation;
    return j;
}

json stats_json(const CorpusStats& s) {
    json j;
    j["graphs_total"] = s.graphs_total;
    j["graphs_processed"] = s.graphs_processed;
    j["graphs_skipped_small"] = s.graphs_skipped_small;
    j["graphs_failed"] = s.graphs_failed;
    j["eigenvectors_total"] = s.eigenvectors_total;
    j["sign_uncanonizable"] = s.sign_uncanonizable;
    j["hash_rescued"] = s.hash_rescued;
    j["eigenvalues_total"] = s.eigenvalues_total;
    j["multiple_eigenvalues"] = s.multiple_eigenvalues;
    j["violated_k_eigenvalues"] = s.violated_k_eigenvalues;
    j["violated_perp_eigenvalues"] = s.violated_perp_eigenvalues;
    j["basis_ambiguous_eigenvectors"] = s.basis_ambiguous_eigenvectors;
    j["sign_ratio"] = s.sign_ratio;
    j["multiple_ratio"] = s.multiple_ratio;
    j["p1"] = s.p1;
    j["p2"] = s.p2;
    j["p3"] = s.p3;
    j["p4"] = s.p4;
    j["basis_ratio"] = s.basis_ratio;
    j["total_ratio"] = s.total_ratio;
    return j;
}

struct CanonizeArgs {
    std::string input;
    std::string format = "json";
    int k = 0;  // 0: keep all columns
    std::string sign = "map";
    std::string basis = "map";
    bool hash_propagate = false;
    bool no_reweight = false;
    std::string output;
    std::string csv;
    std::uint64_t seed = 0;  // threaded to generation subflags only
    unsigned jobs = 1;
    PipelineOptions opts;
};

void write_csv(const CanonizedEmbedding& emb, const PipelineOptions& opts,
               const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.precision(17);
    for (int i = 0; i < emb.n; ++i) {
        for (int c = 0; c < emb.k; ++c) {
            if (c) out << ',';
            out << emb.values(i, c);
        }
        out << '\n';
    }
    json meta;
    meta["n"] = emb.n;
    meta["k"] = emb.k;
    auto& cols = meta["columns"] = json::array();
    for (int c = 0; c < emb.k; ++c)
        cols.push_back({{"eigenvalue", emb.columns[c].eigenvalue},
                        {"eigenspace", emb.columns[c].eigenspace},
                        {"status", to_string(emb.columns[c].status)}});
    meta["config"] = config_json(opts);
    std::ofstream side(path + ".meta.json", std::ios::binary);
    side << meta.dump() << '\n';
}

int run_canonize(const CanonizeArgs& args) {
    PipelineOptions opts = args.opts;
    if (args.k > 0) opts.config.k_pe = args.k;
    opts.sign = args.sign == "polynomial" ? SignMethod::polynomial : SignMethod::map;
    opts.basis = args.basis == "strong" ? BasisMethod::strong : BasisMethod::map;
    opts.hash_propagate = args.hash_propagate;
    opts.reweight = !args.no_reweight;
    opts.config.validate();

    const auto format =
        args.format == "edgelist" ? GraphFormat::edgelist : GraphFormat::json;
    const CorpusLoad corpus = load_graphs_from_file(args.input, format);
    if (!corpus.errors.empty()) {
        for (const auto& e : corpus.errors) std::cerr << "error: " << e << '\n';
        return 1;
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!args.output.empty()) {
        file.open(args.output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << args.output << '\n';
            return 1;
        }
        out = &file;
    }

    // Bounded worker pool; output order follows input order.
    const std::size_t total = corpus.graphs.size();
    const std::size_t window = std::max<unsigned>(1, args.jobs);
    std::vector<std::optional<std::future<CanonizedEmbedding>>> inflight(total);
    std::size_t launched = 0;
    int exit_code = 0;
    for (std::size_t next = 0; next < total; ++next) {
        while (launched < total && launched < next + window) {
            const Graph* g = &corpus.graphs[launched];
            inflight[launched] = std::async(
                args.jobs > 1 ? std::launch::async : std::launch::deferred,
                [g, &opts] { return canonize_graph(*g, opts); });
            ++launched;
        }
        try {
            const CanonizedEmbedding emb = inflight[next]->get();
            *out << embedding_json(emb, opts).dump() << '\n';
            if (!args.csv.empty()) {
                std::string path = args.csv;
                if (total > 1) {
                    const auto dotpos = path.rfind('.');
                    std::ostringstream idx;
                    idx << "-" << next;
                    path.insert(dotpos == std::string::npos ? path.size() : dotpos,
                                idx.str());
                }
                write_csv(emb, opts, path);
            }
        } catch (const ConvergenceError& e) {
            // Per-graph solver failure: emit an error record and continue.
            json err;
            err["error"] = e.what();
            err["input_index"] = next;
            *out << err.dump() << '\n';
            exit_code = 1;
        }
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral graph embeddings with sign/basis canonization"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CanonizeArgs cz;
    auto* canonize = app.add_subcommand(
        "canonize", "Canonized reweighted spectral embeddings for input graphs");
    canonize
        ->add_option("--input", cz.input, "graph file (JSON, JSON lines, or edge list)")
        ->required();
    canonize->add_option("--format", cz.format, "input format")
        ->check(CLI::IsMember({"json", "edgelist"}))
        ->capture_default_str();
    canonize->add_option("--k", cz.k, "number of embedding columns kept (default: all)")
        ->check(CLI::PositiveNumber.description("k must be >= 1"));
    canonize
        ->add_option("--tol-eig", cz.opts.config.eps_eig, "eigenvalue grouping tolerance")
        ->envname("MAPCANON_TOL_EIG")
        ->capture_default_str();
    canonize
        ->add_option("--tol-zero", cz.opts.config.eps_zero, "zero-projection threshold")
        ->envname("MAPCANON_TOL_ZERO")
        ->capture_default_str();
    canonize
        ->add_option("--tol-group", cz.opts.config.eps_group, "axis grouping tolerance")
        ->envname("MAPCANON_TOL_GROUP")
        ->capture_default_str();
    canonize->add_option("--c", cz.opts.config.c, "summary-vector constant")
        ->capture_default_str();
    canonize
        ->add_option("--hash-digits", cz.opts.config.hash_digits,
                     "quantization digits for hash propagation")
        ->capture_default_str();
    canonize->add_option("--sign", cz.sign, "sign canonizer")
        ->check(CLI::IsMember({"map", "polynomial"}))
        ->capture_default_str();
    canonize->add_option("--basis", cz.basis, "basis canonizer")
        ->check(CLI::IsMember({"map", "strong"}))
        ->capture_default_str();
    canonize->add_flag("--hash-propagate", cz.hash_propagate,
                       "second-chance hash pass for sign leftovers");
    canonize->add_flag("--no-reweight", cz.no_reweight,
                       "emit plain spectral embeddings (skip sqrt-eigenvalue scaling)");
    canonize->add_option("--output", cz.output, "output path (default: stdout)");
    canonize->add_option("--csv", cz.csv,
                         "also write a flat CSV matrix (+ .meta.json sidecar)");
    canonize->add_option("--seed", cz.seed,
                         "seed for generation subflags (canonization is deterministic)");
    canonize->add_option("--jobs", cz.jobs, "worker pool size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    struct {
        long long trials = 1000;
        std::uint64_t seed = 42;
        double eps = 1e-6;
        int n_min = 3, n_max = 30;
    } vf;
    auto* verify = app.add_subcommand("verify", "Randomized invariance simulations");
    verify->require_subcommand(1);
    auto* verify_sign_cmd =
        verify->add_subcommand("sign", "sign canonization simulation");
    auto* verify_basis_cmd =
        verify->add_subcommand("basis", "basis canonization simulation");
    for (auto* sub : {verify_sign_cmd, verify_basis_cmd}) {
        sub->add_option("--trials", vf.trials)
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        sub->add_option("--seed", vf.seed)->capture_default_str();
        sub->add_option("--eps", vf.eps)->capture_default_str();
        sub->add_option("--n-min", vf.n_min)->capture_default_str();
        sub->add_option("--n-max", vf.n_max)->capture_default_str();
    }

    struct {
        std::string input;
        int min_nodes = 5;
        bool hash_propagate = false;
        PipelineOptions opts;
    } st;
    auto* stats = app.add_subcommand("stats", "Corpus canonizability statistics");
    stats->add_option("--input", st.input, "graph file, JSON-lines file, or directory")
        ->required();
    stats
        ->add_option("--min-nodes", st.min_nodes,
                     "ignore graphs with at most this many nodes")
        ->capture_default_str();
    stats->add_option("--tol-eig", st.opts.config.eps_eig)->envname("MAPCANON_TOL_EIG");
    stats->add_option("--tol-zero", st.opts.config.eps_zero)
        ->envname("MAPCANON_TOL_ZERO");
    stats->add_option("--tol-group", st.opts.config.eps_group)
        ->envname("MAPCANON_TOL_GROUP");
    stats->add_flag("--hash-propagate", st.hash_propagate,
                    "count hash-rescued vectors separately");

    struct {
        int n = 20;
        double p = 0.3;
        bool weighted = false;
        int count = 1;
        std::uint64_t seed = 0;
        std::string out;
    } gn;
    auto* gen = app.add_subcommand("gen", "Graph generators");
    gen->require_subcommand(1);
    auto* gen_er_cmd = gen->add_subcommand("er", "Erdos-Renyi graphs");
    gen_er_cmd->add_option("--n", gn.n)->check(CLI::PositiveNumber)->capture_default_str();
    gen_er_cmd->add_option("--p", gn.p)
        ->check(CLI::Range(1e-9, 1.0 - 1e-9).description("p must be in (0, 1)"))
        ->capture_default_str();
    gen_er_cmd->add_flag("--weighted", gn.weighted, "uniform (0,1] edge weights");
    auto* gen_ba_cmd = gen->add_subcommand(
        "basis-ambiguous", "graphs with a 3-dimensional top eigenspace");
    for (auto* sub : {gen_er_cmd, gen_ba_cmd}) {
        sub->add_option("--count", gn.count)
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--seed", gn.seed)->capture_default_str();
        sub->add_option("--out", gn.out, "output directory")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (*canonize) return run_canonize(cz);

        if (*verify) {
            SimulationReport report;
            if (*verify_sign_cmd)
                report = verify_sign(vf.trials, vf.n_min, vf.n_max, vf.seed, vf.eps);
            else
                report = verify_basis(vf.trials, vf.n_min, vf.n_max, vf.seed, vf.eps);
            std::cout << report_json(report).dump() << '\n';
            return report.all_passed() ? 0 : 1;
        }

        if (*stats) {
            st.opts.hash_propagate = st.hash_propagate;
            const CorpusLoad corpus = load_graphs(st.input);
            for (const auto& e : corpus.errors) std::cerr << "error: " << e << '\n';
            const CorpusStats result =
                corpus_stats(corpus.graphs, st.opts, st.min_nodes);
            json j = stats_json(result);
            j["parse_errors"] = corpus.errors.size();
            std::cout << j.dump() << '\n';
            return 0;
        }

        if (*gen) {
            std::filesystem::create_directories(gn.out);
            std::vector<Graph> graphs;
            if (*gen_er_cmd)
                graphs = gen_er(gn.n, gn.p, gn.weighted, gn.count, gn.seed);
            else
                graphs = gen_basis_ambiguous_set(gn.count, gn.seed);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                std::ostringstream name;
                name << "graph-" << std::setw(3) << std::setfill('0') << i << ".json";
                const auto path = std::filesystem::path(gn.out) / name.str();
                std::ofstream f(path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open " + path.string());
                f << graph_to_json(graphs[i]) << '\n';
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const GeneratorError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
