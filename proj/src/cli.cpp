#include "fibindex/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fibindex/bounds.hpp"
#include "fibindex/canonical.hpp"
#include "fibindex/counting.hpp"
#include "fibindex/criticality.hpp"
#include "fibindex/extremal.hpp"
#include "fibindex/generators.hpp"
#include "fibindex/graph.hpp"
#include "fibindex/json_io.hpp"

namespace fibindex {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

Graph load_graph(const std::string& gen_spec, const std::string& file_path) {
    if (!gen_spec.empty() && !file_path.empty())
        throw std::invalid_argument("choose one of --gen and --file, not both");
    if (!gen_spec.empty()) return generate(parse_family_spec(gen_spec));
    if (!file_path.empty()) {
        std::ifstream in(file_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + file_path);
        return read_edge_list(in);
    }
    throw std::invalid_argument("compute needs a graph: --gen <spec> or --file <path>");
}

int cmd_compute(const std::string& gen_spec, const std::string& file_path, bool json,
                std::ostream& out) {
    const Graph g = load_graph(gen_spec, file_path);
    const BoundReport bounds = check_bounds(g, detect_class(g));
    const bool critical = is_alpha_critical_graph(g);
    if (json) {
        ordered_json j = graph_to_json(g);
        j["connected"] = is_connected(g);
        j["tree"] = is_tree(g);
        j["alpha"] = bounds.alpha;
        j["fibonacci_index"] = bounds.fib.str();
        j["alpha_critical"] = critical;
        ordered_json b;
        b["class"] = to_string(bounds.graph_class);
        b["lower"] = bounds.lower.str();
        b["upper"] = bounds.upper.str();
        b["lower_tight"] = bounds.lower_tight;
        b["upper_tight"] = bounds.upper_tight;
        j["bounds"] = std::move(b);
        out << dump_json(j);
    } else {
        out << "n: " << bounds.n << "\n"
            << "m: " << bounds.m << "\n"
            << "connected: " << (is_connected(g) ? "true" : "false") << "\n"
            << "tree: " << (is_tree(g) ? "true" : "false") << "\n"
            << "alpha: " << bounds.alpha << "\n"
            << "fibonacci_index: " << bounds.fib.str() << "\n"
            << "alpha_critical: " << (critical ? "true" : "false") << "\n"
            << "class: " << to_string(bounds.graph_class) << "\n"
            << "lower: " << bounds.lower.str() << "\n"
            << "upper: " << bounds.upper.str() << "\n"
            << "lower_tight: " << (bounds.lower_tight ? "true" : "false") << "\n"
            << "upper_tight: " << (bounds.upper_tight ? "true" : "false") << "\n";
    }
    return 0;
}

void write_report_file(const std::filesystem::path& dir, const ExtremalReport& report,
                       const std::vector<VerificationVerdict>* verdicts, std::ostream& out) {
    std::filesystem::create_directories(dir);
    const auto path =
        dir / ("report-" + to_string(report.graph_class) + "-n" + std::to_string(report.n) +
               ".json");
    ordered_json j = to_json(report);
    if (verdicts) {
        auto vj = ordered_json::array();
        for (const auto& v : *verdicts) vj.push_back(to_json(v));
        j["verdicts"] = std::move(vj);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << dump_json(j);
    out << "wrote " << path.string() << "\n";
}

int cmd_verify(int n, bool allow_n8, const std::string& out_dir, int threads,
               std::ostream& out) {
    if (n == kEnumerationLimit && !allow_n8)
        throw std::invalid_argument(
            "a full n=8 scan sweeps 2^28 labeled graphs; pass --allow-n8 to run it");
    const VerificationRun run = run_verification(n, resolve_threads(threads));
    bool all_pass = true;
    for (const auto& verdict : run.verdicts) {
        out << "theorem " << theorem_name(verdict.theorem) << " n=" << verdict.n << ": "
            << (verdict.pass ? "PASS" : "FAIL");
        if (verdict.theorem == TheoremId::connected_t9 && verdict.pass) {
            for (int alpha : connected_maximizer_ties(n))
                out << " (maximizers tie at alpha=" << alpha << ")";
        }
        out << "\n";
        if (!verdict.pass) {
            all_pass = false;
            for (const auto& d : verdict.discrepancies) {
                out << "  alpha=" << d.alpha << " expected {";
                for (const auto& f : d.expected) out << " " << to_string(f);
                out << " } observed {";
                for (const auto& f : d.observed) out << " " << to_string(f);
                out << " }\n";
            }
        }
    }
    write_report_file(out_dir, run.general, &run.verdicts, out);
    write_report_file(out_dir, run.connected, &run.verdicts, out);
    return all_pass ? 0 : 1;
}

int cmd_search(int n, const std::string& class_name, const std::string& out_dir, int threads,
               std::ostream& out) {
    GraphClass graph_class;
    if (class_name == "general")
        graph_class = GraphClass::general;
    else if (class_name == "connected")
        graph_class = GraphClass::connected;
    else
        throw std::invalid_argument("search classes are \"general\" and \"connected\", got \"" +
                                    class_name + "\"");
    const ExtremalReport report = build_extremal_report(n, graph_class, resolve_threads(threads));
    out << "n=" << report.n << " class=" << to_string(report.graph_class)
        << " classes_scanned=" << report.enumeration_total << "\n";
    for (const auto& rec : report.records) {
        out << "alpha=" << rec.alpha << ": classes=" << rec.graph_count
            << " min=" << rec.min_fib.str() << " (" << rec.minimizers.size() << " attaining)"
            << " max=" << rec.max_fib.str() << " (" << rec.maximizers.size() << " attaining)\n";
    }
    write_report_file(out_dir, report, nullptr, out);
    return 0;
}

int cmd_oracle_check(int n, int trials, std::uint64_t seed, double p, std::ostream& out) {
    if (n > kNaiveCountLimit)
        throw std::invalid_argument("oracle comparison needs the naive counter, so n <= " +
                                    std::to_string(kNaiveCountLimit) + " (got n=" +
                                    std::to_string(n) + ")");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    for (int t = 0; t < trials; ++t) {
        const Graph g = random_graph(n, p, seed + static_cast<std::uint64_t>(t));
        const BigCount fast = fibonacci_index(g);
        const BigCount naive = fibonacci_index_naive(g);
        if (fast != naive) {
            out << "MISMATCH at trial " << t << " (seed " << seed + t << "): fast=" << fast.str()
                << " naive=" << naive.str() << "\n"
                << to_edge_list(g);
            return 1;
        }
    }
    out << "oracle-check: " << trials << " graphs at n=" << n << " p=" << p << " seed=" << seed
        << ": all counts match\n";
    return 0;
}

int cmd_counterexample(bool json, std::ostream& out) {
    const CounterexampleReport report = counterexample_size_vs_fib();
    if (json) {
        out << dump_json(to_json(report));
    } else {
        const auto& w = report.witness;
        out << "size-vs-fib witness, n=" << w.g3.order() << " alpha="
            << stability_number(w.g3) << ":\n"
            << "  g3 (two disjoint 3-paths): m=" << w.g3.size() << " F=" << w.f3.str() << "\n"
            << "  g4 (spider): m=" << w.g4.size() << " F=" << w.f4.str() << "\n"
            << "  fewer edges yet fewer stable sets: " << (w.holds ? "holds" : "FAILS") << "\n";
        out << "balanced turan vs star:\n";
        for (const auto& pair : report.ratio_pairs)
            out << "  r=" << pair.r << ": F(T(" << 2 * pair.r << "," << pair.r << "))="
                << pair.turan_fib.str() << " < F(S_" << 2 * pair.r << ")=" << pair.star_fib.str()
                << "\n";
        out << (report.all_hold ? "all relations hold" : "RELATION FAILURE") << "\n";
    }
    return report.all_hold ? 0 : 1;
}

int cmd_bench(int n, double p, std::uint64_t seed, int reps, bool json, std::ostream& out) {
    if (reps < 1) throw std::invalid_argument("reps must be positive");
    struct Row {
        int instance;
        std::uint64_t seed;
        int m;
        CountStats stats;
        BigCount fib;
    };
    std::vector<Row> rows;
    for (int i = 0; i < reps; ++i) {
        Row row;
        row.instance = i;
        row.seed = seed + static_cast<std::uint64_t>(i);
        const Graph g = random_graph(n, p, row.seed);
        row.m = g.size();
        row.fib = fibonacci_index(g, row.stats);
        rows.push_back(std::move(row));
    }
    if (json) {
        ordered_json j;
        j["n"] = n;
        j["p"] = p;
        auto instances = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json rj;
            rj["instance"] = row.instance;
            rj["seed"] = std::to_string(row.seed);
            rj["m"] = row.m;
            rj["branch_nodes"] = row.stats.branch_nodes;
            rj["memo_hits"] = row.stats.memo_hits;
            rj["elapsed_ms"] = row.stats.elapsed_seconds * 1e3;
            rj["fibonacci_index"] = row.fib.str();
            instances.push_back(std::move(rj));
        }
        j["instances"] = std::move(instances);
        out << dump_json(j);
    } else {
        out << "instance  seed        n   m     branch_nodes  memo_hits  ms        fibonacci_index\n";
        for (const auto& row : rows) {
            std::ostringstream line;
            line << std::left << std::setw(10) << row.instance << std::setw(12) << row.seed
                 << std::setw(4) << n << std::setw(6) << row.m << std::setw(14)
                 << row.stats.branch_nodes << std::setw(11) << row.stats.memo_hits << std::setw(10)
                 << std::fixed << std::setprecision(2) << row.stats.elapsed_seconds * 1e3
                 << row.fib.str();
            out << line.str() << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact stable-set counts, alpha-criticality, and extremal verification"};
    app.name("fibindex");
    app.require_subcommand(1);

    std::string gen_spec, file_path, out_dir = ".", class_name;
    bool json = false, allow_n8 = false;
    int n = 0, threads = 0, trials = 50, reps = 3;
    double p = 0.5;
    std::uint64_t seed = 1;

    auto* compute = app.add_subcommand("compute", "invariants and bounds for one graph");
    compute->add_option("--gen", gen_spec, "generator spec, e.g. turan:n=7,alpha=3");
    compute->add_option("--file", file_path, "edge-list file");
    compute->add_flag("--json", json, "structured output");

    auto* verify = app.add_subcommand("verify", "exhaustive extremal verification at order n");
    verify->add_option("--n", n, "graph order")->required();
    verify->add_flag("--allow-n8", allow_n8, "permit the large n=8 sweep");
    verify->add_option("--out-dir", out_dir, "directory for report files");
    verify->add_option("--threads", threads, "scan workers (0 = auto)");

    auto* search = app.add_subcommand("search", "extremal scan without theorem comparison");
    search->add_option("--n", n, "graph order")->required();
    search->add_option("--class", class_name, "general or connected")->required();
    search->add_option("--out-dir", out_dir, "directory for report files");
    search->add_option("--threads", threads, "scan workers (0 = auto)");

    auto* oracle = app.add_subcommand("oracle-check", "fast counter vs naive subset scan");
    oracle->add_option("--n", n, "graph order")->default_val(12);
    oracle->add_option("--trials", trials, "number of random graphs");
    oracle->add_option("--seed", seed, "base seed");
    oracle->add_option("--p", p, "edge probability");

    auto* counterexample =
        app.add_subcommand("counterexample", "edge count does not order stable-set counts");
    counterexample->add_flag("--json", json, "structured output");

    auto* bench = app.add_subcommand("bench", "seeded counting benchmark");
    bench->add_option("--n", n, "graph order")->required();
    bench->add_option("--p", p, "edge probability");
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--reps", reps, "instances to run");
    bench->add_flag("--json", json, "structured output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(gen_spec, file_path, json, out);
        if (verify->parsed()) return cmd_verify(n, allow_n8, out_dir, threads, out);
        if (search->parsed()) return cmd_search(n, class_name, out_dir, threads, out);
        if (oracle->parsed()) return cmd_oracle_check(n, trials, seed, p, out);
        if (counterexample->parsed()) return cmd_counterexample(json, out);
        if (bench->parsed()) return cmd_bench(n, p, seed, reps, json, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fibindex
