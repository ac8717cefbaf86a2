#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "irlab/canonical.hpp"
#include "irlab/enumerate.hpp"
#include "irlab/graph.hpp"
#include "irlab/patterns.hpp"
#include "irlab/solvers.hpp"
#include "irlab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancies = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInputFormat = 3;

// One graph6 line per graph; '#' lines are comments.
int for_each_input_line(const std::string& file, const std::function<void(const std::string&)>& fn) {
    std::ifstream fstream;
    std::istream* in = &std::cin;
    if (!file.empty() && file != "-") {
        fstream.open(file);
        if (!fstream) {
            std::cerr << "error: cannot open " << file << "\n";
            return kExitInputFormat;
        }
        in = &fstream;
    }
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        fn(line);
    }
    return kExitOk;
}

std::string default_cache_path() {
    const char* env = std::getenv("IRLAB_CACHE");
    return env ? env : "";
}

int run_solve(const std::string& param, const std::string& file) {
    int rc = kExitOk;
    int io = for_each_input_line(file, [&](const std::string& line) {
        try {
            irlab::Graph g = irlab::from_graph6(line);
            std::cout << line;
            if (param == "ir" || param == "both") {
                auto r = irlab::irredundance_number(g);
                std::cout << " ir=" << r.value;
            }
            if (param == "gamma" || param == "both") {
                auto r = irlab::domination_number(g);
                std::cout << " gamma=" << r.value;
            }
            std::cout << '\n';
        } catch (const irlab::Graph6Error& e) {
            std::cerr << "error: " << line << ": " << e.what() << '\n';
            rc = kExitInputFormat;
        }
    });
    return io != kExitOk ? io : rc;
}

int run_classify(bool with_witness, bool as_json, const std::string& file,
                 const std::string& cache_path) {
    irlab::PerfectionCache cache;
    if (!cache_path.empty()) {
        std::ifstream probe(cache_path);
        if (probe.good()) cache.load(cache_path);
    }
    int rc = kExitOk;
    int io = for_each_input_line(file, [&](const std::string& line) {
        try {
            irlab::Graph g = irlab::from_graph6(line);
            irlab::ClassificationReport r = irlab::classify(g, cache);
            if (as_json) {
                std::cout << r.to_json() << '\n';
            } else {
                std::cout << r.graph6 << " n=" << r.n << " ir=" << r.ir << " gamma=" << r.gamma
                          << " p6_free=" << (r.p6_free ? 1 : 0)
                          << " perfect=" << (r.perfect ? 1 : 0);
                if (with_witness && r.witness) {
                    std::cout << " witness=" << r.witness->first << " map=";
                    for (std::size_t i = 0; i < r.witness->second.map.size(); ++i)
                        std::cout << (i ? "," : "") << r.witness->second.map[i];
                }
                std::cout << '\n';
            }
        } catch (const irlab::Graph6Error& e) {
            std::cerr << "error: " << line << ": " << e.what() << '\n';
            rc = kExitInputFormat;
        }
    });
    if (!cache_path.empty()) cache.save(cache_path);
    return io != kExitOk ? io : rc;
}

int run_verify(const std::string& theorem, int max_n, int jobs, const std::string& cache_path,
               const std::string& out_path) {
    irlab::PerfectionCache cache;
    if (!cache_path.empty()) {
        std::ifstream probe(cache_path);
        if (probe.good()) cache.load(cache_path);
    }

    std::vector<std::string> violators;
    if (!out_path.empty() || theorem == "sweep") {
        std::ofstream out_file;
        std::ostream* sink = &std::cout;
        if (!out_path.empty()) {
            out_file.open(out_path);
            if (!out_file) {
                std::cerr << "error: cannot open " << out_path << "\n";
                return kExitInputFormat;
            }
            sink = &out_file;
        }
        auto summary = irlab::sweep(max_n, *sink, cache, jobs);
        for (const auto& level : summary.levels) {
            std::cerr << "n=" << level.n << " total=" << level.total << " p6_free=" << level.p6_free
                      << " perfect=" << level.perfect;
            for (const auto& [name, cnt] : level.imperfect_by_witness)
                std::cerr << ' ' << name << "=" << cnt;
            std::cerr << '\n';
        }
    }
    if (theorem == "main") {
        violators = irlab::verify_main_theorem(max_n, cache, jobs);
    } else if (theorem != "sweep") {
        std::string id = theorem;
        for (auto& c : id) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (id == "BC" || id == "FAVARON" || id == "FG1G2" || id == "VZ" || id == "PUECH" ||
            id == "PG4G5" || id == "P5FREE") {
            violators = irlab::verify_sufficient_condition(id, max_n, cache, jobs);
        } else {
            std::cerr << "error: unknown theorem id: " << theorem << '\n';
            return kExitUsage;
        }
    }
    if (!cache_path.empty()) cache.save(cache_path);
    for (const auto& v : violators) std::cout << "DISCREPANCY " << v << '\n';
    std::cerr << (theorem == "sweep" ? "sweep" : theorem) << " max_n=" << max_n
              << " discrepancies=" << violators.size() << '\n';
    return violators.empty() ? kExitOk : kExitDiscrepancies;
}

int run_catalog(const std::string& name, const std::string& emit) {
    std::vector<const irlab::CatalogEntry*> entries;
    if (name.empty()) {
        for (const auto& e : irlab::catalog()) entries.push_back(&e);
    } else {
        try {
            entries.push_back(&irlab::catalog_entry(name));
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    for (const auto* e : entries) {
        if (emit == "graph6") {
            if (name.empty()) std::cout << e->name << ' ';
            std::cout << irlab::to_graph6(e->graph) << '\n';
        } else if (emit == "adjlist") {
            std::cout << "# " << e->name << " n=" << e->graph.order()
                      << " m=" << e->graph.edge_count() << " ir=" << e->expected_ir
                      << " gamma=" << e->expected_gamma << " (" << e->provenance << ")\n"
                      << irlab::to_adjacency_list(e->graph);
        } else {
            std::cout << irlab::to_dot(e->graph, e->name);
        }
    }
    return kExitOk;
}

int run_enumerate(int n, bool connected_only) {
    irlab::EnumerationConfig cfg{n, connected_only};
    irlab::enumerate_stream(cfg, [](const irlab::Graph& g) {
        std::cout << irlab::to_graph6(g) << '\n';
    });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irlab: exact irredundance/domination lab for P6-free perfection checking"};
    app.require_subcommand(1);

    std::string param = "both", file, cache_path = default_cache_path(), out_path;
    std::string theorem = "main", name, emit = "graph6";
    bool with_witness = false, as_json = false, connected_only = false;
    int max_n = 6, jobs = 1, enum_n = 0;

    auto* solve = app.add_subcommand("solve", "Compute ir/gamma for graph6 input lines");
    solve->add_option("--param", param)->check(CLI::IsMember({"ir", "gamma", "both"}));
    solve->add_option("file", file, "input file (default stdin)");

    auto* classify = app.add_subcommand("classify", "Full classification report per input line");
    classify->add_flag("--witness", with_witness, "print forbidden-subgraph witness");
    classify->add_flag("--json", as_json, "emit JSONL");
    classify->add_option("--cache", cache_path, "perfection cache file");
    classify->add_option("file", file, "input file (default stdin)");

    auto* verify = app.add_subcommand("verify", "Exhaustive verification up to --max-n");
    verify->add_option("--max-n", max_n, "maximum order")->required()->check(CLI::Range(1, 9));
    verify->add_option("--theorem", theorem,
                       "main|bc|favaron|fg1g2|vz|puech|pg4g5|p5free|sweep");
    verify->add_option("--jobs", jobs, "worker count")->check(CLI::Range(1, 256));
    verify->add_option("--cache", cache_path, "perfection cache file (checkpoint)");
    verify->add_option("--out", out_path, "write JSONL sweep reports here");

    auto* catalog_cmd = app.add_subcommand("catalog", "Emit the named pattern graphs");
    catalog_cmd->add_option("--name", name, "single entry (default: all)");
    catalog_cmd->add_option("--emit", emit)->check(CLI::IsMember({"graph6", "adjlist", "dot"}));

    auto* enumerate = app.add_subcommand("enumerate", "Isomorph-free generation, one graph6 per line");
    enumerate->add_option("--n", enum_n, "order")->required()->check(CLI::Range(1, 10));
    enumerate->add_flag("--connected-only", connected_only);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(param, file);
        if (classify->parsed()) return run_classify(with_witness, as_json, file, cache_path);
        if (verify->parsed()) return run_verify(theorem, max_n, jobs, cache_path, out_path);
        if (catalog_cmd->parsed()) return run_catalog(name, emit);
        if (enumerate->parsed()) return run_enumerate(enum_n, connected_only);
    } catch (const irlab::Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
