#include "irlab/verify.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "irlab/canonical.hpp"
#include "irlab/enumerate.hpp"
#include "irlab/solvers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irlab {

std::string ClassificationReport::to_json() const {
    nlohmann::json j;
    j["graph6"] = graph6;
    j["n"] = n;
    j["ir"] = ir;
    j["gamma"] = gamma;
    j["p6_free"] = p6_free;
    j["perfect"] = perfect;
    if (witness) {
        j["witness_name"] = witness->first;
        j["witness_map"] = witness->second.map;
    } else {
        j["witness_name"] = nullptr;
        j["witness_map"] = nullptr;
    }
    j["equal_here"] = equal_here;
    return j.dump();
}

PerfectionCache::Shard& PerfectionCache::shard_for(const std::string& key) {
    return shards_[std::hash<std::string>{}(key) % kShards];
}

const PerfectionCache::Shard& PerfectionCache::shard_for(const std::string& key) const {
    return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<PerfectionCache::Entry> PerfectionCache::lookup(const std::string& key) const {
    const Shard& s = shard_for(key);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.entries.find(key);
    if (it == s.entries.end()) return std::nullopt;
    return it->second;
}

void PerfectionCache::insert(const std::string& key, const Entry& e) {
    Shard& s = shard_for(key);
    std::lock_guard<std::mutex> lock(s.mu);
    s.entries[key] = e;
}

std::size_t PerfectionCache::size() const {
    std::size_t total = 0;
    for (const auto& s : shards_) {
        std::lock_guard<std::mutex> lock(s.mu);
        total += s.entries.size();
    }
    return total;
}

void PerfectionCache::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    out << "irlab-cache v1\n";
    for (const auto& s : shards_) {
        std::lock_guard<std::mutex> lock(s.mu);
        for (const auto& [key, e] : s.entries)
            out << key << ' ' << e.ir << ' ' << e.gamma << ' ' << (e.perfect ? 1 : 0) << '\n';
    }
    if (!out) throw std::runtime_error("cache write failed: " + path);
}

void PerfectionCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cache file: " + path);
    std::string header;
    std::getline(in, header);
    if (header != "irlab-cache v1") throw std::runtime_error("bad cache header in " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string key;
        int ir, gamma, perfect;
        if (!(is >> key >> ir >> gamma >> perfect) || (perfect != 0 && perfect != 1))
            throw std::runtime_error("bad cache record in " + path + ": " + line);
        insert(key, Entry{ir, gamma, perfect == 1});
    }
}

namespace {

constexpr int kPerfectionGuard = 17;

PerfectionCache::Entry solve_entry(const Graph& g, const std::string& canon_g6,
                                   PerfectionCache& cache) {
    if (auto hit = cache.lookup(canon_g6)) return *hit;
    PerfectionCache::Entry e{};
    e.ir = irredundance_number(g).value;
    e.gamma = domination_number(g).value;
    e.perfect = e.ir == e.gamma;
    if (e.perfect) {
        for (int v = 0; v < g.order() && e.perfect; ++v) {
            Graph h = delete_vertex(g, v);
            std::string key = canonical_form(h).graph6;
            if (auto hit = cache.lookup(key)) {
                e.perfect = hit->perfect;
            } else {
                PerfectionCache::Entry child = solve_entry(h, key, cache);
                e.perfect = child.perfect;
            }
        }
    }
    cache.insert(canon_g6, e);
    return e;
}

PerfectionCache::Entry solve_graph(const Graph& g, PerfectionCache& cache) {
    if (g.order() > kPerfectionGuard)
        throw std::invalid_argument("perfection check guarded to n <= 17");
    return solve_entry(g, canonical_form(g).graph6, cache);
}

// Runs fn over every isomorphism class with n <= max_n, level by level so
// that vertex-deleted subgraphs of level n are already cached from level
// n - 1. Within a level, jobs > 1 distributes classes via OpenMP; jobs == 1
// is the plain serial reference loop.
void for_each_class(int max_n, int jobs, const std::function<void(const Graph&)>& fn) {
    auto levels = enumerate_levels(max_n, jobs);
    for (const auto& level : levels) {
        if (jobs <= 1) {
            for (const auto& g6 : level) fn(from_graph6(g6));
        } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
            for (long i = 0; i < static_cast<long>(level.size()); ++i)
                fn(from_graph6(level[static_cast<std::size_t>(i)]));
        }
    }
}

}  // namespace

bool is_irredundance_perfect(const Graph& g, PerfectionCache& cache) {
    return solve_graph(g, cache).perfect;
}

ClassificationReport classify(const Graph& g, PerfectionCache& cache) {
    ClassificationReport r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    PerfectionCache::Entry e = solve_graph(g, cache);
    r.ir = e.ir;
    r.gamma = e.gamma;
    r.perfect = e.perfect;
    r.equal_here = e.ir == e.gamma;
    r.p6_free = is_p6_free(g);
    r.witness = find_forbidden_witness(g, forbidden_names());
    return r;
}

const std::vector<std::string>& forbidden_names() {
    static const std::vector<std::string> names = {"F1", "F2", "F3", "F4",  "F5", "F6",
                                                   "F7", "F8", "F9", "F10", "F11"};
    return names;
}

const std::vector<std::string>& condition_ids() {
    static const std::vector<std::string> ids = {"BC",    "FAVARON", "FG1G2", "VZ",
                                                 "PUECH", "PG4G5",   "P5FREE"};
    return ids;
}

std::vector<std::string> verify_main_theorem(int max_n, PerfectionCache& cache, int jobs) {
    if (max_n > 9) throw std::invalid_argument("verify_main_theorem: max_n <= 9");
    std::vector<std::string> violators;
    std::mutex mu;
    for_each_class(max_n, jobs, [&](const Graph& g) {
        if (!is_p6_free(g)) return;
        bool perfect = is_irredundance_perfect(g, cache);
        bool witness = find_forbidden_witness(g, forbidden_names()).has_value();
        if (perfect == witness) {
            std::lock_guard<std::mutex> lock(mu);
            violators.push_back(to_graph6(g));
        }
    });
    return violators;
}

namespace {

bool contains_none_of(const Graph& g, const std::vector<std::string>& names) {
    return !find_forbidden_witness(g, names).has_value();
}

bool condition_hypothesis(const std::string& id, const Graph& g) {
    if (id == "BC") return bollobas_cockayne_condition(g);
    if (id == "FAVARON") return contains_none_of(g, {"P6", "C6", "TWO_P4", "G1", "G2", "G3"});
    if (id == "FG1G2") return contains_none_of(g, {"P6", "G1", "G2"});
    if (id == "VZ") return contains_none_of(g, {"P6", "G1", "G5"});
    if (id == "PUECH") return contains_none_of(g, {"P6", "H"});
    if (id == "PG4G5") return contains_none_of(g, {"P6", "G4", "G5"});
    if (id == "P5FREE") return contains_none_of(g, {"P5"});
    throw std::invalid_argument("unknown condition id: " + id);
}

}  // namespace

std::vector<std::string> verify_sufficient_condition(const std::string& id, int max_n,
                                                     PerfectionCache& cache, int jobs) {
    if (max_n > 9) throw std::invalid_argument("verify_sufficient_condition: max_n <= 9");
    condition_hypothesis(id, Graph(1));  // reject unknown ids up front
    std::vector<std::string> violators;
    std::mutex mu;
    for_each_class(max_n, jobs, [&](const Graph& g) {
        if (!condition_hypothesis(id, g)) return;
        if (!is_irredundance_perfect(g, cache)) {
            std::lock_guard<std::mutex> lock(mu);
            violators.push_back(to_graph6(g));
        }
    });
    return violators;
}

SweepSummary sweep(int max_n, std::ostream& out, PerfectionCache& cache, int jobs) {
    if (max_n > 9) throw std::invalid_argument("sweep: max_n <= 9");
    SweepSummary summary;
    summary.levels.resize(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) summary.levels[static_cast<std::size_t>(n - 1)].n = n;
    std::mutex mu;
    for_each_class(max_n, jobs, [&](const Graph& g) {
        ClassificationReport r = classify(g, cache);
        std::lock_guard<std::mutex> lock(mu);
        auto& stats = summary.levels[static_cast<std::size_t>(r.n - 1)];
        ++stats.total;
        if (r.p6_free) ++stats.p6_free;
        if (r.perfect)
            ++stats.perfect;
        else if (r.witness)
            ++stats.imperfect_by_witness[r.witness->first];
        ++summary.reports;
        out << r.to_json() << '\n';
        if (!out) throw std::runtime_error("sweep: report sink write failed");
    });
    return summary;
}

}  // namespace irlab
