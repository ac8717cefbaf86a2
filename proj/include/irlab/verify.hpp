#ifndef IRLAB_VERIFY_HPP
#define IRLAB_VERIFY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "irlab/graph.hpp"
#include "irlab/patterns.hpp"

namespace irlab {

struct ClassificationReport {
    std::string graph6;
    int n = 0;
    int ir = 0;
    int gamma = 0;
    bool p6_free = false;
    bool perfect = false;
    std::optional<std::pair<std::string, Embedding>> witness;
    bool equal_here = false;  // ir == gamma for this graph itself

    std::string to_json() const;
};

// Canonical form -> (ir, gamma, perfect). Entries are pure functions of the
// key, so concurrent writers for one key always agree and last-write-wins is
// safe. Sharded to keep contention low.
class PerfectionCache {
public:
    struct Entry {
        int ir;
        int gamma;
        bool perfect;
        bool operator==(const Entry&) const = default;
    };

    std::optional<Entry> lookup(const std::string& key) const;
    void insert(const std::string& key, const Entry& e);
    std::size_t size() const;

    // File format: header line "irlab-cache v1", then
    // "<canonical graph6> <ir> <gamma> <0|1 perfect>" per entry.
    void save(const std::string& path) const;
    void load(const std::string& path);  // throws on bad header/records

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mu;
        std::map<std::string, Entry> entries;
    };
    Shard& shard_for(const std::string& key);
    const Shard& shard_for(const std::string& key) const;
    std::array<Shard, kShards> shards_;
};

// ir(H) = gamma(H) for every induced subgraph H. One-vertex deletions carry
// the recursion; memoized on canonical form. Guarded to n <= 17.
bool is_irredundance_perfect(const Graph& g, PerfectionCache& cache);

ClassificationReport classify(const Graph& g, PerfectionCache& cache);

// Names of the eleven forbidden patterns.
const std::vector<std::string>& forbidden_names();

// Condition ids accepted by verify_sufficient_condition.
const std::vector<std::string>& condition_ids();

// Every P6-free isomorphism class with n <= max_n must satisfy
// perfect <=> no induced F1-F11; returns the graph6 lines of violators.
std::vector<std::string> verify_main_theorem(int max_n, PerfectionCache& cache, int jobs = 1);

// Every class satisfying the condition's hypothesis must be perfect.
std::vector<std::string> verify_sufficient_condition(const std::string& id, int max_n,
                                                     PerfectionCache& cache, int jobs = 1);

struct SweepSummary {
    struct LevelStats {
        int n = 0;
        std::uint64_t total = 0;
        std::uint64_t p6_free = 0;
        std::uint64_t perfect = 0;
        std::map<std::string, std::uint64_t> imperfect_by_witness;
    };
    std::vector<LevelStats> levels;
    std::uint64_t reports = 0;
};

// Classifies every class with n <= max_n, emitting one JSONL report per
// class to `out` (serialized through one sink; order deterministic only with
// jobs = 1).
SweepSummary sweep(int max_n, std::ostream& out, PerfectionCache& cache, int jobs = 1);

}  // namespace irlab

#endif
