#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucf/family.hpp"
#include "ucf/ratio.hpp"

namespace ucf {

enum class Objective : std::int8_t {
    min_c1,         ///< minimize the largest normalized frequency
    lex_min_c1_c2,  ///< minimize (c1, c2) lexicographically
};

Objective parse_objective(const std::string& name);
const char* objective_name(Objective o) noexcept;

/// Simulated-annealing walk over generator multisets whose closures are the
/// candidate families. Non-spanning closures are penalized (objective + 1)
/// rather than rejected so the walk can cross them.
struct SearchConfig {
    int n = 6;
    Objective objective = Objective::min_c1;
    std::int64_t iterations = 5000;
    std::uint64_t seed = 1;
    int restarts = 1;
    double initial_temperature = 1.0;
    double temperature_decay = 0.9995;
    int min_generators = 1;
    int max_generators = 24;
    int threads = 1;

    void validate() const;
};

/// Best state found. Re-closing `generators` reproduces `closure`, whose
/// profile reproduces (c1, c2) exactly; verify_record() re-derives all three.
struct SearchRecord {
    int n = 0;
    std::uint64_t seed = 0;  ///< master seed of the run
    Objective objective = Objective::min_c1;
    std::vector<ElementSet> generators;
    SetFamily closure;
    Ratio c1;
    Ratio c2;
    std::int64_t iteration_found = 0;
    int restart_found = 0;

    SearchRecord() : closure(GroundSet{1}, {ElementSet{1}}) {}
};

/// Runs cfg.restarts independent annealing walks (restart r is seeded with
/// seed + r) and returns the best record, reduced in restart-index order so
/// the result is identical for any worker count.
SearchRecord local_search(const SearchConfig& cfg);

/// Restarts [first, last) only: the unit the checkpointing CLI resumes on.
std::optional<SearchRecord> search_restart_range(const SearchConfig& cfg, int first, int last,
                                                 const std::string* first_rng_state = nullptr);

/// One restart's freshly seeded engine state, serialized. Stored in
/// checkpoints next to the best record.
std::string restart_rng_state(const SearchConfig& cfg, int restart);

/// Strictly-better comparison under an objective; ties are not better, so a
/// reduce in restart order keeps the earliest winner.
bool record_better(const SearchRecord& challenger, const SearchRecord& incumbent,
                   Objective objective);

/// Independently re-closes the generators and recomputes (c1, c2); true iff
/// everything matches the record exactly. On mismatch, `diagnostic` (when
/// given) receives both value pairs.
bool verify_record(const SearchRecord& rec, std::string* diagnostic = nullptr);

/// A best c1 below 1/2 would contradict the abundant-element statement
/// wherever it is settled; such a record must be dumped for manual audit,
/// never silently asserted or discarded.
bool is_extraordinary(const SearchRecord& rec);

}  // namespace ucf
