#include "ucf/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ucf/bounds.hpp"

namespace ucf {

Objective parse_objective(const std::string& name) {
    if (name == "min_c1") return Objective::min_c1;
    if (name == "lex_min_c1_c2") return Objective::lex_min_c1_c2;
    throw std::invalid_argument("unknown objective '" + name + "'");
}

const char* objective_name(Objective o) noexcept {
    return o == Objective::min_c1 ? "min_c1" : "lex_min_c1_c2";
}

void SearchConfig::validate() const {
    if (n < 2 || n > 20) throw std::invalid_argument("SearchConfig: n must be in [2, 20]");
    if (iterations < 1) throw std::invalid_argument("SearchConfig: iterations must be positive");
    if (restarts < 1) throw std::invalid_argument("SearchConfig: restarts must be positive");
    if (!(temperature_decay > 0.0) || temperature_decay > 1.0) {
        throw std::invalid_argument("SearchConfig: decay factor must lie in (0, 1]");
    }
    if (initial_temperature < 0.0) {
        throw std::invalid_argument("SearchConfig: initial temperature must be non-negative");
    }
    if (min_generators < 1 || max_generators < min_generators) {
        throw std::invalid_argument("SearchConfig: bad generator pool bounds");
    }
    if (threads < 1) throw std::invalid_argument("SearchConfig: thread count must be positive");
}

namespace {

/// Exactly comparable objective value. Non-spanning states carry the +1
/// penalty on the primary component.
struct ObjectiveValue {
    Ratio primary;
    Ratio secondary;

    [[nodiscard]] bool operator<(const ObjectiveValue& o) const {
        if (primary != o.primary) return primary < o.primary;
        return secondary < o.secondary;
    }
    [[nodiscard]] bool operator==(const ObjectiveValue& o) const = default;
};

struct Evaluation {
    SetFamily closure;
    bool spanning = false;
    Ratio c1;
    Ratio c2;
    ObjectiveValue value;
};

/// Top-two normalized frequencies over the ambient ground set (counts may be
/// zero for elements outside the union; that only happens in penalized
/// non-spanning states).
Evaluation evaluate(const GroundSet& ground, const std::vector<ElementSet>& gens,
                    Objective objective) {
    Evaluation ev{union_closure(SetFamily{ground, gens}), false, {}, {}, {}};
    ev.spanning = ground_union(ev.closure).bits == ground.full_mask();
    const FrequencyProfile p = frequency_profile(ev.closure);
    ev.c1 = p.ratio_of(p.order[0]);
    ev.c2 = p.ratio_of(p.order[1]);
    const Ratio penalty = ev.spanning ? Ratio{0, 1} : Ratio{1, 1};
    ev.value.primary = ev.c1 + penalty;
    ev.value.secondary = objective == Objective::lex_min_c1_c2 ? ev.c2 : Ratio{0, 1};
    return ev;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick_index(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

SearchRecord run_one_restart(const SearchConfig& cfg, int restart,
                             const std::string* rng_state) {
    const GroundSet ground{cfg.n};
    const SetMask full = ground.full_mask();
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    if (rng_state) {
        std::istringstream in(*rng_state);
        in >> rng;
        if (!in) throw std::invalid_argument("search: malformed RNG state");
    }

    // Start from a spanning state: the full set plus one random subset.
    std::vector<ElementSet> gens{ElementSet{full},
                                 ElementSet{static_cast<SetMask>(rng()) & full}};
    Evaluation current = evaluate(ground, gens, cfg.objective);

    SearchRecord best;
    best.n = cfg.n;
    best.seed = cfg.seed;
    best.objective = cfg.objective;
    best.generators = gens;
    best.closure = current.closure;
    best.c1 = current.c1;
    best.c2 = current.c2;
    best.iteration_found = 0;
    best.restart_found = restart;
    ObjectiveValue best_value = current.value;

    double temperature = cfg.initial_temperature;
    for (std::int64_t iter = 1; iter <= cfg.iterations; ++iter) {
        std::vector<ElementSet> next = gens;
        enum Move { add, remove, mutate };
        Move moves[3];
        std::size_t move_count = 0;
        if (next.size() < static_cast<std::size_t>(cfg.max_generators)) moves[move_count++] = add;
        if (next.size() > static_cast<std::size_t>(cfg.min_generators)) moves[move_count++] = remove;
        moves[move_count++] = mutate;
        switch (moves[pick_index(rng, move_count)]) {
            case add:
                next.emplace_back(static_cast<SetMask>(rng()) & full);
                break;
            case remove:
                next.erase(next.begin() +
                           static_cast<std::ptrdiff_t>(pick_index(rng, next.size())));
                break;
            case mutate: {
                const std::size_t idx = pick_index(rng, next.size());
                const int bit = static_cast<int>(pick_index(rng, static_cast<std::size_t>(cfg.n)));
                next[idx] = ElementSet{next[idx].bits ^ (SetMask{1} << bit)};
                break;
            }
        }

        Evaluation candidate = evaluate(ground, next, cfg.objective);
        bool accept = !(current.value < candidate.value);
        if (!accept && temperature > 0.0) {
            // Scalar gap only steers acceptance odds; verdict-grade
            // comparisons above stay exact.
            double gap = candidate.value.primary.to_double() - current.value.primary.to_double();
            if (gap == 0.0) {
                gap = candidate.value.secondary.to_double() - current.value.secondary.to_double();
            }
            accept = unit_double(rng) < std::exp(-gap / temperature);
        }
        if (accept) {
            gens = std::move(next);
            current = std::move(candidate);
            if (current.spanning && current.value < best_value) {
                best_value = current.value;
                best.generators = gens;
                best.closure = current.closure;
                best.c1 = current.c1;
                best.c2 = current.c2;
                best.iteration_found = iter;
            }
        }
        temperature *= cfg.temperature_decay;
    }
    return best;
}

}  // namespace

bool record_better(const SearchRecord& challenger, const SearchRecord& incumbent,
                   Objective objective) {
    if (challenger.c1 != incumbent.c1) return challenger.c1 < incumbent.c1;
    if (objective == Objective::lex_min_c1_c2 && challenger.c2 != incumbent.c2) {
        return challenger.c2 < incumbent.c2;
    }
    return false;  // ties keep the earlier restart
}

std::optional<SearchRecord> search_restart_range(const SearchConfig& cfg, int first, int last,
                                                 const std::string* first_rng_state) {
    cfg.validate();
    if (first < 0 || last > cfg.restarts || first > last) {
        throw std::invalid_argument("search_restart_range: bad restart range");
    }
    if (first == last) return std::nullopt;

    const int count = last - first;
    std::vector<std::optional<SearchRecord>> results(static_cast<std::size_t>(count));
    const int workers = std::min(cfg.threads, count);
    if (workers <= 1) {
        for (int r = first; r < last; ++r) {
            results[static_cast<std::size_t>(r - first)] =
                run_one_restart(cfg, r, r == first ? first_rng_state : nullptr);
        }
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int r = first + w; r < last; r += workers) {
                    results[static_cast<std::size_t>(r - first)] =
                        run_one_restart(cfg, r, r == first ? first_rng_state : nullptr);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    std::optional<SearchRecord> best;
    for (const auto& rec : results) {
        if (!best || record_better(*rec, *best, cfg.objective)) best = *rec;
    }
    return best;
}

SearchRecord local_search(const SearchConfig& cfg) {
    auto best = search_restart_range(cfg, 0, cfg.restarts);
    return *best;  // restarts >= 1, so a record always exists
}

std::string restart_rng_state(const SearchConfig& cfg, int restart) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    std::ostringstream out;
    out << rng;
    return out.str();
}

bool verify_record(const SearchRecord& rec, std::string* diagnostic) {
    const GroundSet ground{rec.n};
    const SetFamily reclosed = union_closure(SetFamily{ground, rec.generators});
    const FrequencyProfile p = frequency_profile(reclosed);
    const Ratio c1 = p.ratio_of(p.order[0]);
    const Ratio c2 = p.ratio_of(p.order[1]);
    const bool ok = reclosed == rec.closure && c1 == rec.c1 && c2 == rec.c2;
    if (!ok && diagnostic) {
        *diagnostic = "recorded (c1, c2) = (" + rec.c1.str() + ", " + rec.c2.str() +
                      ") vs recomputed (" + c1.str() + ", " + c2.str() + ")" +
                      (reclosed == rec.closure ? "" : "; stored closure differs from re-closure");
    }
    return ok;
}

bool is_extraordinary(const SearchRecord& rec) {
    return rec.c1 < Ratio{1, 2};
}

}  // namespace ucf
