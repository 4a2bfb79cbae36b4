// ucf - checks, sweeps, and searches over finite union-closed set families.
//
// Subcommands: check, lemma, chain, bound, enumerate, sweep, search.
// Exit codes: 0 = completed with no settled-statement failure,
//             1 = a settled statement failed (a defect in this tool),
//             2 = usage, parse, or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ucf/bounds.hpp"
#include "ucf/enumerate.hpp"
#include "ucf/family_io.hpp"
#include "ucf/json_io.hpp"
#include "ucf/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDefect = 1;
constexpr int kExitUsage = 2;

int default_threads() {
    if (const char* env = std::getenv("UCF_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid UCF_THREADS value\n";
    }
    return 1;
}

/// "num/den (~ 0.333333)": exact first, decimal for the eye.
std::string pretty(const ucf::Ratio& r) {
    std::ostringstream out;
    out << r.str() << " (~ " << std::fixed << std::setprecision(6) << r.to_double() << ")";
    return out.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

ucf::SetFamily load_closed_family(const std::string& path) {
    ucf::SetFamily f = ucf::parse_family_file(path);
    if (!ucf::is_union_closed(f)) {
        const auto violation = ucf::find_closure_violation(f);
        std::ostringstream msg;
        msg << "family is not union-closed";
        if (violation) {
            msg << ": " << violation->first.str() << " ∪ " << violation->second.str() << " = "
                << (violation->first | violation->second).str() << " is missing";
        }
        throw std::runtime_error(msg.str());
    }
    return f;
}

std::string report_line(const ucf::BoundReport& r) {
    std::ostringstream out;
    out << r.context << ": " << ucf::verdict_name(r.verdict);
    if (r.verdict != ucf::Verdict::not_applicable) {
        out << " (bound " << r.bound.str() << ")";
    }
    if (!r.detail.empty()) out << " - " << r.detail;
    return out.str();
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const std::string& file, bool as_json, bool echo, const std::string& out_path) {
    const ucf::SetFamily f = load_closed_family(file);
    if (echo) {
        emit(ucf::to_text(f), out_path);
        return kExitOk;
    }
    const ucf::FrequencyProfile profile = ucf::frequency_profile(f);
    const std::optional<int> t = ucf::t_value(f);
    const ucf::BoundReport frankl = ucf::frankl_check(f);
    const ucf::BoundReport nagel = ucf::nagel_check(f);
    const ucf::BoundReport s_frankl = ucf::s_frankl_check(f);

    if (as_json) {
        ucf::Json counts = ucf::Json::array();
        for (int e = 1; e <= f.n(); ++e) counts.push_back(profile.count_of(e));
        ucf::Json j{{"family", ucf::Json{{"n", f.n()},
                                         {"size", f.size()},
                                         {"union_closed", true},
                                         {"t_value", t ? ucf::Json(*t) : ucf::Json(nullptr)}}},
                    {"profile", ucf::Json{{"total", profile.total},
                                          {"counts", std::move(counts)},
                                          {"order", profile.order}}},
                    {"reports", ucf::Json::array({ucf::bound_report_json(frankl),
                                                  ucf::bound_report_json(nagel),
                                                  ucf::bound_report_json(s_frankl)})}};
        emit(j.dump(2), out_path);
    } else {
        std::ostringstream out;
        out << "family: n=" << f.n() << ", " << f.size() << " set(s), union-closed\n";
        out << "T(F) = " << (t ? std::to_string(*t) : "none (family is {∅})") << "\n";
        out << "frequencies (most frequent first):\n";
        for (const int e : profile.order) {
            out << "  element " << e << ": " << profile.count_of(e) << "/" << profile.total
                << " (~ " << std::fixed << std::setprecision(6)
                << profile.ratio_of(e).to_double() << ")\n";
        }
        out << report_line(frankl) << "\n";
        out << report_line(nagel) << "\n";
        out << report_line(s_frankl) << "\n";
        emit(out.str(), out_path);
    }

    // Settled statements decide the exit code; the two-abundant survey never
    // does.
    const bool frankl_defect =
        frankl.verdict == ucf::Verdict::fails && ucf::status::frankl_proven_for(f);
    bool nagel_defect = false;
    if (nagel.verdict == ucf::Verdict::fails) {
        nagel_defect = ucf::status::frankl_proven_for(f);
        if (!nagel_defect) {
            std::cerr << "flag: frequency bound failed outside the settled range; "
                         "extraordinary finding, audit the input\n";
        }
    }
    if (frankl.verdict == ucf::Verdict::fails && !frankl_defect) {
        std::cerr << "flag: abundant-element check failed outside the settled range; "
                     "extraordinary finding, audit the input\n";
    }
    return (frankl_defect || nagel_defect) ? kExitDefect : kExitOk;
}

// ---------------------------------------------------------------------------
// lemma
// ---------------------------------------------------------------------------

int run_lemma(const std::string& file, int i, int j, bool as_json, const std::string& out_path) {
    const ucf::SetFamily f = load_closed_family(file);
    const ucf::ProofQuantities q = ucf::proof_quantities(f, i, j);
    const ucf::BoundReport verdict = ucf::lemma1_verify(f, i, j);

    if (as_json) {
        ucf::Json out{{"i", i},
                      {"j", j},
                      {"quantities", ucf::proof_quantities_json(q)},
                      {"lemma1", ucf::bound_report_json(verdict)}};
        emit(out.dump(2), out_path);
    } else {
        std::ostringstream out;
        out << "i=" << i << " j=" << j << "\n";
        out << "|G_j| = " << q.g_j << ", |G_/j| = " << q.g_not_j << ", x = " << q.x
            << ", y = " << q.y << ", |F_j| = " << q.f_j << ", |F| = " << q.f_total << "\n";
        out << "identities (|F_j| = |G_j| + x, |F| = |G_j| + |G_/j| + x + y): "
            << (q.identities_hold() ? "hold" : "VIOLATED") << "\n";
        out << report_line(verdict) << "\n";
        emit(out.str(), out_path);
    }
    const bool defect = !q.identities_hold() || verdict.verdict == ucf::Verdict::fails;
    return defect ? kExitDefect : kExitOk;
}

// ---------------------------------------------------------------------------
// chain
// ---------------------------------------------------------------------------

int run_chain(const std::string& file, bool as_json, const std::string& out_path) {
    const ucf::SetFamily f = load_closed_family(file);
    const std::vector<ucf::ChainStep> chain = ucf::nagel_chain(f);

    bool all_met = true;
    for (const ucf::ChainStep& step : chain) all_met &= step.achieved >= step.bound;

    if (as_json) {
        emit(ucf::chain_json(chain).dump(2), out_path);
    } else {
        std::ostringstream out;
        out << "k  element  bound            achieved\n";
        for (std::size_t k = 0; k < chain.size(); ++k) {
            const ucf::ChainStep& step = chain[k];
            out << k + 1 << "  " << step.element << "        " << pretty(step.bound) << "  "
                << pretty(step.achieved) << (step.achieved >= step.bound ? "" : "  BELOW BOUND")
                << "\n";
        }
        emit(out.str(), out_path);
    }
    if (!all_met) {
        if (ucf::status::frankl_proven_for(f)) return kExitDefect;
        std::cerr << "flag: chain bound missed outside the settled range; "
                     "extraordinary finding, audit the input\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

int run_bound(const std::string& c_text, int iterate, const std::string& out_path) {
    ucf::Ratio c = ucf::Ratio::parse(c_text);
    std::ostringstream out;
    for (int k = 1; k <= iterate; ++k) {
        c = ucf::lemma1_bound(c);
        out << pretty(c) << "\n";
    }
    emit(out.str(), out_path);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate / sweep
// ---------------------------------------------------------------------------

int run_enumerate(const ucf::EnumConfig& cfg, const std::string& out_path) {
    std::ostringstream out;
    std::int64_t count = 0;
    const ucf::FamilyVisitor print = [&](const ucf::SetFamily& f) {
        ++count;
        out << "# family " << count << "\n" << ucf::to_text(f) << "\n";
        return true;
    };
    if (cfg.mode == ucf::EnumConfig::Mode::dense) ucf::enumerate_dense(cfg, print);
    else ucf::enumerate_canonical(cfg, print);
    out << "# families: " << count << "\n";
    emit(out.str(), out_path);
    return kExitOk;
}

int run_sweep(const ucf::EnumConfig& cfg, const std::string& checks_csv, int threads,
              const std::string& out_path) {
    std::vector<ucf::CheckKind> checks;
    std::stringstream ss(checks_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (!name.empty()) checks.push_back(ucf::parse_check(name));
    }
    const ucf::SweepReport report = ucf::sweep(cfg, checks, threads);
    emit(ucf::sweep_report_json(report).dump(2), out_path);
    std::cerr << "sweep: " << report.families_seen << " families";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::cerr << ", " << ucf::check_name(checks[i]) << " fails=" << report.tallies[i].fails;
    }
    std::cerr << "\n";
    return report.has_defect_failure ? kExitDefect : kExitOk;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

struct Checkpoint {
    int completed_restarts = 0;
    std::optional<ucf::SearchRecord> best;
    std::string rng_state;
};

ucf::Json checkpoint_config_json(const ucf::SearchConfig& cfg) {
    return ucf::Json{{"n", cfg.n},
                     {"objective", ucf::objective_name(cfg.objective)},
                     {"iterations", cfg.iterations},
                     {"seed", cfg.seed},
                     {"initial_temperature", cfg.initial_temperature},
                     {"temperature_decay", cfg.temperature_decay},
                     {"min_generators", cfg.min_generators},
                     {"max_generators", cfg.max_generators}};
}

void write_checkpoint(const std::string& path, const ucf::SearchConfig& cfg,
                      const Checkpoint& ck) {
    ucf::Json j{{"kind", "ucf-search-checkpoint"},
                {"config", checkpoint_config_json(cfg)},
                {"completed_restarts", ck.completed_restarts},
                {"rng_state", ck.rng_state},
                {"best", ck.best ? ucf::search_record_json(*ck.best) : ucf::Json(nullptr)}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write checkpoint " + path);
    out << j.dump(2) << "\n";
}

Checkpoint read_checkpoint(const std::string& path, const ucf::SearchConfig& cfg) {
    std::ifstream in(path);
    ucf::Json j;
    in >> j;
    if (j.at("kind").get<std::string>() != "ucf-search-checkpoint") {
        throw std::runtime_error("not a search checkpoint: " + path);
    }
    if (j.at("config") != checkpoint_config_json(cfg)) {
        throw std::runtime_error("checkpoint config does not match this invocation");
    }
    Checkpoint ck;
    ck.completed_restarts = j.at("completed_restarts").get<int>();
    ck.rng_state = j.at("rng_state").get<std::string>();
    if (!j.at("best").is_null()) ck.best = ucf::search_record_from_json(j.at("best"));
    return ck;
}

int run_search(ucf::SearchConfig cfg, const std::string& resume_path,
               const std::string& out_path) {
    cfg.validate();
    Checkpoint ck;
    ck.rng_state = ucf::restart_rng_state(cfg, 0);
    if (!resume_path.empty() && std::filesystem::exists(resume_path)) {
        ck = read_checkpoint(resume_path, cfg);
        if (ck.completed_restarts > cfg.restarts) {
            throw std::runtime_error("checkpoint already covers more restarts than requested");
        }
        std::cerr << "resume: " << ck.completed_restarts << " restart(s) already done\n";
    }

    const auto reduce = [&](const std::optional<ucf::SearchRecord>& candidate) {
        if (candidate && (!ck.best || ucf::record_better(*candidate, *ck.best, cfg.objective))) {
            ck.best = candidate;
        }
    };

    if (cfg.threads == 1 && !resume_path.empty()) {
        // Restart-by-restart so the checkpoint is useful mid-run.
        for (int r = ck.completed_restarts; r < cfg.restarts; ++r) {
            const std::string state = ck.rng_state;
            reduce(ucf::search_restart_range(cfg, r, r + 1, &state));
            ck.completed_restarts = r + 1;
            // Always store the next restart's state: a later invocation may
            // raise --restarts and continue from here.
            ck.rng_state = ucf::restart_rng_state(cfg, r + 1);
            write_checkpoint(resume_path, cfg, ck);
        }
    } else {
        reduce(ucf::search_restart_range(cfg, ck.completed_restarts, cfg.restarts));
        ck.completed_restarts = cfg.restarts;
        ck.rng_state = ucf::restart_rng_state(cfg, cfg.restarts);
        if (!resume_path.empty()) write_checkpoint(resume_path, cfg, ck);
    }

    if (!ck.best) throw std::runtime_error("no restart produced a record");
    const ucf::SearchRecord& best = *ck.best;
    std::string diagnostic;
    if (!ucf::verify_record(best, &diagnostic)) {
        std::cerr << "defect: search record failed re-verification: " << diagnostic << "\n";
        return kExitDefect;
    }
    emit(ucf::search_record_json(best).dump(2), out_path);

    if (ucf::is_extraordinary(best)) {
        const std::string audit_path =
            (out_path.empty() ? std::string("ucf_search") : out_path) + ".audit.json";
        std::ofstream audit(audit_path);
        audit << ucf::extraordinary_audit_json(best).dump(2) << "\n";
        std::cerr << "flag: best c1 = " << best.c1.str()
                  << " < 1/2, extraordinary finding dumped to " << audit_path
                  << " for manual audit\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"checks, sweeps, and searches over finite union-closed set families"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;
    bool as_json = false;
    bool echo = false;
    int i = 0;
    int j = 0;
    std::string c_text;
    int iterate = 1;
    std::string checks_csv;
    int threads = default_threads();

    ucf::EnumConfig enum_cfg;
    std::string mode_name = "dense";
    std::int64_t limit = 0;

    ucf::SearchConfig search_cfg;
    std::string objective_name = "min_c1";
    std::string resume_path;

    auto* check = app.add_subcommand("check", "closure, profile, and conjecture reports");
    check->add_option("file", file, "family file")->required();
    check->add_flag("--json", as_json, "machine-readable output");
    check->add_flag("--echo", echo, "print the parsed family back out and stop");
    check->add_option("--out", out_path, "write output to a file");

    auto* lemma = app.add_subcommand("lemma", "quotient counting identities and lift bound");
    lemma->add_option("file", file, "family file")->required();
    lemma->add_option("--i", i, "deleted element")->required();
    lemma->add_option("--j", j, "tracked element")->required();
    lemma->add_flag("--json", as_json, "machine-readable output");
    lemma->add_option("--out", out_path, "write output to a file");

    auto* chain = app.add_subcommand("chain", "most-frequent-element deletion chain");
    chain->add_option("file", file, "family file")->required();
    chain->add_flag("--json", as_json, "machine-readable output");
    chain->add_option("--out", out_path, "write output to a file");

    auto* bound = app.add_subcommand("bound", "iterate the frequency lift bound c -> c/(2-c)");
    bound->add_option("--c", c_text, "starting ratio NUM/DEN in (0,1]")->required();
    bound->add_option("--iterate", iterate, "number of applications")->check(CLI::PositiveNumber);
    bound->add_option("--out", out_path, "write output to a file");

    const auto add_enum_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", enum_cfg.n, "ground set size")->required();
        cmd->add_flag("--spanning", enum_cfg.spanning, "only families whose union is M_n");
        cmd->add_flag("--allow-empty,!--no-allow-empty", enum_cfg.allow_empty_member,
                      "permit the empty set as a member (default on)");
        cmd->add_flag("--exclude-trivial", enum_cfg.exclude_trivial, "drop the family {∅}");
        cmd->add_option("--mode", mode_name, "dense or canonical")
            ->check(CLI::IsMember({"dense", "canonical"}));
        cmd->add_option("--limit", limit, "cap on yielded families")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "write output to a file");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list union-closed families");
    add_enum_flags(enumerate);

    auto* sweep = app.add_subcommand("sweep", "run checks over every enumerated family");
    add_enum_flags(sweep);
    sweep->add_option("--checks", checks_csv,
                      "comma list: frankl,nagel,s_frankl,lemma1,eq21,lemma33,prop34,two_set")
        ->required();
    sweep->add_option("--threads", threads, "worker count (default $UCF_THREADS or 1)");

    auto* search = app.add_subcommand("search", "annealing search for low-frequency profiles");
    search->add_option("--n", search_cfg.n, "ground set size")->required();
    search->add_option("--objective", objective_name, "min_c1 or lex_min_c1_c2")
        ->check(CLI::IsMember({"min_c1", "lex_min_c1_c2"}));
    search->add_option("--iters", search_cfg.iterations, "iterations per restart");
    search->add_option("--seed", search_cfg.seed, "master seed");
    search->add_option("--restarts", search_cfg.restarts, "independent restarts");
    search->add_option("--threads", threads, "worker count (default $UCF_THREADS or 1)");
    search->add_option("--temp-initial", search_cfg.initial_temperature,
                       "starting annealing temperature");
    search->add_option("--temp-decay", search_cfg.temperature_decay,
                       "temperature decay per iteration, in (0,1]");
    search->add_option("--min-gens", search_cfg.min_generators, "generator pool lower bound");
    search->add_option("--max-gens", search_cfg.max_generators, "generator pool upper bound");
    search->add_option("--resume", resume_path, "checkpoint file to resume from / write to");
    search->add_option("--out", out_path, "write the record to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(file, as_json, echo, out_path);
        if (lemma->parsed()) return run_lemma(file, i, j, as_json, out_path);
        if (chain->parsed()) return run_chain(file, as_json, out_path);
        if (bound->parsed()) return run_bound(c_text, iterate, out_path);
        if (enumerate->parsed() || sweep->parsed()) {
            enum_cfg.mode = mode_name == "dense" ? ucf::EnumConfig::Mode::dense
                                                 : ucf::EnumConfig::Mode::canonical;
            if (limit > 0) enum_cfg.limit = limit;
            enum_cfg.validate();
            if (enumerate->parsed()) return run_enumerate(enum_cfg, out_path);
            return run_sweep(enum_cfg, checks_csv, threads, out_path);
        }
        if (search->parsed()) {
            search_cfg.objective = ucf::parse_objective(objective_name);
            search_cfg.threads = threads;
            return run_search(search_cfg, resume_path, out_path);
        }
    } catch (const ucf::ParseError& e) {
        std::cerr << "error: " << file << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
