#include "ucf/json_io.hpp"

#include "ucf/family_io.hpp"

namespace ucf {

Json ratio_json(const Ratio& r) {
    return Json{{"num", r.num()}, {"den", r.den()}};
}

Json bound_report_json(const BoundReport& report) {
    Json witnesses = Json::array();
    for (const BoundWitness& w : report.witnesses) {
        witnesses.push_back(Json{{"element", w.element},
                                 {"num", w.ratio.num()},
                                 {"den", w.ratio.den()}});
    }
    return Json{{"context", report.context},
                {"verdict", verdict_name(report.verdict)},
                {"bound", ratio_json(report.bound)},
                {"bound_approx", report.bound.to_double()},
                {"witnesses", std::move(witnesses)},
                {"detail", report.detail}};
}

Json proof_quantities_json(const ProofQuantities& q) {
    return Json{{"g_j", q.g_j},       {"g_not_j", q.g_not_j},
                {"x", q.x},           {"y", q.y},
                {"f_j", q.f_j},       {"f_total", q.f_total},
                {"identities_hold", q.identities_hold()}};
}

Json chain_json(const std::vector<ChainStep>& chain) {
    Json steps = Json::array();
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const ChainStep& step = chain[k];
        steps.push_back(Json{{"k", k + 1},
                             {"element", step.element},
                             {"bound", ratio_json(step.bound)},
                             {"achieved", ratio_json(step.achieved)},
                             {"achieved_approx", step.achieved.to_double()},
                             {"meets_bound", step.achieved >= step.bound}});
    }
    return steps;
}

namespace {

Json enum_config_json(const EnumConfig& cfg) {
    Json j{{"n", cfg.n},
           {"spanning", cfg.spanning},
           {"allow_empty_member", cfg.allow_empty_member},
           {"exclude_trivial", cfg.exclude_trivial},
           {"mode", cfg.mode == EnumConfig::Mode::dense ? "dense" : "canonical"}};
    if (cfg.limit) j["limit"] = *cfg.limit;
    return j;
}

}  // namespace

Json sweep_report_json(const SweepReport& report) {
    Json per_check = Json::object();
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckTally& t = report.tallies[i];
        per_check[check_name(report.checks[i])] = Json{{"holds", t.holds},
                                                       {"fails", t.fails},
                                                       {"not_applicable", t.not_applicable}};
    }
    Json witnesses = Json::array();
    for (const FailingWitness& w : report.failing_witnesses) {
        witnesses.push_back(Json{{"check", check_name(w.check)},
                                 {"family", w.family_text},
                                 {"instance", w.instance},
                                 {"detail", w.detail}});
    }
    return Json{{"config", enum_config_json(report.config)},
                {"families_seen", report.families_seen},
                {"per_check", std::move(per_check)},
                {"failing_witnesses", std::move(witnesses)},
                {"wall_time_ms", report.wall_time_ms}};
}

Json search_record_json(const SearchRecord& rec) {
    const SetFamily gens{GroundSet{rec.n}, rec.generators};
    return Json{{"n", rec.n},
                {"seed", rec.seed},
                {"objective", objective_name(rec.objective)},
                {"c1", ratio_json(rec.c1)},
                {"c1_approx", rec.c1.to_double()},
                {"c2", ratio_json(rec.c2)},
                {"c2_approx", rec.c2.to_double()},
                {"iteration_found", rec.iteration_found},
                {"restart_found", rec.restart_found},
                {"closure_size", rec.closure.size()},
                {"generators", to_text(gens)}};
}

SearchRecord search_record_from_json(const Json& j) {
    SearchRecord rec;
    rec.n = j.at("n").get<int>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.objective = parse_objective(j.at("objective").get<std::string>());
    rec.c1 = Ratio{j.at("c1").at("num").get<std::int64_t>(),
                   j.at("c1").at("den").get<std::int64_t>()};
    rec.c2 = Ratio{j.at("c2").at("num").get<std::int64_t>(),
                   j.at("c2").at("den").get<std::int64_t>()};
    rec.iteration_found = j.at("iteration_found").get<std::int64_t>();
    rec.restart_found = j.at("restart_found").get<int>();
    const SetFamily gens = parse_family(j.at("generators").get<std::string>());
    if (gens.n() != rec.n) {
        throw std::invalid_argument("search record: generator ground size mismatch");
    }
    rec.generators = gens.sets();
    rec.closure = union_closure(gens);
    return rec;
}

Json extraordinary_audit_json(const SearchRecord& rec) {
    return Json{{"flag", "EXTRAORDINARY_FINDING: best c1 below 1/2"},
                {"action", "audit manually before drawing any conclusion"},
                {"record", search_record_json(rec)},
                {"closure", to_text(rec.closure)},
                {"verified", verify_record(rec)}};
}

}  // namespace ucf
