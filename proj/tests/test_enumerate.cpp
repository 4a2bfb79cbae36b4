#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "ucf/enumerate.hpp"
#include "ucf/family_io.hpp"
#include "ucf/json_io.hpp"

#include "oracles.hpp"

using namespace ucf;

namespace {

std::vector<SetFamily> dense_all(int n) {
    EnumConfig cfg;
    cfg.n = n;
    return enumerate_all(cfg);
}

std::vector<SetFamily> canonical_all(int n) {
    EnumConfig cfg;
    cfg.n = n;
    cfg.mode = EnumConfig::Mode::canonical;
    return enumerate_all(cfg);
}

using ClassKey = std::vector<SetMask>;

ClassKey key_of(const SetFamily& f) { return oracle::masks_of(f); }

}  // namespace

TEST_CASE("dense n = 1: the three families over a single point") {
    const std::vector<SetFamily> fams = dense_all(1);
    REQUIRE(fams.size() == 3);
    CHECK(key_of(fams[0]) == ClassKey{0});        // {∅}
    CHECK(key_of(fams[1]) == ClassKey{1});        // {{1}}
    CHECK(key_of(fams[2]) == ClassKey{0, 1});     // {∅, {1}}
}

TEST_CASE("dense n = 2: 13 families, confirmed by the brute-force oracle") {
    // Oracle: walk all 15 nonempty subsets of the 4-set power set and test
    // closure by plain scanning, with no shared machinery.
    std::vector<ClassKey> expected;
    for (unsigned pick = 1; pick < 16; ++pick) {
        std::vector<ElementSet> sets;
        for (unsigned m = 0; m < 4; ++m) {
            if (pick >> m & 1U) sets.emplace_back(m);
        }
        if (oracle::union_closed_by_scan(sets)) {
            ClassKey key;
            for (const ElementSet s : sets) key.push_back(s.bits);
            expected.push_back(key);
        }
    }
    CHECK(expected.size() == 13);

    const std::vector<SetFamily> fams = dense_all(2);
    REQUIRE(fams.size() == expected.size());
    for (std::size_t i = 0; i < fams.size(); ++i) {
        CHECK(key_of(fams[i]) == expected[i]);
        CHECK(is_union_closed(fams[i]));
    }
}

TEST_CASE("dense/canonical dual-path agreement at n = 2, 3, 4") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const std::vector<SetFamily> dense = dense_all(n);

        // Quotient the dense stream by canonical form.
        std::map<ClassKey, std::int64_t> dense_classes;  // key -> orbit size
        for (const SetFamily& f : dense) dense_classes[key_of(canonical_form(f))]++;

        std::set<ClassKey> canon_classes;
        for (const SetFamily& f : canonical_all(n)) {
            CHECK(is_union_closed(f));
            CHECK(key_of(canonical_form(f)) == key_of(f));  // already canonical
            CHECK(canon_classes.insert(key_of(f)).second);  // no repeats
        }

        REQUIRE(canon_classes.size() == dense_classes.size());
        std::int64_t orbit_total = 0;
        for (const auto& [key, orbit] : dense_classes) {
            CHECK(canon_classes.contains(key));
            orbit_total += orbit;
        }
        CHECK(orbit_total == static_cast<std::int64_t>(dense.size()));

        MESSAGE("n=", n, ": ", dense.size(), " families in ", canon_classes.size(),
                " classes");
    }
}

TEST_CASE("filters: spanning, empty member, trivial family") {
    EnumConfig cfg;
    cfg.n = 2;

    cfg.spanning = true;
    for (const SetFamily& f : enumerate_all(cfg)) {
        CHECK(ground_union(f) == ElementSet::of({1, 2}));
    }

    cfg.spanning = false;
    cfg.allow_empty_member = false;
    for (const SetFamily& f : enumerate_all(cfg)) {
        CHECK(!f.contains(ElementSet{}));
    }
    // 7 of the 13 families contain ∅.
    CHECK(enumerate_all(cfg).size() == 6);

    cfg.allow_empty_member = true;
    cfg.exclude_trivial = true;
    for (const SetFamily& f : enumerate_all(cfg)) {
        CHECK(!(f.size() == 1 && f.sets().front().empty()));
    }
    CHECK(enumerate_all(cfg).size() == 12);

    // Same filters respected by the canonical walk.
    cfg.mode = EnumConfig::Mode::canonical;
    cfg.spanning = true;
    for (const SetFamily& f : enumerate_all(cfg)) {
        CHECK(ground_union(f) == ElementSet::of({1, 2}));
        CHECK(!(f.size() == 1 && f.sets().front().empty()));
    }
}

TEST_CASE("stream determinism and limit") {
    EnumConfig cfg;
    cfg.n = 3;
    const std::vector<SetFamily> a = enumerate_all(cfg);
    const std::vector<SetFamily> b = enumerate_all(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    cfg.limit = 10;
    CHECK(enumerate_all(cfg).size() == 10);

    cfg.mode = EnumConfig::Mode::canonical;
    const std::vector<SetFamily> c = enumerate_all(cfg);
    CHECK(c.size() == 10);
    const std::vector<SetFamily> d = enumerate_all(cfg);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == d[i]);
}

TEST_CASE("EnumConfig validation") {
    EnumConfig cfg;
    cfg.n = 5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // dense needs n <= 4
    cfg.mode = EnumConfig::Mode::canonical;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // n = 5 needs a limit
    cfg.limit = 100;
    CHECK_NOTHROW(cfg.validate());
    cfg.n = 6;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("canonical n = 5 with a yield cap") {
    EnumConfig cfg;
    cfg.n = 5;
    cfg.mode = EnumConfig::Mode::canonical;
    cfg.limit = 150;
    std::set<ClassKey> seen;
    const std::vector<SetFamily> fams = enumerate_all(cfg);
    CHECK(fams.size() == 150);
    for (const SetFamily& f : fams) {
        CHECK(is_union_closed(f));
        CHECK(seen.insert(key_of(f)).second);
    }
}

TEST_CASE("random_closed_family") {
    const RandomConfig one{.n = 6, .generator_count = 1, .seed = 42};
    const SetFamily single = random_closed_family(one);
    CHECK(single.size() == 1);

    const RandomConfig cfg{.n = 12, .generator_count = 7, .seed = 9};
    const SetFamily a = random_closed_family(cfg);
    const SetFamily b = random_closed_family(cfg);
    CHECK(a == b);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SetFamily f =
            random_closed_family({.n = 12, .generator_count = 7, .seed = seed});
        CHECK(is_union_closed(f));
        CHECK(!f.sets().front().empty());  // generators are nonempty subsets
    }
}

TEST_CASE("sweep: settled checks have zero fails at n <= 3") {
    const std::vector<CheckKind> checks = {CheckKind::frankl, CheckKind::nagel,
                                           CheckKind::lemma1, CheckKind::eq21,
                                           CheckKind::lemma33, CheckKind::prop34,
                                           CheckKind::two_set};
    for (int n = 1; n <= 3; ++n) {
        EnumConfig cfg;
        cfg.n = n;
        const SweepReport report = sweep(cfg, checks);
        CHECK(!report.has_defect_failure);
        CHECK(report.failing_witnesses.empty());
        for (std::size_t i = 0; i < checks.size(); ++i) {
            CAPTURE(n);
            CAPTURE(check_name(checks[i]));
            CHECK(report.tallies[i].fails == 0);
        }
    }
}

TEST_CASE("sweep: s_frankl is a survey, never a defect") {
    EnumConfig cfg;
    cfg.n = 3;
    cfg.spanning = true;
    const SweepReport report = sweep(cfg, {CheckKind::s_frankl});
    CHECK(!report.has_defect_failure);
    const CheckTally& tally = report.tallies[0];
    CHECK(tally.holds + tally.fails + tally.not_applicable == report.families_seen);
    MESSAGE("s_frankl at n=3 spanning: holds=", tally.holds, " fails=", tally.fails,
            " n/a=", tally.not_applicable);
}

TEST_CASE("sweep: identical aggregates for 1 and 4 workers") {
    EnumConfig cfg;
    cfg.n = 4;
    const std::vector<CheckKind> checks = {CheckKind::frankl, CheckKind::s_frankl,
                                           CheckKind::two_set};
    const SweepReport solo = sweep(cfg, checks, 1);
    const SweepReport quad = sweep(cfg, checks, 4);
    CHECK(solo.families_seen == quad.families_seen);
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CHECK(solo.tallies[i].holds == quad.tallies[i].holds);
        CHECK(solo.tallies[i].fails == quad.tallies[i].fails);
        CHECK(solo.tallies[i].not_applicable == quad.tallies[i].not_applicable);
    }
    REQUIRE(solo.failing_witnesses.size() == quad.failing_witnesses.size());

    // Byte-identical JSON apart from the timing field.
    Json a = sweep_report_json(solo);
    Json b = sweep_report_json(quad);
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a.dump() == b.dump());

    // Canonical mode too.
    cfg.mode = EnumConfig::Mode::canonical;
    const SweepReport c1 = sweep(cfg, checks, 1);
    const SweepReport c4 = sweep(cfg, checks, 4);
    Json ja = sweep_report_json(c1);
    Json jb = sweep_report_json(c4);
    ja.erase("wall_time_ms");
    jb.erase("wall_time_ms");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("sweep report JSON shape; unknown names rejected") {
    CHECK_THROWS_AS(parse_check("froobination"), std::invalid_argument);
    CHECK(parse_check("two_set") == CheckKind::two_set);

    EnumConfig cfg;
    cfg.n = 2;
    const SweepReport report = sweep(cfg, {CheckKind::frankl});
    const Json j = sweep_report_json(report);
    CHECK(j.at("config").at("n") == 2);
    CHECK(j.at("config").at("mode") == "dense");
    CHECK(j.at("families_seen") == 13);
    CHECK(j.at("per_check").at("frankl").at("fails") == 0);
    CHECK(j.at("per_check").at("frankl").at("holds") == 12);           // all but {∅}
    CHECK(j.at("per_check").at("frankl").at("not_applicable") == 1);   // {∅}
    CHECK(j.contains("failing_witnesses"));
    CHECK(j.contains("wall_time_ms"));
}
