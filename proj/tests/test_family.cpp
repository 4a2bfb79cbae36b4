#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ucf/enumerate.hpp"
#include "ucf/family.hpp"
#include "ucf/family_io.hpp"
#include "ucf/ratio.hpp"

#include "oracles.hpp"

using namespace ucf;

namespace {

SetFamily fam(int n, std::initializer_list<std::initializer_list<int>> members) {
    std::vector<ElementSet> sets;
    for (const auto& m : members) sets.push_back(ElementSet::of(m));
    return {GroundSet{n}, std::move(sets)};
}

SetFamily power_set_family(int n) {
    std::vector<ElementSet> sets;
    for (SetMask m = 0; m <= GroundSet{n}.full_mask(); ++m) sets.emplace_back(m);
    return {GroundSet{n}, std::move(sets)};
}

}  // namespace

TEST_CASE("Ratio: reduction, exactness, arithmetic") {
    CHECK(Ratio{2, 4} == Ratio{1, 2});
    CHECK(Ratio{0, 7} == Ratio{0, 3});
    CHECK(Ratio{1, 3} < Ratio{1, 2});
    CHECK(Ratio{2, 3} > Ratio{1, 2});
    CHECK(Ratio{1, 3} + Ratio{1, 6} == Ratio{1, 2});
    CHECK(Ratio{38234, 100000} == Ratio{19117, 50000});
    CHECK(Ratio{1, 2}.str() == "1/2");
    CHECK(Ratio::parse("3/9") == Ratio{1, 3});
    CHECK(Ratio::parse("2") == Ratio{2, 1});
    CHECK_THROWS_AS(Ratio(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Ratio(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Ratio::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Ratio::parse("1/2/3"), std::invalid_argument);

    // Exactness where doubles would tie: 10^9/(2*10^9+1) vs 1/2.
    CHECK(Ratio{1000000000, 2000000001} < Ratio{1, 2});
}

TEST_CASE("ElementSet basics") {
    const ElementSet s = ElementSet::of({1, 3});
    CHECK(s.cardinality() == 2);
    CHECK(s.contains(1));
    CHECK(!s.contains(2));
    CHECK(s.without(3) == ElementSet::of({1}));
    CHECK((s | ElementSet::of({2})) == ElementSet::of({1, 2, 3}));
    CHECK(ElementSet{}.empty());
    CHECK(ElementSet::of({1}).subset_of(s));
    CHECK(!s.subset_of(ElementSet::of({1})));
    CHECK(s.str() == "{1,3}");
    CHECK(ElementSet{}.str() == "{}");
}

TEST_CASE("SetFamily construction invariants") {
    const SetFamily f = fam(3, {{2}, {1}, {1}, {1, 2}});
    CHECK(f.size() == 3);  // deduplicated
    CHECK(std::is_sorted(f.sets().begin(), f.sets().end()));
    CHECK(f.contains(ElementSet::of({1, 2})));
    CHECK(!f.contains(ElementSet::of({3})));

    CHECK_THROWS_AS(SetFamily(GroundSet{2}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SetFamily(GroundSet{2}, {ElementSet::of({3})}), std::invalid_argument);
    CHECK_THROWS_AS(GroundSet{0}, std::invalid_argument);
    CHECK_THROWS_AS(GroundSet{25}, std::invalid_argument);
}

TEST_CASE("is_union_closed") {
    CHECK(is_union_closed(fam(2, {{1}, {2}, {1, 2}})));
    CHECK(!is_union_closed(fam(2, {{1}, {2}})));
    CHECK(is_union_closed(fam(1, {{}})));  // the family {∅}

    SetFamily f = fam(2, {{1}, {2}});
    CHECK(f.cached_closure() == Closure::unknown);
    is_union_closed(f);
    CHECK(f.cached_closure() == Closure::no);

    const auto violation = find_closure_violation(f);
    REQUIRE(violation.has_value());
    CHECK((violation->first | violation->second) == ElementSet::of({1, 2}));
}

TEST_CASE("union_closure: examples and oracle agreement") {
    const SetFamily closed = union_closure(fam(2, {{1}, {2}}));
    CHECK(closed == fam(2, {{1}, {2}, {1, 2}}));
    CHECK(closed.cached_closure() == Closure::yes);

    // Already-closed input is a fixpoint.
    CHECK(union_closure(closed) == closed);

    const SetFamily tri = union_closure(fam(3, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(tri == fam(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}}));

    // Against the subset-union oracle on assorted generator lists.
    const std::vector<std::vector<ElementSet>> generator_lists = {
        {ElementSet::of({1, 2}), ElementSet::of({2, 3}), ElementSet::of({1, 3})},
        {ElementSet::of({1}), ElementSet::of({2, 4}), ElementSet::of({3})},
        {ElementSet{}, ElementSet::of({1, 4}), ElementSet::of({2})},
        {ElementSet::of({1, 2, 3, 4})},
    };
    for (const auto& gens : generator_lists) {
        const SetFamily got = union_closure(SetFamily{GroundSet{4}, gens});
        CHECK(oracle::masks_of(got) == oracle::closure_by_subset_unions(gens));
        CHECK(is_union_closed(got));
        for (const ElementSet g : gens) CHECK(got.contains(g));  // extensive
    }
}

TEST_CASE("ground_union and t_value") {
    CHECK(ground_union(fam(3, {{1}, {3}})) == ElementSet::of({1, 3}));
    CHECK(ground_union(fam(2, {{}})) == ElementSet{});
    CHECK(ground_union(power_set_family(3)) == ElementSet::of({1, 2, 3}));

    CHECK(t_value(fam(3, {{1, 2}, {1, 2, 3}})) == 2);
    CHECK(t_value(fam(2, {{}, {1}, {1, 2}})) == 1);
    CHECK(!t_value(fam(2, {{}})).has_value());
}

TEST_CASE("frequency_profile: examples, ties, recount oracle") {
    const FrequencyProfile p = frequency_profile(fam(2, {{1}, {1, 2}}));
    CHECK(p.total == 2);
    CHECK(p.count_of(1) == 2);
    CHECK(p.count_of(2) == 1);
    CHECK(p.order == std::vector<int>{1, 2});
    CHECK(p.ratio_of(1) == Ratio{1, 1});

    const FrequencyProfile q = frequency_profile(power_set_family(2));
    CHECK(q.total == 4);
    CHECK(q.count_of(1) == 2);
    CHECK(q.count_of(2) == 2);
    CHECK(q.order == std::vector<int>{1, 2});  // tie broken by smaller element

    // Tie-break with reversed counts.
    const FrequencyProfile r = frequency_profile(fam(3, {{3}, {2, 3}, {1, 2, 3}}));
    CHECK(r.order == std::vector<int>{3, 2, 1});

    // Recount oracle on random closed families at n = 10.
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const SetFamily f = random_closed_family({.n = 10, .generator_count = 6, .seed = seed});
        const FrequencyProfile prof = frequency_profile(f);
        CHECK(prof.counts == oracle::recount_frequencies(f));
        std::int64_t total_memberships = 0;
        for (const ElementSet s : f.sets()) total_memberships += s.cardinality();
        std::int64_t sum = 0;
        for (const std::int64_t c : prof.counts) sum += c;
        CHECK(sum == total_memberships);
        for (std::size_t k = 1; k < prof.order.size(); ++k) {
            CHECK(prof.count_of(prof.order[k - 1]) >= prof.count_of(prof.order[k]));
        }
    }
}

TEST_CASE("delete_element: examples and oracle") {
    CHECK(delete_element(fam(2, {{1}, {1, 2}}), 1) == fam(2, {{}, {2}}));

    const SetFamily untouched = fam(3, {{1}, {1, 2}});
    CHECK(delete_element(untouched, 3) == untouched);

    CHECK(delete_element(fam(3, {{1, 2}, {2}, {1, 2, 3}}), 2) == fam(3, {{1}, {}, {1, 3}}));

    CHECK_THROWS_AS(delete_element(fam(2, {{1}}), 3), std::out_of_range);
    CHECK_THROWS_AS(delete_element(fam(2, {{1}}), 0), std::out_of_range);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SetFamily f = random_closed_family({.n = 8, .generator_count = 5, .seed = seed});
        for (int e = 1; e <= 8; ++e) {
            CHECK(oracle::masks_of(delete_element(f, e)) == oracle::delete_element_by_set(f, e));
        }
    }
}

TEST_CASE("closure preserved under deletion (exhaustive n <= 3 + random n <= 12)") {
    EnumConfig cfg;
    for (int n = 1; n <= 3; ++n) {
        cfg.n = n;
        enumerate_dense(cfg, [&](const SetFamily& f) {
            for (int e = 1; e <= n; ++e) {
                CHECK(is_union_closed(delete_element(f, e)));
            }
            return true;
        });
    }
    int random_checked = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);  // n in 4..12
        const SetFamily f = random_closed_family({.n = n, .generator_count = 6, .seed = seed});
        const int e = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
        CHECK(is_union_closed(delete_element(f, e)));
        ++random_checked;
    }
    CHECK(random_checked == 1000);
}

TEST_CASE("filters partition the family") {
    const SetFamily f = fam(2, {{1}, {2}, {1, 2}});
    const auto with_1 = filter_containing(f, 1);
    const auto without_1 = filter_not_containing(f, 1);
    REQUIRE(with_1.has_value());
    REQUIRE(without_1.has_value());
    CHECK(*with_1 == fam(2, {{1}, {1, 2}}));
    CHECK(*without_1 == fam(2, {{2}}));

    // Element absent from the union: containing side is the empty signal.
    const SetFamily g = fam(3, {{1}, {1, 2}});
    CHECK(!filter_containing(g, 3).has_value());
    CHECK(filter_not_containing(g, 3).has_value());
    // Element in every member: the other side signals instead.
    CHECK(!filter_not_containing(fam(2, {{1}, {1, 2}}), 1).has_value());

    // Sizes always sum to |F|.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SetFamily h = random_closed_family({.n = 9, .generator_count = 5, .seed = seed});
        for (int e = 1; e <= 9; ++e) {
            const auto yes = filter_containing(h, e);
            const auto no = filter_not_containing(h, e);
            const std::int64_t total =
                (yes ? yes->size() : 0) + (no ? no->size() : 0);
            CHECK(total == h.size());
        }
    }
}

TEST_CASE("canonical_form: relabeling, idempotence, invariance") {
    CHECK(canonical_form(fam(3, {{2}, {2, 3}})) == canonical_form(fam(3, {{1}, {1, 2}})));

    const SetFamily c = canonical_form(fam(3, {{1, 3}, {2}}));
    CHECK(canonical_form(c) == c);

    // All 6 relabelings of one n = 3 family agree.
    const SetFamily base = fam(3, {{1}, {1, 2}, {1, 2, 3}});
    const SetFamily expect = canonical_form(base);
    std::vector<int> sigma{1, 2, 3};
    do {
        CHECK(canonical_form(oracle::relabel(base, sigma)) == expect);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    // Random families, random permutations.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
        const GroundSet ground{n};
        std::vector<ElementSet> sets;
        const int count = 1 + static_cast<int>(rng() % 6);
        for (int s = 0; s < count; ++s) {
            sets.emplace_back(static_cast<SetMask>(rng()) & ground.full_mask());
        }
        const SetFamily f{ground, sets};
        std::vector<int> tau(static_cast<std::size_t>(n));
        for (int e = 1; e <= n; ++e) tau[static_cast<std::size_t>(e - 1)] = e;
        std::shuffle(tau.begin(), tau.end(), rng);
        CHECK(canonical_form(oracle::relabel(f, tau)) == canonical_form(f));
        CHECK(canonical_form(canonical_form(f)) == canonical_form(f));
    }

    CHECK_THROWS_AS(canonical_form(SetFamily{GroundSet{9}, {ElementSet::of({1})}}),
                    std::invalid_argument);
}

TEST_CASE("t_value under deletion") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SetFamily f = random_closed_family({.n = 7, .generator_count = 4, .seed = seed});
        const auto t = t_value(f);
        REQUIRE(t.has_value());  // generators are nonempty
        CHECK(*t >= 1);
        for (int e = 1; e <= 7; ++e) {
            const auto t_after = t_value(delete_element(f, e));
            if (t_after) CHECK(*t_after >= *t - 1);
        }
    }
}

TEST_CASE("family text: parsing") {
    const SetFamily f = parse_family("# comment\nn=3\n1\n1, 2\n-\n");
    CHECK(f == fam(3, {{1}, {1, 2}, {}}));

    // Without a header, n is the largest element seen.
    CHECK(parse_family("2 4\n1\n").n() == 4);

    // Mixed separators.
    CHECK(parse_family("1,2 3\n") == fam(3, {{1, 2, 3}}));

    CHECK_THROWS_AS(parse_family(""), ParseError);
    CHECK_THROWS_AS(parse_family("n=2\n1\n1\n"), ParseError);       // duplicate set
    CHECK_THROWS_AS(parse_family("n=2\n3\n"), ParseError);          // out of ground
    CHECK_THROWS_AS(parse_family("n=2\nn=3\n1\n"), ParseError);     // duplicate header
    CHECK_THROWS_AS(parse_family("1\nn=2\n"), ParseError);          // header after sets
    CHECK_THROWS_AS(parse_family("n=25\n1\n"), ParseError);         // cap
    CHECK_THROWS_AS(parse_family("0\n"), ParseError);               // not positive
    CHECK_THROWS_AS(parse_family("a b\n"), ParseError);
    CHECK_THROWS_AS(parse_family("-\n"), ParseError);               // unknown ground size

    try {
        parse_family("n=2\n1\n2\n1\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("family text: round trip") {
    const std::vector<SetFamily> cases = {
        fam(3, {{1}, {1, 2}, {}}),
        fam(1, {{}}),
        power_set_family(3),
        random_closed_family({.n = 12, .generator_count = 6, .seed = 11}),
    };
    for (const SetFamily& f : cases) {
        CHECK(parse_family(to_text(f)) == f);
    }
}
