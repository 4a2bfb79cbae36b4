#include "ucf/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucf {

namespace {

using Wide = __int128;

void require_closed(const SetFamily& f, const char* op) {
    if (!is_union_closed(f)) {
        throw std::invalid_argument(std::string(op) + ": family is not union-closed");
    }
}

void require_element(const SetFamily& f, int e, const char* op) {
    if (e < 1 || e > f.n()) {
        throw std::out_of_range(std::string(op) + ": element outside the ground set");
    }
}

/// 2^(k-1) + 1 as an int64; k <= 25 here, so no overflow.
std::int64_t pow2_plus_one(int k_minus_one) {
    return (std::int64_t{1} << k_minus_one) + 1;
}

bool is_trivial_empty_family(const SetFamily& f) {
    return f.size() == 1 && f.sets().front().empty();
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

bool mediant_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                   const Ratio& k) {
    if (a <= 0 || c <= 0) {
        throw std::invalid_argument("mediant_check: denominators must be positive");
    }
    if (b < 0 || d < 0) {
        throw std::invalid_argument("mediant_check: numerators must be non-negative");
    }
    const auto at_least_k = [&](std::int64_t num, std::int64_t den) {
        return Wide(num) * k.den() >= Wide(k.num()) * den;
    };
    const bool premise = at_least_k(b, a) && at_least_k(d, c);
    const bool conclusion = at_least_k(b + d, a + c);
    return !premise || conclusion;
}

Ratio lemma1_bound(const Ratio& c) {
    if (c.is_zero() || c > Ratio{1, 1}) {
        throw std::invalid_argument("lemma1_bound: c must lie in (0, 1]");
    }
    // 1/(1 + 2(1-c)/c) = c/(2-c); with c = p/q that is p/(2q - p).
    const Wide p = c.num();
    const Wide q = c.den();
    const Wide den = 2 * q - p;
    if (den > INT64_MAX) {
        throw std::overflow_error("lemma1_bound: denominator does not fit in 64 bits");
    }
    return {c.num(), static_cast<std::int64_t>(den)};
}

ProofQuantities proof_quantities(const SetFamily& f, int i, int j) {
    require_element(f, i, "proof_quantities");
    require_element(f, j, "proof_quantities");
    if (i == j) throw std::invalid_argument("proof_quantities: i and j must differ");
    require_closed(f, "proof_quantities");

    const SetMask bit_i = SetMask{1} << (i - 1);
    const SetMask bit_j = SetMask{1} << (j - 1);

    // The quotient G and its split by membership of j.
    std::vector<SetMask> g;
    g.reserve(f.sets().size());
    for (const ElementSet s : f.sets()) g.push_back(s.bits & ~bit_i);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());

    ProofQuantities q;
    q.f_total = f.size();
    for (const SetMask m : g) {
        if (m & bit_j) ++q.g_j; else ++q.g_not_j;
    }
    for (const ElementSet s : f.sets()) {
        if (s.bits & bit_j) ++q.f_j;
    }

    // x and y from the literal definitions: intersect the collection of
    // members avoiding i with the i-stripped images of members containing i,
    // split by membership of j.
    std::vector<SetMask> no_i_with_j, no_i_no_j, stripped_with_j, stripped_no_j;
    for (const ElementSet s : f.sets()) {
        if ((s.bits & bit_i) == 0) {
            if (s.bits & bit_j) no_i_with_j.push_back(s.bits);
            else no_i_no_j.push_back(s.bits);
        } else {
            const SetMask stripped = s.bits & ~bit_i;
            if (s.bits & bit_j) stripped_with_j.push_back(stripped);
            else stripped_no_j.push_back(stripped);
        }
    }
    const auto intersection_size = [](std::vector<SetMask>& lhs, std::vector<SetMask>& rhs) {
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        std::vector<SetMask> common;
        std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                              std::back_inserter(common));
        return static_cast<std::int64_t>(common.size());
    };
    q.x = intersection_size(no_i_with_j, stripped_with_j);
    q.y = intersection_size(no_i_no_j, stripped_no_j);
    return q;
}

BoundReport lemma1_verify(const SetFamily& f, int i, int j) {
    const ProofQuantities q = proof_quantities(f, i, j);
    const std::int64_t g_total = q.g_j + q.g_not_j;

    BoundReport report;
    report.context = "lemma1";
    if (q.g_j == 0) {
        report.verdict = Verdict::not_applicable;
        report.detail = "no quotient member contains j (c* = 0)";
        return report;
    }
    // bound = c*/(2 - c*) with c* = |G_j|/|G|, i.e. |G_j|/(2|G| - |G_j|).
    report.bound = Ratio{q.g_j, 2 * g_total - q.g_j};
    report.witnesses.push_back({j, Ratio{q.f_j, q.f_total}});
    const bool ok = Wide(q.f_j) * (2 * g_total - q.g_j) >= Wide(q.g_j) * q.f_total;
    report.verdict = ok ? Verdict::holds : Verdict::fails;
    report.detail = "c* = " + Ratio{q.g_j, g_total}.str() + ", |F_j|/|F| = " +
                    Ratio{q.f_j, q.f_total}.str();
    return report;
}

BoundReport frankl_check(const SetFamily& f) {
    require_closed(f, "frankl_check");
    BoundReport report;
    report.context = "frankl";
    report.bound = Ratio{1, 2};
    if (is_trivial_empty_family(f)) {
        report.verdict = Verdict::not_applicable;
        report.detail = "the family {∅} is excluded";
        return report;
    }
    const FrequencyProfile p = frequency_profile(f);
    for (int e = 1; e <= f.n(); ++e) {
        if (2 * p.count_of(e) >= p.total) {
            report.witnesses.push_back({e, p.ratio_of(e)});
        }
    }
    report.verdict = report.witnesses.empty() ? Verdict::fails : Verdict::holds;
    report.detail = std::to_string(report.witnesses.size()) + " abundant element(s) among " +
                    std::to_string(f.n());
    return report;
}

BoundReport nagel_check(const SetFamily& f) {
    require_closed(f, "nagel_check");
    BoundReport report;
    report.context = "nagel";
    if (is_trivial_empty_family(f)) {
        report.verdict = Verdict::not_applicable;
        report.detail = "the family {∅} is excluded";
        return report;
    }
    const FrequencyProfile p = frequency_profile(f);
    const int span = ground_union(f).cardinality();
    report.bound = Ratio{1, pow2_plus_one(span - 1)};
    report.verdict = Verdict::holds;
    for (int k = 1; k <= span; ++k) {
        const int e = p.order[static_cast<std::size_t>(k - 1)];
        report.witnesses.push_back({e, p.ratio_of(e)});
        if (p.count_of(e) * pow2_plus_one(k - 1) < p.total) {
            report.verdict = Verdict::fails;
            report.detail = "first failing k = " + std::to_string(k) + " (element " +
                            std::to_string(e) + ", frequency " + p.ratio_of(e).str() +
                            " < " + Ratio{1, pow2_plus_one(k - 1)}.str() + ")";
            return report;
        }
    }
    report.detail = "all k in 1.." + std::to_string(span) + " satisfied";
    return report;
}

std::vector<ChainStep> nagel_chain(const SetFamily& f) {
    require_closed(f, "nagel_chain");
    if (is_trivial_empty_family(f)) {
        throw std::invalid_argument("nagel_chain: the family {∅} is excluded");
    }
    const FrequencyProfile original = frequency_profile(f);

    std::vector<ChainStep> chain;
    SetFamily current = f;
    Ratio bound{1, 2};
    int k = 1;
    while (!ground_union(current).empty()) {
        const FrequencyProfile p = frequency_profile(current);
        // Most frequent element still present, ties to the smaller index.
        int pick = 0;
        for (const int e : p.order) {
            if (p.count_of(e) > 0) { pick = e; break; }
        }
        const Ratio expected{1, pow2_plus_one(k - 1)};
        if (bound != expected) {
            throw std::logic_error("nagel_chain: bound recurrence broken at step " +
                                   std::to_string(k));
        }
        chain.push_back({pick, bound, original.ratio_of(pick)});
        current = delete_element(current, pick);
        bound = lemma1_bound(bound);
        ++k;
    }
    return chain;
}

BoundReport nagel_lemma_check(const SetFamily& f, ElementSet a) {
    require_closed(f, "nagel_lemma_check");
    if (!f.contains(a)) {
        throw std::invalid_argument("nagel_lemma_check: the set is not a member of the family");
    }
    const int card = a.cardinality();
    if (card < 1) {
        throw std::invalid_argument("nagel_lemma_check: the member must be nonempty");
    }
    const FrequencyProfile p = frequency_profile(f);
    const std::int64_t scale = pow2_plus_one(card - 1);

    BoundReport report;
    report.context = "lemma33";
    report.bound = Ratio{1, scale};
    report.verdict = Verdict::holds;
    for (int e = 1; e <= f.n(); ++e) {
        if (!a.contains(e)) continue;
        report.witnesses.push_back({e, p.ratio_of(e)});
        if (p.count_of(e) * scale < p.total) {
            report.verdict = Verdict::fails;
            report.detail = "element " + std::to_string(e) + " of A = " + a.str() +
                            " has frequency " + p.ratio_of(e).str() + " < " +
                            report.bound.str();
        }
    }
    if (report.verdict == Verdict::holds) {
        report.detail = "every element of A = " + a.str() + " meets " + report.bound.str();
    }
    return report;
}

std::optional<Prop34Witness> prop34_witness(const SetFamily& f, ElementSet a) {
    require_closed(f, "prop34_witness");
    if (!f.contains(a)) {
        throw std::invalid_argument("prop34_witness: the set is not a member of the family");
    }
    const int card = a.cardinality();
    if (card < 2) {
        throw std::invalid_argument("prop34_witness: the member must have at least 2 elements");
    }
    const FrequencyProfile p = frequency_profile(f);
    const std::int64_t scale = pow2_plus_one(card - 2);
    for (int e = 1; e <= f.n(); ++e) {
        if (!a.contains(e)) continue;
        if (p.count_of(e) * scale >= p.total) {
            return Prop34Witness{e, p.ratio_of(e)};
        }
    }
    return std::nullopt;
}

std::optional<int> two_set_majority(const SetFamily& f, ElementSet a) {
    require_closed(f, "two_set_majority");
    if (a.cardinality() != 2) {
        throw std::invalid_argument("two_set_majority: the member must have exactly 2 elements");
    }
    if (!f.contains(a)) {
        throw std::invalid_argument("two_set_majority: the set is not a member of the family");
    }
    const FrequencyProfile p = frequency_profile(f);
    std::optional<int> best;
    for (int e = 1; e <= f.n(); ++e) {
        if (!a.contains(e)) continue;
        if (2 * p.count_of(e) < p.total) continue;
        if (!best || p.count_of(e) > p.count_of(*best)) best = e;
    }
    return best;
}

BoundReport s_frankl_check(const SetFamily& f) {
    require_closed(f, "s_frankl_check");
    BoundReport report;
    report.context = "s_frankl";
    report.bound = Ratio{1, 2};
    const std::optional<int> t = t_value(f);
    if (!t) {
        report.verdict = Verdict::not_applicable;
        report.detail = "the family {∅} is excluded";
        return report;
    }
    if (ground_union(f).cardinality() < 2) {
        report.verdict = Verdict::not_applicable;
        report.detail = "union of members has fewer than 2 elements";
        return report;
    }
    if (*t < 2) {
        report.verdict = Verdict::not_applicable;
        report.detail = "T(F) = 1 < 2";
        return report;
    }
    const FrequencyProfile p = frequency_profile(f);
    for (int e = 1; e <= f.n(); ++e) {
        if (2 * p.count_of(e) >= p.total) {
            report.witnesses.push_back({e, p.ratio_of(e)});
        }
    }
    report.verdict = report.witnesses.size() >= 2 ? Verdict::holds : Verdict::fails;
    report.detail = std::to_string(report.witnesses.size()) +
                    " abundant element(s); 2 required (open statement, survey only)";
    return report;
}

std::pair<Ratio, Ratio> question1_profile(const SetFamily& f) {
    require_closed(f, "question1_profile");
    if (ground_union(f).cardinality() < 2) {
        throw std::invalid_argument("question1_profile: needs at least 2 elements in the union");
    }
    const FrequencyProfile p = frequency_profile(f);
    const int first = p.order[0];
    const int second = p.order[1];
    return {p.ratio_of(first), p.ratio_of(second)};
}

namespace status {

bool frankl_proven_for(const SetFamily& f) {
    return ground_union(f).cardinality() <= kFranklProvenGroundMax ||
           f.size() <= kFranklProvenSizeMax;
}

bool nagel_failure_is_defect(const SetFamily& f, int k) {
    return k >= kNagelProvenKMin || frankl_proven_for(f);
}

}  // namespace status

}  // namespace ucf
