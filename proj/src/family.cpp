#include "ucf/family.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace ucf {

std::string ElementSet::str() const {
    std::string out = "{";
    bool first = true;
    for (int e = 1; e <= kMaxGroundSize; ++e) {
        if (!contains(e)) continue;
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

SetFamily::SetFamily(GroundSet ground, std::vector<ElementSet> sets)
    : ground_(ground), sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    if (sets_.empty()) {
        throw std::invalid_argument("SetFamily: a family must have at least one member");
    }
    const SetMask full = ground_.full_mask();
    if ((sets_.back().bits & ~full) != 0) {
        throw std::invalid_argument("SetFamily: member outside the ground set");
    }
}

SetFamily::SetFamily(GroundSet ground, std::vector<ElementSet> sets, VerifiedClosedTag)
    : ground_(ground), sets_(std::move(sets)), closed_(Closure::yes) {}

bool SetFamily::contains(ElementSet s) const noexcept {
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool is_union_closed(const SetFamily& f) {
    const Closure cached = f.closed_.load();
    if (cached != Closure::unknown) return cached == Closure::yes;
    const bool closed = !find_closure_violation(f).has_value();
    f.closed_.store(closed ? Closure::yes : Closure::no);
    return closed;
}

std::optional<std::pair<ElementSet, ElementSet>> find_closure_violation(const SetFamily& f) {
    const auto& sets = f.sets();
    for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            const ElementSet u = sets[a] | sets[b];
            if (u == sets[b]) continue;  // a ⊆ b, union already present
            if (!f.contains(u)) return std::make_pair(sets[a], sets[b]);
        }
    }
    return std::nullopt;
}

SetFamily union_closure(const SetFamily& gens) {
    std::unordered_set<SetMask> seen;
    std::deque<SetMask> work;
    std::vector<SetMask> members;
    for (const ElementSet s : gens.sets()) {
        if (seen.insert(s.bits).second) {
            work.push_back(s.bits);
            members.push_back(s.bits);
        }
    }
    while (!work.empty()) {
        const SetMask a = work.front();
        work.pop_front();
        // `members` grows while we iterate; unions with sets appended later
        // are produced when those sets reach the front themselves.
        const std::size_t snapshot = members.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            const SetMask u = a | members[i];
            if (seen.insert(u).second) {
                work.push_back(u);
                members.push_back(u);
            }
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<ElementSet> out;
    out.reserve(members.size());
    for (const SetMask m : members) out.emplace_back(m);
    return {gens.ground(), std::move(out), SetFamily::VerifiedClosedTag{}};
}

ElementSet ground_union(const SetFamily& f) {
    SetMask acc = 0;
    for (const ElementSet s : f.sets()) acc |= s.bits;
    return ElementSet{acc};
}

std::optional<int> t_value(const SetFamily& f) {
    std::optional<int> best;
    for (const ElementSet s : f.sets()) {
        if (s.empty()) continue;
        const int c = s.cardinality();
        if (!best || c < *best) best = c;
    }
    return best;
}

FrequencyProfile frequency_profile(const SetFamily& f) {
    const int n = f.n();
    FrequencyProfile p;
    p.total = f.size();
    p.counts.assign(static_cast<std::size_t>(n), 0);
    for (const ElementSet s : f.sets()) {
        SetMask m = s.bits;
        while (m != 0) {
            p.counts[static_cast<std::size_t>(std::countr_zero(m))]++;
            m &= m - 1;
        }
    }
    p.order.resize(static_cast<std::size_t>(n));
    for (int e = 1; e <= n; ++e) p.order[static_cast<std::size_t>(e - 1)] = e;
    std::sort(p.order.begin(), p.order.end(), [&](int a, int b) {
        const auto ca = p.counts[static_cast<std::size_t>(a - 1)];
        const auto cb = p.counts[static_cast<std::size_t>(b - 1)];
        if (ca != cb) return ca > cb;
        return a < b;
    });
    return p;
}

SetFamily delete_element(const SetFamily& f, int i) {
    if (i < 1 || i > f.n()) {
        throw std::out_of_range("delete_element: element outside the ground set");
    }
    const SetMask drop = ~(SetMask{1} << (i - 1));
    std::vector<ElementSet> out;
    out.reserve(f.sets().size());
    for (const ElementSet s : f.sets()) out.emplace_back(s.bits & drop);
    return {f.ground(), std::move(out)};
}

namespace {

std::optional<SetFamily> filter_by(const SetFamily& f, int j, bool want) {
    if (j < 1 || j > f.n()) {
        throw std::out_of_range("filter: element outside the ground set");
    }
    std::vector<ElementSet> out;
    for (const ElementSet s : f.sets()) {
        if (s.contains(j) == want) out.push_back(s);
    }
    if (out.empty()) return std::nullopt;
    return SetFamily{f.ground(), std::move(out)};
}

}  // namespace

std::optional<SetFamily> filter_containing(const SetFamily& f, int j) {
    return filter_by(f, j, true);
}

std::optional<SetFamily> filter_not_containing(const SetFamily& f, int j) {
    return filter_by(f, j, false);
}

SetFamily canonical_form(const SetFamily& f) {
    const int n = f.n();
    if (n > kMaxCanonicalGroundSize) {
        throw std::invalid_argument("canonical_form: brute-force relabeling requires n <= 8");
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) perm[static_cast<std::size_t>(b)] = b;

    const auto& sets = f.sets();
    std::vector<SetMask> best;
    std::vector<SetMask> cur(sets.size());
    do {
        for (std::size_t k = 0; k < sets.size(); ++k) {
            SetMask m = sets[k].bits;
            SetMask out = 0;
            while (m != 0) {
                const int bit = std::countr_zero(m);
                out |= SetMask{1} << perm[static_cast<std::size_t>(bit)];
                m &= m - 1;
            }
            cur[k] = out;
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<ElementSet> out;
    out.reserve(best.size());
    for (const SetMask m : best) out.emplace_back(m);
    SetFamily result{f.ground(), std::move(out)};
    // Relabeling preserves closure status exactly, so the cache carries over.
    result.closed_.store(f.closed_.load());
    return result;
}

}  // namespace ucf
