#pragma once

// Independent reference implementations the tests check the library against.
// Everything here recomputes results from first principles along a different
// code path than the implementation under test.

#include <algorithm>
#include <set>
#include <vector>

#include "ucf/family.hpp"

namespace oracle {

/// Closure by exhaustive subset unions: the closure of a generator list is
/// exactly { union of T : nonempty T subseteq generators }. Exponential in
/// the generator count, fine for small inputs.
inline std::vector<ucf::SetMask> closure_by_subset_unions(
    const std::vector<ucf::ElementSet>& gens) {
    std::set<ucf::SetMask> out;
    const std::size_t g = gens.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << g); ++pick) {
        ucf::SetMask u = 0;
        for (std::size_t t = 0; t < g; ++t) {
            if (pick >> t & 1U) u |= gens[t].bits;
        }
        out.insert(u);
    }
    return {out.begin(), out.end()};
}

/// Closure check with no membership index at all: linear scan per pair.
inline bool union_closed_by_scan(const std::vector<ucf::ElementSet>& sets) {
    for (const ucf::ElementSet a : sets) {
        for (const ucf::ElementSet b : sets) {
            const ucf::SetMask u = a.bits | b.bits;
            bool found = false;
            for (const ucf::ElementSet c : sets) {
                if (c.bits == u) { found = true; break; }
            }
            if (!found) return false;
        }
    }
    return true;
}

/// Frequency recount via per-element membership tests (column sums of the
/// incidence matrix), instead of iterating set bits.
inline std::vector<std::int64_t> recount_frequencies(const ucf::SetFamily& f) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(f.n()), 0);
    for (int e = 1; e <= f.n(); ++e) {
        for (const ucf::ElementSet s : f.sets()) {
            if (s.contains(e)) ++counts[static_cast<std::size_t>(e - 1)];
        }
    }
    return counts;
}

/// Element deletion set-by-set with std::set deduplication.
inline std::vector<ucf::SetMask> delete_element_by_set(const ucf::SetFamily& f, int i) {
    std::set<ucf::SetMask> out;
    for (const ucf::ElementSet s : f.sets()) out.insert(s.without(i).bits);
    return {out.begin(), out.end()};
}

/// Relabels a family under an explicit permutation sigma (sigma[e-1] is the
/// image of element e).
inline ucf::SetFamily relabel(const ucf::SetFamily& f, const std::vector<int>& sigma) {
    std::vector<ucf::ElementSet> out;
    for (const ucf::ElementSet s : f.sets()) {
        ucf::ElementSet image;
        for (int e = 1; e <= f.n(); ++e) {
            if (s.contains(e)) image = image.with(sigma[static_cast<std::size_t>(e - 1)]);
        }
        out.push_back(image);
    }
    return {f.ground(), std::move(out)};
}

inline std::vector<ucf::SetMask> masks_of(const ucf::SetFamily& f) {
    std::vector<ucf::SetMask> out;
    for (const ucf::ElementSet s : f.sets()) out.push_back(s.bits);
    return out;
}

}  // namespace oracle
