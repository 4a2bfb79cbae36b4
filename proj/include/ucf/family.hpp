#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucf/ratio.hpp"

namespace ucf {

/// A member set is a bitmask over the ground set: element e (1-based) is
/// present iff bit e-1 is set. Ground sets are capped at 24 elements, so a
/// mask always fits a 32-bit word.
using SetMask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

/// The ground set {1, ..., n}.
struct GroundSet {
    int n;

    explicit GroundSet(int size) : n(size) {
        if (n < 1 || n > kMaxGroundSize) {
            throw std::invalid_argument("GroundSet: n must be in [1, " +
                                        std::to_string(kMaxGroundSize) + "]");
        }
    }

    [[nodiscard]] SetMask full_mask() const noexcept { return (SetMask{1} << n) - 1; }
    [[nodiscard]] bool operator==(const GroundSet&) const noexcept = default;
};

/// One member set, as a bitmask.
struct ElementSet {
    SetMask bits = 0;

    constexpr ElementSet() noexcept = default;
    constexpr explicit ElementSet(SetMask mask) noexcept : bits(mask) {}

    /// Builds a set from 1-based element values, e.g. ElementSet::of({1, 3}).
    static ElementSet of(std::initializer_list<int> elements) {
        ElementSet s;
        for (int e : elements) s = s.with(e);
        return s;
    }

    [[nodiscard]] int cardinality() const noexcept { return std::popcount(bits); }
    [[nodiscard]] bool empty() const noexcept { return bits == 0; }
    [[nodiscard]] bool contains(int element) const noexcept {
        return (bits >> (element - 1)) & 1U;
    }
    [[nodiscard]] ElementSet with(int element) const {
        if (element < 1 || element > kMaxGroundSize) {
            throw std::out_of_range("ElementSet: element out of range");
        }
        return ElementSet{bits | (SetMask{1} << (element - 1))};
    }
    [[nodiscard]] ElementSet without(int element) const noexcept {
        return ElementSet{bits & ~(SetMask{1} << (element - 1))};
    }
    [[nodiscard]] bool subset_of(ElementSet other) const noexcept {
        return (bits & ~other.bits) == 0;
    }
    [[nodiscard]] ElementSet operator|(ElementSet other) const noexcept {
        return ElementSet{bits | other.bits};
    }

    [[nodiscard]] auto operator<=>(const ElementSet&) const noexcept = default;

    /// "{1,3}" or "{}", for messages and report details.
    [[nodiscard]] std::string str() const;
};

enum class Closure : std::int8_t { unknown = -1, no = 0, yes = 1 };

/// A nonempty, deduplicated family of subsets of the ground set, kept sorted
/// ascending by mask value. Immutable after construction; the union-closure
/// status is cached lazily by is_union_closed().
class SetFamily {
  public:
    /// Sorts and deduplicates. Throws if the list is empty or any member
    /// falls outside the ground set.
    SetFamily(GroundSet ground, std::vector<ElementSet> sets);

    SetFamily(const SetFamily& other)
        : ground_(other.ground_), sets_(other.sets_), closed_(other.closed_.load()) {}
    SetFamily(SetFamily&& other) noexcept
        : ground_(other.ground_), sets_(std::move(other.sets_)), closed_(other.closed_.load()) {}
    SetFamily& operator=(const SetFamily& other) {
        ground_ = other.ground_;
        sets_ = other.sets_;
        closed_.store(other.closed_.load());
        return *this;
    }
    SetFamily& operator=(SetFamily&& other) noexcept {
        ground_ = other.ground_;
        sets_ = std::move(other.sets_);
        closed_.store(other.closed_.load());
        return *this;
    }

    [[nodiscard]] const GroundSet& ground() const noexcept { return ground_; }
    [[nodiscard]] int n() const noexcept { return ground_.n; }
    [[nodiscard]] const std::vector<ElementSet>& sets() const noexcept { return sets_; }
    [[nodiscard]] std::int64_t size() const noexcept {
        return static_cast<std::int64_t>(sets_.size());
    }
    [[nodiscard]] bool contains(ElementSet s) const noexcept;
    [[nodiscard]] Closure cached_closure() const noexcept { return closed_.load(); }

    [[nodiscard]] bool operator==(const SetFamily& other) const noexcept {
        return ground_ == other.ground_ && sets_ == other.sets_;
    }

  private:
    friend bool is_union_closed(const SetFamily&);
    friend SetFamily union_closure(const SetFamily&);
    friend SetFamily canonical_form(const SetFamily&);
    friend SetFamily delete_element(const SetFamily&, int);

    struct VerifiedClosedTag {};
    SetFamily(GroundSet ground, std::vector<ElementSet> sets, VerifiedClosedTag);

    GroundSet ground_;
    std::vector<ElementSet> sets_;
    // Lazily filled cache; every writer stores the same value for a given
    // family, so relaxed atomics keep concurrent readers well-defined.
    mutable std::atomic<Closure> closed_{Closure::unknown};
};

/// Per-element membership counts, plus the element order sorted by count
/// non-increasing (ties broken by the smaller element).
struct FrequencyProfile {
    std::int64_t total = 0;           ///< |F|
    std::vector<std::int64_t> counts; ///< counts[e-1] = |{A in F : e in A}|
    std::vector<int> order;           ///< elements 1..n, most frequent first

    [[nodiscard]] std::int64_t count_of(int element) const {
        return counts.at(static_cast<std::size_t>(element - 1));
    }
    [[nodiscard]] Ratio ratio_of(int element) const { return {count_of(element), total}; }
};

/// True iff every pairwise union of members is itself a member.
/// Membership lookups binary-search the sorted member list; the verdict is
/// cached on the family.
bool is_union_closed(const SetFamily& f);

/// The first offending pair (A, B) with A ∪ B missing, if any.
std::optional<std::pair<ElementSet, ElementSet>> find_closure_violation(const SetFamily& f);

/// Smallest union-closed family containing every member of `gens`.
/// The result has its closure flag set; the operation is idempotent and the
/// result always contains the input.
SetFamily union_closure(const SetFamily& gens);

/// Bitwise OR of all members.
ElementSet ground_union(const SetFamily& f);

/// Minimum cardinality over nonempty members; nullopt for the family {∅}.
std::optional<int> t_value(const SetFamily& f);

FrequencyProfile frequency_profile(const SetFamily& f);

/// The quotient {A \ {i} : A in F}, duplicates merged.
SetFamily delete_element(const SetFamily& f, int i);

/// Members containing j. Nullopt when no member contains j (a SetFamily must
/// be nonempty, so emptiness is signalled instead of constructed).
std::optional<SetFamily> filter_containing(const SetFamily& f, int j);

/// Members not containing j; nullopt when every member contains j.
std::optional<SetFamily> filter_not_containing(const SetFamily& f, int j);

/// Canonical representative of the family's class under relabelings of the
/// ground set: the lexicographically smallest sorted mask list over all n!
/// permutations. Brute force, so restricted to n <= 8.
SetFamily canonical_form(const SetFamily& f);

inline constexpr int kMaxCanonicalGroundSize = 8;

}  // namespace ucf
