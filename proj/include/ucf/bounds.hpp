#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucf/family.hpp"
#include "ucf/ratio.hpp"

namespace ucf {

// ---------------------------------------------------------------------------
// Report types
// ---------------------------------------------------------------------------

enum class Verdict : std::int8_t { holds, fails, not_applicable };

[[nodiscard]] const char* verdict_name(Verdict v) noexcept;

struct BoundWitness {
    int element = 0;
    Ratio ratio;  ///< normalized frequency of the element, exact
};

/// Outcome of one inequality check. When verdict is `holds`, every listed
/// witness satisfies witness.ratio >= bound exactly.
struct BoundReport {
    std::string context;  ///< which check produced this ("frankl", "nagel", ...)
    Verdict verdict = Verdict::not_applicable;
    Ratio bound;
    std::vector<BoundWitness> witnesses;
    std::string detail;
};

/// Counts entering the two quotient identities for a fixed ordered pair
/// (i, j). With G = {A \ {i} : A in F}:
///
///   x = |{A in F : i ∉ A, j ∈ A} ∩ {B \ {i} : B in F, i ∈ B, j ∈ B}|
///   y = |{A in F : i ∉ A, j ∉ A} ∩ {B \ {i} : B in F, i ∈ B, j ∉ B}|
///
/// and the identities |F_j| = |G_j| + x and |F| = |G_j| + |G_/j| + x + y
/// must hold for every union-closed family.
struct ProofQuantities {
    std::int64_t g_j = 0;      ///< |G_j|, quotient members containing j
    std::int64_t g_not_j = 0;  ///< |G_/j|
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t f_j = 0;      ///< |F_j|, members of F containing j
    std::int64_t f_total = 0;  ///< |F|

    [[nodiscard]] bool identities_hold() const noexcept {
        return f_j == g_j + x && f_total == g_j + g_not_j + x + y;
    }
};

struct ChainStep {
    int element = 0;
    Ratio bound;     ///< 1/(2^(k-1)+1) at step k
    Ratio achieved;  ///< frequency of the element, measured in the original family
};

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// Exact evaluation of the mediant implication:
/// (b/a >= k and d/c >= k)  implies  (b+d)/(a+c) >= k.
/// Returns the truth value of the implication; a sound implementation never
/// returns false. Requires a, c > 0.
bool mediant_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                   const Ratio& k);

/// The one-element quotient lift: if an element has normalized frequency at
/// least c in the quotient G = {A \ {i} : A in F}, it has normalized
/// frequency at least 1/(1 + 2(1-c)/c) = c/(2-c) in F itself.
/// Returns that bound in lowest terms. Requires 0 < c <= 1; the map is
/// strictly increasing with its only fixed point at c = 1.
Ratio lemma1_bound(const Ratio& c);

/// Computes x, y, |G_j|, |G_/j| literally from their set-intersection
/// definitions. Requires f union-closed and i != j, both in range.
ProofQuantities proof_quantities(const SetFamily& f, int i, int j);

/// Instantiates the quotient lift on (f, i, j): with c* = |G_j|/|G|, checks
/// the integer inequality |F_j| * (2|G| - |G_j|) >= |G_j| * |F|, which is
/// |F_j|/|F| >= c*/(2 - c*) without division. Monotonicity of lemma1_bound
/// makes this the strongest instance, covering every valid c <= c*.
/// c* = 0 yields not_applicable. A `fails` verdict indicates a defect.
BoundReport lemma1_verify(const SetFamily& f, int i, int j);

/// Abundant-element check: lists every element contained in at least half of
/// the members; holds iff at least one exists. The family {∅} is
/// not_applicable.
BoundReport frankl_check(const SetFamily& f);

/// Sorted-frequency check: with elements ordered by decreasing frequency,
/// the k-th one must appear in at least |F|/(2^(k-1)+1) members, for every
/// k up to |∪F|. At k = 1 this coincides with frankl_check.
BoundReport nagel_check(const SetFamily& f);

/// Constructive reduction chain: repeatedly delete a most-frequent element
/// (ties to the smaller index) and record, at step k, the target bound
/// b_k = 1/(2^(k-1)+1) next to the element's frequency measured in the
/// ORIGINAL family. The chain ends when the deletions exhaust ∪F. The b_k
/// recurrence b_{k+1} = lemma1_bound(b_k) is re-verified on the way.
std::vector<ChainStep> nagel_chain(const SetFamily& f);

/// Per-member frequency bound: every x in A (A a member, |A| >= 1) must
/// appear in at least |F|/(2^(|A|-1)+1) members. Theorem-backed; a `fails`
/// verdict indicates a defect.
BoundReport nagel_lemma_check(const SetFamily& f, ElementSet a);

struct Prop34Witness {
    int element = 0;
    Ratio ratio;
};

/// Relaxed witness bound: for a member A with |A| >= 2, some y in A appears
/// in at least |F|/(2^(|A|-2)+1) members. Returns the smallest qualifying y.
/// Existence is theorem-backed; an empty result indicates a defect.
std::optional<Prop34Witness> prop34_witness(const SetFamily& f, ElementSet a);

/// Two-element majority: for a member A with |A| = 2, one of its elements
/// is abundant. If both qualify, returns the more frequent (ties to the
/// smaller). An empty result indicates a defect.
std::optional<int> two_set_majority(const SetFamily& f, ElementSet a);

/// Two-abundant-elements survey: not_applicable unless the smallest nonempty
/// member has size >= 2 and |∪F| >= 2; otherwise holds iff at least two
/// elements are abundant. This statement is open; callers report the
/// verdict, never assert it.
BoundReport s_frankl_check(const SetFamily& f);

/// Largest and second-largest normalized frequency over distinct elements.
/// Requires |∪F| >= 2.
std::pair<Ratio, Ratio> question1_profile(const SetFamily& f);

// ---------------------------------------------------------------------------
// Conjecture status
// ---------------------------------------------------------------------------
//
// Which statements are settled decides whether a failing check is a defect
// in this code (exit code 1) or a reportable empirical finding (exit 0).

namespace status {

/// Abundant-element existence is settled for ground unions up to 12 elements
/// and for families of up to 50 sets.
inline constexpr int kFranklProvenGroundMax = 12;
inline constexpr std::int64_t kFranklProvenSizeMax = 50;

/// The sorted-frequency bound is settled at every k >= 3.
inline constexpr int kNagelProvenKMin = 3;

[[nodiscard]] bool frankl_proven_for(const SetFamily& f);

/// True when a failing sorted-frequency instance at step k would contradict
/// a settled statement.
[[nodiscard]] bool nagel_failure_is_defect(const SetFamily& f, int k);

/// Per-member and witness bounds (nagel_lemma_check, prop34_witness,
/// two_set_majority), the quotient identities and the quotient lift are all
/// settled for every union-closed family; any failure there is a defect.
/// The two-abundant-elements statement is open at every scale.
inline constexpr bool kSFranklIsOpen = true;

}  // namespace status

}  // namespace ucf
