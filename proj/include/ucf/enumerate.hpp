#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ucf/bounds.hpp"
#include "ucf/family.hpp"

namespace ucf {

/// Generation universe for exhaustive sweeps.
struct EnumConfig {
    enum class Mode { dense, canonical };

    int n = 3;
    bool spanning = false;           ///< keep only families with ∪F = M_n
    bool allow_empty_member = true;  ///< permit ∅ as a member
    bool exclude_trivial = false;    ///< drop the family {∅}
    Mode mode = Mode::dense;
    std::optional<std::int64_t> limit;  ///< cap on yielded families

    void validate() const;
};

/// Seeded random generation of union-closed families (n up to 24).
struct RandomConfig {
    int n = 12;
    int generator_count = 8;
    std::uint64_t seed = 0;
};

/// Return false to stop the stream early.
using FamilyVisitor = std::function<bool(const SetFamily&)>;

/// Visits every nonempty union-closed family over M_n that passes the
/// config filters, in ascending candidate-encoding order. Candidate k
/// encodes the family whose members are exactly the subset masks at the set
/// bits of k, so the scan covers all 2^(2^n) - 1 nonempty collections.
/// Dense mode requires n <= 4.
void enumerate_dense(const EnumConfig& cfg, const FamilyVisitor& visit);

/// Visits one canonical representative per relabeling class, discovered by
/// growing generator sets: starting from single-member families, repeatedly
/// add one subset, re-close, canonicalize, and keep unseen forms. Every
/// union-closed family is the endpoint of such a growth chain, so the walk
/// is exhaustive. Requires n <= 5; at n = 5 a yield limit must be set (the
/// class count is far beyond desk scale).
void enumerate_canonical(const EnumConfig& cfg, const FamilyVisitor& visit);

/// Convenience: materialize the stream.
std::vector<SetFamily> enumerate_all(const EnumConfig& cfg);

/// Union-closure of `generator_count` subsets drawn uniformly from the
/// nonempty subsets of M_n. Identical seeds give identical families.
SetFamily random_closed_family(const RandomConfig& cfg);

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

enum class CheckKind : std::int8_t {
    frankl,    ///< abundant element exists (per family)
    nagel,     ///< sorted-frequency bounds (per family)
    s_frankl,  ///< two abundant elements when T(F) >= 2 (per family, open)
    lemma1,    ///< quotient-lift inequality (per ordered pair i, j)
    eq21,      ///< quotient counting identities (per ordered pair i, j)
    lemma33,   ///< per-member frequency bound (per nonempty member)
    prop34,    ///< relaxed witness bound (per member of size >= 2)
    two_set,   ///< two-element majority (per member of size 2)
};

CheckKind parse_check(const std::string& name);
const char* check_name(CheckKind kind) noexcept;

struct CheckTally {
    std::int64_t holds = 0;
    std::int64_t fails = 0;
    std::int64_t not_applicable = 0;
};

struct FailingWitness {
    CheckKind check = CheckKind::frankl;
    std::string family_text;  ///< family text format, re-parseable
    std::string instance;     ///< e.g. "i=1 j=2" or "A={1,3}"
    std::string detail;
};

inline constexpr std::size_t kMaxFailingWitnesses = 100;

struct SweepReport {
    EnumConfig config;
    std::vector<CheckKind> checks;
    std::int64_t families_seen = 0;
    std::vector<CheckTally> tallies;  ///< parallel to `checks`
    std::vector<FailingWitness> failing_witnesses;
    std::int64_t wall_time_ms = 0;
    /// True when some failure contradicts a settled statement (implementation
    /// defect) as opposed to an open-conjecture survey result.
    bool has_defect_failure = false;
};

/// Runs every named check over every family the config enumerates, including
/// every applicable (i, j) pair or member instance. The candidate space is
/// split into contiguous partitions processed independently and merged in
/// partition order, so tallies and retained witnesses are identical for any
/// worker count. At most kMaxFailingWitnesses failing instances are kept.
SweepReport sweep(const EnumConfig& cfg, const std::vector<CheckKind>& checks,
                  int threads = 1);

}  // namespace ucf
