#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wiener/bounds.hpp"
#include "wiener/degree_sequence.hpp"
#include "wiener/solvers.hpp"

namespace wiener {

/// Which published claim a record checks.  Values are wire tags and sort in
/// this order within one instance.
enum class ClaimSource {
    c26,        // "C2.6"        k = 6 shortlist contains every maximizer
    t12_greedy, // "T1.2-greedy" greedy arrangement is optimal
    t24_bound,  // "T2.4-bound"  degree-based upper bound
    t27,        // "T2.7"        some maximizer is a valley
    t31,        // "T3.1"        closed form, k <= 4
    t32,        // "T3.2"        closed form, k = 5
    t33,        // "T3.3"        closed form, k = 6
};
const char* to_string(ClaimSource s);

enum class Verdict {
    value_match_set_match,
    value_match_set_mismatch,
    value_mismatch,
    bound_ok,
    bound_violated,
    greedy_optimal,
    greedy_suboptimal,
};
const char* to_string(Verdict v);
inline constexpr int kVerdictCount = 7;

/// One claim checked against the oracle on one weight multiset.
struct AuditRecord {
    std::vector<std::int64_t> instance; // sorted weights
    ClaimSource source = ClaimSource::t31;
    int claim_case = 0;
    std::int64_t oracle_f = 0;
    std::vector<SpineWeights> oracle_argmax;
    /// Claim side; absent for bound records, which carry `bound` instead.
    std::optional<std::int64_t> claimed_f;
    std::vector<SpineWeights> claimed_argmax;
    std::optional<Rational> bound;
    std::optional<bool> bound_tight;
    /// Oracle maximizers that are not valleys (expected empty; any entry
    /// here would disprove the valley claim).
    std::vector<SpineWeights> non_valley_argmax;
    Verdict verdict = Verdict::value_match_set_match;
};

/// Exhaustive scan over every labeled tree with one degree sequence.
struct TreeCheckResult {
    std::vector<std::int64_t> degrees;
    std::int64_t n = 0;
    std::int64_t tree_count = 0;
    WienerValue max_wiener = 0;
    bool max_only_caterpillars = false;
};

struct AuditReport {
    std::vector<std::int64_t> k_set;
    std::int64_t weight_cap = 0;
    std::int64_t instance_count = 0;
    std::vector<AuditRecord> records;
    /// Indexed by Verdict.
    std::array<std::int64_t, kVerdictCount> verdict_counts{};
    std::vector<TreeCheckResult> tree_checks;

    std::int64_t count(Verdict v) const {
        return verdict_counts[static_cast<int>(v)];
    }
    /// value_mismatch or bound_violated present: a claim is actually wrong,
    /// not merely loose at a boundary.
    bool has_hard_failures() const;
};

/// Checks every claim family on every nonincreasing weight vector with
/// k in k_set and entries in 1..weight_cap, against the brute-force oracle.
/// Instances ascend lexicographically within ascending k; records within an
/// instance follow ClaimSource order.  With include_tree_checks, instances
/// whose tree size is at most 12 are also scanned exhaustively over all
/// labeled trees.
AuditReport audit_sweep(std::vector<std::int64_t> k_set, std::int64_t weight_cap,
                        bool include_tree_checks = false,
                        std::int64_t oracle_cap = kDefaultOracleCap);

/// True when every maximum-Wiener labeled tree with this degree sequence is
/// a caterpillar.  Enumerates all of them; n is capped at 12
/// (InstanceTooLargeError).
bool exhaustive_tree_check(const DegreeSequence& ds);
TreeCheckResult exhaustive_tree_scan(const DegreeSequence& ds);

/// The published counterexample showing the greedy arrangement can lose:
/// degree sequence (13,5,5,5,4,3,1x25), where the greedy caterpillar is
/// beaten by 16.  The source that announced it printed absolute Wiener
/// values 9886 and 9870; recomputation gives 1786 and 1770.  Both pairs are
/// carried in the report; the gap and the ordering are what the check pins.
struct CounterexampleReport {
    std::vector<std::int64_t> degrees;
    SpineWeights better;      // (12,2,3,4,4,4)
    SpineWeights greedy;      // (12,4,3,2,4,4)
    std::int64_t f_better = 0;
    std::int64_t f_greedy = 0;
    WienerValue w_better = 0;
    WienerValue w_greedy = 0;
    std::int64_t gap = 0;
    std::int64_t published_w_better = 0;
    std::int64_t published_w_greedy = 0;
    std::int64_t published_gap = 0;
    bool greedy_is_optimal = false;
    bool better_is_optimal = false;
    MaxResult oracle;
    /// The full claim audit on this one instance.
    AuditReport audit;
};

CounterexampleReport greedy_counterexample();

} // namespace wiener
