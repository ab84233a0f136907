#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wiener/degree_sequence.hpp"
#include "wiener/spine_weights.hpp"

namespace wiener {

/// The multiset of internal weights w_1 >= w_2 >= ... >= w_k >= 1 shared by
/// every caterpillar arrangement of one degree sequence.
class WeightMultiset {
public:
    /// Sorts nonincreasing.  Throws InputError if any weight is < 1.
    explicit WeightMultiset(std::vector<std::int64_t> w);
    /// Drops the leaves of ds and subtracts one from each internal degree.
    static WeightMultiset from_degrees(const DegreeSequence& ds);

    const std::vector<std::int64_t>& values() const { return w_; }
    std::int64_t k() const { return static_cast<std::int64_t>(w_.size()); }
    /// Vertex count of any caterpillar over these weights (sum + 2; the
    /// k = 1 star is written with spine weight w_1 + 1, same count).
    std::int64_t tree_size() const;

    bool operator==(const WeightMultiset&) const = default;

private:
    std::vector<std::int64_t> w_;
};

enum class Method { oracle, valley, closed_form, greedy };
const char* to_string(Method m);

/// Outcome of a maximization over all arrangements of a weight multiset.
/// Invariants: argmax is nonempty, canonical, deduplicated, ascending;
/// every member has f_value == f_star and caterpillar_wiener == w_star.
struct MaxResult {
    std::int64_t f_star = 0;
    WienerValue w_star = 0;
    std::vector<SpineWeights> argmax;
    Method method = Method::oracle;
};

inline constexpr std::int64_t kDefaultOracleCap = 9;

/// Evaluates F on every distinct arrangement.  Ground truth; cost is the
/// number of multiset permutations, so k is capped (InstanceTooLargeError).
MaxResult brute_force_max(const WeightMultiset& w,
                          std::int64_t cap = kDefaultOracleCap);

/// Evaluates F on valley arrangements only (provably sufficient: moving an
/// entry that breaks the valley shape toward an end never decreases F).
/// Enumerates each valley once; practical up to k around 25.
MaxResult valley_max(const WeightMultiset& w);

/// The five-arrangement shortlist that provably contains every maximizer
/// for k = 6.  Positions are fixed patterns over the sorted weights;
/// returned verbatim (not canonicalized, may repeat as caterpillars).
/// Requires k = 6 (UnsupportedKError).
std::array<SpineWeights, 5> k6_candidates(const WeightMultiset& w);

/// Closed-form differences F(c_i) - F(c_{i+1}) between consecutive members
/// of the k = 6 shortlist, in terms of the sorted weights.
std::array<std::int64_t, 4> k6_candidate_deltas(const WeightMultiset& w);

/// What the closed-form case analysis asserts for one instance: the case
/// that fired and the argmax set as claimed, before any re-checking.
struct ClosedFormClaim {
    /// Wire tag of the claim family: "T3.1" (k <= 4), "T3.2" (k = 5),
    /// "T3.3" (k = 6).
    std::string source;
    /// 1-based case within the family (k = 5: 1..3, k = 6: 1..11), 0 when
    /// the family has a single case.
    int case_id = 0;
    /// Claimed argmax, canonical, deduplicated, ascending.
    std::vector<SpineWeights> claimed;
    /// max F over the claimed set.
    std::int64_t claimed_f = 0;
};

/// Runs the case analysis as stated, 2 <= k <= 6 (UnsupportedKError).
/// The claimed set is reported verbatim; at some boundaries it includes
/// arrangements whose F is below the maximum, which is exactly what the
/// audit measures.
ClosedFormClaim closed_form_claim(const WeightMultiset& w);

/// Closed-form solver: the claim with its argmax filtered to the true
/// maximizers among the claimed set, so MaxResult invariants hold.
MaxResult closed_form_max(const WeightMultiset& w);

/// Alternating end placement: largest weight at the left end, next at the
/// right end, then inward.  Fast, usually good, not always optimal.
/// k <= 1 degenerates to the unique tree.
SpineWeights greedy_arrangement(const WeightMultiset& w);
/// greedy_arrangement over the internal weights of ds.
SpineWeights greedy_caterpillar(const DegreeSequence& ds);

enum class SolveMethod { automatic, oracle, valley, closed };

/// Maximum Wiener value over all trees with degree sequence ds, attained by
/// a caterpillar.  automatic picks closed form for k <= 6, valley search
/// for k <= 25, then the oracle while k <= oracle_cap; otherwise throws
/// InstanceTooLargeError.  k <= 1 (path on two vertices, star) is exact.
MaxResult solve(const DegreeSequence& ds,
                SolveMethod method = SolveMethod::automatic,
                std::int64_t oracle_cap = kDefaultOracleCap);

} // namespace wiener
