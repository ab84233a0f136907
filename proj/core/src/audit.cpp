#include "wiener/audit.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wiener/checked.hpp"
#include "wiener/errors.hpp"
#include "wiener/tree.hpp"

namespace wiener {

const char* to_string(ClaimSource s) {
    switch (s) {
        case ClaimSource::c26: return "C2.6";
        case ClaimSource::t12_greedy: return "T1.2-greedy";
        case ClaimSource::t24_bound: return "T2.4-bound";
        case ClaimSource::t27: return "T2.7";
        case ClaimSource::t31: return "T3.1";
        case ClaimSource::t32: return "T3.2";
        case ClaimSource::t33: return "T3.3";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::value_match_set_match: return "value_match_set_match";
        case Verdict::value_match_set_mismatch:
            return "value_match_set_mismatch";
        case Verdict::value_mismatch: return "value_mismatch";
        case Verdict::bound_ok: return "bound_ok";
        case Verdict::bound_violated: return "bound_violated";
        case Verdict::greedy_optimal: return "greedy_optimal";
        case Verdict::greedy_suboptimal: return "greedy_suboptimal";
    }
    return "?";
}

bool AuditReport::has_hard_failures() const {
    return count(Verdict::value_mismatch) > 0 ||
           count(Verdict::bound_violated) > 0;
}

namespace {

Verdict value_set_verdict(std::int64_t claimed_f, std::int64_t oracle_f,
                          const std::vector<SpineWeights>& claimed,
                          const std::vector<SpineWeights>& oracle,
                          bool containment_only) {
    if (claimed_f != oracle_f) return Verdict::value_mismatch;
    bool sets_ok;
    if (containment_only) {
        sets_ok = std::includes(claimed.begin(), claimed.end(), oracle.begin(),
                                oracle.end());
    } else {
        sets_ok = claimed == oracle;
    }
    return sets_ok ? Verdict::value_match_set_match
                   : Verdict::value_match_set_mismatch;
}

// All claim checks for one weight multiset, in ClaimSource order.
std::vector<AuditRecord> instance_records(const WeightMultiset& w,
                                          std::int64_t oracle_cap) {
    const MaxResult oracle = brute_force_max(w, oracle_cap);
    const std::int64_t k = w.k();

    std::vector<AuditRecord> out;
    auto base = [&]() {
        AuditRecord r;
        r.instance = w.values();
        r.oracle_f = oracle.f_star;
        r.oracle_argmax = oracle.argmax;
        return r;
    };

    if (k == 6) {
        AuditRecord r = base();
        r.source = ClaimSource::c26;
        std::set<SpineWeights> dedup;
        for (auto& y : k6_candidates(w)) dedup.insert(canonicalize(y));
        r.claimed_argmax.assign(dedup.begin(), dedup.end());
        std::int64_t best = -1;
        for (auto& y : r.claimed_argmax) best = std::max(best, f_value(y));
        r.claimed_f = best;
        // The shortlist claims containment, not equality.
        r.verdict = value_set_verdict(best, oracle.f_star, r.claimed_argmax,
                                      oracle.argmax, true);
        out.push_back(std::move(r));
    }

    {
        AuditRecord r = base();
        r.source = ClaimSource::t12_greedy;
        SpineWeights y = canonicalize(greedy_arrangement(w));
        r.claimed_f = k <= 1 ? 0 : f_value(y);
        r.claimed_argmax = {y};
        r.verdict = *r.claimed_f == oracle.f_star ? Verdict::greedy_optimal
                                                  : Verdict::greedy_suboptimal;
        out.push_back(std::move(r));
    }

    {
        AuditRecord r = base();
        r.source = ClaimSource::t24_bound;
        BoundReport b = upper_bound(w);
        r.bound = b.bound;
        r.bound_tight = b.tight;
        const WienerValue w_star =
            checked_add(checked_square(w.tree_size() - 1), oracle.f_star);
        r.verdict = leq_rational(w_star, b.bound) ? Verdict::bound_ok
                                                  : Verdict::bound_violated;
        out.push_back(std::move(r));
    }

    {
        AuditRecord r = base();
        r.source = ClaimSource::t27;
        MaxResult valley = valley_max(w);
        r.claimed_f = valley.f_star;
        r.claimed_argmax = valley.argmax;
        r.verdict = value_set_verdict(valley.f_star, oracle.f_star,
                                      valley.argmax, oracle.argmax, false);
        for (auto& y : oracle.argmax)
            if (!is_valley(y)) r.non_valley_argmax.push_back(y);
        out.push_back(std::move(r));
    }

    if (k >= 2 && k <= 6) {
        AuditRecord r = base();
        ClosedFormClaim c = closed_form_claim(w);
        r.source = k <= 4 ? ClaimSource::t31
                          : (k == 5 ? ClaimSource::t32 : ClaimSource::t33);
        r.claim_case = c.case_id;
        r.claimed_f = c.claimed_f;
        r.claimed_argmax = c.claimed;
        r.verdict = value_set_verdict(c.claimed_f, oracle.f_star, c.claimed,
                                      oracle.argmax, false);
        out.push_back(std::move(r));
    }

    return out;
}

DegreeSequence degrees_of_weights(const WeightMultiset& w) {
    std::vector<std::int64_t> d;
    const std::int64_t n = w.tree_size();
    d.reserve(static_cast<std::size_t>(n));
    for (std::int64_t v : w.values()) d.push_back(v + 1);
    d.insert(d.end(), static_cast<std::size_t>(n - w.k()), 1);
    return DegreeSequence::validate(std::move(d));
}

} // namespace

AuditReport audit_sweep(std::vector<std::int64_t> k_set, std::int64_t weight_cap,
                        bool include_tree_checks, std::int64_t oracle_cap) {
    if (weight_cap < 1) throw InputError("weight cap must be >= 1");
    std::sort(k_set.begin(), k_set.end());
    k_set.erase(std::unique(k_set.begin(), k_set.end()), k_set.end());
    for (std::int64_t k : k_set) {
        if (k < 1) throw InputError("k must be >= 1");
        if (k > oracle_cap)
            throw InstanceTooLargeError(
                "k = " + std::to_string(k) + " exceeds the oracle cap of " +
                std::to_string(oracle_cap));
    }

    AuditReport report;
    report.k_set = k_set;
    report.weight_cap = weight_cap;

    std::vector<std::int64_t> z;
    for (std::int64_t k : k_set) {
        z.assign(static_cast<std::size_t>(k), 0);
        // Nonincreasing vectors over 1..weight_cap, ascending
        // lexicographically.
        auto gen = [&](auto&& self, std::int64_t pos) -> void {
            if (pos == k) {
                WeightMultiset w(z);
                ++report.instance_count;
                for (auto& rec : instance_records(w, oracle_cap)) {
                    ++report.verdict_counts[static_cast<int>(rec.verdict)];
                    report.records.push_back(std::move(rec));
                }
                if (include_tree_checks && w.tree_size() <= 12)
                    report.tree_checks.push_back(
                        exhaustive_tree_scan(degrees_of_weights(w)));
                return;
            }
            const std::int64_t hi =
                pos == 0 ? weight_cap : z[static_cast<std::size_t>(pos - 1)];
            for (std::int64_t v = 1; v <= hi; ++v) {
                z[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1);
            }
        };
        gen(gen, 0);
    }
    return report;
}

TreeCheckResult exhaustive_tree_scan(const DegreeSequence& ds) {
    const std::int64_t n = ds.n();
    if (n > 12)
        throw InstanceTooLargeError(
            "exhaustive tree scan is capped at n = 12, got n = " +
            std::to_string(n));
    TreeCheckResult res;
    res.degrees = ds.degrees();
    res.n = n;
    if (n == 2) {
        res.tree_count = 1;
        res.max_wiener = 1;
        res.max_only_caterpillars = true;
        return res;
    }
    // Every labeled tree with these degrees corresponds to one distinct
    // permutation of the code that lists vertex v exactly deg(v)-1 times.
    std::vector<int> code;
    for (std::int64_t v = 0; v < n; ++v) {
        const std::int64_t d = ds.degrees()[static_cast<std::size_t>(v)];
        code.insert(code.end(), static_cast<std::size_t>(d - 1),
                    static_cast<int>(v));
    }
    std::sort(code.begin(), code.end());
    WienerValue best = -1;
    bool only_cat = true;
    std::int64_t count = 0;
    do {
        Tree t = decode_pruefer(code, n);
        const WienerValue wv = wiener_edgecut(t);
        ++count;
        if (wv > best) {
            best = wv;
            only_cat = is_caterpillar(t);
        } else if (wv == best && only_cat) {
            only_cat = is_caterpillar(t);
        }
    } while (std::next_permutation(code.begin(), code.end()));
    res.tree_count = count;
    res.max_wiener = best;
    res.max_only_caterpillars = only_cat;
    return res;
}

bool exhaustive_tree_check(const DegreeSequence& ds) {
    return exhaustive_tree_scan(ds).max_only_caterpillars;
}

CounterexampleReport greedy_counterexample() {
    CounterexampleReport rep;
    DegreeSequence ds = parse_degree_sequence("13,5,5,5,4,3,1x25");
    WeightMultiset w = WeightMultiset::from_degrees(ds);

    rep.degrees = ds.degrees();
    rep.better = SpineWeights({12, 2, 3, 4, 4, 4});
    rep.greedy = greedy_caterpillar(ds);
    rep.f_better = f_value(rep.better);
    rep.f_greedy = f_value(rep.greedy);
    rep.w_better = caterpillar_wiener(rep.better);
    rep.w_greedy = caterpillar_wiener(rep.greedy);
    if (rep.w_better != wiener_pairwise(build_caterpillar(rep.better)) ||
        rep.w_greedy != wiener_pairwise(build_caterpillar(rep.greedy)))
        throw Error("caterpillar formula and pairwise distances disagree");
    rep.gap = rep.w_better - rep.w_greedy;
    rep.published_w_better = 9886;
    rep.published_w_greedy = 9870;
    rep.published_gap = rep.published_w_better - rep.published_w_greedy;

    rep.oracle = brute_force_max(w);
    rep.greedy_is_optimal = rep.f_greedy == rep.oracle.f_star;
    rep.better_is_optimal =
        std::find(rep.oracle.argmax.begin(), rep.oracle.argmax.end(),
                  canonicalize(rep.better)) != rep.oracle.argmax.end();

    rep.audit.k_set = {6};
    rep.audit.weight_cap = 0;
    rep.audit.instance_count = 1;
    for (auto& rec : instance_records(w, kDefaultOracleCap)) {
        ++rep.audit.verdict_counts[static_cast<int>(rec.verdict)];
        rep.audit.records.push_back(std::move(rec));
    }
    return rep;
}

} // namespace wiener
