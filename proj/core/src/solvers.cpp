#include "wiener/solvers.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wiener/checked.hpp"
#include "wiener/errors.hpp"

namespace wiener {

WeightMultiset::WeightMultiset(std::vector<std::int64_t> w) : w_(std::move(w)) {
    for (std::int64_t v : w_)
        if (v < 1)
            throw InputError("weight " + std::to_string(v) + " is below 1");
    std::sort(w_.begin(), w_.end(), std::greater<>());
}

WeightMultiset WeightMultiset::from_degrees(const DegreeSequence& ds) {
    return WeightMultiset(ds.internal_weights());
}

std::int64_t WeightMultiset::tree_size() const {
    std::int64_t sum = 0;
    for (std::int64_t v : w_) sum = checked_add(sum, v);
    return checked_add(sum, 2);
}

const char* to_string(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::valley: return "valley";
        case Method::closed_form: return "closed_form";
        case Method::greedy: return "greedy";
    }
    return "?";
}

namespace {

std::vector<std::int64_t> canonical_vec(const std::vector<std::int64_t>& z) {
    std::vector<std::int64_t> rev(z.rbegin(), z.rend());
    return std::lexicographical_compare(z.begin(), z.end(), rev.begin(),
                                        rev.end())
               ? rev
               : z;
}

MaxResult finish(const WeightMultiset& w, std::int64_t best,
                 std::set<std::vector<std::int64_t>> arg, Method m) {
    MaxResult r;
    r.f_star = best;
    r.w_star = checked_add(checked_square(w.tree_size() - 1), best);
    r.argmax.reserve(arg.size());
    for (auto& z : arg) r.argmax.emplace_back(z);
    r.method = m;
    return r;
}

// k = 0 is the two-vertex path, k = 1 the star whose center degree is
// w_1 + 1; both have a unique tree and F = 0.
MaxResult small_k_result(const WeightMultiset& w, Method m) {
    MaxResult r;
    r.f_star = 0;
    r.method = m;
    if (w.k() == 0) {
        r.w_star = 1;
        r.argmax = {SpineWeights{}};
    } else {
        SpineWeights y({w.values()[0] + 1});
        r.w_star = caterpillar_wiener(y);
        r.argmax = {y};
    }
    return r;
}

} // namespace

MaxResult brute_force_max(const WeightMultiset& w, std::int64_t cap) {
    const std::int64_t k = w.k();
    if (k > cap)
        throw InstanceTooLargeError(
            "k = " + std::to_string(k) + " exceeds the oracle cap of " +
            std::to_string(cap));
    if (k <= 1) return small_k_result(w, Method::oracle);
    std::vector<std::int64_t> z = w.values();
    std::sort(z.begin(), z.end());
    std::int64_t best = -1;
    std::set<std::vector<std::int64_t>> arg;
    do {
        std::int64_t f = f_value(z);
        if (f > best) {
            best = f;
            arg.clear();
        }
        if (f == best) arg.insert(canonical_vec(z));
    } while (std::next_permutation(z.begin(), z.end()));
    return finish(w, best, std::move(arg), Method::oracle);
}

MaxResult valley_max(const WeightMultiset& w) {
    const std::int64_t k = w.k();
    if (k <= 1) return small_k_result(w, Method::valley);

    std::vector<std::int64_t> vals, cnt;
    for (std::int64_t v : w.values()) {
        if (vals.empty() || vals.back() != v) {
            vals.push_back(v);
            cnt.push_back(1);
        } else {
            ++cnt.back();
        }
    }
    const std::size_t m = vals.size();

    // Each valley splits every non-minimal value into a left-of-the-dip run
    // and a right run; the minimal copies fill the dip.  Enumerating the
    // left counts visits every valley exactly once.
    std::int64_t candidates = 1;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        candidates = checked_mul(candidates, cnt[i] + 1);
        if (candidates > (std::int64_t{1} << 26))
            throw InstanceTooLargeError(
                "valley enumeration would visit over 2^26 arrangements");
    }

    std::vector<std::int64_t> left(m, 0);
    std::vector<std::int64_t> z;
    z.reserve(static_cast<std::size_t>(k));
    std::int64_t best = -1;
    std::set<std::vector<std::int64_t>> arg;
    while (true) {
        z.clear();
        for (std::size_t i = 0; i + 1 < m; ++i)
            z.insert(z.end(), static_cast<std::size_t>(left[i]), vals[i]);
        z.insert(z.end(), static_cast<std::size_t>(cnt[m - 1]), vals[m - 1]);
        for (std::size_t i = m - 1; i-- > 0;)
            z.insert(z.end(), static_cast<std::size_t>(cnt[i] - left[i]),
                     vals[i]);
        std::int64_t f = f_value(z);
        if (f > best) {
            best = f;
            arg.clear();
        }
        if (f == best) arg.insert(canonical_vec(z));

        std::size_t pos = 0;
        while (pos + 1 < m) {
            if (++left[pos] <= cnt[pos]) break;
            left[pos] = 0;
            ++pos;
        }
        if (pos + 1 >= m) break;
    }
    return finish(w, best, std::move(arg), Method::valley);
}

namespace {

// 0-based index patterns over the sorted weights for the k = 6 shortlist.
constexpr int kShortlist[5][6] = {
    {0, 5, 4, 3, 2, 1}, {0, 4, 5, 3, 2, 1}, {0, 3, 5, 4, 2, 1},
    {0, 3, 4, 5, 2, 1}, {0, 2, 5, 4, 3, 1},
};

SpineWeights apply_pattern(const std::vector<std::int64_t>& w, const int* pat) {
    std::vector<std::int64_t> z(6);
    for (int i = 0; i < 6; ++i) z[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(pat[i])];
    return SpineWeights(std::move(z));
}

} // namespace

std::array<SpineWeights, 5> k6_candidates(const WeightMultiset& w) {
    if (w.k() != 6)
        throw UnsupportedKError("shortlist needs k = 6, got k = " +
                                std::to_string(w.k()));
    std::array<SpineWeights, 5> out;
    for (int i = 0; i < 5; ++i) out[static_cast<std::size_t>(i)] = apply_pattern(w.values(), kShortlist[i]);
    return out;
}

std::array<std::int64_t, 4> k6_candidate_deltas(const WeightMultiset& w) {
    if (w.k() != 6)
        throw UnsupportedKError("shortlist deltas need k = 6, got k = " +
                                std::to_string(w.k()));
    const auto& v = w.values();
    const std::int64_t w1 = v[0], w2 = v[1], w3 = v[2], w4 = v[3], w5 = v[4],
                       w6 = v[5];
    return {
        checked_mul(w1 - w2 - w3 - w4, w5 - w6),
        checked_mul(2, checked_mul(w1 - w2 - w3, w4 - w5)),
        checked_mul(w1 + w4 - w2 - w3, w5 - w6),
        checked_mul(3 * w3 - 3 * w4 - w5 + w6, w1 - w2),
    };
}

namespace {

int sign(std::int64_t v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

ClosedFormClaim make_claim(const char* source, int case_id,
                           std::vector<SpineWeights> raw_claimed) {
    ClosedFormClaim c;
    c.source = source;
    c.case_id = case_id;
    std::set<std::vector<std::int64_t>> dedup;
    for (auto& y : raw_claimed) dedup.insert(canonical_vec(y.values()));
    c.claimed.reserve(dedup.size());
    std::int64_t best = -1;
    for (auto& z : dedup) {
        best = std::max(best, f_value(z));
        c.claimed.emplace_back(z);
    }
    c.claimed_f = best;
    return c;
}

} // namespace

ClosedFormClaim closed_form_claim(const WeightMultiset& w) {
    const std::int64_t k = w.k();
    if (k < 2 || k > 6)
        throw UnsupportedKError("closed form covers 2 <= k <= 6, got k = " +
                                std::to_string(k));
    const auto& v = w.values();
    auto sw = [&](std::initializer_list<std::size_t> idx) {
        std::vector<std::int64_t> z;
        z.reserve(idx.size());
        for (std::size_t i : idx) z.push_back(v[i]);
        return SpineWeights(std::move(z));
    };
    switch (k) {
        case 2:
            return make_claim("T3.1", 0, {sw({0, 1})});
        case 3:
            return make_claim("T3.1", 0, {sw({0, 2, 1})});
        case 4:
            return make_claim("T3.1", 0, {sw({0, 3, 2, 1})});
        case 5: {
            // Largest weight at one end; the dip carries the rest in one of
            // two near-sorted shapes depending on how dominant w_1 is.
            const std::int64_t lhs = v[0];
            const std::int64_t rhs = checked_add(checked_add(v[1], v[2]), 1);
            SpineWeights a = sw({0, 4, 3, 2, 1});
            SpineWeights b = sw({0, 3, 4, 2, 1});
            if (lhs > rhs) return make_claim("T3.2", 1, {a});
            if (lhs == rhs) return make_claim("T3.2", 2, {a, b});
            return make_claim("T3.2", 3, {b});
        }
        default:
            break;
    }

    auto cand = k6_candidates(w);
    const SpineWeights &A1 = cand[0], &A2 = cand[1], &A3 = cand[2],
                       &A4 = cand[3], &A5 = cand[4];
    const std::int64_t w1 = v[0], w2 = v[1], w3 = v[2], w4 = v[3], w5 = v[4],
                       w6 = v[5];
    const std::int64_t s4 = w2 + w3 + w4;
    const std::int64_t s3 = w2 + w3;
    if (w1 > s4) return make_claim("T3.3", 1, {A1});
    if (w1 == s4) return make_claim("T3.3", 2, {A1, A2});
    if (w1 > s3) return make_claim("T3.3", 3, {A2});
    if (w1 == s3) return make_claim("T3.3", 4, {A2, A3});

    const int cm = sign(w1 - (w2 + w3 - w4));
    const int cg = sign(3 * w1 - (3 * w2 + w5 - w6));
    if (cm > 0 && cg > 0) return make_claim("T3.3", 5, {A3});
    if (cm == 0 && cg > 0) return make_claim("T3.3", 6, {A3, A4});
    if (cm > 0 && cg == 0) return make_claim("T3.3", 7, {A3, A5});
    if (cm == 0 && cg == 0) return make_claim("T3.3", 8, {A3, A4, A5});
    if (cg > 0 || (cm < 0 && cg == 0)) return make_claim("T3.3", 9, {A4});
    if (cm >= 0) return make_claim("T3.3", 10, {A5}); // cg < 0
    const int gm = sign((w5 - w6) - 3 * (w3 - w4));
    if (gm < 0) return make_claim("T3.3", 9, {A4});
    if (gm > 0) return make_claim("T3.3", 10, {A5});
    return make_claim("T3.3", 11, {A4, A5});
}

MaxResult closed_form_max(const WeightMultiset& w) {
    const std::int64_t k = w.k();
    if (k <= 1) return small_k_result(w, Method::closed_form);
    ClosedFormClaim c = closed_form_claim(w);
    MaxResult r;
    r.f_star = c.claimed_f;
    r.w_star = checked_add(checked_square(w.tree_size() - 1), c.claimed_f);
    for (auto& y : c.claimed)
        if (f_value(y) == c.claimed_f) r.argmax.push_back(y);
    r.method = Method::closed_form;
    return r;
}

SpineWeights greedy_arrangement(const WeightMultiset& w) {
    const std::int64_t k = w.k();
    if (k == 0) return SpineWeights{};
    if (k == 1) return SpineWeights({w.values()[0] + 1});
    const auto& v = w.values();
    std::vector<std::int64_t> z(v.size());
    std::size_t lo = 0, hi = v.size() - 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i % 2 == 0)
            z[lo++] = v[i];
        else
            z[hi--] = v[i];
    }
    return SpineWeights(std::move(z));
}

SpineWeights greedy_caterpillar(const DegreeSequence& ds) {
    return greedy_arrangement(WeightMultiset::from_degrees(ds));
}

MaxResult solve(const DegreeSequence& ds, SolveMethod method,
                std::int64_t oracle_cap) {
    auto w = WeightMultiset::from_degrees(ds);
    const std::int64_t k = w.k();
    if (k <= 1) {
        Method tag = Method::closed_form;
        if (method == SolveMethod::oracle) tag = Method::oracle;
        if (method == SolveMethod::valley) tag = Method::valley;
        return small_k_result(w, tag);
    }
    switch (method) {
        case SolveMethod::oracle:
            return brute_force_max(w, oracle_cap);
        case SolveMethod::valley:
            return valley_max(w);
        case SolveMethod::closed:
            return closed_form_max(w);
        case SolveMethod::automatic:
            break;
    }
    if (k <= 6) return closed_form_max(w);
    if (k <= 25) return valley_max(w);
    if (k <= oracle_cap) return brute_force_max(w, oracle_cap);
    throw InstanceTooLargeError(
        "k = " + std::to_string(k) +
        " is beyond every method: closed form handles k <= 6, valley search "
        "k <= 25, and the exhaustive oracle is capped at " +
        std::to_string(oracle_cap) + " (raise WIENER_ORACLE_CAP to override)");
}

} // namespace wiener
