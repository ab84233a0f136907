#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wiener/tree.hpp"

namespace wiener {

/// An ordered list of spine weights y_1..y_k describing a caterpillar: a
/// path v_1..v_k where v_i carries y_i - 1 pendant leaves (y_i for the two
/// endpoints), so y_i is the degree of v_i minus one for k >= 2.  The tree
/// then has sum(y) + 2 vertices.
///
/// Small spines follow the same "weight = attachment count at the ends"
/// reading: k = 0 is the single edge (n = 2) and k = 1 is the star whose
/// center has y_1 pendants (n = y_1 + 1, i.e. y_1 equals the center degree).
class SpineWeights {
public:
    SpineWeights() = default;
    /// Throws InputError if any weight is < 1.
    explicit SpineWeights(std::vector<std::int64_t> y);

    /// Parses a comma-separated weight list; "" gives the empty spine.
    static SpineWeights parse(std::string_view text);

    const std::vector<std::int64_t>& values() const { return y_; }
    std::int64_t k() const { return static_cast<std::int64_t>(y_.size()); }
    /// Vertex count of the described caterpillar.
    std::int64_t tree_size() const;
    /// Comma-separated text form, "" for the empty spine.
    std::string str() const;

    bool operator==(const SpineWeights&) const = default;
    auto operator<=>(const SpineWeights&) const = default;

private:
    std::vector<std::int64_t> y_;
};

/// The spine functional F(y) = sum over cuts i of
/// (y_1+..+y_i) * (y_{i+1}+..+y_k).  Zero for k <= 1.
std::int64_t f_value(std::span<const std::int64_t> y);
std::int64_t f_value(const SpineWeights& y);

/// Materializes the caterpillar described by y.  Spine vertices come first
/// (labels 0..k-1 along the path), pendants after.  Throws OverflowError if
/// the tree would exceed kMaxVertices.
Tree build_caterpillar(const SpineWeights& y);

/// Wiener value of build_caterpillar(y) without building it:
/// (n-1)^2 + F(y) with n = tree_size.
WienerValue caterpillar_wiener(const SpineWeights& y);

/// F(y) - F(y') where y' swaps the entries at 1-based positions i and i+1.
/// Evaluated in closed form: (y_{i+1} - y_i) * (sum before i - sum after
/// i+1).  Requires 1 <= i <= k-1.
std::int64_t swap_delta(const SpineWeights& y, std::int64_t i);

/// Prefix/suffix balance at 1-based position p in [2, k-1]:
/// f(p) = sum of y_1..y_{p-2} minus sum of y_{p+1}..y_k.
std::int64_t prefix_suffix_balance(const SpineWeights& y, std::int64_t p);

/// Smallest 1-based t in [2, k-2] with f(t) <= 0 < f(t+1).  Requires k >= 5
/// (UnsupportedKError); throws NoPivotError when no such sign change exists
/// (possible for arrangements that are far from optimal).
std::int64_t find_pivot(const SpineWeights& y);

/// True when y is nonincreasing then nondecreasing (a valley).
bool is_valley(const SpineWeights& y);

/// The lexicographically larger of y and its reversal.  Two arrangements
/// describe the same caterpillar exactly when their canonical forms match.
SpineWeights canonicalize(const SpineWeights& y);

} // namespace wiener
