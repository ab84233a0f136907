#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wiener {

/// Hard cap on vertex counts.  Keeps n^2 and every Wiener value of a tree on
/// n vertices comfortably inside 64 bits (the path on n vertices attains the
/// maximum, n(n^2-1)/6).
inline constexpr std::int64_t kMaxVertices = 2'000'000;

/// A degree list that some tree realizes, stored in nonincreasing order.
class DegreeSequence {
public:
    /// Validates and sorts.  Throws TooSmallError (fewer than two entries),
    /// NotTreeGraphicError (entry < 1 or sum != 2(n-1)), or OverflowError
    /// (more than kMaxVertices entries).
    static DegreeSequence validate(std::vector<std::int64_t> raw);

    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    std::int64_t n() const { return static_cast<std::int64_t>(degrees_.size()); }
    /// Number of internal (degree >= 2) entries.
    std::int64_t k() const { return k_; }
    /// d_i - 1 for each internal entry, nonincreasing.
    std::vector<std::int64_t> internal_weights() const;
    /// Run-compressed text form ("13,5x3,4,3,1x25"); round-trips through
    /// parse_degree_sequence.
    std::string str() const;

    bool operator==(const DegreeSequence&) const = default;

private:
    explicit DegreeSequence(std::vector<std::int64_t> sorted_desc);

    std::vector<std::int64_t> degrees_;
    std::int64_t k_ = 0;
};

/// Parses a comma-separated degree list and validates it.  Each token is
/// either an integer or INTxCOUNT, so "13,5,5,5,4,3,1x25" expands to one 13,
/// three 5s, a 4, a 3 and twenty-five 1s.  Throws InputError on malformed
/// text, then anything DegreeSequence::validate throws.
DegreeSequence parse_degree_sequence(std::string_view text);

} // namespace wiener
