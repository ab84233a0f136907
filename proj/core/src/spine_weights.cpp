#include "wiener/spine_weights.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "wiener/checked.hpp"
#include "wiener/degree_sequence.hpp"
#include "wiener/errors.hpp"

namespace wiener {

SpineWeights::SpineWeights(std::vector<std::int64_t> y) : y_(std::move(y)) {
    for (std::int64_t v : y_)
        if (v < 1)
            throw InputError("spine weight " + std::to_string(v) +
                             " is below 1");
}

SpineWeights SpineWeights::parse(std::string_view text) {
    if (text.empty()) return SpineWeights{};
    std::vector<std::int64_t> y;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw InputError("bad integer \"" + std::string(tok) +
                             "\" in weight list");
        y.push_back(v);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return SpineWeights(std::move(y));
}

std::int64_t SpineWeights::tree_size() const {
    if (y_.empty()) return 2;
    std::int64_t sum = 0;
    for (std::int64_t v : y_) sum = checked_add(sum, v);
    return k() == 1 ? sum + 1 : checked_add(sum, 2);
}

std::string SpineWeights::str() const {
    std::string s;
    for (std::size_t i = 0; i < y_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(y_[i]);
    }
    return s;
}

std::int64_t f_value(std::span<const std::int64_t> y) {
    const auto k = static_cast<std::int64_t>(y.size());
    if (k <= 1) return 0;
    std::int64_t total = 0;
    for (std::int64_t v : y) total = checked_add(total, v);
    std::int64_t f = 0, prefix = 0;
    for (std::int64_t i = 0; i < k - 1; ++i) {
        prefix = checked_add(prefix, y[static_cast<std::size_t>(i)]);
        f = checked_add(f, checked_mul(prefix, checked_sub(total, prefix)));
    }
    return f;
}

std::int64_t f_value(const SpineWeights& y) { return f_value(y.values()); }

Tree build_caterpillar(const SpineWeights& y) {
    const std::int64_t n = y.tree_size();
    if (n > kMaxVertices)
        throw OverflowError("caterpillar would have " + std::to_string(n) +
                            " vertices, over the cap of " +
                            std::to_string(kMaxVertices));
    const std::int64_t k = y.k();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    if (k == 0) {
        edges.emplace_back(0, 1);
        return Tree(2, std::move(edges));
    }
    for (std::int64_t i = 0; i + 1 < k; ++i)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    std::int64_t next = k;
    const auto& w = y.values();
    for (std::int64_t i = 0; i < k; ++i) {
        std::int64_t pendants = w[static_cast<std::size_t>(i)];
        if (k >= 2 && i > 0 && i + 1 < k) --pendants;
        for (std::int64_t p = 0; p < pendants; ++p)
            edges.emplace_back(static_cast<int>(i), static_cast<int>(next++));
    }
    return Tree(n, std::move(edges));
}

WienerValue caterpillar_wiener(const SpineWeights& y) {
    return checked_add(checked_square(y.tree_size() - 1), f_value(y));
}

std::int64_t swap_delta(const SpineWeights& y, std::int64_t i) {
    const std::int64_t k = y.k();
    if (i < 1 || i > k - 1)
        throw InputError("swap position must satisfy 1 <= i <= k-1");
    const auto& z = y.values();
    const auto a = static_cast<std::size_t>(i - 1); // left of the pair
    std::int64_t before = 0, after = 0;
    for (std::size_t j = 0; j < a; ++j) before = checked_add(before, z[j]);
    for (std::size_t j = a + 2; j < z.size(); ++j)
        after = checked_add(after, z[j]);
    return checked_mul(checked_sub(z[a + 1], z[a]),
                       checked_sub(before, after));
}

std::int64_t prefix_suffix_balance(const SpineWeights& y, std::int64_t p) {
    const std::int64_t k = y.k();
    if (p < 2 || p > k - 1)
        throw InputError("balance position must satisfy 2 <= p <= k-1");
    const auto& z = y.values();
    std::int64_t f = 0;
    for (std::int64_t j = 0; j <= p - 3; ++j)
        f = checked_add(f, z[static_cast<std::size_t>(j)]);
    for (std::int64_t j = p; j < k; ++j)
        f = checked_sub(f, z[static_cast<std::size_t>(j)]);
    return f;
}

std::int64_t find_pivot(const SpineWeights& y) {
    const std::int64_t k = y.k();
    if (k < 5)
        throw UnsupportedKError("pivot needs k >= 5, got k = " +
                                std::to_string(k));
    for (std::int64_t t = 2; t <= k - 2; ++t) {
        if (prefix_suffix_balance(y, t) <= 0 &&
            prefix_suffix_balance(y, t + 1) > 0)
            return t;
    }
    throw NoPivotError("no prefix/suffix sign change in " + y.str());
}

bool is_valley(const SpineWeights& y) {
    const auto& z = y.values();
    std::size_t i = 1;
    while (i < z.size() && z[i] <= z[i - 1]) ++i;
    while (i < z.size() && z[i] >= z[i - 1]) ++i;
    return i >= z.size();
}

SpineWeights canonicalize(const SpineWeights& y) {
    std::vector<std::int64_t> rev(y.values().rbegin(), y.values().rend());
    if (std::lexicographical_compare(y.values().begin(), y.values().end(),
                                     rev.begin(), rev.end()))
        return SpineWeights(std::move(rev));
    return y;
}

} // namespace wiener
