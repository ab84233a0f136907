#include "wiener/degree_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "wiener/checked.hpp"
#include "wiener/errors.hpp"

namespace wiener {

DegreeSequence::DegreeSequence(std::vector<std::int64_t> sorted_desc)
    : degrees_(std::move(sorted_desc)) {
    k_ = static_cast<std::int64_t>(
        std::count_if(degrees_.begin(), degrees_.end(),
                      [](std::int64_t d) { return d >= 2; }));
}

DegreeSequence DegreeSequence::validate(std::vector<std::int64_t> raw) {
    const auto n = static_cast<std::int64_t>(raw.size());
    if (n < 2)
        throw TooSmallError("a tree needs at least two vertices, got " +
                            std::to_string(n));
    if (n > kMaxVertices)
        throw OverflowError("vertex count " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(kMaxVertices));
    std::int64_t sum = 0;
    for (std::int64_t d : raw) {
        if (d < 1)
            throw NotTreeGraphicError("degree " + std::to_string(d) +
                                      " is below 1");
        sum = checked_add(sum, d);
    }
    if (sum != 2 * (n - 1))
        throw NotTreeGraphicError(
            "degree sum " + std::to_string(sum) + " != 2(n-1) = " +
            std::to_string(2 * (n - 1)) + ", no tree realizes this list");
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return DegreeSequence(std::move(raw));
}

std::string DegreeSequence::str() const {
    std::string s;
    std::size_t i = 0;
    while (i < degrees_.size()) {
        std::size_t j = i;
        while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
        if (!s.empty()) s += ',';
        s += std::to_string(degrees_[i]);
        if (j - i > 1) s += "x" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::vector<std::int64_t> DegreeSequence::internal_weights() const {
    std::vector<std::int64_t> w;
    w.reserve(static_cast<std::size_t>(k_));
    for (std::int64_t d : degrees_) {
        if (d < 2) break; // sorted, leaves are all at the tail
        w.push_back(d - 1);
    }
    return w;
}

namespace {

std::int64_t parse_int(std::string_view tok) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = first + tok.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw InputError("bad integer \"" + std::string(tok) + "\"");
    return v;
}

} // namespace

DegreeSequence parse_degree_sequence(std::string_view text) {
    if (text.empty()) throw InputError("empty degree list");
    std::vector<std::int64_t> degrees;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        if (tok.empty())
            throw InputError("empty token in degree list");
        std::size_t x = tok.find('x');
        std::int64_t value;
        std::int64_t count = 1;
        if (x == std::string_view::npos) {
            value = parse_int(tok);
        } else {
            value = parse_int(tok.substr(0, x));
            count = parse_int(tok.substr(x + 1));
            if (count < 1)
                throw InputError("repeat count must be >= 1 in \"" +
                                 std::string(tok) + "\"");
        }
        if (static_cast<std::int64_t>(degrees.size()) + count > kMaxVertices + 1)
            throw OverflowError("degree list longer than the vertex cap");
        degrees.insert(degrees.end(), static_cast<std::size_t>(count), value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return DegreeSequence::validate(std::move(degrees));
}

} // namespace wiener
