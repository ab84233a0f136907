#include "wiener/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_set>

#include "wiener/checked.hpp"
#include "wiener/degree_sequence.hpp"
#include "wiener/errors.hpp"

namespace wiener {

Tree::Tree(std::int64_t n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw InvalidTreeError("vertex count must be >= 1");
    if (n_ > kMaxVertices)
        throw OverflowError("vertex count " + std::to_string(n_) +
                            " exceeds the cap of " + std::to_string(kMaxVertices));
    if (static_cast<std::int64_t>(edges_.size()) != n_ - 1)
        throw InvalidTreeError("a tree on " + std::to_string(n_) +
                               " vertices has " + std::to_string(n_ - 1) +
                               " edges, got " + std::to_string(edges_.size()));
    adj_.resize(static_cast<std::size_t>(n_));
    std::unordered_set<std::int64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidTreeError("edge label out of range: " +
                                   std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw InvalidTreeError("self loop at vertex " + std::to_string(u));
        std::int64_t key = static_cast<std::int64_t>(std::min(u, v)) * n_ +
                           std::max(u, v);
        if (!seen.insert(key).second)
            throw InvalidTreeError("duplicate edge " + std::to_string(u) + " " +
                                   std::to_string(v));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    // n-1 distinct edges without loops: connectivity is the one tree
    // property left to check.
    std::vector<char> vis(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    std::int64_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (!vis[static_cast<std::size_t>(v)]) {
                vis[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != n_)
        throw InvalidTreeError("edge list is disconnected (" +
                               std::to_string(reached) + " of " +
                               std::to_string(n_) + " vertices reached)");
}

std::vector<std::int64_t> Tree::degrees() const {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n_), 0);
    for (auto& [u, v] : edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

WienerValue wiener_pairwise(const Tree& t) {
    const auto n = static_cast<std::size_t>(t.n());
    const auto& adj = t.adjacency();
    std::vector<std::int64_t> dist(n);
    std::vector<int> queue(n);
    std::int64_t total = 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue[0] = static_cast<int>(s);
        std::size_t head = 0, tail = 1;
        std::int64_t from_s = 0;
        while (head < tail) {
            int u = queue[head++];
            from_s = checked_add(from_s, dist[static_cast<std::size_t>(u)]);
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] =
                        dist[static_cast<std::size_t>(u)] + 1;
                    queue[tail++] = v;
                }
            }
        }
        total = checked_add(total, from_s);
    }
    return total / 2;
}

WienerValue wiener_edgecut(const Tree& t) {
    const auto n = t.n();
    if (n == 1) return 0;
    const auto& adj = t.adjacency();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    order.push_back(0);
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (parent[static_cast<std::size_t>(v)] == -1) {
                parent[static_cast<std::size_t>(v)] = u;
                order.push_back(v);
            }
        }
    }
    std::vector<std::int64_t> sz(static_cast<std::size_t>(n), 1);
    std::int64_t total = 0;
    for (std::size_t i = order.size(); i-- > 1;) {
        int v = order[i];
        sz[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] +=
            sz[static_cast<std::size_t>(v)];
        total = checked_add(
            total, checked_mul(sz[static_cast<std::size_t>(v)],
                               n - sz[static_cast<std::size_t>(v)]));
    }
    return total;
}

Tree read_tree(std::istream& in) {
    std::int64_t n = 0;
    if (!(in >> n)) throw InputError("tree file: missing vertex count");
    if (n < 1) throw InputError("tree file: vertex count must be >= 1");
    if (n > kMaxVertices)
        throw OverflowError("tree file: vertex count exceeds the cap of " +
                            std::to_string(kMaxVertices));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t i = 0; i < n - 1; ++i) {
        std::int64_t u = 0, v = 0;
        if (!(in >> u >> v))
            throw InputError("tree file: expected " + std::to_string(n - 1) +
                             " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("tree file: edge label out of range on edge " +
                             std::to_string(i + 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest)
        throw InputError("tree file: trailing text \"" + rest + "\"");
    return Tree(n, std::move(edges));
}

Tree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open tree file " + path);
    return read_tree(in);
}

void write_tree(std::ostream& out, const Tree& t) {
    out << t.n() << "\n";
    for (auto& [u, v] : t.edges()) out << u << " " << v << "\n";
}

Tree decode_pruefer(std::span<const int> seq, std::int64_t n) {
    if (n < 2) throw InputError("a code needs n >= 2");
    if (static_cast<std::int64_t>(seq.size()) != n - 2)
        throw InputError("code length must be n-2");
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 1);
    for (int a : seq) {
        if (a < 0 || a >= n) throw InputError("code entry out of range");
        ++deg[static_cast<std::size_t>(a)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (std::int64_t v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1)
            leaves.push(static_cast<int>(v));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int a : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, a);
        if (--deg[static_cast<std::size_t>(a)] == 1) leaves.push(a);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(u, v);
    return Tree(n, std::move(edges));
}

Tree random_tree(std::int64_t n, std::mt19937_64& rng) {
    if (n < 1) throw InputError("need n >= 1");
    if (n == 1) return Tree(1, {});
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& a : seq)
        a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return decode_pruefer(seq, n);
}

bool is_caterpillar(const Tree& t) {
    if (t.n() <= 3) return true;
    auto deg = t.degrees();
    // Removing the leaves must leave a path: every internal vertex may have
    // at most two internal neighbors.
    std::vector<int> internal_nbrs(static_cast<std::size_t>(t.n()), 0);
    for (auto& [u, v] : t.edges()) {
        if (deg[static_cast<std::size_t>(u)] >= 2 &&
            deg[static_cast<std::size_t>(v)] >= 2) {
            ++internal_nbrs[static_cast<std::size_t>(u)];
            ++internal_nbrs[static_cast<std::size_t>(v)];
        }
    }
    for (std::int64_t v = 0; v < t.n(); ++v)
        if (deg[static_cast<std::size_t>(v)] >= 2 &&
            internal_nbrs[static_cast<std::size_t>(v)] > 2)
            return false;
    return true;
}

} // namespace wiener
