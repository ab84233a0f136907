#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wiener {

/// Sum of pairwise distances in a tree.  Always fits in 64 bits for trees
/// within kMaxVertices; the arithmetic that produces one is overflow-checked.
using WienerValue = std::int64_t;

/// An unrooted tree on vertices 0..n-1.
class Tree {
public:
    /// Throws InvalidTreeError unless the edge list is exactly a tree:
    /// n-1 edges, labels in range, no self loops or repeats, connected.
    Tree(std::int64_t n, std::vector<std::pair<int, int>> edges);

    std::int64_t n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    /// Degree of each vertex, indexed by label (not sorted).
    std::vector<std::int64_t> degrees() const;

private:
    std::int64_t n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Wiener value by running a BFS from every vertex and summing distances.
/// O(n^2); intended as the reference implementation.
WienerValue wiener_pairwise(const Tree& t);

/// Wiener value via the edge-cut identity: each edge contributes the product
/// of the two component sizes left after deleting it.  O(n).
WienerValue wiener_edgecut(const Tree& t);

/// Reads a tree in the plain text format: first line n, then n-1 lines
/// "u v" with 0-based labels.  Throws InputError on malformed text and
/// InvalidTreeError if the edges do not form a tree.
Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const Tree& t);

/// Decodes a Pruefer sequence over labels 0..n-1 (length n-2, n >= 2) into
/// the unique labeled tree it encodes.  Throws InputError on bad input.
Tree decode_pruefer(std::span<const int> seq, std::int64_t n);

/// Uniformly random labeled tree on n vertices (uniform Pruefer sequence).
Tree random_tree(std::int64_t n, std::mt19937_64& rng);

/// True when deleting all leaves of the tree leaves a (possibly empty) path.
/// Equivalently, no internal vertex has three or more internal neighbors.
bool is_caterpillar(const Tree& t);

} // namespace wiener
