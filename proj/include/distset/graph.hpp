#ifndef DISTSET_GRAPH_HPP
#define DISTSET_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "distset/errors.hpp"

namespace distset {

// Codec string over {a, b}: row-wise concatenation of the lower triangular
// part of the adjacency matrix, rows 2..n; 'a' marks adjacent pairs.
using GraphCode = std::string;

inline constexpr int kMaxOrder = 12;

// Simple undirected graph on up to kMaxOrder vertices; adjacency rows are
// bitmasks. Vertices are 0-based internally (the codec documentation uses
// v1..vn).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph empty_graph(int n);

    int order() const { return n_; }
    bool edge(int i, int j) const { return (adj_[i] >> j) & 1u; }
    void set_edge(int i, int j, bool present);
    int degree(int i) const;
    int edge_count() const;
    std::uint16_t row(int i) const { return adj_[i]; }

    bool is_complete() const;
    bool is_empty() const;

    Graph relabeled(const std::vector<int>& perm) const;  // new index = perm[old]
    // Induced subgraph on the vertices not listed in `dropped`.
    Graph without_vertex(int v) const;

    bool operator==(const Graph& o) const;

private:
    int n_ = 0;
    std::array<std::uint16_t, kMaxOrder> adj_{};
};

Graph decode(const GraphCode& code, int n);
GraphCode encode(const Graph& g);
Graph complement(const Graph& g);

// True iff every connected component is a complete graph.
bool is_clique_union(const Graph& g);

// Canonical representative of the isomorphism class (minimum code over
// vertex relabelings, found by partition refinement with backtracking),
// plus a witnessing permutation: canonical = g.relabeled(perm).
struct CanonicalForm {
    Graph graph;
    std::vector<int> perm;
};
CanonicalForm canonicalize(const Graph& g);
GraphCode canonical_code(const Graph& g);

// Identifies {graph, complement} classes: the lexicographically smaller of
// the two canonical codes.
GraphCode class_key(const Graph& g);
bool self_complementary(const Graph& g);

// All 2^n one-vertex extensions (every neighborhood of a new last vertex).
std::vector<Graph> extensions(const Graph& g);

// One representative per isomorphism class on n vertices (n <= 8).
std::vector<Graph> enumerate_iso_classes(int n);
// One representative per {graph, complement} class on n vertices (n <= 8).
std::vector<Graph> enumerate_classes(int n);

// Brute-force minimum code over all n! relabelings; test oracle, n <= 7.
GraphCode canonical_code_bruteforce(const Graph& g);

} // namespace distset

#endif
