#include "distset/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace distset {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder) throw OrderTooLarge("graph order out of range");
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) g.set_edge(i, j, true);
    return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

void Graph::set_edge(int i, int j, bool present) {
    if (i == j) throw Error("self-loops are not representable");
    if (present) {
        adj_[i] |= static_cast<std::uint16_t>(1u << j);
        adj_[j] |= static_cast<std::uint16_t>(1u << i);
    } else {
        adj_[i] &= static_cast<std::uint16_t>(~(1u << j));
        adj_[j] &= static_cast<std::uint16_t>(~(1u << i));
    }
}

int Graph::degree(int i) const { return std::popcount(adj_[i]); }

int Graph::edge_count() const {
    int total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

bool Graph::is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }
bool Graph::is_empty() const { return edge_count() == 0; }

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph h(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < i; ++j)
            if (edge(i, j)) h.set_edge(perm[i], perm[j], true);
    return h;
}

Graph Graph::without_vertex(int v) const {
    Graph h(n_ - 1);
    for (int i = 0, ii = 0; i < n_; ++i) {
        if (i == v) continue;
        for (int j = 0, jj = 0; j < i; ++j) {
            if (j == v) continue;
            if (edge(i, j)) h.set_edge(ii, jj, true);
            ++jj;
        }
        ++ii;
    }
    return h;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
        if (adj_[i] != o.adj_[i]) return false;
    return true;
}

Graph decode(const GraphCode& code, int n) {
    if (n < 1 || n > kMaxOrder) throw OrderTooLarge("decode: order out of range");
    if (static_cast<int>(code.size()) != n * (n - 1) / 2)
        throw LengthMismatch("decode: code length != n(n-1)/2");
    Graph g(n);
    size_t k = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j, ++k) {
            char c = code[k];
            if (c == 'a') g.set_edge(i, j, true);
            else if (c != 'b') throw BadAlphabet("decode: character outside {a,b}");
        }
    }
    return g;
}

GraphCode encode(const Graph& g) {
    GraphCode code;
    code.reserve(g.order() * (g.order() - 1) / 2);
    for (int i = 1; i < g.order(); ++i)
        for (int j = 0; j < i; ++j) code.push_back(g.edge(i, j) ? 'a' : 'b');
    return code;
}

Graph complement(const Graph& g) {
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < i; ++j) h.set_edge(i, j, !g.edge(i, j));
    return h;
}

bool is_clique_union(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack = {s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (g.edge(v, w) && comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (comp[i] == comp[j] && !g.edge(i, j)) return false;
    return true;
}

namespace {

// Minimum-code search. The code is the row-wise concatenation of the new
// lower triangle, so placing vertex k appends its adjacency block against
// the k already-placed vertices. Lexicographic minimality means only
// candidates achieving the smallest next block can extend an optimal
// prefix; the search branches on exactly those, collapsing twin vertices
// (swapping true or false twins is an automorphism of the rest).
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> placed;       // placed[k] = original vertex at position k
    std::vector<int> best_order;   // best complete placement found
    GraphCode best_code;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    GraphCode code_of_placement() const {
        GraphCode code;
        code.reserve(n * (n - 1) / 2);
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j)
                code.push_back(g.edge(placed[i], placed[j]) ? 'a' : 'b');
        return code;
    }

    void run(std::uint16_t placed_mask) {
        int depth = static_cast<int>(placed.size());
        if (depth == n) {
            GraphCode code = code_of_placement();
            if (!have_best || code < best_code) {
                best_code = std::move(code);
                best_order = placed;
                have_best = true;
            }
            return;
        }
        // Blocks against the placed prefix, most adjacency first ('a' < 'b').
        std::uint16_t best_block = 0;
        bool first = true;
        std::vector<std::uint16_t> block(n, 0);
        for (int v = 0; v < n; ++v) {
            if ((placed_mask >> v) & 1u) continue;
            std::uint16_t b = 0;
            for (int k = 0; k < depth; ++k)
                if (g.edge(v, placed[k])) b |= static_cast<std::uint16_t>(1u << k);
            block[v] = b;
            // Lexicographically smaller block = 'a' earliest: compare by the
            // lowest differing bit, set bit wins ('a' sorts before 'b').
            if (first) {
                best_block = b;
                first = false;
            } else if (b != best_block) {
                std::uint16_t diff = b ^ best_block;
                std::uint16_t low = diff & static_cast<std::uint16_t>(-diff);
                if (b & low) best_block = b;
            }
        }
        std::uint16_t tried = 0;  // twin representatives already expanded
        for (int v = 0; v < n; ++v) {
            if ((placed_mask >> v) & 1u) continue;
            if (block[v] != best_block) continue;
            bool twin_seen = false;
            for (int u = 0; u < n && !twin_seen; ++u) {
                if (!((tried >> u) & 1u)) continue;
                std::uint16_t keep =
                    static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
                if ((g.row(u) & keep) == (g.row(v) & keep)) twin_seen = true;
            }
            if (twin_seen) continue;
            tried |= static_cast<std::uint16_t>(1u << v);
            placed.push_back(v);
            run(placed_mask | static_cast<std::uint16_t>(1u << v));
            placed.pop_back();
        }
    }
};

} // namespace

CanonicalForm canonicalize(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder) throw OrderTooLarge("canonicalize: order too large");
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (n <= 1 || g.is_complete() || g.is_empty())
        return {g, identity};
    CanonSearch search(g);
    search.placed.reserve(n);
    search.run(0);
    // best_order lists original vertices by position; the witnessing map
    // sends original label to its position.
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[search.best_order[k]] = k;
    return {g.relabeled(perm), perm};
}

GraphCode canonical_code(const Graph& g) { return encode(canonicalize(g).graph); }

GraphCode class_key(const Graph& g) {
    GraphCode c1 = canonical_code(g);
    GraphCode c2 = canonical_code(complement(g));
    return std::min(c1, c2);
}

bool self_complementary(const Graph& g) {
    return canonical_code(g) == canonical_code(complement(g));
}

std::vector<Graph> extensions(const Graph& g) {
    const int n = g.order();
    if (n + 1 > kMaxOrder) throw OrderTooLarge("extensions: order too large");
    std::vector<Graph> out;
    out.reserve(size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Graph h(n + 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j)
                if (g.edge(i, j)) h.set_edge(i, j, true);
            if ((mask >> i) & 1u) h.set_edge(n, i, true);
        }
        out.push_back(h);
    }
    return out;
}

std::vector<Graph> enumerate_iso_classes(int n) {
    if (n < 1 || n > 8) throw OrderTooLarge("enumerate_iso_classes: n must be in 1..8");
    std::vector<Graph> reps = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<GraphCode, Graph> classes;
        for (const Graph& g : reps) {
            for (const Graph& h : extensions(g)) {
                GraphCode key = canonical_code(h);
                if (!classes.count(key)) classes.emplace(key, decode(key, k));
            }
        }
        reps.clear();
        for (auto& [key, g] : classes) reps.push_back(g);
    }
    return reps;
}

std::vector<Graph> enumerate_classes(int n) {
    std::map<GraphCode, Graph> classes;
    for (const Graph& g : enumerate_iso_classes(n)) {
        GraphCode key = class_key(g);
        if (!classes.count(key)) classes.emplace(key, decode(key, n));
    }
    std::vector<Graph> out;
    for (auto& [key, g] : classes) out.push_back(g);
    return out;
}

GraphCode canonical_code_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > 7) throw OrderTooLarge("bruteforce canonical: n too large");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    GraphCode best;
    bool first = true;
    do {
        GraphCode code = encode(g.relabeled(perm));
        if (first || code < best) {
            best = code;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace distset
