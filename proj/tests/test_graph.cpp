#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "distset/graph.hpp"

using namespace distset;

TEST_CASE("codec basics") {
    Graph path = decode("aba", 3);
    CHECK(path.edge(1, 0));
    CHECK(!path.edge(2, 0));
    CHECK(path.edge(2, 1));
    CHECK(encode(path) == "aba");

    Graph k5 = decode("aaaaaaaaaa", 5);
    CHECK(k5.is_complete());
    CHECK(encode(Graph::complete(5)) == "aaaaaaaaaa");
    CHECK(encode(Graph::empty_graph(3)) == "bbb");

    // The 15-character code of the octahedron: complement is three disjoint
    // edges (a perfect matching).
    Graph oct = decode("aaaaababaabaaaa", 6);
    Graph co = complement(oct);
    CHECK(co.edge_count() == 3);
    for (int i = 0; i < 6; ++i) CHECK(co.degree(i) == 1);
    CHECK(is_clique_union(co));
    CHECK(!is_clique_union(oct));

    CHECK_THROWS_AS(decode("ab", 3), LengthMismatch);
    CHECK_THROWS_AS(decode("abc", 3), BadAlphabet);
}

TEST_CASE("codec round trip on random strings") {
    std::mt19937 rng(2024);
    for (int n : {4, 7, 9}) {
        std::uniform_int_distribution<int> bit(0, 1);
        for (int trial = 0; trial < 200; ++trial) {
            GraphCode code;
            for (int k = 0; k < n * (n - 1) / 2; ++k) code.push_back(bit(rng) ? 'a' : 'b');
            CHECK(encode(decode(code, n)) == code);
        }
    }
}

TEST_CASE("complement is an involution and class_key is complement-stable") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + trial % 4;
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) g.set_edge(i, j, bit(rng));
        CHECK(complement(complement(g)) == g);
        CHECK(class_key(g) == class_key(complement(g)));
    }
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 6;  // up to 8
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) g.set_edge(i, j, bit(rng));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = g.relabeled(perm);
        CHECK(canonical_code(g) == canonical_code(h));
        auto form = canonicalize(g);
        CHECK(encode(form.graph) == canonical_code(g));
        CHECK(g.relabeled(form.perm) == form.graph);
        // Idempotent.
        CHECK(canonical_code(form.graph) == canonical_code(g));
    }
}

TEST_CASE("canonical form matches brute force on small graphs") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + trial % 5;  // up to 6
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) g.set_edge(i, j, bit(rng));
        CHECK(canonical_code(g) == canonical_code_bruteforce(g));
    }
}

TEST_CASE("K3 plus isolated vertex has one canonical form over all relabelings") {
    Graph g(4);
    g.set_edge(0, 1, true);
    g.set_edge(0, 2, true);
    g.set_edge(1, 2, true);
    std::vector<int> perm = {0, 1, 2, 3};
    std::set<GraphCode> forms;
    do {
        forms.insert(canonical_code(g.relabeled(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(forms.size() == 1);
}

TEST_CASE("self-complementary recognition") {
    // Paley graph on 9 vertices and the 9-vertex general-table row are
    // self-complementary; the 5-cycle as well.
    Graph paley = decode("aaaabbabbabababbabbaabbaababbbababaa", 9);
    CHECK(self_complementary(paley));
    Graph g9d = decode("aaaaaaaaabaababaabbaaabbbbbbbabbbbbb", 9);
    CHECK(self_complementary(g9d));
    Graph c5 = decode("ababbaabba", 5);
    CHECK(self_complementary(c5));
    CHECK(!self_complementary(decode("aba", 3)));
}

TEST_CASE("clique union detection") {
    CHECK(is_clique_union(Graph::complete(5)));
    CHECK(is_clique_union(Graph::empty_graph(4)));
    CHECK(!is_clique_union(decode("aba", 3)));
    int count = 0;
    for (const Graph& g : enumerate_iso_classes(6))
        if (is_clique_union(g)) ++count;
    CHECK(count == 11);
}

TEST_CASE("extensions enumerate all neighborhoods") {
    Graph k1(1);
    auto ext = extensions(k1);
    REQUIRE(ext.size() == 2);
    CHECK((ext[0].edge_count() + ext[1].edge_count()) == 1);

    Graph g = decode("aab", 3);
    auto e3 = extensions(g);
    CHECK(e3.size() == 8);
    for (const auto& h : e3) {
        CHECK(h.order() == 4);
        CHECK(h.without_vertex(3) == g);
    }
}

TEST_CASE("class enumeration counts") {
    // Isomorphism classes: 1, 2, 4, 11, 34, 156.
    CHECK(enumerate_iso_classes(1).size() == 1);
    CHECK(enumerate_iso_classes(2).size() == 2);
    CHECK(enumerate_iso_classes(3).size() == 4);
    CHECK(enumerate_iso_classes(4).size() == 11);
    CHECK(enumerate_iso_classes(5).size() == 34);
    CHECK(enumerate_iso_classes(6).size() == 156);
    // Up to complements: 1, 1, 2, 6, 18, 78.
    CHECK(enumerate_classes(1).size() == 1);
    CHECK(enumerate_classes(2).size() == 1);
    CHECK(enumerate_classes(3).size() == 2);
    CHECK(enumerate_classes(4).size() == 6);
    CHECK(enumerate_classes(5).size() == 18);
    CHECK(enumerate_classes(6).size() == 78);
}

TEST_CASE("seven-vertex class count") {
    CHECK(enumerate_classes(7).size() == 522);
}
