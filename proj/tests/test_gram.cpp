#include <doctest.h>

#include <random>

#include "distset/gram.hpp"
#include "distset/literal.hpp"

using namespace distset;

namespace {

PolyMatrix const_matrix(const std::vector<std::vector<Rat>>& m) {
    PolyMatrix p;
    p.order = static_cast<int>(m.size());
    p.entries.assign(p.order, std::vector<BiPoly>(p.order));
    for (int i = 0; i < p.order; ++i)
        for (int j = 0; j < p.order; ++j) p.entries[i][j] = BiPoly::constant(m[i][j]);
    return p;
}

std::vector<std::vector<Rat>> random_symmetric(std::mt19937& rng, int n, int span) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Rat v(num(rng), den(rng));
            v.canonicalize();
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    return m;
}

// Rank by fraction-free Gaussian elimination with full pivoting.
int elimination_rank(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    int rank = 0;
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (sign_of(m[i][col]) != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        for (int i = row + 1; i < n; ++i) {
            if (sign_of(m[i][col]) == 0) continue;
            Rat f = m[i][col] / m[row][col];
            for (int j = col; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int max_nonzero_principal_order(const std::vector<std::vector<Rat>>& m) {
    int n = static_cast<int>(m.size());
    PolyMatrix pm = const_matrix(m);
    int best = 0;
    for (int k = 1; k <= n; ++k) {
        bool any = false;
        for (const auto& d : principal_minors(pm, k))
            if (!d.is_zero()) { any = true; break; }
        if (any) best = k;
    }
    return best;
}

} // namespace

TEST_CASE("candidate gram shapes") {
    Graph k2 = Graph::complete(2);
    PolyMatrix g = candidate_gram(k2);
    CHECK(g.at(0, 0).is_one());
    CHECK(g.at(0, 1) == BiPoly::var_a());
    PolyMatrix e = candidate_gram(Graph::empty_graph(2));
    CHECK(e.at(0, 1) == BiPoly::var_b());

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + trial % 4;
        Graph gr(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) gr.set_edge(i, j, bit(rng));
        PolyMatrix m1 = candidate_gram(gr);
        PolyMatrix m2 = candidate_gram(complement(gr));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(m1.at(i, j).swap_vars() == m2.at(i, j));
    }
}

TEST_CASE("menger matrix shapes") {
    PolyMatrix k3 = menger_matrix(Graph::complete(3));
    CHECK(k3.order == 2);
    CHECK(k3.at(0, 0) == BiPoly::var_a());
    CHECK(k3.at(0, 1) == BiPoly::var_a().scaled(Rat(1, 2)));
    PolyMatrix k2 = menger_matrix(Graph::complete(2));
    CHECK(k2.order == 1);
    CHECK(k2.at(0, 0) == BiPoly::var_a());

    // Diagonal entries are the squared distances to the base point.
    Graph path = decode("aba", 3);
    PolyMatrix pm = menger_matrix(path);
    CHECK(pm.at(0, 0) == BiPoly::var_b());  // v1-v3 non-edge
    CHECK(pm.at(1, 1) == BiPoly::var_a());  // v2-v3 edge
}

TEST_CASE("principal minors") {
    PolyMatrix k3 = candidate_gram(Graph::complete(3));
    auto minors = principal_minors(k3, 3);
    REQUIRE(minors.size() == 1);
    // (1-a)^2 (1+2a) = 1 - 3a^2 + 2a^3
    BiPoly want = BiPoly::constant(Rat(1)) - BiPoly::term(2, 0, Rat(3)) +
                  BiPoly::term(3, 0, Rat(2));
    CHECK(minors[0] == want);

    auto ones = principal_minors(k3, 1);
    for (const auto& d : ones) CHECK(d.is_one());

    Graph g10(10);
    CHECK(principal_minors(candidate_gram(g10), 5).size() == 252);
}

TEST_CASE("characteristic coefficients, two routes") {
    PolyMatrix id3 = PolyMatrix::identity(3);
    CharCoeffs cc = char_coeffs(id3);
    REQUIRE(cc.e.size() == 4);
    CHECK(cc.e[0].is_one());
    CHECK(cc.e[1] == BiPoly::constant(Rat(3)));
    CHECK(cc.e[2] == BiPoly::constant(Rat(3)));
    CHECK(cc.e[3] == BiPoly::constant(Rat(1)));

    CharCoeffs k2 = char_coeffs(candidate_gram(Graph::complete(2)));
    CHECK(k2.e[2] == BiPoly::constant(Rat(1)) - BiPoly::term(2, 0, Rat(1)));

    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 5;  // up to 6
        PolyMatrix m = const_matrix(random_symmetric(rng, n, 4));
        CharCoeffs newton = char_coeffs(m);
        CharCoeffs minors = char_coeffs_by_minors(m);
        for (int k = 0; k <= n; ++k) CHECK(newton.e[k] == minors.e[k]);
    }
}

TEST_CASE("psd and rank at algebraic points") {
    // 16-cell parameters: rank 4, e_k = 0 beyond.
    Graph g8a = decode("aaaaaaaaabaabaaabaaaabaaaaaa", 8);
    PolyMatrix gram = candidate_gram(g8a);
    RealAlg a0(Rat(0)), bm1(Rat(-1));
    CharCoeffs cc = char_coeffs(gram);
    for (int k = 5; k <= 8; ++k) CHECK(sign2(cc.e[k], a0, bm1) == 0);
    CHECK(sign2(cc.e[4], a0, bm1) > 0);
    PsdRank pr = psd_rank_at(gram, a0, bm1);
    CHECK(pr.is_psd);
    CHECK(*pr.rank == 4);

    // K2 at a = 2: e2 = -3 < 0.
    PsdRank bad = psd_rank_at(candidate_gram(Graph::complete(2)), RealAlg(Rat(2)),
                              RealAlg(Rat(0)));
    CHECK(!bad.is_psd);

    // Octahedron at (0, -1): PSD with rank 3.
    Graph oct = decode("aaaaababaabaaaa", 6);
    PsdRank op = psd_rank_at(candidate_gram(oct), a0, bm1);
    CHECK(op.is_psd);
    CHECK(*op.rank == 3);
}

TEST_CASE("psd rule matches a Sturm eigenvalue-sign oracle") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 5;
        auto m = random_symmetric(rng, n, 3);
        PolyMatrix pm = const_matrix(m);
        CharCoeffs cc = char_coeffs(pm);
        bool all_nonneg = true;
        std::vector<Rat> e(n + 1);
        for (int k = 0; k <= n; ++k) {
            e[k] = cc.e[k].coeff(0, 0);
            if (sign_of(e[k]) < 0) all_nonneg = false;
        }
        // char(t) = sum (-1)^k e_k t^(n-k); count negative eigenvalues.
        std::vector<Rat> coeffs(n + 1);
        for (int k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0) ? e[k] : -e[k];
        UniPoly charpoly{std::move(coeffs)};
        // Strip roots at zero, then count on (-B, 0).
        while (sign_of(charpoly.coeff(0)) == 0)
            charpoly = charpoly.divexact(UniPoly::variable());
        bool has_negative = false;
        if (charpoly.degree() >= 1) {
            UniPoly sf = squarefree_part(charpoly);
            Rat bound = root_bound(sf);
            has_negative = count_roots(sf, -bound, Rat(0)) > 0;
        }
        CHECK(all_nonneg == !has_negative);
    }
}

TEST_CASE("principal-minor rank matches elimination rank") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 5;
        std::vector<std::vector<Rat>> m;
        if (trial % 2 == 0) {
            m = random_symmetric(rng, n, 3);
        } else {
            // Constructed rank-deficient A^T A with A of low row count.
            int r = 1 + trial % std::max(1, n - 1);
            std::uniform_int_distribution<int> num(-2, 2);
            std::vector<std::vector<Rat>> a(r, std::vector<Rat>(n));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j) a[i][j] = Rat(num(rng));
            m.assign(n, std::vector<Rat>(n, Rat(0)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < r; ++k) m[i][j] += a[k][i] * a[k][j];
        }
        CHECK(max_nonzero_principal_order(m) == elimination_rank(m));
    }
}
