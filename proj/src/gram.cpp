#include "distset/gram.hpp"

#include <algorithm>

#include "distset/errors.hpp"

namespace distset {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m;
    m.order = n;
    m.entries.assign(n, std::vector<BiPoly>(n));
    for (int i = 0; i < n; ++i) m.entries[i][i] = BiPoly::constant(Rat(1));
    return m;
}

PolyMatrix candidate_gram(const Graph& g) {
    const int n = g.order();
    PolyMatrix m = PolyMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            m.entries[i][j] = g.edge(i, j) ? BiPoly::var_a() : BiPoly::var_b();
        }
    }
    return m;
}

PolyMatrix menger_matrix(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw BadSize("menger_matrix needs n >= 2");
    auto dist2 = [&](int i, int j) {
        return g.edge(i, j) ? BiPoly::var_a() : BiPoly::var_b();
    };
    PolyMatrix m;
    m.order = n - 1;
    m.entries.assign(n - 1, std::vector<BiPoly>(n - 1));
    const int base = n - 1;  // the last vertex is the origin
    for (int i = 0; i < n - 1; ++i) {
        m.entries[i][i] = dist2(i, base);
        for (int j = 0; j < i; ++j) {
            BiPoly e = (dist2(i, base) + dist2(j, base) - dist2(i, j)).scaled(Rat(1, 2));
            m.entries[i][j] = e;
            m.entries[j][i] = e;
        }
    }
    return m;
}

namespace {

BiPoly det_cofactor(const std::vector<std::vector<BiPoly>>& m, std::vector<int>& cols,
                    int row) {
    const int n = static_cast<int>(m.size());
    if (row == n) return BiPoly::constant(Rat(1));
    BiPoly acc;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        int c = cols[ci];
        if (c < 0) continue;
        const BiPoly& pivot = m[row][c];
        if (!pivot.is_zero()) {
            cols[ci] = -1;
            BiPoly sub = det_cofactor(m, cols, row + 1);
            cols[ci] = c;
            int used = 0;
            for (size_t k = 0; k < ci; ++k)
                if (cols[k] >= 0) ++used;
            BiPoly term = pivot * sub;
            if (used % 2 == 1) term = -term;
            acc = acc + term;
        }
    }
    return acc;
}

struct RB {
    BiPoly p;
    bool is_zero() const { return p.is_zero(); }
    RB operator-() const { return {-p}; }
    RB operator+(const RB& o) const { return {p + o.p}; }
    RB operator-(const RB& o) const { return {p - o.p}; }
    RB operator*(const RB& o) const { return {p * o.p}; }
    RB divexact(const RB& o) const { return {p.divexact(o.p)}; }
};

} // namespace

BiPoly det_poly(const std::vector<std::vector<BiPoly>>& sub) {
    const int k = static_cast<int>(sub.size());
    if (k == 0) return BiPoly::constant(Rat(1));
    if (k <= 5) {
        std::vector<int> cols(k);
        for (int i = 0; i < k; ++i) cols[i] = i;
        return det_cofactor(sub, cols, 0);
    }
    std::vector<std::vector<RB>> m(k, std::vector<RB>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = RB{sub[i][j]};
    return det_bareiss(std::move(m), RB{BiPoly::constant(Rat(1))}).p;
}

namespace {

template <class Fn>
void for_each_subset(int n, int k, Fn fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::vector<BiPoly>> submatrix(const PolyMatrix& m, const std::vector<int>& rows,
                                           const std::vector<int>& cols) {
    std::vector<std::vector<BiPoly>> sub(rows.size(), std::vector<BiPoly>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub[i][j] = m.at(rows[i], cols[j]);
    return sub;
}

} // namespace

std::vector<BiPoly> principal_minors(const PolyMatrix& m, int k) {
    if (k < 1 || k > m.order) throw BadSize("principal_minors: bad size");
    std::vector<BiPoly> out;
    for_each_subset(m.order, k, [&](const std::vector<int>& idx) {
        out.push_back(det_poly(submatrix(m, idx, idx)));
    });
    return out;
}

std::vector<BiPoly> all_minors(const PolyMatrix& m, int k) {
    if (k < 1 || k > m.order) throw BadSize("all_minors: bad size");
    std::vector<std::vector<int>> subsets;
    for_each_subset(m.order, k, [&](const std::vector<int>& idx) { subsets.push_back(idx); });
    std::vector<BiPoly> out;
    for (const auto& rows : subsets)
        for (const auto& cols : subsets) out.push_back(det_poly(submatrix(m, rows, cols)));
    return out;
}

CharCoeffs char_coeffs(const PolyMatrix& m) {
    const int n = m.order;
    // Power sums p_k = tr(M^k), then Newton's identities.
    std::vector<std::vector<BiPoly>> power = m.entries;
    std::vector<BiPoly> psums(n + 1);
    auto trace = [&](const std::vector<std::vector<BiPoly>>& x) {
        BiPoly t;
        for (int i = 0; i < n; ++i) t = t + x[i][i];
        return t;
    };
    if (n > 0) psums[1] = trace(power);
    for (int k = 2; k <= n; ++k) {
        std::vector<std::vector<BiPoly>> next(n, std::vector<BiPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BiPoly acc;
                for (int l = 0; l < n; ++l) {
                    if (power[i][l].is_zero() || m.entries[l][j].is_zero()) continue;
                    acc = acc + power[i][l] * m.entries[l][j];
                }
                next[i][j] = acc;
            }
        power = std::move(next);
        psums[k] = trace(power);
    }
    CharCoeffs cc;
    cc.e.assign(n + 1, BiPoly());
    cc.e[0] = BiPoly::constant(Rat(1));
    for (int k = 1; k <= n; ++k) {
        BiPoly acc;
        for (int i = 1; i <= k; ++i) {
            BiPoly term = cc.e[k - i] * psums[i];
            if (i % 2 == 0) term = -term;
            acc = acc + term;
        }
        cc.e[k] = acc.scaled(Rat(1, k));
    }
    return cc;
}

CharCoeffs char_coeffs_by_minors(const PolyMatrix& m) {
    CharCoeffs cc;
    cc.e.assign(m.order + 1, BiPoly());
    cc.e[0] = BiPoly::constant(Rat(1));
    for (int k = 1; k <= m.order; ++k) {
        BiPoly acc;
        for (const auto& d : principal_minors(m, k)) acc = acc + d;
        cc.e[k] = acc;
    }
    return cc;
}

PsdRank psd_rank_at(const PolyMatrix& m, const RealAlg& a, const RealAlg& b) {
    CharCoeffs cc = char_coeffs(m);
    PsdRank out;
    int rank = 0;
    for (int k = 1; k <= m.order; ++k) {
        int s = sign2(cc.e[k], a, b);
        if (s < 0) return out;  // not PSD
        if (s > 0) rank = k;
    }
    out.is_psd = true;
    out.rank = rank;
    return out;
}

PsdRank psd_rank_at_b(const PolyMatrix& m, const RealAlg& b) {
    CharCoeffs cc = char_coeffs(m);
    PsdRank out;
    int rank = 0;
    for (int k = 1; k <= m.order; ++k) {
        int s = alg_sign(cc.e[k].as_unipoly_in_b(), b);
        if (s < 0) return out;
        if (s > 0) rank = k;
    }
    out.is_psd = true;
    out.rank = rank;
    return out;
}

} // namespace distset
