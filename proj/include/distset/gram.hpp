#ifndef DISTSET_GRAM_HPP
#define DISTSET_GRAM_HPP

#include <optional>
#include <vector>

#include "distset/bipoly.hpp"
#include "distset/graph.hpp"
#include "distset/realalg.hpp"

namespace distset {

// Symmetric matrix of bivariate polynomials.
struct PolyMatrix {
    int order = 0;
    std::vector<std::vector<BiPoly>> entries;

    static PolyMatrix identity(int n);
    const BiPoly& at(int i, int j) const { return entries[i][j]; }
};

// G(a,b) = a*A(graph) + b*A(complement) + I.
PolyMatrix candidate_gram(const Graph& g);

// Gram matrix of the configuration translated so the last vertex is the
// origin, in squared-distance parameters (a, b) = (alpha1^2, alpha2^2):
// diagonal D(i,n), off-diagonal (D(i,n)+D(j,n)-D(i,j))/2. Order n-1.
PolyMatrix menger_matrix(const Graph& g);

// Determinants of all C(order, k) principal k x k submatrices,
// cofactor expansion for k <= 5 and fraction-free elimination above.
std::vector<BiPoly> principal_minors(const PolyMatrix& m, int k);
// All k x k minors (every row set x column set); completeness audits only.
std::vector<BiPoly> all_minors(const PolyMatrix& m, int k);

BiPoly det_poly(const std::vector<std::vector<BiPoly>>& sub);

// e[k] = sum of all k x k principal minors (e[0] = 1), so that
// det(tI - M) = sum_k (-1)^k e[k] t^(order-k).
struct CharCoeffs {
    std::vector<BiPoly> e;
};

// Newton-identity route over the polynomial ring (power sums of M).
CharCoeffs char_coeffs(const PolyMatrix& m);
// Independent route by explicit principal-minor summation (small orders).
CharCoeffs char_coeffs_by_minors(const PolyMatrix& m);

// PSD test by the signs of the characteristic polynomial coefficients:
// PSD iff e[k] >= 0 for all k; then rank = max{k : e[k] > 0}.
struct PsdRank {
    bool is_psd = false;
    std::optional<int> rank;  // defined only when is_psd
};
PsdRank psd_rank_at(const PolyMatrix& m, const RealAlg& a, const RealAlg& b);
// Univariate variant for matrices not involving a (general pipeline).
PsdRank psd_rank_at_b(const PolyMatrix& m, const RealAlg& b);

} // namespace distset

#endif
