#ifndef DISTSET_REALIZE_HPP
#define DISTSET_REALIZE_HPP

#include <vector>

#include "distset/dissolve.hpp"
#include "distset/graph.hpp"
#include "distset/realalg.hpp"

namespace distset {

// n x d floating coordinates. Certification stays exact upstream; these
// embeddings are for inspection and residual checks only.
struct Realization {
    int n = 0;
    int dim = 0;
    std::vector<double> coords;  // row-major n x dim
    double alpha1 = 0.0;         // edge distance
    double alpha2 = 0.0;         // non-edge distance

    double at(int i, int k) const { return coords[i * dim + k]; }
    // Largest |dist(i,j) - target| / target over all pairs.
    double max_relative_residual(const Graph& g) const;
};

// Spherical-mode realization from a certified solution of the candidate
// Gram system: alpha_i = sqrt(2 - 2x). Throws RankMismatch when the
// floating spectrum disagrees with the certified rank.
Realization realize_spherical(const Graph& g, const RealAlg& a, const RealAlg& b, int rank,
                              int d);

// General-mode realization from a certified Menger solution (alpha1 = 1).
Realization realize_general(const Graph& g, const RealAlg& b, int rank, int d);

// Cyclic Jacobi eigendecomposition of a symmetric matrix (row-major).
void eigen_symmetric(std::vector<double> m, int n, std::vector<double>& eigenvalues,
                     std::vector<double>& eigenvectors);

} // namespace distset

#endif
