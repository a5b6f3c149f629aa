#include "distset/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace distset {

void eigen_symmetric(std::vector<double> m, int n, std::vector<double>& eigenvalues,
                     std::vector<double>& eigenvectors) {
    eigenvectors.assign(n * n, 0.0);
    for (int i = 0; i < n; ++i) eigenvectors[i * n + i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += m[i * n + j] * m[i * n + j];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m[p * n + q];
                if (std::abs(apq) < 1e-18) continue;
                double theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double mkp = m[k * n + p], mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    double mpk = m[p * n + k], mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = eigenvectors[k * n + p], vkq = eigenvectors[k * n + q];
                    eigenvectors[k * n + p] = c * vkp - s * vkq;
                    eigenvectors[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    eigenvalues.assign(n, 0.0);
    for (int i = 0; i < n; ++i) eigenvalues[i] = m[i * n + i];
}

namespace {

// Coordinates from a numeric Gram matrix of certified rank.
std::vector<double> coords_from_gram(const std::vector<double>& gram, int n, int rank,
                                     int d) {
    std::vector<double> evals, evecs;
    eigen_symmetric(gram, n, evals, evecs);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return evals[x] > evals[y]; });
    double scale = std::max(1.0, std::abs(evals[order[0]]));
    for (int k = rank; k < n; ++k) {
        if (std::abs(evals[order[k]]) > 1e-7 * scale)
            throw RankMismatch("floating spectrum disagrees with certified rank");
    }
    for (int k = 0; k < rank; ++k) {
        if (evals[order[k]] < -1e-7 * scale)
            throw RankMismatch("negative eigenvalue in a certified PSD matrix");
    }
    std::vector<double> coords(n * d, 0.0);
    for (int k = 0; k < rank && k < d; ++k) {
        double lam = std::max(evals[order[k]], 0.0);
        double root = std::sqrt(lam);
        for (int i = 0; i < n; ++i) coords[i * d + k] = root * evecs[i * n + order[k]];
    }
    return coords;
}

} // namespace

double Realization::max_relative_residual(const Graph& g) const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) {
                double diff = at(i, k) - at(j, k);
                s += diff * diff;
            }
            double dist = std::sqrt(s);
            double target = g.edge(i, j) ? alpha1 : alpha2;
            worst = std::max(worst, std::abs(dist - target) / target);
        }
    }
    return worst;
}

Realization realize_spherical(const Graph& g, const RealAlg& a, const RealAlg& b, int rank,
                              int d) {
    const int n = g.order();
    double av = a.to_double(), bv = b.to_double();
    std::vector<double> gram(n * n, 0.0);
    for (int i = 0; i < n; ++i) {
        gram[i * n + i] = 1.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            gram[i * n + j] = g.edge(i, j) ? av : bv;
        }
    }
    Realization r;
    r.n = n;
    r.dim = d;
    r.coords = coords_from_gram(gram, n, rank, d);
    r.alpha1 = std::sqrt(2.0 - 2.0 * av);
    r.alpha2 = std::sqrt(2.0 - 2.0 * bv);
    if (g.is_complete()) r.alpha2 = r.alpha1;  // single-distance configuration
    if (g.is_empty()) r.alpha1 = r.alpha2;
    return r;
}

Realization realize_general(const Graph& g, const RealAlg& b, int rank, int d) {
    const int n = g.order();
    double bv = b.to_double();
    auto dist2 = [&](int i, int j) { return g.edge(i, j) ? 1.0 : bv; };
    const int m = n - 1;
    std::vector<double> gram(m * m, 0.0);
    for (int i = 0; i < m; ++i) {
        gram[i * m + i] = dist2(i, m);
        for (int j = 0; j < i; ++j) {
            double e = 0.5 * (dist2(i, m) + dist2(j, m) - dist2(i, j));
            gram[i * m + j] = e;
            gram[j * m + i] = e;
        }
    }
    std::vector<double> pts = coords_from_gram(gram, m, rank, d);
    Realization r;
    r.n = n;
    r.dim = d;
    r.coords.assign(n * d, 0.0);  // the last vertex sits at the origin
    std::copy(pts.begin(), pts.end(), r.coords.begin());
    r.alpha1 = 1.0;
    r.alpha2 = std::sqrt(bv);
    return r;
}

} // namespace distset
