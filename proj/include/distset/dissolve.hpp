#ifndef DISTSET_DISSOLVE_HPP
#define DISTSET_DISSOLVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "distset/gram.hpp"
#include "distset/graph.hpp"
#include "distset/groebner.hpp"

namespace distset {

// Which of the two orientations of a {graph, complement} class a solution
// realizes: the one whose edges carry the strictly shorter distance.
enum class Attribution { Graph, Complement };

enum class SolveMode { Spherical, General };

struct SphericalSolution {
    RealAlg a, b;
    bool psd = false;
    std::optional<int> rank;
    Attribution attribution = Attribution::Graph;
    bool jspherical = false;  // short-distance parameter of the attributed
                              // orientation equals 0 (alpha1 = sqrt(2))
};

struct SphericalVerdict {
    Graph graph;
    std::vector<SphericalSolution> solutions;  // admissible (PSD, rank <= d)
    bool survived = false;        // real solutions inside the open box exist
    bool indefinite_only = false; // survived but nothing passed the PSD test
};

// Solves the rank system of the candidate Gram matrix over the reals and
// certifies admissibility: vanishing principal (d+1)-minors, a != b,
// a < 1, b < 1, PSD, rank <= d.
SphericalVerdict solve_spherical(const Graph& g, int d);

struct GeneralSolution {
    RealAlg b;  // alpha2^2 with the scale normalization alpha1 = 1
    bool psd = false;
    std::optional<int> rank;
    Attribution attribution = Attribution::Graph;
    bool spherical_flag = false;  // configuration lies on a sphere
};

struct GeneralVerdict {
    Graph graph;
    std::vector<GeneralSolution> solutions;  // admissible
    bool survived = false;
    bool continuum = false;  // constraints identically satisfiable
};

GeneralVerdict solve_general(const Graph& g, int d);

// Whether the configuration of a general-mode solution lies on a sphere:
// 2 M w = diag(M) solvable over the solution's field.
bool is_spherical_config(const Graph& g, const RealAlg& b);

// Distinct 2-distance sets contributed by a candidate class: admissible
// solutions, with mirror identification for self-complementary graphs
// ((a,b) <-> (b,a) in spherical mode, b <-> 1/b in general mode).
int count_sets(const SphericalVerdict& v);
int count_sets(const GeneralVerdict& v);
// Same, restricted to nonspherical general solutions.
int count_nonspherical_sets(const GeneralVerdict& v);

struct ValidityReport {
    bool minors_vanish = false;
    bool psd = false;
    std::optional<int> rank;
    bool rank_within = false;
    Attribution attribution = Attribution::Graph;
    bool jspherical = false;      // spherical mode
    bool spherical_flag = false;  // general mode
    bool valid = false;           // minors_vanish && psd && rank_within
    std::string note;
};

// Re-certifies a single parameter point without solving.
ValidityReport verify_point(const Graph& g, const RealAlg& a, const RealAlg& b, int d,
                            SolveMode mode);

} // namespace distset

#endif
