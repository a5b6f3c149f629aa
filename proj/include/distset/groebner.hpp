#ifndef DISTSET_GROEBNER_HPP
#define DISTSET_GROEBNER_HPP

#include <vector>

#include "distset/bipoly.hpp"
#include "distset/realalg.hpp"

namespace distset {

// Variable elimination order for the lexicographic Groebner basis.
enum class VarOrder {
    AOverB,  // a > b: the basis exposes the eliminant in b
    BOverA,  // b > a: the basis exposes the eliminant in a
};

// Reduced lexicographic Groebner basis (monic generators, sorted by leading
// monomial descending). Basis == {1} iff the system has no complex solutions.
std::vector<BiPoly> groebner_lex(std::vector<BiPoly> gens, VarOrder order = VarOrder::AOverB);

// Normal form of f modulo a Groebner basis; zero iff f lies in the ideal.
BiPoly reduce_mod(const BiPoly& f, const std::vector<BiPoly>& basis,
                  VarOrder order = VarOrder::AOverB);

enum class SystemShape {
    Points,         // zero-dimensional over C, or certified real-empty
    Inconsistent,   // no complex solutions
    PositiveDimensional,
};

// A certified common real zero of a bivariate system. Every polynomial in
// joint_certificate has been verified to vanish at (a, b) by exact sign
// evaluation.
struct SolutionPoint {
    RealAlg a, b;
    std::vector<BiPoly> joint_certificate;
};

struct SolveOutcome {
    SystemShape shape = SystemShape::Points;
    std::vector<SolutionPoint> points;  // sorted by (b, a)
    std::vector<BiPoly> basis;          // the reduced Groebner basis used
};

// All real common zeros of a zero-dimensional bivariate system, each
// certified exactly. Candidate coordinates come from the two lexicographic
// eliminants; every candidate pair is accepted or rejected by exact sign
// tests on the basis polynomials.
SolveOutcome solve_bivariate_real(const std::vector<BiPoly>& gens);

// Same, starting from an already reduced a>b basis (as produced by
// incremental generator feeding).
SolveOutcome solve_from_basis(std::vector<BiPoly> basis,
                              const std::vector<BiPoly>& original_gens);

} // namespace distset

#endif
