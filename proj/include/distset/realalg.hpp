#ifndef DISTSET_REALALG_HPP
#define DISTSET_REALALG_HPP

#include <optional>
#include <string>

#include "distset/bipoly.hpp"
#include "distset/rational.hpp"
#include "distset/unipoly.hpp"

namespace distset {

// A real algebraic number: the unique root of a squarefree integer
// polynomial inside an open rational interval whose endpoints are not
// roots. Rational values are normalized to a linear defining polynomial
// with the interval (q-1, q+1).
class RealAlg {
public:
    RealAlg() : RealAlg(Rat(0)) {}
    explicit RealAlg(const Rat& q);

    // Normalizes (squarefree, integer-primitive, positive lead, minimal
    // factor containing the root) and checks the isolation invariant.
    static RealAlg make(const UniPoly& p, const Rat& lo, const Rat& hi);
    // All real roots of p, in increasing order.
    static std::vector<RealAlg> roots_of(const UniPoly& p);

    const UniPoly& defining() const { return p_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }

    bool is_rational() const { return p_.degree() == 1; }
    Rat rational_value() const;

    RatInterval interval() const { return {lo_, hi_}; }

    double to_double() const;

private:
    UniPoly p_;
    Rat lo_, hi_;

    friend void refine_once(RealAlg& x);
};

// One bisection step on a local copy; keeps the invariant.
void refine_once(RealAlg& x);
void refine_to_width(RealAlg& x, const Rat& eps);

// Exact sign of f(x). Zero is decided via gcd with the defining polynomial;
// nonzero signs by adaptive interval refinement.
int alg_sign(const UniPoly& f, const RealAlg& x);

int sign_of(const RealAlg& x);
int compare(const RealAlg& x, const RealAlg& y);
int compare_rat(const RealAlg& x, const Rat& q);
bool alg_equal(const RealAlg& x, const RealAlg& y);

// h(x) as a real algebraic number.
RealAlg compose_poly(const UniPoly& h, const RealAlg& x);
RealAlg alg_recip(const RealAlg& x);     // 1/x, x != 0
RealAlg alg_div(const RealAlg& num, const RealAlg& den);  // num/den, den != 0

// Exact sign of f(x, y) for a bivariate f at a pair of real algebraic
// numbers. Rational coordinates take a direct substitution path; the
// general case decides zero through an annihilating polynomial of the
// value f(x, y) obtained by two resultants.
int sign2(const BiPoly& f, const RealAlg& x, const RealAlg& y);

// Interval-only quick version: definite sign, or nullopt if still ambiguous
// after the given number of refinement rounds.
std::optional<int> sign2_quick(const BiPoly& f, const RealAlg& x, const RealAlg& y,
                               int rounds);

} // namespace distset

#endif
