#ifndef DISTSET_UNIPOLY_HPP
#define DISTSET_UNIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distset/rational.hpp"

namespace distset {

// Dense univariate polynomial with exact rational coefficients,
// ascending degree order, no trailing zero coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& q);
    static UniPoly variable();                       // x
    static UniPoly monomial(int deg, const Rat& q);  // q * x^deg
    // v*x - u, the integer-primitive defining polynomial of u/v.
    static UniPoly linear_root(const Rat& root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& lead() const { return c_.back(); }
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rat& q) const;
    UniPoly shifted(int k) const;  // * x^k

    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    RatInterval eval_interval(const RatInterval& x) const;
    double eval_double(double x) const;

    // Quotient/remainder over Q; divisor nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    // Exact division; throws if the division leaves a remainder.
    UniPoly divexact(const UniPoly& d) const;

    UniPoly monic() const;
    // Integer coefficients, content 1, positive leading coefficient.
    UniPoly primitive_integer() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> c_;
    void trim();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd
UniPoly squarefree_part(const UniPoly& p);

// Sturm chain of a squarefree polynomial.
std::vector<UniPoly> sturm_chain(const UniPoly& p);
int sturm_variations(const std::vector<UniPoly>& chain, const Rat& x);
// Number of roots of squarefree p in the open interval (lo, hi);
// endpoints must not be roots.
int count_roots(const UniPoly& p_squarefree, const Rat& lo, const Rat& hi);
// A bound B with all real roots in (-B, B).
Rat root_bound(const UniPoly& p);

// Disjoint open isolating intervals, one per distinct real root.
// Squarefree reduction is applied internally; endpoints are never roots.
std::vector<std::pair<Rat, Rat>> sturm_isolate(const UniPoly& p);

// The unique root of squarefree p in (lo,hi), if that root is rational.
// p must have integer coefficients and exactly one root in the interval.
std::optional<Rat> rational_root_in(const UniPoly& p, Rat lo, Rat hi);

// Splits a squarefree integer polynomial into integer-primitive factors:
// all rational roots come off as linear factors; degree <= 3 remainders are
// irreducible; degree-4 remainders are split into quadratics over Q when
// possible. Higher-degree remainders are kept whole.
std::vector<UniPoly> factor_squarefree(const UniPoly& p);

} // namespace distset

#endif
