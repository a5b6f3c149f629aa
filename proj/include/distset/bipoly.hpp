#ifndef DISTSET_BIPOLY_HPP
#define DISTSET_BIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "distset/rational.hpp"
#include "distset/unipoly.hpp"

namespace distset {

// Monomial a^da * b^db. Ordered lexicographically with a > b, descending,
// so map::begin() is the leading term.
struct Mono {
    int da = 0;
    int db = 0;
    friend bool operator==(const Mono&, const Mono&) = default;
};

struct MonoLexDesc {
    bool operator()(const Mono& x, const Mono& y) const {
        if (x.da != y.da) return x.da > y.da;
        return x.db > y.db;
    }
};

// Sparse bivariate polynomial over Q in indeterminates conventionally
// called a and b. No explicit zero coefficients are stored.
class BiPoly {
public:
    using Terms = std::map<Mono, Rat, MonoLexDesc>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rat& q);
    static BiPoly var_a() { return term(1, 0, Rat(1)); }
    static BiPoly var_b() { return term(0, 1, Rat(1)); }
    static BiPoly term(int da, int db, const Rat& q);
    static BiPoly from_unipoly_a(const UniPoly& p);  // p(a)
    static BiPoly from_unipoly_b(const UniPoly& p);  // p(b)

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const Terms& terms() const { return t_; }
    const Mono& lead_mono() const { return t_.begin()->first; }
    const Rat& lead_coeff() const { return t_.begin()->second; }
    int deg_a() const;
    int deg_b() const;
    Rat coeff(int da, int db) const;

    void add_term(int da, int db, const Rat& q);

    bool operator==(const BiPoly& o) const { return t_ == o.t_; }

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const Rat& q) const;
    BiPoly mono_mul(const Mono& m, const Rat& q) const;

    // Exact division within Q[a,b]; throws when not exact.
    BiPoly divexact(const BiPoly& d) const;

    BiPoly swap_vars() const;  // a <-> b

    UniPoly subst_a(const Rat& a_value) const;  // -> polynomial in b
    UniPoly subst_b(const Rat& b_value) const;  // -> polynomial in a
    // Valid when the polynomial does not involve a (resp. b).
    UniPoly as_unipoly_in_b() const;
    UniPoly as_unipoly_in_a() const;

    Rat eval(const Rat& a_value, const Rat& b_value) const;
    RatInterval eval_interval(const RatInterval& a_iv, const RatInterval& b_iv) const;

    // Coefficient vectors (ascending) with respect to one variable.
    std::vector<BiPoly> coeffs_in_a() const;
    std::vector<UniPoly> coeffs_in_a_as_unipoly_b() const;

    // Every monomial has even exponents and all coefficients share the sign
    // of the nonzero constant term: the polynomial has no real zeros.
    bool is_definite_sign_form() const;

    std::string str(const std::string& va = "a", const std::string& vb = "b") const;

private:
    Terms t_;
};

// Fraction-free (Bareiss) determinant over an exact ring; Ring needs
// +, -, *, divexact, is_zero and a Ring() zero state.
template <class Ring>
Ring det_bareiss(std::vector<std::vector<Ring>> m, const Ring& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    Ring prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return Ring();  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Ring num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.divexact(prev);
            }
            m[i][k] = Ring();
        }
        prev = m[k][k];
    }
    Ring det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

// Resultant of two univariate polynomials with coefficients in Ring,
// via the Sylvester matrix. Coefficients ascending. The first argument
// should be the one whose leading coefficient is known nonzero (its
// formal degree must be exact); the second may have formal degree.
template <class Ring>
Ring resultant_generic(const std::vector<Ring>& f, const std::vector<Ring>& g,
                       const Ring& one) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    if (m < 0 || n < 0) return Ring();
    if (m == 0 && n == 0) return one;
    std::vector<std::vector<Ring>> s(m + n, std::vector<Ring>(m + n, Ring()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
    return det_bareiss(std::move(s), one);
}

// Resultant with respect to a: a polynomial in b vanishing wherever the
// inputs admit a common root in a. Integerizes internally.
UniPoly resultant_eliminate_a(const BiPoly& f, const BiPoly& g);
UniPoly resultant_eliminate_b(const BiPoly& f, const BiPoly& g);

} // namespace distset

#endif
