#ifndef DISTSET_RATIONAL_HPP
#define DISTSET_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "distset/errors.hpp"

namespace distset {

// Exact rationals and integers. mpq_class keeps values canonically reduced
// (positive denominator, coprime) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

inline Rat rat_abs(const Rat& q) { return abs(q); }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_parse(const std::string& s);

// Closed rational interval, used for adaptive refinement of algebraic values.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& q) { return {q, q}; }

    bool contains_zero() const { return sign_of(lo) <= 0 && sign_of(hi) >= 0; }
    // Sign when the interval excludes zero, 0 otherwise.
    int definite_sign() const {
        if (sign_of(lo) > 0) return 1;
        if (sign_of(hi) < 0) return -1;
        return 0;
    }
    Rat width() const { return hi - lo; }
};

RatInterval operator+(const RatInterval& x, const RatInterval& y);
RatInterval operator-(const RatInterval& x, const RatInterval& y);
RatInterval operator*(const RatInterval& x, const RatInterval& y);
RatInterval interval_scale(const Rat& c, const RatInterval& x);

// Largest square divisor split: n = square * rest with rest squarefree
// (best effort by trial division; exact for the sizes arising here).
void split_square(const Int& n, Int& square_root, Int& rest);

} // namespace distset

#endif
