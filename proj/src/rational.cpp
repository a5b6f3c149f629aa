#include "distset/rational.hpp"

#include <algorithm>
#include <cctype>

namespace distset {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw ParseError("bad rational literal: " + s);
        }
    }
    if (!digits) throw ParseError("bad rational literal: " + s);
    Rat q(s);
    q.canonicalize();
    return q;
}

RatInterval operator+(const RatInterval& x, const RatInterval& y) {
    return {x.lo + y.lo, x.hi + y.hi};
}

RatInterval operator-(const RatInterval& x, const RatInterval& y) {
    return {x.lo - y.hi, x.hi - y.lo};
}

RatInterval operator*(const RatInterval& x, const RatInterval& y) {
    Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    Rat lo = std::min(std::min(a, b), std::min(c, d));
    Rat hi = std::max(std::max(a, b), std::max(c, d));
    return {lo, hi};
}

RatInterval interval_scale(const Rat& c, const RatInterval& x) {
    if (sign_of(c) >= 0) return {c * x.lo, c * x.hi};
    return {c * x.hi, c * x.lo};
}

void split_square(const Int& n, Int& square_root, Int& rest) {
    if (sign_of(n) <= 0) throw Error("split_square expects a positive integer");
    Int r = n;
    square_root = 1;
    // Perfect-square fast path.
    if (mpz_perfect_square_p(r.get_mpz_t())) {
        mpz_sqrt(square_root.get_mpz_t(), r.get_mpz_t());
        rest = 1;
        return;
    }
    Int p = 2;
    // Trial division by p^2; enough for table-scale discriminants.
    while (p * p <= r && p < 100000) {
        Int pp = p * p;
        while (mpz_divisible_p(r.get_mpz_t(), pp.get_mpz_t())) {
            r /= pp;
            square_root *= p;
        }
        p += 1;
    }
    if (mpz_perfect_square_p(r.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
        square_root *= s;
        r = 1;
    }
    rest = r;
}

} // namespace distset
