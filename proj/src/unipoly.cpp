#include "distset/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "distset/errors.hpp"

namespace distset {

void UniPoly::trim() {
    while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& q) {
    UniPoly p;
    if (sign_of(q) != 0) p.c_ = {q};
    return p;
}

UniPoly UniPoly::variable() { return monomial(1, Rat(1)); }

UniPoly UniPoly::monomial(int deg, const Rat& q) {
    UniPoly p;
    if (sign_of(q) != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = q;
    }
    return p;
}

UniPoly UniPoly::linear_root(const Rat& root) {
    Rat u = root;
    UniPoly p(std::vector<Rat>{-u, Rat(1)});
    return p.primitive_integer();
}

const Rat& UniPoly::coeff(int k) const {
    static const Rat kZero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sign_of(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rat& q) const {
    if (sign_of(q) == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + k, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatInterval UniPoly::eval_interval(const RatInterval& x) const {
    RatInterval acc = RatInterval::point(Rat(0));
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + RatInterval::point(c_[i]);
    }
    return acc;
}

double UniPoly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    UniPoly rem = *this;
    UniPoly quo;
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rat f = rem.lead() / d.lead();
        UniPoly t = UniPoly::monomial(k, f);
        quo = quo + t;
        rem = rem - d.shifted(k).scaled(f);
    }
    return {quo, rem};
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("divexact: division not exact");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scaled(Rat(1) / lead());
}

UniPoly UniPoly::primitive_integer() const {
    if (is_zero()) return UniPoly();
    Int den_lcm(1);
    for (const auto& q : c_) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    Int num_gcd(0);
    std::vector<Int> zc(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat scaled_q = c_[i] * Rat(den_lcm);
        zc[i] = scaled_q.get_num();  // denominator is now 1
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), zc[i].get_mpz_t());
    }
    if (sign_of(zc.back()) < 0) num_gcd = -num_gcd;
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = Rat(zc[i] / num_gcd);
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& q = coeff(k);
        if (sign_of(q) == 0) continue;
        if (!first) os << (sign_of(q) > 0 ? " + " : " - ");
        else if (sign_of(q) < 0) os << "-";
        Rat a = rat_abs(q);
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
        if (!g.is_zero()) g = g.monic();
    }
    if (f.is_zero()) return f;
    return f.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree_part of zero polynomial");
    if (p.degree() < 1) return UniPoly::constant(Rat(1));
    UniPoly g = gcd(p, p.derivative());
    return p.divexact(g).primitive_integer();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    if (p.degree() < 1) return chain;
    chain.push_back(p.derivative());
    while (chain.back().degree() >= 1) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_integer());
    }
    return chain;
}

int sturm_variations(const std::vector<UniPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = sign_of(f.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int count_roots(const UniPoly& p, const Rat& lo, const Rat& hi) {
    if (sign_of(p.eval(lo)) == 0 || sign_of(p.eval(hi)) == 0)
        throw Error("count_roots: interval endpoint is a root");
    auto chain = sturm_chain(p);
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

Rat root_bound(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("root_bound of zero polynomial");
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rat r = rat_abs(p.coeff(k) / p.lead());
        if (r > m) m = r;
    }
    return m + 1;
}

namespace {

void isolate_rec(const UniPoly& p, const std::vector<UniPoly>& chain, const Rat& lo,
                 const Rat& hi, int nroots, std::vector<std::pair<Rat, Rat>>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    // Nudge until the split point is not a root.
    Rat step = (hi - lo) / 4;
    while (sign_of(p.eval(mid)) == 0) {
        mid += step;
        step /= 3;
    }
    int left = sturm_variations(chain, lo) - sturm_variations(chain, mid);
    isolate_rec(p, chain, lo, mid, left, out);
    isolate_rec(p, chain, mid, hi, nroots - left, out);
}

} // namespace

std::vector<std::pair<Rat, Rat>> sturm_isolate(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("sturm_isolate of zero polynomial");
    UniPoly sf = squarefree_part(p);
    std::vector<std::pair<Rat, Rat>> out;
    if (sf.degree() < 1) return out;
    Rat b = root_bound(sf);
    auto chain = sturm_chain(sf);
    int total = sturm_variations(chain, -b) - sturm_variations(chain, b);
    isolate_rec(sf, chain, -b, b, total, out);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::optional<Rat> rational_root_in(const UniPoly& p, Rat lo, Rat hi) {
    // A rational root of an integer polynomial, times the leading
    // coefficient, is an integer. Refine until at most a couple of such
    // candidates remain in the interval and test them exactly.
    Int lead = p.lead().get_num();  // integer polynomial expected
    Rat l = rat_abs(Rat(lead));
    for (int guard = 0; guard < 20000; ++guard) {
        if ((hi - lo) * l > 2) {
            Rat mid = (lo + hi) / 2;
            int s = sign_of(p.eval(mid));
            if (s == 0) return mid;
            if (s == sign_of(p.eval(lo))) lo = mid;
            else hi = mid;
            continue;
        }
        // At most two candidates m/l inside (lo, hi).
        Rat scaled_lo = lo * l, scaled_hi = hi * l;
        Int m0, m1;
        mpz_cdiv_q(m0.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
        mpz_fdiv_q(m1.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
        bool bisected = false;
        for (Int m = m0; m <= m1; m += 1) {
            Rat cand = Rat(m) / Rat(l);
            cand.canonicalize();
            if (cand <= lo || cand >= hi) continue;
            int s = sign_of(p.eval(cand));
            if (s == 0) return cand;
            // Exclude the candidate; keep the half holding the root.
            if (s == sign_of(p.eval(lo))) lo = cand;
            else hi = cand;
            bisected = true;
            break;
        }
        if (!bisected) return std::nullopt;  // no candidate left: irrational
    }
    throw Error("rational_root_in: refinement fuel exhausted");
}

namespace {

// Try to write a monic rational quartic as a product of two monic rational
// quadratics using the factorization resolvent. Returns integer-primitive
// factors, or empty when no such split exists.
std::vector<UniPoly> quartic_split(const UniPoly& quartic) {
    UniPoly m = quartic.monic();
    Rat p3 = m.coeff(3), p2 = m.coeff(2), p1 = m.coeff(1), p0 = m.coeff(0);
    // Resolvent cubic in y = beta + delta for (x^2+ax+b)(x^2+cx+d).
    std::vector<Rat> res = {-(p3 * p3 * p0 - Rat(4) * p2 * p0 + p1 * p1),
                            p3 * p1 - Rat(4) * p0, -p2, Rat(1)};
    UniPoly resolvent = UniPoly(res).primitive_integer();
    UniPoly rsf = squarefree_part(resolvent);

    std::vector<Rat> roots;
    for (auto& [lo, hi] : sturm_isolate(rsf)) {
        if (auto r = rational_root_in(rsf, lo, hi)) roots.push_back(*r);
    }
    // A repeated resolvent root can be rational while the squarefree part
    // hides it; also try the obvious repeated-root candidate.
    if (resolvent.degree() != rsf.degree()) {
        UniPoly g = gcd(resolvent, resolvent.derivative());
        if (g.degree() == 1) roots.push_back(-g.coeff(0) / g.coeff(1));
    }
    for (const Rat& y : roots) {
        // alpha+gamma = p3, alpha*gamma = p2 - y.
        Rat disc = p3 * p3 - Rat(4) * (p2 - y);
        if (sign_of(disc) < 0) continue;
        Rat sq_num, sq_den;
        Int nr, nrest, dr, drest;
        split_square(disc.get_num() == 0 ? Int(1) : abs(disc.get_num()), nr, nrest);
        split_square(disc.get_den(), dr, drest);
        if (sign_of(disc) != 0 && (nrest != 1 || drest != 1)) continue;
        Rat sq = sign_of(disc) == 0 ? Rat(0) : Rat(nr) / Rat(dr);
        Rat alpha = (p3 + sq) / 2, gamma = (p3 - sq) / 2;
        Rat beta, delta;
        if (alpha != gamma) {
            delta = (p1 - gamma * y) / (alpha - gamma);
            beta = y - delta;
        } else {
            Rat d2 = y * y - Rat(4) * p0;
            if (sign_of(d2) < 0) continue;
            Int nr2, nrest2, dr2, drest2;
            split_square(d2.get_num() == 0 ? Int(1) : abs(d2.get_num()), nr2, nrest2);
            split_square(d2.get_den(), dr2, drest2);
            if (sign_of(d2) != 0 && (nrest2 != 1 || drest2 != 1)) continue;
            Rat sq2 = sign_of(d2) == 0 ? Rat(0) : Rat(nr2) / Rat(dr2);
            beta = (y + sq2) / 2;
            delta = (y - sq2) / 2;
        }
        UniPoly f1(std::vector<Rat>{beta, alpha, Rat(1)});
        UniPoly f2(std::vector<Rat>{delta, gamma, Rat(1)});
        if (f1 * f2 == m) return {f1.primitive_integer(), f2.primitive_integer()};
    }
    return {};
}

} // namespace

std::vector<UniPoly> factor_squarefree(const UniPoly& p) {
    std::vector<UniPoly> factors;
    UniPoly rest = p.primitive_integer();
    if (rest.degree() < 1) return factors;
    // Peel off all rational roots.
    for (auto& [lo, hi] : sturm_isolate(rest)) {
        if (rest.degree() < 1) break;
        if (sign_of(rest.eval(lo)) == 0 || sign_of(rest.eval(hi)) == 0) continue;
        if (count_roots(rest, lo, hi) != 1) continue;
        if (auto r = rational_root_in(rest, lo, hi)) {
            UniPoly lin = UniPoly::linear_root(*r);
            factors.push_back(lin);
            rest = rest.divexact(lin).primitive_integer();
        }
    }
    if (rest.degree() >= 1) {
        if (rest.degree() == 4) {
            auto split = quartic_split(rest);
            if (!split.empty()) {
                factors.insert(factors.end(), split.begin(), split.end());
            } else {
                factors.push_back(rest);
            }
        } else {
            // Degree 2 and 3 with no rational root are irreducible over Q;
            // higher degrees are kept whole.
            factors.push_back(rest);
        }
    }
    return factors;
}

} // namespace distset
