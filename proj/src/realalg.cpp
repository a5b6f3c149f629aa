#include "distset/realalg.hpp"

#include <algorithm>

#include "distset/errors.hpp"

namespace distset {

namespace {
constexpr int kHardFuel = 4096;  // absolute guard against non-termination

// Ring wrappers giving det_bareiss/resultant_generic the interface they
// need on top of the concrete polynomial types.
struct RU {
    UniPoly p;
    bool is_zero() const { return p.is_zero(); }
    RU operator-() const { return {-p}; }
    RU operator+(const RU& o) const { return {p + o.p}; }
    RU operator-(const RU& o) const { return {p - o.p}; }
    RU operator*(const RU& o) const { return {p * o.p}; }
    RU divexact(const RU& o) const { return {p.divexact(o.p)}; }
};

struct RB {
    BiPoly p;
    bool is_zero() const { return p.is_zero(); }
    RB operator-() const { return {-p}; }
    RB operator+(const RB& o) const { return {p + o.p}; }
    RB operator-(const RB& o) const { return {p - o.p}; }
    RB operator*(const RB& o) const { return {p * o.p}; }
    RB divexact(const RB& o) const { return {p.divexact(o.p)}; }
};

} // namespace

RealAlg::RealAlg(const Rat& q) {
    p_ = UniPoly::linear_root(q);
    lo_ = q - 1;
    hi_ = q + 1;
}

RealAlg RealAlg::make(const UniPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw ZeroPolynomial("RealAlg from zero polynomial");
    UniPoly sf = squarefree_part(p).primitive_integer();
    if (sf.degree() < 1) throw Error("RealAlg: constant defining polynomial");
    if (sign_of(sf.lead()) < 0) sf = (-sf).primitive_integer();
    Rat l = lo, h = hi;
    if (sign_of(sf.eval(l)) == 0 || sign_of(sf.eval(h)) == 0)
        throw Error("RealAlg: interval endpoint is a root");
    if (count_roots(sf, l, h) != 1)
        throw Error("RealAlg: interval does not isolate one root");
    if (auto q = rational_root_in(sf, l, h)) return RealAlg(*q);
    // Reduce the defining polynomial to the factor owning this root.
    auto factors = factor_squarefree(sf);
    if (factors.size() > 1) {
        for (const auto& f : factors) {
            if (f.degree() < 1) continue;
            if (sign_of(f.eval(l)) == 0 || sign_of(f.eval(h)) == 0) continue;
            if (count_roots(f, l, h) == 1) {
                sf = f;
                if (sign_of(sf.lead()) < 0) sf = (-sf).primitive_integer();
                break;
            }
        }
    }
    RealAlg x(Rat(0));
    x.p_ = sf;
    x.lo_ = l;
    x.hi_ = h;
    return x;
}

std::vector<RealAlg> RealAlg::roots_of(const UniPoly& p) {
    std::vector<RealAlg> out;
    for (auto& [lo, hi] : sturm_isolate(p)) out.push_back(make(p, lo, hi));
    return out;
}

Rat RealAlg::rational_value() const {
    if (!is_rational()) throw Error("RealAlg is not rational");
    return -p_.coeff(0) / p_.coeff(1);
}

void refine_once(RealAlg& x) {
    if (x.is_rational()) {
        Rat v = x.rational_value();
        Rat w = (x.hi_ - x.lo_) / 4;
        x.lo_ = v - w;
        x.hi_ = v + w;
        return;
    }
    Rat mid = (x.lo_ + x.hi_) / 2;
    int s = sign_of(x.p_.eval(mid));
    // Rational roots were split off during construction, so p(mid) != 0.
    if (s == 0) throw Error("RealAlg: unexpected rational midpoint root");
    if (s == sign_of(x.p_.eval(x.lo_))) x.lo_ = mid;
    else x.hi_ = mid;
}

void refine_to_width(RealAlg& x, const Rat& eps) {
    int fuel = kHardFuel;
    while (x.hi() - x.lo() > eps) {
        refine_once(x);
        if (--fuel == 0) throw Error("RealAlg: refinement fuel exhausted");
    }
}

double RealAlg::to_double() const {
    RealAlg x = *this;
    refine_to_width(x, Rat(Int(1), Int("100000000000000000")));
    Rat mid = (x.lo_ + x.hi_) / 2;
    return mid.get_d();
}

int alg_sign(const UniPoly& f, const RealAlg& x) {
    if (f.is_zero()) return 0;
    if (f.degree() == 0) return sign_of(f.coeff(0));
    if (x.is_rational()) return sign_of(f.eval(x.rational_value()));
    // Zero test: x is a root of f iff gcd(f, defining) changes sign over the
    // isolating interval. The gcd divides the squarefree defining polynomial,
    // so the endpoints are not roots of it.
    UniPoly g = gcd(f, x.defining());
    if (g.degree() >= 1) {
        if (sign_of(g.eval(x.lo())) != sign_of(g.eval(x.hi()))) return 0;
    }
    RealAlg xc = x;
    for (int i = 0; i < kHardFuel; ++i) {
        RatInterval v = f.eval_interval(xc.interval());
        int s = v.definite_sign();
        if (s != 0) return s;
        refine_once(xc);
    }
    throw Error("alg_sign: refinement fuel exhausted");
}

int sign_of(const RealAlg& x) {
    if (x.is_rational()) return sign_of(x.rational_value());
    return alg_sign(UniPoly::variable(), x);
}

int compare_rat(const RealAlg& x, const Rat& q) {
    if (x.is_rational()) {
        Rat v = x.rational_value();
        return v < q ? -1 : (v > q ? 1 : 0);
    }
    UniPoly f = UniPoly::variable() - UniPoly::constant(q);
    return alg_sign(f, x);
}

int compare(const RealAlg& x, const RealAlg& y) {
    if (y.is_rational()) return compare_rat(x, y.rational_value());
    if (x.is_rational()) return -compare_rat(y, x.rational_value());
    if (alg_sign(y.defining(), x) == 0) {
        // x is a root of y's defining polynomial; equal iff it lies inside
        // y's isolating interval.
        if (compare_rat(x, y.lo()) > 0 && compare_rat(x, y.hi()) < 0) return 0;
    }
    RealAlg a = x, b = y;
    for (int i = 0; i < kHardFuel; ++i) {
        if (a.hi() <= b.lo()) return -1;
        if (b.hi() <= a.lo()) return 1;
        if (a.hi() - a.lo() > b.hi() - b.lo()) refine_once(a);
        else refine_once(b);
    }
    throw Error("compare: refinement fuel exhausted");
}

bool alg_equal(const RealAlg& x, const RealAlg& y) { return compare(x, y) == 0; }

namespace {

// Builds a RealAlg for a value known to be a root of `annihilator`, using
// `approx` to produce ever-tighter enclosing intervals.
template <class ApproxFn>
RealAlg isolate_value(const UniPoly& annihilator, ApproxFn approx) {
    UniPoly sf = squarefree_part(annihilator).primitive_integer();
    for (int rounds = 4; rounds <= kHardFuel; rounds *= 2) {
        RatInterval j = approx(rounds);
        Rat lo = j.lo, hi = j.hi;
        Rat pad = (hi - lo + 1) / 16;
        int guard = 0;
        bool ok = true;
        while (sign_of(sf.eval(lo)) == 0) {
            lo -= pad;
            pad /= 3;
            if (++guard > 64) { ok = false; break; }
        }
        pad = (hi - lo + 1) / 16;
        guard = 0;
        while (ok && sign_of(sf.eval(hi)) == 0) {
            hi += pad;
            pad /= 3;
            if (++guard > 64) { ok = false; break; }
        }
        if (ok && count_roots(sf, lo, hi) == 1) return RealAlg::make(sf, lo, hi);
    }
    throw Error("isolate_value: could not isolate");
}

} // namespace

RealAlg compose_poly(const UniPoly& h, const RealAlg& x) {
    if (h.is_zero()) return RealAlg(Rat(0));
    if (h.degree() == 0) return RealAlg(h.coeff(0));
    if (x.is_rational()) return RealAlg(h.eval(x.rational_value()));
    // Annihilator: Res_t(p(t), y - h(t)) in y. The defining polynomial goes
    // first; its leading coefficient is a nonzero constant, so the only
    // spurious resultant factor is a constant.
    const UniPoly& p = x.defining();
    std::vector<RU> fu, gu;
    for (int k = 0; k <= p.degree(); ++k) fu.push_back({UniPoly::constant(p.coeff(k))});
    for (int k = 0; k <= h.degree(); ++k) {
        UniPoly c = UniPoly::constant(-h.coeff(k));
        if (k == 0) c = c + UniPoly::variable();
        gu.push_back({c});
    }
    UniPoly ann = resultant_generic(fu, gu, RU{UniPoly::constant(Rat(1))}).p;
    if (ann.is_zero()) throw Error("compose_poly: zero annihilator");
    RealAlg xc = x;
    return isolate_value(ann, [&](int rounds) {
        for (int i = 0; i < rounds; ++i) refine_once(xc);
        return h.eval_interval(xc.interval());
    });
}

RealAlg alg_recip(const RealAlg& x) {
    int s = sign_of(x);
    if (s == 0) throw Error("alg_recip of zero");
    if (x.is_rational()) return RealAlg(Rat(1) / x.rational_value());
    const auto& c = x.defining().coeffs();
    std::vector<Rat> rev(c.rbegin(), c.rend());
    UniPoly ann{std::move(rev)};
    RealAlg xc = x;
    while (xc.interval().contains_zero()) refine_once(xc);
    return isolate_value(ann, [&](int rounds) {
        for (int i = 0; i < rounds; ++i) refine_once(xc);
        Rat lo = Rat(1) / xc.hi(), hi = Rat(1) / xc.lo();
        if (lo > hi) std::swap(lo, hi);
        return RatInterval{lo, hi};
    });
}

RealAlg alg_div(const RealAlg& num, const RealAlg& den) {
    if (sign_of(den) == 0) throw Error("alg_div by zero");
    if (den.is_rational()) {
        UniPoly h = UniPoly::monomial(1, Rat(1) / den.rational_value());
        return compose_poly(h, num);
    }
    if (num.is_rational()) {
        Rat n = num.rational_value();
        if (sign_of(n) == 0) return RealAlg(Rat(0));
        return compose_poly(UniPoly::monomial(1, n), alg_recip(den));
    }
    // Annihilator of z = num/den: Res_t(pden(t), sum_k pnum_k t^k z^k).
    const UniPoly& pn = num.defining();
    const UniPoly& pd = den.defining();
    std::vector<RU> fu, gu;
    for (int k = 0; k <= pd.degree(); ++k) fu.push_back({UniPoly::constant(pd.coeff(k))});
    for (int k = 0; k <= pn.degree(); ++k) gu.push_back({UniPoly::monomial(k, pn.coeff(k))});
    UniPoly ann = resultant_generic(fu, gu, RU{UniPoly::constant(Rat(1))}).p;
    if (ann.is_zero()) throw Error("alg_div: zero annihilator");
    RealAlg nc = num, dc = den;
    while (dc.interval().contains_zero()) refine_once(dc);
    return isolate_value(ann, [&](int rounds) {
        for (int i = 0; i < rounds; ++i) {
            refine_once(nc);
            refine_once(dc);
        }
        Rat inv_lo = Rat(1) / dc.hi(), inv_hi = Rat(1) / dc.lo();
        if (inv_lo > inv_hi) std::swap(inv_lo, inv_hi);
        return RatInterval{nc.lo(), nc.hi()} * RatInterval{inv_lo, inv_hi};
    });
}

std::optional<int> sign2_quick(const BiPoly& f, const RealAlg& x, const RealAlg& y,
                               int rounds) {
    RealAlg xc = x, yc = y;
    for (int i = 0; i < rounds; ++i) {
        RatInterval v = f.eval_interval(xc.interval(), yc.interval());
        int s = v.definite_sign();
        if (s != 0) return s;
        refine_once(xc);
        refine_once(yc);
    }
    return std::nullopt;
}

int sign2(const BiPoly& f, const RealAlg& x, const RealAlg& y) {
    if (f.is_zero()) return 0;
    if (f.is_constant()) return sign_of(f.coeff(0, 0));
    if (x.is_rational()) return alg_sign(f.subst_a(x.rational_value()), y);
    if (y.is_rational()) return alg_sign(f.subst_b(y.rational_value()), x);
    if (f.deg_a() == 0) return alg_sign(f.as_unipoly_in_b(), y);
    if (f.deg_b() == 0) return alg_sign(f.as_unipoly_in_a(), x);

    if (auto s = sign2_quick(f, x, y, 24)) return *s;

    // Annihilator C(t) of the value v = f(x, y):
    //   R1(t, y) = Res_u(px(u), t - f(u, y)),  C(t) = Res_w(py(w), R1(t, w)).
    // Defining polynomials go first in each resultant: their leading
    // coefficients are nonzero constants, so the only spurious factors are
    // constants.
    const UniPoly& px = x.defining();
    const UniPoly& py = y.defining();

    std::vector<RB> au, bu;
    for (int k = 0; k <= px.degree(); ++k) au.push_back({BiPoly::constant(px.coeff(k))});
    std::vector<BiPoly> tf(f.deg_a() + 1);  // coeffs in u of t - f(u, y), over (t, y)
    for (const auto& [m, q] : f.terms()) tf[m.da].add_term(0, m.db, -q);
    tf[0].add_term(1, 0, Rat(1));  // + t
    for (auto& c : tf) bu.push_back({std::move(c)});
    BiPoly r1 = resultant_generic(au, bu, RB{BiPoly::constant(Rat(1))}).p;  // in (t, y)

    std::vector<RU> pyc, r1c;
    for (int k = 0; k <= py.degree(); ++k) pyc.push_back({UniPoly::constant(py.coeff(k))});
    std::vector<UniPoly> r1_in_y(r1.deg_b() + 1);
    for (const auto& [m, q] : r1.terms())
        r1_in_y[m.db] = r1_in_y[m.db] + UniPoly::monomial(m.da, q);
    for (auto& c : r1_in_y) r1c.push_back({std::move(c)});
    UniPoly ann = resultant_generic(pyc, r1c, RU{UniPoly::constant(Rat(1))}).p;
    if (ann.is_zero()) throw Error("sign2: zero annihilator");
    UniPoly sf = squarefree_part(ann).primitive_integer();

    RealAlg xc = x, yc = y;
    const bool zero_is_root = sign_of(sf.eval(Rat(0))) == 0;
    for (int i = 0; i < kHardFuel; ++i) {
        RatInterval v = f.eval_interval(xc.interval(), yc.interval());
        int s = v.definite_sign();
        if (s != 0) return s;
        if (zero_is_root) {
            // The value interval contains zero. If it also contains exactly
            // one root of the annihilator, the value is that root, i.e. 0.
            Rat lo = v.lo, hi = v.hi;
            Rat pad = (hi - lo + 1) / 16;
            int guard = 0;
            bool ok = true;
            while (sign_of(sf.eval(lo)) == 0) {
                lo -= pad;
                pad /= 3;
                if (++guard > 64) { ok = false; break; }
            }
            pad = (hi - lo + 1) / 16;
            guard = 0;
            while (ok && sign_of(sf.eval(hi)) == 0) {
                hi += pad;
                pad /= 3;
                if (++guard > 64) { ok = false; break; }
            }
            if (ok && sign_of(lo) < 0 && sign_of(hi) > 0 && count_roots(sf, lo, hi) == 1)
                return 0;
        }
        refine_once(xc);
        refine_once(yc);
    }
    throw Error("sign2: refinement fuel exhausted");
}

} // namespace distset
