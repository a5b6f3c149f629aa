#include "distset/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "distset/errors.hpp"

namespace distset {

BiPoly BiPoly::constant(const Rat& q) { return term(0, 0, q); }

BiPoly BiPoly::term(int da, int db, const Rat& q) {
    BiPoly p;
    if (sign_of(q) != 0) p.t_[{da, db}] = q;
    return p;
}

BiPoly BiPoly::from_unipoly_a(const UniPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term(k, 0, p.coeff(k));
    return r;
}

BiPoly BiPoly::from_unipoly_b(const UniPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term(0, k, p.coeff(k));
    return r;
}

bool BiPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0});
}

bool BiPoly::is_one() const {
    return t_.size() == 1 && t_.begin()->first == Mono{0, 0} && t_.begin()->second == 1;
}

int BiPoly::deg_a() const {
    int d = 0;
    for (const auto& [m, q] : t_) d = std::max(d, m.da);
    return t_.empty() ? -1 : d;
}

int BiPoly::deg_b() const {
    int d = 0;
    for (const auto& [m, q] : t_) d = std::max(d, m.db);
    return t_.empty() ? -1 : d;
}

Rat BiPoly::coeff(int da, int db) const {
    auto it = t_.find({da, db});
    return it == t_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(int da, int db, const Rat& q) {
    if (sign_of(q) == 0) return;
    Mono m{da, db};
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_[m] = q;
    } else {
        it->second += q;
        if (sign_of(it->second) == 0) t_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, q] : r.t_) q = -q;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, q] : o.t_) r.add_term(m.da, m.db, q);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, q] : o.t_) r.add_term(m.da, m.db, -q);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [m1, q1] : t_)
        for (const auto& [m2, q2] : o.t_)
            r.add_term(m1.da + m2.da, m1.db + m2.db, q1 * q2);
    return r;
}

BiPoly BiPoly::scaled(const Rat& q) const {
    BiPoly r;
    if (sign_of(q) == 0) return r;
    r.t_ = t_;
    for (auto& [m, c] : r.t_) c *= q;
    return r;
}

BiPoly BiPoly::mono_mul(const Mono& m, const Rat& q) const {
    BiPoly r;
    if (sign_of(q) == 0) return r;
    for (const auto& [m1, c] : t_) r.t_[{m1.da + m.da, m1.db + m.db}] = c * q;
    return r;
}

BiPoly BiPoly::divexact(const BiPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("BiPoly divexact by zero");
    BiPoly rem = *this;
    BiPoly quo;
    const Mono& dm = d.lead_mono();
    const Rat& dc = d.lead_coeff();
    while (!rem.is_zero()) {
        const Mono& rm = rem.lead_mono();
        if (rm.da < dm.da || rm.db < dm.db)
            throw Error("BiPoly divexact: division not exact");
        Mono qm{rm.da - dm.da, rm.db - dm.db};
        Rat qc = rem.lead_coeff() / dc;
        quo.add_term(qm.da, qm.db, qc);
        rem = rem - d.mono_mul(qm, qc);
    }
    return quo;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r;
    for (const auto& [m, q] : t_) r.t_[{m.db, m.da}] = q;
    return r;
}

UniPoly BiPoly::subst_a(const Rat& a_value) const {
    std::vector<Rat> c(deg_b() + 1, Rat(0));
    if (is_zero()) return UniPoly();
    for (const auto& [m, q] : t_) {
        Rat pw(1);
        for (int i = 0; i < m.da; ++i) pw *= a_value;
        c[m.db] += q * pw;
    }
    return UniPoly(std::move(c));
}

UniPoly BiPoly::subst_b(const Rat& b_value) const {
    return swap_vars().subst_a(b_value);
}

UniPoly BiPoly::as_unipoly_in_b() const {
    if (!is_zero() && deg_a() > 0) throw Error("polynomial involves a");
    return subst_a(Rat(0));
}

UniPoly BiPoly::as_unipoly_in_a() const {
    if (!is_zero() && deg_b() > 0) throw Error("polynomial involves b");
    return subst_b(Rat(0));
}

Rat BiPoly::eval(const Rat& a_value, const Rat& b_value) const {
    return subst_a(a_value).eval(b_value);
}

RatInterval BiPoly::eval_interval(const RatInterval& a_iv, const RatInterval& b_iv) const {
    // Horner in a with interval coefficients that are polynomials in b.
    RatInterval acc = RatInterval::point(Rat(0));
    auto ca = coeffs_in_a();
    for (size_t i = ca.size(); i-- > 0;) {
        RatInterval ci = RatInterval::point(Rat(0));
        auto cb = ca[i].coeffs_in_a();  // degenerate: constants in a
        // ca[i] involves only b; evaluate by Horner in b.
        UniPoly ub = ca[i].as_unipoly_in_b();
        ci = ub.eval_interval(b_iv);
        acc = acc * a_iv + ci;
    }
    return acc;
}

std::vector<BiPoly> BiPoly::coeffs_in_a() const {
    std::vector<BiPoly> out(std::max(deg_a() + 1, 0));
    for (const auto& [m, q] : t_) out[m.da].add_term(0, m.db, q);
    return out;
}

std::vector<UniPoly> BiPoly::coeffs_in_a_as_unipoly_b() const {
    std::vector<UniPoly> out;
    for (auto& c : coeffs_in_a()) out.push_back(c.as_unipoly_in_b());
    return out;
}

bool BiPoly::is_definite_sign_form() const {
    if (is_zero()) return false;
    Rat c0 = coeff(0, 0);
    if (sign_of(c0) == 0) return false;
    int s = sign_of(c0);
    for (const auto& [m, q] : t_) {
        if (m.da % 2 != 0 || m.db % 2 != 0) return false;
        if (sign_of(q) != s) return false;
    }
    return true;
}

std::string BiPoly::str(const std::string& va, const std::string& vb) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : t_) {
        if (!first) os << (sign_of(q) > 0 ? " + " : " - ");
        else if (sign_of(q) < 0) os << "-";
        Rat a = rat_abs(q);
        bool coeff_shown = (m.da == 0 && m.db == 0) || a != 1;
        if (coeff_shown) os << a.get_str();
        if (m.da > 0) {
            if (coeff_shown) os << "*";
            os << va;
            if (m.da > 1) os << "^" << m.da;
            coeff_shown = true;
        }
        if (m.db > 0) {
            if (coeff_shown) os << "*";
            os << vb;
            if (m.db > 1) os << "^" << m.db;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Wrapper giving UniPoly the divexact/is_zero surface det_bareiss expects
// while keeping UniPoly itself lean.
struct URing {
    UniPoly p;
    URing() = default;
    explicit URing(UniPoly q) : p(std::move(q)) {}
    bool is_zero() const { return p.is_zero(); }
    URing operator-() const { return URing(-p); }
    URing operator+(const URing& o) const { return URing(p + o.p); }
    URing operator-(const URing& o) const { return URing(p - o.p); }
    URing operator*(const URing& o) const { return URing(p * o.p); }
    URing divexact(const URing& o) const { return URing(p.divexact(o.p)); }
};

UniPoly resultant_impl(const BiPoly& f, const BiPoly& g) {
    // Eliminates a; result is a polynomial in b.
    if (f.is_zero() || g.is_zero()) return UniPoly();
    int df = f.deg_a(), dg = g.deg_a();
    if (df == 0 && dg == 0) return UniPoly::constant(Rat(1));
    auto fa = f.coeffs_in_a_as_unipoly_b();
    auto ga = g.coeffs_in_a_as_unipoly_b();
    if (df == 0) {
        // Res(c, g) = c^deg(g)
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < dg; ++i) r = r * fa[0];
        return r;
    }
    if (dg == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < df; ++i) r = r * ga[0];
        return r;
    }
    std::vector<URing> fu, gu;
    for (auto& c : fa) fu.emplace_back(std::move(c));
    for (auto& c : ga) gu.emplace_back(std::move(c));
    return resultant_generic(fu, gu, URing(UniPoly::constant(Rat(1)))).p;
}

} // namespace

UniPoly resultant_eliminate_a(const BiPoly& f, const BiPoly& g) {
    return resultant_impl(f, g);
}

UniPoly resultant_eliminate_b(const BiPoly& f, const BiPoly& g) {
    return resultant_impl(f.swap_vars(), g.swap_vars());
}

} // namespace distset
