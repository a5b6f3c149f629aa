#include "distset/literal.hpp"

#include <sstream>

#include "distset/errors.hpp"

namespace distset {

namespace {

std::string render_quad(const RealAlg& x) {
    // Defining c2 t^2 + c1 t + c0 with c2 > 0; the root is
    // (-c1 +- sqrt(disc)) / (2 c2), disc = c1^2 - 4 c2 c0 = s^2 D.
    Int c2 = x.defining().coeff(2).get_num();
    Int c1 = x.defining().coeff(1).get_num();
    Int c0 = x.defining().coeff(0).get_num();
    Int disc = c1 * c1 - 4 * c2 * c0;
    Int s, dfree;
    split_square(disc, s, dfree);
    // Which branch: + iff x > -c1/(2 c2).
    Rat vertex = Rat(-c1) / Rat(2 * c2);
    vertex.canonicalize();
    Int q = compare_rat(x, vertex) > 0 ? s : -s;
    Int p = -c1, r = 2 * c2;
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
    p /= g;
    q /= g;
    r /= g;
    std::ostringstream os;
    os << "(" << p.get_str() << " + " << q.get_str() << "*sqrt(" << dfree.get_str()
       << "))/" << r.get_str();
    return os.str();
}

} // namespace

std::string render_literal(const RealAlg& x) {
    if (x.is_rational()) return x.rational_value().get_str();
    if (x.defining().degree() == 2) return render_quad(x);
    RealAlg xc = x;
    // Tighten to a short canonical interval for readability.
    refine_to_width(xc, Rat(1, 64));
    std::ostringstream os;
    os << "root([";
    for (int k = 0; k <= xc.defining().degree(); ++k) {
        if (k) os << ",";
        os << xc.defining().coeff(k).get_num().get_str();
    }
    os << "]; " << xc.lo().get_str() << ", " << xc.hi().get_str() << ")";
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

RealAlg parse_quad(const std::string& text) {
    // "(p + q*sqrt(D))/r"
    size_t close = text.rfind(')');
    size_t slash = text.rfind('/');
    if (text.front() != '(' || slash == std::string::npos || slash < close)
        throw ParseError("bad quadratic literal: " + text);
    std::string inner = text.substr(1, text.rfind(")/", std::string::npos) - 1);
    size_t plus = inner.find(" + ");
    if (plus == std::string::npos) throw ParseError("bad quadratic literal: " + text);
    std::string p_str = strip(inner.substr(0, plus));
    std::string rest = strip(inner.substr(plus + 3));
    size_t star = rest.find("*sqrt(");
    if (star == std::string::npos || rest.back() != ')')
        throw ParseError("bad quadratic literal: " + text);
    std::string q_str = strip(rest.substr(0, star));
    std::string d_str = rest.substr(star + 6, rest.size() - star - 7);
    std::string r_str = strip(text.substr(slash + 1));
    Int p(p_str), q(q_str), dfree(d_str), r(r_str);
    if (sign_of(dfree) <= 0 || sign_of(r) <= 0 || sign_of(q) == 0)
        throw ParseError("bad quadratic literal: " + text);
    // Normalize a square part of D into q.
    Int sq, rest_d;
    split_square(dfree, sq, rest_d);
    q *= sq;
    dfree = rest_d;
    if (dfree == 1) {
        Rat v = Rat(p + q) / Rat(r);
        v.canonicalize();
        return RealAlg(v);
    }
    // x = (p + q sqrt(D))/r  =>  (r x - p)^2 = q^2 D.
    UniPoly lin(std::vector<Rat>{Rat(-p), Rat(r)});
    UniPoly defining = lin * lin - UniPoly::constant(Rat(q * q * dfree));
    // Exact enclosure of sqrt(D) at scale 2^-20.
    const int kShift = 20;
    Int scaled = dfree << (2 * kShift);
    Int s0;
    mpz_sqrt(s0.get_mpz_t(), scaled.get_mpz_t());
    Rat denom = Rat(Int(1) << kShift);
    Rat sq_lo = Rat(s0) / denom, sq_hi = Rat(s0 + 1) / denom;
    Rat lo = (Rat(p) + Rat(q) * (sign_of(q) > 0 ? sq_lo : sq_hi)) / Rat(r);
    Rat hi = (Rat(p) + Rat(q) * (sign_of(q) > 0 ? sq_hi : sq_lo)) / Rat(r);
    lo.canonicalize();
    hi.canonicalize();
    return RealAlg::make(defining, lo, hi);
}

RealAlg parse_root(const std::string& text) {
    // "root([c0,c1,...]; lo, hi)"
    size_t lb = text.find('[');
    size_t rb = text.find(']');
    size_t semi = text.find(';', rb);
    size_t close = text.rfind(')');
    if (lb == std::string::npos || rb == std::string::npos || semi == std::string::npos ||
        close == std::string::npos)
        throw ParseError("bad root literal: " + text);
    std::vector<Rat> coeffs;
    std::string inner = text.substr(lb + 1, rb - lb - 1);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) coeffs.push_back(rat_parse(strip(tok)));
    std::string rest = text.substr(semi + 1, close - semi - 1);
    size_t comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("bad root literal: " + text);
    Rat lo = rat_parse(strip(rest.substr(0, comma)));
    Rat hi = rat_parse(strip(rest.substr(comma + 1)));
    return RealAlg::make(UniPoly(std::move(coeffs)), lo, hi);
}

} // namespace

RealAlg parse_literal(const std::string& raw) {
    std::string text = strip(raw);
    if (text.empty()) throw ParseError("empty literal");
    if (text.rfind("root(", 0) == 0) return parse_root(text);
    if (text.front() == '(') return parse_quad(text);
    return RealAlg(rat_parse(text));
}

} // namespace distset
