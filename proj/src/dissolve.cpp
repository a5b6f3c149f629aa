#include "distset/dissolve.hpp"

#include <algorithm>

namespace distset {

namespace {

void check_two_distance(const Graph& g) {
    if (g.order() < 2 || g.is_complete() || g.is_empty())
        throw NotTwoDistanceGraph("graph is complete or empty");
}

// Groebner basis of the minor system built incrementally: each minor is
// reduced against the current basis first, and the run stops as soon as the
// ideal is the unit ideal.
std::vector<BiPoly> incremental_basis(const std::vector<BiPoly>& gens) {
    std::vector<BiPoly> basis;
    for (const auto& m : gens) {
        if (m.is_zero()) continue;
        if (basis.empty()) {
            basis = groebner_lex({m});
            continue;
        }
        if (basis.size() == 1 && basis[0].is_constant()) break;  // unit ideal
        BiPoly r = reduce_mod(m, basis);
        if (r.is_zero()) continue;
        basis.push_back(r);
        basis = groebner_lex(basis);
    }
    return basis;
}

// Substitute a := value, keeping the b-only polynomial matrix shape.
PolyMatrix subst_a_matrix(const PolyMatrix& m, const Rat& value) {
    PolyMatrix out;
    out.order = m.order;
    out.entries.assign(m.order, std::vector<BiPoly>(m.order));
    for (int i = 0; i < m.order; ++i)
        for (int j = 0; j < m.order; ++j)
            out.entries[i][j] = BiPoly::from_unipoly_b(m.entries[i][j].subst_a(value));
    return out;
}

RealAlg oriented_short_parameter(const SphericalSolution& s) {
    return s.attribution == Attribution::Graph ? s.a : s.b;
}

} // namespace

SphericalVerdict solve_spherical(const Graph& g, int d) {
    check_two_distance(g);
    SphericalVerdict verdict;
    verdict.graph = g;
    const int n = g.order();
    if (d + 1 > n)
        throw PositiveDimensionalUnexpected("spherical system underdetermined: n < d+2");

    PolyMatrix gram = candidate_gram(g);
    std::vector<BiPoly> gens = principal_minors(gram, d + 1);
    std::vector<BiPoly> basis = incremental_basis(gens);
    SolveOutcome outcome = solve_from_basis(std::move(basis), gens);
    if (outcome.shape == SystemShape::Inconsistent) return verdict;
    if (outcome.shape == SystemShape::PositiveDimensional)
        throw PositiveDimensionalUnexpected("spherical system is positive-dimensional");

    const Rat one(1);
    for (const auto& pt : outcome.points) {
        int ab = compare(pt.a, pt.b);
        if (ab == 0) continue;
        if (compare_rat(pt.a, one) >= 0 || compare_rat(pt.b, one) >= 0) continue;
        verdict.survived = true;
        PsdRank pr = psd_rank_at(gram, pt.a, pt.b);
        if (!pr.is_psd) continue;
        if (*pr.rank > d)
            throw CertificationFailure("PSD solution with rank above the target dimension");
        SphericalSolution sol;
        sol.a = pt.a;
        sol.b = pt.b;
        sol.psd = true;
        sol.rank = pr.rank;
        sol.attribution = ab > 0 ? Attribution::Graph : Attribution::Complement;
        sol.jspherical = compare_rat(oriented_short_parameter(sol), Rat(0)) == 0;
        verdict.solutions.push_back(std::move(sol));
    }
    verdict.indefinite_only = verdict.survived && verdict.solutions.empty();
    return verdict;
}

GeneralVerdict solve_general(const Graph& g, int d) {
    check_two_distance(g);
    GeneralVerdict verdict;
    verdict.graph = g;
    const int n = g.order();
    PolyMatrix menger1 = subst_a_matrix(menger_matrix(g), Rat(1));

    if (d + 1 > menger1.order) {
        // Too few points to constrain the rank: a continuum of sets.
        verdict.continuum = true;
        verdict.survived = true;
        return verdict;
    }

    UniPoly common;  // gcd of the specialized principal minors
    bool any_nonzero = false;
    for (const auto& minor : principal_minors(menger1, d + 1)) {
        UniPoly u = minor.as_unipoly_in_b();
        if (u.is_zero()) continue;
        common = any_nonzero ? gcd(common, u) : u.monic();
        any_nonzero = true;
        if (common.degree() == 0) break;
    }
    if (!any_nonzero) {
        verdict.continuum = true;
        verdict.survived = true;
        return verdict;
    }
    if (common.degree() == 0) return verdict;  // no common root

    const Rat zero(0), one(1);
    for (const auto& b : RealAlg::roots_of(common)) {
        if (compare_rat(b, zero) <= 0) continue;
        if (compare_rat(b, one) == 0) continue;
        verdict.survived = true;
        PsdRank pr = psd_rank_at_b(menger1, b);
        if (!pr.is_psd) continue;
        if (*pr.rank > d)
            throw CertificationFailure("PSD solution with rank above the target dimension");
        GeneralSolution sol;
        sol.b = b;
        sol.psd = true;
        sol.rank = pr.rank;
        sol.attribution = compare_rat(b, one) > 0 ? Attribution::Graph : Attribution::Complement;
        sol.spherical_flag = is_spherical_config(g, b);
        verdict.solutions.push_back(std::move(sol));
    }
    return verdict;
}

bool is_spherical_config(const Graph& g, const RealAlg& b) {
    // Points x_1..x_{n-1} with Gram M = menger(1, b), plus the origin.
    // A common sphere exists iff 2 M w = diag(M) is solvable, i.e.
    // rank [2M | diag] = rank M over the field of b.
    PolyMatrix menger1 = subst_a_matrix(menger_matrix(g), Rat(1));
    const int n = menger1.order;
    const UniPoly modulus = b.defining();
    auto red = [&](const UniPoly& p) { return p.divmod(modulus).second; };

    std::vector<std::vector<UniPoly>> rows(n, std::vector<UniPoly>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            rows[i][j] = red(menger1.entries[i][j].as_unipoly_in_b().scaled(Rat(2)));
        rows[i][n] = red(menger1.entries[i][i].as_unipoly_in_b());
    }
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i) {
            if (alg_sign(rows[i][col], b) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = r + 1; i < n; ++i) {
            if (rows[i][col].is_zero()) continue;
            UniPoly f = rows[i][col];
            for (int j = col; j <= n; ++j)
                rows[i][j] = red(rows[r][col] * rows[i][j] - f * rows[r][j]);
        }
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (alg_sign(rows[i][n], b) != 0) return false;
    return true;
}

namespace {

// A solution names a point set up to similarity: the orientation (which of
// the two graphs carries the short distance) together with the oriented
// squared-distance ratio alpha2^2/alpha1^2 >= 1. Two admissible parameter
// points with equal identity describe the same set; for self-complementary
// graphs the orientation is immaterial.
struct SetIdentity {
    Attribution orientation;
    RealAlg ratio;
};

int count_identities(std::vector<SetIdentity> ids, bool self_compl) {
    int count = 0;
    std::vector<char> used(ids.size(), 0);
    for (size_t i = 0; i < ids.size(); ++i) {
        if (used[i]) continue;
        ++count;
        for (size_t j = i + 1; j < ids.size(); ++j) {
            if (used[j]) continue;
            bool same_orient = self_compl || ids[i].orientation == ids[j].orientation;
            if (same_orient && alg_equal(ids[i].ratio, ids[j].ratio)) used[j] = 1;
        }
    }
    return count;
}

SetIdentity identity_of(const SphericalSolution& s) {
    // ratio = (1 - b_or) / (1 - a_or) with a_or the short-distance slot.
    const RealAlg& a_or = s.attribution == Attribution::Graph ? s.a : s.b;
    const RealAlg& b_or = s.attribution == Attribution::Graph ? s.b : s.a;
    UniPoly one_minus(std::vector<Rat>{Rat(1), Rat(-1)});
    RealAlg num = compose_poly(one_minus, b_or);
    RealAlg den = compose_poly(one_minus, a_or);
    return {s.attribution, alg_div(num, den)};
}

SetIdentity identity_of(const GeneralSolution& s) {
    RealAlg ratio =
        s.attribution == Attribution::Graph ? s.b : alg_recip(s.b);
    return {s.attribution, std::move(ratio)};
}

} // namespace

int count_sets(const SphericalVerdict& v) {
    std::vector<SetIdentity> ids;
    for (const auto& s : v.solutions) ids.push_back(identity_of(s));
    return count_identities(std::move(ids), self_complementary(v.graph));
}

int count_sets(const GeneralVerdict& v) {
    std::vector<SetIdentity> ids;
    for (const auto& s : v.solutions) ids.push_back(identity_of(s));
    return count_identities(std::move(ids), self_complementary(v.graph));
}

int count_nonspherical_sets(const GeneralVerdict& v) {
    std::vector<SetIdentity> ids;
    for (const auto& s : v.solutions)
        if (!s.spherical_flag) ids.push_back(identity_of(s));
    return count_identities(std::move(ids), self_complementary(v.graph));
}

ValidityReport verify_point(const Graph& g, const RealAlg& a, const RealAlg& b, int d,
                            SolveMode mode) {
    ValidityReport rep;
    const int n = g.order();
    if (mode == SolveMode::Spherical) {
        PolyMatrix gram = candidate_gram(g);
        rep.minors_vanish = true;
        if (d + 1 <= n) {
            for (const auto& minor : principal_minors(gram, d + 1)) {
                if (sign2(minor, a, b) != 0) {
                    rep.minors_vanish = false;
                    break;
                }
            }
        }
        PsdRank pr = psd_rank_at(gram, a, b);
        rep.psd = pr.is_psd;
        rep.rank = pr.rank;
        rep.rank_within = pr.is_psd && *pr.rank <= d;
        int ab = compare(a, b);
        rep.attribution = ab >= 0 ? Attribution::Graph : Attribution::Complement;
        if (g.is_complete()) {
            rep.attribution = Attribution::Graph;
            rep.jspherical = compare_rat(a, Rat(0)) == 0;
            rep.note = "single-distance configuration (complete graph)";
        } else if (g.is_empty()) {
            rep.attribution = Attribution::Complement;
            rep.jspherical = compare_rat(b, Rat(0)) == 0;
            rep.note = "single-distance configuration (empty graph)";
        } else {
            if (ab == 0) rep.note = "degenerate: a == b";
            const RealAlg& oriented = ab >= 0 ? a : b;
            rep.jspherical = compare_rat(oriented, Rat(0)) == 0;
        }
    } else {
        PolyMatrix menger = menger_matrix(g);
        rep.minors_vanish = true;
        if (d + 1 <= menger.order) {
            for (const auto& minor : principal_minors(menger, d + 1)) {
                if (sign2(minor, a, b) != 0) {
                    rep.minors_vanish = false;
                    break;
                }
            }
        }
        PsdRank pr = psd_rank_at(menger, a, b);
        rep.psd = pr.is_psd;
        rep.rank = pr.rank;
        rep.rank_within = pr.is_psd && *pr.rank <= d;
        int ab = compare(a, b);
        // Squared distances: edges carry a, so edges are short iff a < b.
        rep.attribution = ab <= 0 ? Attribution::Graph : Attribution::Complement;
        if (ab == 0) rep.note = "degenerate: a == b";
        if (rep.psd && !g.is_complete() && !g.is_empty() && sign_of(a) > 0) {
            RealAlg ratio = alg_div(b, a);
            rep.spherical_flag = is_spherical_config(g, ratio);
        }
    }
    rep.valid = rep.minors_vanish && rep.psd && rep.rank_within;
    return rep;
}

} // namespace distset
