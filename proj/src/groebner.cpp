#include "distset/groebner.hpp"

#include <algorithm>
#include <optional>

#include "distset/errors.hpp"

namespace distset {

namespace {

Mono key_mono(const Mono& m, VarOrder order) {
    return order == VarOrder::AOverB ? m : Mono{m.db, m.da};
}

// Leading monomial under the requested order.
Mono lead_mono(const BiPoly& p, VarOrder order) {
    if (order == VarOrder::AOverB) return p.lead_mono();  // storage order
    Mono best{-1, -1};
    bool first = true;
    MonoLexDesc less;
    for (const auto& [m, q] : p.terms()) {
        Mono k = key_mono(m, order);
        if (first || less(k, best)) {
            best = k;
            first = false;
        }
    }
    return Mono{best.db, best.da};
}

bool divides(const Mono& d, const Mono& m) { return d.da <= m.da && d.db <= m.db; }

Mono lcm_mono(const Mono& x, const Mono& y) {
    return {std::max(x.da, y.da), std::max(x.db, y.db)};
}

// Full normal form with respect to `basis` (leading monomials precomputed).
BiPoly normal_form(BiPoly f, const std::vector<BiPoly>& basis,
                   const std::vector<Mono>& lms, VarOrder order) {
    BiPoly out;
    MonoLexDesc less;
    while (!f.is_zero()) {
        // Leading term of f under `order`.
        Mono lm = lead_mono(f, order);
        Rat lc = f.coeff(lm.da, lm.db);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (divides(lms[i], lm)) {
                Mono q{lm.da - lms[i].da, lm.db - lms[i].db};
                Rat factor = lc / basis[i].coeff(lms[i].da, lms[i].db);
                f = f - basis[i].mono_mul(q, factor);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.add_term(lm.da, lm.db, lc);
            f.add_term(lm.da, lm.db, -lc);
        }
    }
    return out;
}

} // namespace

std::vector<BiPoly> groebner_lex(std::vector<BiPoly> gens, VarOrder order) {
    std::vector<BiPoly> basis;
    std::vector<Mono> lms;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(g);
        lms.push_back(lead_mono(g, order));
    }
    if (basis.empty()) return {};

    // Pair queue with the two Buchberger criteria.
    struct Pair {
        size_t i, j;
        Mono lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm_mono(lms[i], lms[j])});
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    MonoLexDesc less;
    auto pick = [&]() {
        // Normal strategy: smallest lcm under the order (= last under desc).
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            if (less(key_mono(pairs[best].lcm, order), key_mono(pairs[k].lcm, order)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        return p;
    };

    int guard = 0;
    while (!pairs.empty()) {
        if (++guard > 200000) throw Error("groebner_lex: pair budget exhausted");
        Pair pr = pick();
        const Mono &mi = lms[pr.i], &mj = lms[pr.j];
        // First Buchberger criterion: coprime leading monomials.
        if (mi.da + mj.da == pr.lcm.da && mi.db + mj.db == pr.lcm.db) continue;
        // Chain criterion.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(lms[k], pr.lcm)) continue;
            auto done = [&](size_t x, size_t y) {
                Mono l = lcm_mono(lms[x], lms[y]);
                for (const auto& q : pairs)
                    if ((q.i == std::min(x, y) && q.j == std::max(x, y))) return false;
                return true;
            };
            if (done(pr.i, k) && done(k, pr.j)) chained = true;
        }
        if (chained) continue;

        // S-polynomial.
        Mono qi{pr.lcm.da - mi.da, pr.lcm.db - mi.db};
        Mono qj{pr.lcm.da - mj.da, pr.lcm.db - mj.db};
        Rat ci = basis[pr.i].coeff(mi.da, mi.db);
        Rat cj = basis[pr.j].coeff(mj.da, mj.db);
        BiPoly s = basis[pr.i].mono_mul(qi, Rat(1) / ci) - basis[pr.j].mono_mul(qj, Rat(1) / cj);
        BiPoly r = normal_form(std::move(s), basis, lms, order);
        if (r.is_zero()) continue;
        basis.push_back(r);
        lms.push_back(lead_mono(r, order));
        push_pairs_for(basis.size() - 1);
    }

    // Interreduce to the unique reduced basis.
    std::vector<BiPoly> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (divides(lms[j], lms[i]) && !(lms[i] == lms[j] && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    std::vector<BiPoly> final_basis;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<BiPoly> others;
        std::vector<Mono> olms;
        for (size_t j = 0; j < reduced.size(); ++j) {
            if (j == i) continue;
            others.push_back(reduced[j]);
            olms.push_back(lead_mono(reduced[j], order));
        }
        BiPoly r = others.empty() ? reduced[i] : normal_form(reduced[i], others, olms, order);
        if (r.is_zero()) continue;
        Mono lm = lead_mono(r, order);
        final_basis.push_back(r.scaled(Rat(1) / r.coeff(lm.da, lm.db)));
    }
    std::sort(final_basis.begin(), final_basis.end(), [&](const BiPoly& x, const BiPoly& y) {
        MonoLexDesc lt;
        return lt(key_mono(lead_mono(x, order), order), key_mono(lead_mono(y, order), order));
    });
    return final_basis;
}

BiPoly reduce_mod(const BiPoly& f, const std::vector<BiPoly>& basis, VarOrder order) {
    std::vector<Mono> lms;
    for (const auto& g : basis) lms.push_back(lead_mono(g, order));
    return normal_form(f, basis, lms, order);
}

namespace {

bool is_unit_basis(const std::vector<BiPoly>& basis) {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

// Lex (a > b) reduced basis of a zero-dimensional ideal contains exactly one
// polynomial in b alone; return it if present.
std::optional<UniPoly> eliminant_in_b(const std::vector<BiPoly>& basis) {
    for (const auto& g : basis)
        if (g.deg_a() == 0) return g.as_unipoly_in_b();
    return std::nullopt;
}

bool has_pure_a_lead(const std::vector<BiPoly>& basis) {
    for (const auto& g : basis) {
        Mono lm = lead_mono(g, VarOrder::AOverB);
        if (lm.db == 0 && lm.da > 0) return true;
    }
    return false;
}

} // namespace

SolveOutcome solve_bivariate_real(const std::vector<BiPoly>& gens) {
    std::vector<BiPoly> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) {
        SolveOutcome out;
        out.shape = SystemShape::PositiveDimensional;
        return out;
    }
    return solve_from_basis(groebner_lex(nonzero, VarOrder::AOverB), nonzero);
}

SolveOutcome solve_from_basis(std::vector<BiPoly> basis,
                              const std::vector<BiPoly>& original_gens) {
    SolveOutcome out;
    std::vector<BiPoly> nonzero;
    for (const auto& g : original_gens)
        if (!g.is_zero()) nonzero.push_back(g);
    out.basis = std::move(basis);
    if (out.basis.empty()) {
        out.shape = SystemShape::PositiveDimensional;
        return out;
    }
    if (is_unit_basis(out.basis)) {
        out.shape = SystemShape::Inconsistent;
        return out;
    }
    auto ub = eliminant_in_b(out.basis);
    bool zero_dim = ub.has_value() && has_pure_a_lead(out.basis);
    if (!zero_dim) {
        // Not zero-dimensional over C. A generator that is a sum of
        // even-power terms with same-sign coefficients and a nonzero
        // constant never vanishes on R^2: certified real-empty.
        for (const auto& g : nonzero) {
            if (g.is_definite_sign_form()) {
                out.shape = SystemShape::Points;
                return out;
            }
        }
        out.shape = SystemShape::PositiveDimensional;
        return out;
    }

    // Candidate coordinates from the two eliminants.
    auto basis_ba = groebner_lex(out.basis, VarOrder::BOverA);
    std::optional<UniPoly> ua;
    for (const auto& g : basis_ba)
        if (g.deg_b() == 0) ua = g.as_unipoly_in_a();
    if (!ua) {
        out.shape = SystemShape::PositiveDimensional;
        return out;
    }
    auto b_roots = RealAlg::roots_of(*ub);
    auto a_roots = RealAlg::roots_of(*ua);

    for (const auto& br : b_roots) {
        for (const auto& ar : a_roots) {
            bool ok = true;
            for (const auto& g : out.basis) {
                if (auto s = sign2_quick(g, ar, br, 12); s && *s != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (const auto& g : out.basis) {
                if (sign2(g, ar, br) != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            out.points.push_back({ar, br, out.basis});
        }
    }
    // Deterministic order: by b, then a (roots_of already ascends, and the
    // loops preserve that order).
    return out;
}

} // namespace distset
