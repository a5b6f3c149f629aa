#include "distset/tables.hpp"

#include <sstream>

#include "distset/atlas.hpp"
#include "distset/literal.hpp"

namespace distset {

namespace {

using Sols = std::vector<FixtureSolution>;

FixtureSolution sol(std::string a, std::string b) { return {std::move(a), std::move(b), {}}; }
FixtureSolution sol_poly(std::string a, std::vector<std::string> bpoly) {
    return {std::move(a), "", std::move(bpoly)};
}

std::vector<FixtureRow> build_rows() {
    std::vector<FixtureRow> rows;
    auto add = [&](std::string label, int n, std::string code, SolveMode mode, Sols sols) {
        FixtureRow r;
        r.label = std::move(label);
        r.n = n;
        r.code = std::move(code);
        r.mode = mode;
        r.solutions = std::move(sols);
        rows.push_back(std::move(r));
        return &rows.back();
    };
    auto sph = SolveMode::Spherical;
    auto gen = SolveMode::General;
    auto quad_pm = [](int p, int mult, int d, int r, const std::string& b) {
        // ((p +- mult*sqrt(d))/r, b)
        std::ostringstream plus, minus;
        plus << "(" << p << " + " << mult << "*sqrt(" << d << "))/" << r;
        minus << "(" << p << " + " << -mult << "*sqrt(" << d << "))/" << r;
        return Sols{sol(plus.str(), b), sol(minus.str(), b)};
    };

    // ---- spherical, n in {8, 9, 10} ----
    add("G10A", 10, "aaaaaaaabbababaabbaaabaabaabbabaabaabbaabaaaa", sph,
        {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G10A", true, 5};
    add("G9A", 9, "aaaaaaaabbababaabbaaabaabaabbabaabaa", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G9A", true, 5};
    {
        auto* r = add("G9B", 9, "aaaabbabbabababbabbaabbaababbbababaa", sph,
                      {sol("1/4", "-1/2")});
        r->claim_self_complementary = true;
    }
    {
        auto* r = add("G8A", 8, "aaaaaaaaabaabaaabaaaabaaaaaa", sph, {sol("0", "-1")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G8A", true, 7};
    }
    add("G8B", 8, "aaaaaaaaabaabababaabbbaaabbb", sph, quad_pm(1, 1, 5, 4, "1/2"));
    add("G8C", 8, "aaaaaaaabbababababaabbbaabaa", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G8C", true, 5};
    add("G8D", 8, "aaaaaaabbbbabbabbabaabbbaaaa", sph, {sol("1/5", "-3/5")})
        ->mydim_claim = MydimClaim{"G8D", true, 6};
    add("G8E", 8, "aaaaaaaabbababaabbaaabaabaab", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G8E", true, 5};
    {
        auto* r = add("G8F", 8, "aaaabbabbabababbabbaabbaabab", sph, {sol("1/4", "-1/2")});
        r->claim_self_complementary = true;
    }

    // ---- spherical, n = 7 ----
    {
        auto* r = add("G7A", 7, "aaaaaaaaabaabaaabaaaa", sph, {sol("0", "-1")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G7A", true, 6};
    }
    add("G7B", 7, "aaaaaaaaabaababaabbaa", sph, quad_pm(1, 1, 5, 4, "1/2"));
    add("G7C", 7, "aaaaaaaaabaabababaabb", sph, quad_pm(1, 1, 5, 4, "1/2"));
    add("G7D", 7, "aaaaaaaabbababaabbaaa", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G7D", true, 5};
    add("G7E", 7, "aaaaaaaabbababababaab", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G7E", true, 5};
    add("G7F", 7, "aaaaaaaabbababbabbabb", sph, quad_pm(1, 1, 5, 4, "1/2"));
    add("G7G", 7, "aaaaaaaabbababbbaabbb", sph, quad_pm(1, 1, 5, 4, "1/2"));
    // The next three rows carry remarks naming other rows' labels; the
    // claims are kept verbatim and recomputed during verification.
    add("G7H", 7, "aaaaaaabbbbabbabbabaa", sph, {sol("1/5", "-3/5")})
        ->mydim_claim = MydimClaim{"G7F", true, 5};
    add("G7I", 7, "aaaaaaaabbabababaabaa", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G7G", true, 5};
    add("G7J", 7, "aaaaababaabaaaabbbbbb", sph, {sol("1/4", "-1/2")})
        ->mydim_claim = MydimClaim{"G7H", true, 5};
    add("G7K", 7, "aaaaababaabaaabbbaaaa", sph,
        {sol("(-1 + -1*sqrt(5))/8", "(-3 + 3*sqrt(5))/8")})
        ->mydim_claim = MydimClaim{"G7K", false, 5};
    add("G7L", 7, "aaaaababaabaabbbbbaaa", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G7L", true, 5};
    add("G7M", 7, "aaaaababababbaaabbbbb", sph, quad_pm(1, 1, 5, 4, "1/2"));
    add("G7N", 7, "aaaaababababbababbbaa", sph, {sol("-5/12", "7/24")})
        ->mydim_claim = MydimClaim{"G7N", false, 5};
    add("G7O", 7, "aaaaabababbabaabbaaaa", sph,
        {sol_poly("root([-1,10,32,8]; 0, 1)", {"-1/2", "-2"}),
         sol_poly("root([-1,10,32,8]; -1, -2/5)", {"-1/2", "-2"})});
    add("G7P", 7, "aaaabbabbabababbabbaa", sph, {sol("1/4", "-1/2"), sol("-1/2", "1/4")});

    // ---- spherical, n = 6 ----
    {
        auto* r = add("G6A", 6, "aaaaaaaaabaabaa", sph, {sol("0", "-1")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G6A", true, 5};
    }
    add("G6B", 6, "aaaaaaaaabaabab", sph, quad_pm(1, 1, 5, 4, "1/2"));
    add("G6C", 6, "aaaaaaaabbaabba", sph, {sol("-1/3", "1/3")})
        ->mydim_claim = MydimClaim{"G6C", false, 4};
    add("G6D", 6, "aaaaaaaabbababa", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G6D", true, 4};
    add("G6E", 6, "aaaaaaaabbababb", sph, quad_pm(1, 1, 5, 4, "1/2"));
    {
        auto* r = add("G6F", 6, "aaaaaaaabbbbaaa", sph,
                      {sol("0", "(0 + 1*sqrt(2))/2"), sol("0", "(0 + -1*sqrt(2))/2")});
        r->claim_jspherical = true;
    }
    add("G6G", 6, "aaaaaaaabbbbaab", sph, {sol("1/6", "-2/3"), sol("-1/3", "1/3")});
    add("G6H", 6, "aaaaaaabbbbabba", sph, {sol("1/5", "-3/5")})
        ->mydim_claim = MydimClaim{"G6H", true, 4};
    add("G6I", 6, "aaaaaaabbbbabbb", sph,
        {sol("1/2", "(1 + 1*sqrt(5))/4"), sol("1/2", "(1 + -1*sqrt(5))/4")});
    add("G6J", 6, "aaaaababaaabbbb", sph, {sol("1/3", "-1/3")})
        ->mydim_claim = MydimClaim{"G6J", true, 4};
    {
        auto* r = add("G6K", 6, "aaaaababaabaaaa", sph, {sol("0", "-1")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G6K", true, 5};
    }
    add("G6L", 6, "aaaaababaabaaab", sph,
        {sol("(-1 + -1*sqrt(5))/8", "(-3 + 3*sqrt(5))/8")})
        ->mydim_claim = MydimClaim{"G6L", false, 4};
    add("G6M", 6, "aaaaababaabaabb", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G6M", true, 4};
    add("G6N", 6, "aaaaababaabbbbb", sph, {sol("1/4", "-1/2")})
        ->mydim_claim = MydimClaim{"G6N", true, 4};
    add("G6O", 6, "aaaaababababbaa", sph,
        {sol("(0 + 1*sqrt(5))/5", "(0 + -1*sqrt(5))/5"),
         sol("(0 + -1*sqrt(5))/5", "(0 + 1*sqrt(5))/5")});
    add("G6P", 6, "aaaaababababbab", sph, {sol("-5/12", "7/24")})
        ->mydim_claim = MydimClaim{"G6P", false, 4};
    add("G6Q", 6, "aaaaababababbbb", sph, quad_pm(1, 1, 5, 4, "1/2"));
    add("G6R", 6, "aaaaabababbaabb", sph,
        {sol("(0 + 1*sqrt(5))/5", "(0 + -1*sqrt(5))/5"),
         sol("(0 + -1*sqrt(5))/5", "(0 + 1*sqrt(5))/5")});
    add("G6S", 6, "aaaaabababbabaa", sph,
        {sol_poly("root([-1,10,32,8]; 0, 1)", {"-1/2", "-2"}),
         sol_poly("root([-1,10,32,8]; -1, -2/5)", {"-1/2", "-2"})});
    add("G6T", 6, "aaaaabababbabab", sph,
        {sol_poly("root([1,-2,-8,8]; 0, 1/2)", {"-1/2", "-1", "2"}),
         sol_poly("root([1,-2,-8,8]; -1, 0)", {"-1/2", "-1", "2"})});
    add("G6U", 6, "aaaaabababbbbaa", sph, {sol("1/6", "-2/3")})
        ->mydim_claim = MydimClaim{"G6U", true, 4};
    add("G6V", 6, "aaaaababbbbabba", sph, {sol("1/3", "-1/3")})
        ->mydim_claim = MydimClaim{"G6V", true, 4};
    add("G6W", 6, "aaaaabbbaabbaaa", sph, {sol("-3/7", "2/7")})
        ->mydim_claim = MydimClaim{"G6W", false, 4};
    add("G6X", 6, "aaaabbabbababab", sph, {sol("1/4", "-1/2"), sol("-1/2", "1/4")});
    add("G6Y", 6, "aaaabbbababbaaa", sph, {sol("1/7", "-5/7"), sol("-1/2", "1/4")});
    add("G6Z", 6, "aaaabbbababbbaa", sph,
        {sol("1/5", "-3/5"), sol("(0 + -1*sqrt(2))/3", "(-1 + 1*sqrt(2))/3")});
    add("G6AE", 6, "aaaabbbbbabbbaa", sph,
        {sol("(-1 + 3*sqrt(3))/13", "(-7 + -5*sqrt(3))/26"),
         sol("(-1 + -3*sqrt(3))/13", "(-7 + 5*sqrt(3))/26")});
    {
        auto* r = add("G6OE", 6, "aaabbbbbbabbbaa", sph, {sol("-1/2", "0")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G6OE", false, 5};
    }

    // ---- spherical, n = 5 ----
    {
        auto* r = add("G5A", 5, "aaaaaaaaaa", sph, {sol("-1/4", "0")});
        r->complete_graph = true;
        r->mydim_claim = MydimClaim{"G5A", true, 4};
    }
    {
        auto* r = add("G5B", 5, "aaaaaaaaab", sph, {sol("(1 + -1*sqrt(7))/6", "0")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G5B", false, 3};
    }
    {
        auto* r = add("G5C", 5, "aaaaaabbbb", sph, {sol("0", "-1/2")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G5C", true, 3};
    }
    {
        auto* r = add("G5D", 5, "aaaaabaabb", sph, {sol("-1/3", "0")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G5D", false, 3};
    }
    {
        auto* r = add("G5E", 5, "aaaaababaa", sph, {sol("(1 + -1*sqrt(5))/4", "0")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G5E", false, 3};
    }
    {
        auto* r = add("G5F", 5, "aaabbbbbba", sph, {sol("0", "(0 + -1*sqrt(6))/6")});
        r->claim_jspherical = true;
        r->mydim_claim = MydimClaim{"G5F", true, 3};
    }

    // ---- general (nonspherical), n in {7, 8, 9} ----
    auto gen_pm = Sols{sol("1", "(3 + 1*sqrt(5))/2"), sol("1", "(3 + -1*sqrt(5))/2")};
    add("G9C", 9, "aaaaaaaaaaaabbbababbbabbabbbabbbabbb", gen, gen_pm);
    {
        auto* r = add("G9D", 9, "aaaaaaaaabaababaabbaaabbbbbbbabbbbbb", gen,
                      {sol("1", "(3 + 1*sqrt(5))/2")});
        r->claim_self_complementary = true;
    }
    add("G8G", 8, "aaaaaaaaaaaabbbababbbabbabbb", gen, gen_pm);
    add("G8H", 8, "aaaaaaaaaaaabbbababbbbaabbbb", gen, gen_pm);
    add("G8I", 8, "aaaaaaaaabaababaabbaaabbbbbb", gen, gen_pm);
    add("G8J", 8, "aaaaaaaaabaababaabbaabbbbbbb", gen, gen_pm);
    add("G8K", 8, "aaaaaaaaabaabababaabbabbbbbb", gen, gen_pm);
    add("G8L", 8, "aaaaaaaaabaabababaabbbbbbbbb", gen, gen_pm);
    {
        auto* r = add("G8M", 8, "aaaaaaaaabaabababbbbbbabbbbb", gen,
                      {sol("1", "(3 + 1*sqrt(5))/2")});
        r->claim_self_complementary = true;
    }
    add("G7Q", 7, "aaaaaaaaaaaabbbababbb", gen, gen_pm);
    add("G7R", 7, "aaaaaaaaabaabababbbbb", gen, gen_pm);
    add("G7S", 7, "aaaaaaaaabaababbbbbbb", gen, gen_pm);
    add("G7T", 7, "aaaaaaaaababbbbbabbbb", gen, gen_pm);
    add("G7U", 7, "aaaaaaaabbababbabbbbb", gen, gen_pm);

    for (const auto& r : rows) {
        if (static_cast<int>(r.code.size()) != r.n * (r.n - 1) / 2)
            throw Error("fixture row " + r.label + ": bad code length");
    }
    return rows;
}

} // namespace

const std::vector<FixtureRow>& builtin_rows() {
    static const std::vector<FixtureRow> rows = build_rows();
    return rows;
}

namespace {

const FixtureRow* find_row(const std::string& label) {
    for (const auto& r : builtin_rows())
        if (r.label == label) return &r;
    return nullptr;
}

} // namespace

std::vector<RowReport> verify_builtin_rows(int d, bool check_mydim) {
    std::vector<RowReport> reports;
    for (const auto& row : builtin_rows()) {
        Graph g = decode(row.code, row.n);
        bool row_jsph = false;
        for (size_t si = 0; si < row.solutions.size(); ++si) {
            const auto& fs = row.solutions[si];
            RowReport rep;
            rep.label = row.label;
            rep.solution_index = static_cast<int>(si);
            RealAlg a = parse_literal(fs.a_lit);
            RealAlg b;
            if (!fs.b_poly_in_a.empty()) {
                std::vector<Rat> coeffs;
                for (const auto& c : fs.b_poly_in_a) coeffs.push_back(rat_parse(c));
                b = compose_poly(UniPoly(std::move(coeffs)), a);
            } else {
                b = parse_literal(fs.b_lit);
            }
            ValidityReport v = verify_point(g, a, b, d, row.mode);
            rep.certified = v.valid;
            std::ostringstream os;
            os << (row.mode == SolveMode::Spherical ? "spherical" : "general") << " ("
               << fs.a_lit << ", " << (fs.b_lit.empty() ? render_literal(b) : fs.b_lit)
               << ")";
            if (v.psd && v.rank) os << " psd rank=" << *v.rank;
            os << " orientation="
               << (v.attribution == Attribution::Graph ? "graph" : "complement");
            rep.detail = os.str();
            if (row.mode == SolveMode::Spherical && v.jspherical) row_jsph = true;
            if (row.mode == SolveMode::General && v.spherical_flag)
                rep.discrepancies.push_back("configuration is spherical");
            reports.push_back(std::move(rep));
        }
        // Row-level claims land on the last solution's report.
        RowReport& last = reports.back();
        if (row.claim_jspherical && row.mode == SolveMode::Spherical && !row_jsph)
            last.discrepancies.push_back("claimed J-spherical, no solution has the flag");
        if (row.claim_self_complementary != self_complementary(g))
            last.discrepancies.push_back(row.claim_self_complementary
                                             ? "claimed self-complementary, graph is not"
                                             : "graph is self-complementary, not claimed");
        if (check_mydim && row.mydim_claim) {
            const MydimClaim& claim = *row.mydim_claim;
            const FixtureRow* target_row = find_row(claim.label);
            if (!target_row) {
                last.discrepancies.push_back("dimension remark names unknown row " +
                                             claim.label);
            } else {
                Graph target = decode(target_row->code, target_row->n);
                if (claim.on_complement) target = complement(target);
                int md;
                if (target.is_complete() || target.is_empty()) {
                    md = target.order() - 1;  // regular simplex
                } else {
                    md = mydim(target, 8);
                }
                std::ostringstream os;
                if (md != claim.value) {
                    os << "dimension remark: claimed " << claim.value << " for "
                       << (claim.on_complement ? "complement of " : "") << claim.label
                       << ", recomputed " << md;
                    last.discrepancies.push_back(os.str());
                }
                if (claim.label != row.label) {
                    os.str("");
                    os << "dimension remark names " << claim.label << " on row "
                       << row.label;
                    last.discrepancies.push_back(os.str());
                }
            }
        }
    }
    return reports;
}

} // namespace distset
