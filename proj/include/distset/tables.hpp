#ifndef DISTSET_TABLES_HPP
#define DISTSET_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "distset/dissolve.hpp"
#include "distset/graph.hpp"

namespace distset {

// Built-in reference rows: known solution data for the classified sets,
// embedded so verification runs hermetically.
struct FixtureSolution {
    std::string a_lit;
    std::string b_lit;                  // empty when b_poly_in_a is used
    std::vector<std::string> b_poly_in_a;  // b = poly(a), coefficients ascending
};

struct MydimClaim {
    std::string label;   // row label the claim names (may differ from the row)
    bool on_complement;  // claim concerns the complement of that row's graph
    int value;
};

struct FixtureRow {
    std::string label;
    int n;
    std::string code;
    SolveMode mode;
    bool complete_graph = false;  // single-distance row
    std::vector<FixtureSolution> solutions;
    bool claim_self_complementary = false;
    bool claim_jspherical = false;
    std::optional<MydimClaim> mydim_claim;
};

const std::vector<FixtureRow>& builtin_rows();

struct RowReport {
    std::string label;
    int solution_index = 0;
    bool certified = false;  // minors vanish, PSD, rank within bound
    std::string detail;
    std::vector<std::string> discrepancies;
};

// Re-certifies every built-in row (both orientations accepted). With
// check_mydim, recomputes the dimension remarks and reports mismatches as
// discrepancies rather than failures.
std::vector<RowReport> verify_builtin_rows(int d, bool check_mydim);

} // namespace distset

#endif
