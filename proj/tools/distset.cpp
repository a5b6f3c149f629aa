#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "distset/atlas.hpp"
#include "distset/literal.hpp"
#include "distset/tables.hpp"

using namespace distset;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("DISTSET_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

struct ClassifyOpts {
    int dim = 4;
    std::string mode = "both";
    int seed_n = 6;
    int max_n = 11;
    int jobs = default_jobs();
    std::string out = "atlas.jsonl";
    std::string format = "tsv";
};

int do_classify(const ClassifyOpts& opt) {
    if (opt.dim < 1 || opt.dim > 6 || opt.seed_n > opt.max_n || opt.max_n > 12 ||
        opt.jobs < 1 || opt.seed_n < 2) {
        std::cerr << "invalid configuration\n";
        return 2;
    }
    RunMode mode = opt.mode == "spherical" ? RunMode::Spherical
                   : opt.mode == "general" ? RunMode::General
                                           : RunMode::Both;
    auto log = [](const std::string& s) { std::cerr << s << "\n"; };
    AtlasResult result = full_atlas(opt.dim, opt.seed_n, opt.max_n, mode, opt.jobs, log);

    // Re-certify every recorded solution before publishing the catalog.
    for (const auto& e : result.entries) {
        if (!e.survived) continue;
        Graph g = decode(e.key, e.n);
        for (const auto& s : e.solutions) {
            RealAlg a = parse_literal(s.a_lit);
            RealAlg b = parse_literal(s.b_lit);
            ValidityReport rep = verify_point(g, a, b, result.summary.d, e.mode);
            if (!rep.valid) {
                std::cerr << "certification failure: n=" << e.n << " key=" << e.key
                          << " (" << s.a_lit << ", " << s.b_lit << ")\n";
                return 3;
            }
        }
    }

    write_catalog(opt.out, result, mode);
    if (opt.format == "json") std::cout << render_rows_json(result);
    else std::cout << render_summary(result.summary, mode);
    return 0;
}

int do_verify(const std::string& source, bool skip_mydim, int dim) {
    int failures = 0;
    if (source == "builtin") {
        auto reports = verify_builtin_rows(dim, !skip_mydim);
        for (const auto& r : reports) {
            std::cout << (r.certified ? "PASS " : "FAIL ") << r.label << " " << r.detail
                      << "\n";
            for (const auto& d : r.discrepancies)
                std::cout << "  note: " << d << "\n";
            if (!r.certified) ++failures;
        }
        std::cout << reports.size() << " solutions checked, " << failures << " failures\n";
    } else {
        AtlasResult result = read_catalog(source);
        size_t checked = 0;
        for (const auto& e : result.entries) {
            if (!e.survived) continue;
            Graph g = decode(e.key, e.n);
            for (const auto& s : e.solutions) {
                RealAlg a = parse_literal(s.a_lit);
                RealAlg b = parse_literal(s.b_lit);
                ValidityReport rep = verify_point(g, a, b, result.summary.d, e.mode);
                ++checked;
                if (!rep.valid) {
                    ++failures;
                    std::cout << "FAIL n=" << e.n << " " << e.key << " (" << s.a_lit
                              << ", " << s.b_lit << ")\n";
                }
            }
        }
        std::cout << checked << " solutions checked, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

int do_mydim(const std::string& code, int n, int max_dim) {
    Graph g;
    try {
        g = decode(code, n);
    } catch (const Error& e) {
        std::cerr << "invalid code: " << e.what() << "\n";
        return 2;
    }
    if (g.is_complete() || g.is_empty()) {
        // Single-distance configuration: regular simplex.
        std::cout << (n - 1) << "\n";
        return 0;
    }
    int d = mydim(g, max_dim);
    if (d > max_dim) {
        std::cout << "> " << max_dim << "\n";
        return 4;
    }
    std::cout << d << "\n";
    return 0;
}

int do_table(const std::string& catalog, const std::string& which,
             const std::string& format) {
    std::ifstream probe(catalog);
    if (!probe) {
        std::cerr << "missing catalog: " << catalog << "\n";
        return 2;
    }
    probe.close();
    AtlasResult result = read_catalog(catalog);
    if (which == "summary") {
        std::cout << render_summary(result.summary, RunMode::Both);
    } else if (format == "json") {
        std::cout << render_rows_json(result);
    } else {
        std::cout << render_rows_tsv(result);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of two-distance point sets"};
    app.require_subcommand(1);

    ClassifyOpts copt;
    auto* classify = app.add_subcommand("classify", "run the full classification");
    classify->add_option("--dim", copt.dim, "target dimension (1..6)");
    classify->add_option("--mode", copt.mode, "spherical | general | both")
        ->check(CLI::IsMember({"spherical", "general", "both"}));
    classify->add_option("--seed-n", copt.seed_n, "seed level (full enumeration)");
    classify->add_option("--max-n", copt.max_n, "largest order to reach");
    classify->add_option("--jobs", copt.jobs, "worker threads");
    classify->add_option("--out", copt.out, "catalog output path (JSON lines)");
    classify->add_option("--format", copt.format, "summary output: tsv | json")
        ->check(CLI::IsMember({"tsv", "json"}));

    std::string verify_source = "builtin";
    bool skip_mydim = false;
    int verify_dim = 4;
    auto* verify = app.add_subcommand("verify", "re-certify built-in or catalog rows");
    verify->add_option("source", verify_source, "builtin | path to catalog");
    verify->add_flag("--skip-mydim", skip_mydim, "skip dimension remark recomputation");
    verify->add_option("--dim", verify_dim, "certification dimension bound");

    std::string code;
    int n = 0, max_dim = 8;
    auto* mydim_cmd = app.add_subcommand("mydim", "smallest representable dimension");
    mydim_cmd->add_option("--code", code, "graph code over {a,b}")->required();
    mydim_cmd->add_option("--n", n, "number of vertices")->required();
    mydim_cmd->add_option("--max-dim", max_dim, "search bound");

    std::string catalog = "atlas.jsonl", which = "summary", tformat = "tsv";
    auto* table = app.add_subcommand("table", "emit summary or rows from a catalog");
    table->add_option("--catalog", catalog, "catalog path");
    table->add_option("--which", which, "summary | rows")
        ->check(CLI::IsMember({"summary", "rows"}));
    table->add_option("--format", tformat, "tsv | json")
        ->check(CLI::IsMember({"tsv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code_ = app.exit(e);
        return code_ == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return do_classify(copt);
        if (verify->parsed()) return do_verify(verify_source, skip_mydim, verify_dim);
        if (mydim_cmd->parsed()) return do_mydim(code, n, max_dim);
        if (table->parsed()) return do_table(catalog, which, tformat);
    } catch (const CertificationFailure& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
