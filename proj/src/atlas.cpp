#include "distset/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "distset/literal.hpp"

namespace distset {

using nlohmann::json;

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::vector<Graph> seed_classes(int n0) { return enumerate_classes(n0); }

namespace {

std::string attribution_str(Attribution a) {
    return a == Attribution::Graph ? "graph" : "complement";
}

} // namespace

AtlasEntry solve_class(const Graph& rep, int d, SolveMode mode) {
    AtlasEntry entry;
    entry.n = rep.order();
    entry.key = class_key(rep);
    entry.mode = mode;
    if (rep.is_complete() || rep.is_empty()) {
        // Single-distance class: fails both pipelines by definition.
        return entry;
    }
    entry.self_complementary = self_complementary(rep);
    if (mode == SolveMode::Spherical) {
        SphericalVerdict v = solve_spherical(rep, d);
        entry.survived = v.survived;
        entry.indefinite_only = v.indefinite_only;
        entry.set_count = count_sets(v);
        for (const auto& s : v.solutions) {
            EntrySolution es;
            es.a_lit = render_literal(s.a);
            es.b_lit = render_literal(s.b);
            es.psd = s.psd;
            es.rank = *s.rank;
            es.attribution = s.attribution;
            es.jspherical = s.jspherical;
            entry.solutions.push_back(std::move(es));
        }
    } else {
        GeneralVerdict v = solve_general(rep, d);
        entry.survived = v.survived;
        entry.continuum = v.continuum;
        entry.set_count = count_sets(v);
        entry.nonspherical_set_count = count_nonspherical_sets(v);
        for (const auto& s : v.solutions) {
            EntrySolution es;
            es.a_lit = "1";
            es.b_lit = render_literal(s.b);
            es.psd = s.psd;
            es.rank = *s.rank;
            es.attribution = s.attribution;
            es.spherical_flag = s.spherical_flag;
            entry.solutions.push_back(std::move(es));
        }
    }
    return entry;
}

std::vector<AtlasEntry> step_level(const std::vector<AtlasEntry>& survivors, int d,
                                   SolveMode mode, int jobs, const LogFn& log) {
    // Candidate classes at n+1, with the set of surviving parents.
    std::map<GraphCode, GraphCode> parent_of;  // candidate key -> min parent key
    for (const auto& s : survivors) {
        Graph rep = decode(s.key, s.n);
        for (const Graph& base : {rep, complement(rep)}) {
            for (const Graph& ext : extensions(base)) {
                GraphCode key = class_key(ext);
                auto it = parent_of.find(key);
                if (it == parent_of.end() || s.key < it->second) parent_of[key] = s.key;
            }
        }
    }
    std::vector<std::pair<GraphCode, GraphCode>> work(parent_of.begin(), parent_of.end());
    std::vector<AtlasEntry> entries(work.size());
    const int next_n = survivors.empty() ? 0 : survivors.front().n + 1;
    parallel_for(work.size(), jobs, [&](size_t i) {
        Graph rep = decode(work[i].first, next_n);
        entries[i] = solve_class(rep, d, mode);
        entries[i].parent = work[i].second;
    });
    if (log) {
        int alive = 0;
        for (const auto& e : entries) alive += e.survived;
        std::ostringstream os;
        os << (mode == SolveMode::Spherical ? "spherical" : "general") << " n=" << next_n
           << ": " << entries.size() << " classes examined, " << alive << " surviving";
        log(os.str());
    }
    return entries;
}

namespace {

void run_pipeline(AtlasResult& result, int d, int seed_n, int max_n, SolveMode mode,
                  int jobs, const LogFn& log) {
    const std::vector<Graph> seeds = seed_classes(seed_n);
    std::vector<AtlasEntry> level(seeds.size());
    parallel_for(seeds.size(), jobs, [&](size_t i) {
        level[i] = solve_class(seeds[i], d, mode);
    });
    if (log) {
        int alive = 0;
        for (const auto& e : level) alive += e.survived;
        std::ostringstream os;
        os << (mode == SolveMode::Spherical ? "spherical" : "general") << " n=" << seed_n
           << ": " << level.size() << " classes examined, " << alive << " surviving";
        log(os.str());
    }
    for (int n = seed_n; n <= max_n; ++n) {
        auto& examined = mode == SolveMode::Spherical ? result.summary.examined_spherical
                                                      : result.summary.examined_general;
        auto& surviving = mode == SolveMode::Spherical ? result.summary.surviving_spherical
                                                       : result.summary.surviving_general;
        examined[n] = static_cast<int>(level.size());
        std::vector<AtlasEntry> alive;
        for (auto& e : level) {
            if (e.survived) {
                surviving[n] += 1;
                if (mode == SolveMode::Spherical) result.summary.spherical_sets[n] += e.set_count;
                else result.summary.nonspherical_sets[n] += e.nonspherical_set_count;
                alive.push_back(e);
            } else {
                surviving[n] += 0;
            }
            result.entries.push_back(std::move(e));
        }
        if (surviving.find(n) == surviving.end()) surviving[n] = 0;
        if (mode == SolveMode::Spherical && result.summary.spherical_sets.find(n) == result.summary.spherical_sets.end())
            result.summary.spherical_sets[n] = 0;
        if (mode == SolveMode::General && result.summary.nonspherical_sets.find(n) == result.summary.nonspherical_sets.end())
            result.summary.nonspherical_sets[n] = 0;
        if (n == max_n || alive.empty()) break;
        level = step_level(alive, d, mode, jobs, log);
    }
}

} // namespace

AtlasResult full_atlas(int d, int seed_n, int max_n, RunMode mode, int jobs,
                       const LogFn& log) {
    AtlasResult result;
    result.summary.d = d;
    result.summary.seed_n = seed_n;
    result.summary.max_n = max_n;
    if (mode == RunMode::General || mode == RunMode::Both)
        run_pipeline(result, d, seed_n, max_n, SolveMode::General, jobs, log);
    if (mode == RunMode::Spherical || mode == RunMode::Both)
        run_pipeline(result, d, seed_n, max_n, SolveMode::Spherical, jobs, log);
    std::sort(result.entries.begin(), result.entries.end(),
              [](const AtlasEntry& x, const AtlasEntry& y) {
                  if (x.n != y.n) return x.n < y.n;
                  if (x.mode != y.mode) return x.mode == SolveMode::General;
                  return x.key < y.key;
              });
    return result;
}

bool representable_in(const Graph& g, int d) {
    if (d < 1) return false;
    GeneralVerdict v = solve_general(g, d);
    if (v.continuum) {
        if (d >= g.order() - 1) return true;  // unconstrained simplex regime
        // Every rank constraint vanished identically; certify a point on the
        // graph side (edges short: b > 1) by exact rational sampling.
        PolyMatrix m = menger_matrix(g);
        PolyMatrix m1;
        m1.order = m.order;
        m1.entries.assign(m.order, std::vector<BiPoly>(m.order));
        for (int i = 0; i < m.order; ++i)
            for (int j = 0; j < m.order; ++j)
                m1.entries[i][j] = BiPoly::from_unipoly_b(m.entries[i][j].subst_a(Rat(1)));
        for (const Rat& b0 : {Rat(2), Rat(3), Rat(4), Rat(3, 2), Rat(5, 4), Rat(9)}) {
            PsdRank pr = psd_rank_at_b(m1, RealAlg(b0));
            if (pr.is_psd && *pr.rank <= d) return true;
        }
        return false;
    }
    for (const auto& s : v.solutions)
        if (s.attribution == Attribution::Graph) return true;
    return false;
}

int mydim(const Graph& g, int max_d) {
    if (g.is_complete() || g.is_empty())
        throw NotTwoDistanceGraph("mydim: single-distance graph");
    for (int d = 1; d <= max_d; ++d)
        if (representable_in(g, d)) return d;
    return max_d + 1;  // lower bound marker: mydim exceeds max_d
}

std::map<int, int> mydim_census(int d, int jobs, const LogFn& log) {
    std::map<int, int> census;
    // Small orders: full enumeration over isomorphism classes.
    for (int n = std::max(2, d); n <= 6; ++n) {
        auto reps = enumerate_iso_classes(n);
        std::vector<int> hit(reps.size(), 0);
        parallel_for(reps.size(), jobs, [&](size_t i) {
            const Graph& g = reps[i];
            if (g.is_complete() || g.is_empty()) {
                // Single-distance configuration: regular simplex, dimension n-1.
                hit[i] = (g.is_complete() && n - 1 == d) ? 1 : 0;
                return;
            }
            hit[i] = representable_in(g, d) && !representable_in(g, d - 1);
        });
        int total = 0;
        for (int h : hit) total += h;
        if (total > 0) census[n] = total;
        if (log) {
            std::ostringstream os;
            os << "census n=" << n << ": " << total;
            log(os.str());
        }
    }
    // Larger orders: only classes surviving the general pipeline can carry a
    // representation; walk the extend-and-filter levels.
    std::vector<AtlasEntry> level;
    for (const Graph& g : seed_classes(6)) level.push_back(solve_class(g, d, SolveMode::General));
    for (int n = 7; n <= kMaxOrder; ++n) {
        std::vector<AtlasEntry> alive;
        for (auto& e : level)
            if (e.survived) alive.push_back(e);
        if (alive.empty()) break;
        level = step_level(alive, d, SolveMode::General, jobs, nullptr);
        std::vector<int> counts(level.size(), 0);
        parallel_for(level.size(), jobs, [&](size_t i) {
            const AtlasEntry& e = level[i];
            if (!e.survived || e.solutions.empty()) return;
            Graph rep = decode(e.key, n);
            int c = 0;
            bool graph_side = false, complement_side = false;
            for (const auto& s : e.solutions) {
                if (s.attribution == Attribution::Graph) graph_side = true;
                else complement_side = true;
            }
            if (e.self_complementary) complement_side = false;  // one graph only
            if (graph_side && !representable_in(rep, d - 1)) ++c;
            if (complement_side && !representable_in(complement(rep), d - 1)) ++c;
            counts[i] = c;
        });
        int total = 0;
        for (int c : counts) total += c;
        if (total > 0) census[n] = total;
        if (log) {
            std::ostringstream os;
            os << "census n=" << n << ": " << total;
            log(os.str());
        }
    }
    return census;
}

namespace {

json entry_to_json(const AtlasEntry& e) {
    json j;
    j["type"] = "entry";
    j["n"] = e.n;
    j["class_key"] = e.key;
    j["mode"] = e.mode == SolveMode::Spherical ? "spherical" : "general";
    j["survived"] = e.survived;
    j["continuum"] = e.continuum;
    j["indefinite_only"] = e.indefinite_only;
    j["self_complementary"] = e.self_complementary;
    j["set_count"] = e.set_count;
    j["nonspherical_set_count"] = e.nonspherical_set_count;
    j["parent"] = e.parent;
    json sols = json::array();
    for (const auto& s : e.solutions) {
        json js;
        js["a"] = s.a_lit;
        js["b"] = s.b_lit;
        js["psd"] = s.psd;
        js["rank"] = s.rank;
        js["orientation"] = attribution_str(s.attribution);
        js["jspherical"] = s.jspherical;
        js["spherical"] = s.spherical_flag;
        sols.push_back(std::move(js));
    }
    j["solutions"] = std::move(sols);
    return j;
}

AtlasEntry entry_from_json(const json& j) {
    AtlasEntry e;
    e.n = j.at("n").get<int>();
    e.key = j.at("class_key").get<std::string>();
    e.mode = j.at("mode").get<std::string>() == "spherical" ? SolveMode::Spherical
                                                            : SolveMode::General;
    e.survived = j.at("survived").get<bool>();
    e.continuum = j.at("continuum").get<bool>();
    e.indefinite_only = j.at("indefinite_only").get<bool>();
    e.self_complementary = j.at("self_complementary").get<bool>();
    e.set_count = j.at("set_count").get<int>();
    e.nonspherical_set_count = j.at("nonspherical_set_count").get<int>();
    e.parent = j.value("parent", "");
    for (const auto& js : j.at("solutions")) {
        EntrySolution s;
        s.a_lit = js.at("a").get<std::string>();
        s.b_lit = js.at("b").get<std::string>();
        s.psd = js.at("psd").get<bool>();
        s.rank = js.at("rank").get<int>();
        s.attribution = js.at("orientation").get<std::string>() == "graph"
                            ? Attribution::Graph
                            : Attribution::Complement;
        s.jspherical = js.at("jspherical").get<bool>();
        s.spherical_flag = js.at("spherical").get<bool>();
        e.solutions.push_back(std::move(s));
    }
    return e;
}

} // namespace

void write_catalog(const std::string& path, const AtlasResult& result, RunMode mode) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open catalog for writing: " + path);
    json header;
    header["type"] = "header";
    header["d"] = result.summary.d;
    header["mode"] = mode == RunMode::Both ? "both"
                     : mode == RunMode::Spherical ? "spherical"
                                                  : "general";
    header["seed_n"] = result.summary.seed_n;
    header["max_n"] = result.summary.max_n;
    header["tool_version"] = kToolVersion;
    out << header.dump() << "\n";
    for (const auto& e : result.entries) out << entry_to_json(e).dump() << "\n";
}

AtlasResult read_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open catalog: " + path);
    AtlasResult result;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        std::string type = j.value("type", "");
        if (type == "header") {
            result.summary.d = j.value("d", 4);
            result.summary.seed_n = j.value("seed_n", 6);
            result.summary.max_n = j.value("max_n", 11);
            have_header = true;
        } else if (type == "entry") {
            result.entries.push_back(entry_from_json(j));
        }
    }
    if (!have_header) throw ParseError("catalog is missing its header record");
    // Rebuild summary counts from the entries.
    for (const auto& e : result.entries) {
        if (e.mode == SolveMode::Spherical) {
            result.summary.examined_spherical[e.n] += 1;
            if (e.survived) {
                result.summary.surviving_spherical[e.n] += 1;
                result.summary.spherical_sets[e.n] += e.set_count;
            }
        } else {
            result.summary.examined_general[e.n] += 1;
            if (e.survived) {
                result.summary.surviving_general[e.n] += 1;
                result.summary.nonspherical_sets[e.n] += e.nonspherical_set_count;
            }
        }
    }
    return result;
}

std::string render_rows_tsv(const AtlasResult& result) {
    std::ostringstream os;
    os << "n\tcode\tmode\ta_star\tb_star\tpsd\trank\torientation\tspherical_flag\t"
          "jspherical\tself_complementary\tset_count\n";
    std::vector<const AtlasEntry*> sorted;
    for (const auto& e : result.entries)
        if (e.survived) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const AtlasEntry* x, const AtlasEntry* y) {
        if (x->n != y->n) return x->n > y->n;
        if (x->key != y->key) return x->key < y->key;
        return x->mode == SolveMode::General && y->mode == SolveMode::Spherical;
    });
    auto bstr = [](bool v) { return v ? "true" : "false"; };
    for (const AtlasEntry* e : sorted) {
        std::string mode = e->mode == SolveMode::Spherical ? "spherical" : "general";
        if (e->solutions.empty()) {
            os << e->n << "\t" << e->key << "\t" << mode << "\t-\t-\tfalse\t-\t-\tfalse\t"
               << "false\t" << bstr(e->self_complementary) << "\t" << e->set_count << "\n";
            continue;
        }
        for (const auto& s : e->solutions) {
            os << e->n << "\t" << e->key << "\t" << mode << "\t" << s.a_lit << "\t"
               << s.b_lit << "\t" << bstr(s.psd) << "\t" << s.rank << "\t"
               << attribution_str(s.attribution) << "\t" << bstr(s.spherical_flag) << "\t"
               << bstr(s.jspherical) << "\t" << bstr(e->self_complementary) << "\t"
               << e->set_count << "\n";
        }
    }
    return os.str();
}

std::string render_rows_json(const AtlasResult& result) {
    json arr = json::array();
    for (const auto& e : result.entries) arr.push_back(entry_to_json(e));
    return arr.dump(2) + "\n";
}

std::string render_summary(const AtlasSummary& s, RunMode mode) {
    std::ostringstream os;
    os << "n";
    for (auto& [n, c] : s.examined_general) os << "\t" << n;
    if (s.examined_general.empty())
        for (auto& [n, c] : s.examined_spherical) os << "\t" << n;
    os << "\n";
    auto row = [&](const std::string& name, const std::map<int, int>& m) {
        os << name;
        for (auto& [n, c] : m) os << "\t" << c;
        os << "\n";
    };
    if (mode != RunMode::Spherical) {
        row("surviving_general", s.surviving_general);
    }
    if (mode != RunMode::General) {
        row("surviving_spherical", s.surviving_spherical);
        row("spherical_sets", s.spherical_sets);
    }
    if (mode != RunMode::Spherical) {
        row("nonspherical_sets", s.nonspherical_sets);
    }
    return os.str();
}

} // namespace distset
