#ifndef DISTSET_ATLAS_HPP
#define DISTSET_ATLAS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "distset/dissolve.hpp"
#include "distset/graph.hpp"

namespace distset {

inline constexpr const char* kToolVersion = "distset 1.0";

struct EntrySolution {
    std::string a_lit;  // "1" in general mode
    std::string b_lit;
    bool psd = false;
    int rank = 0;
    Attribution attribution = Attribution::Graph;
    bool jspherical = false;
    bool spherical_flag = false;
};

// One candidate class at one level of one pipeline.
struct AtlasEntry {
    int n = 0;
    GraphCode key;  // class_key; also the canonical representative's code
    SolveMode mode = SolveMode::Spherical;
    bool survived = false;
    bool continuum = false;
    bool indefinite_only = false;
    bool self_complementary = false;
    int set_count = 0;
    int nonspherical_set_count = 0;  // general mode
    std::vector<EntrySolution> solutions;
    GraphCode parent;  // smallest surviving parent key at n-1
};

struct AtlasSummary {
    int d = 4;
    int seed_n = 6;
    int max_n = 11;
    std::map<int, int> examined_general, examined_spherical;
    std::map<int, int> surviving_general, surviving_spherical;
    std::map<int, int> spherical_sets, nonspherical_sets;
};

struct AtlasResult {
    AtlasSummary summary;
    std::vector<AtlasEntry> entries;  // sorted by (n, mode, key)
};

enum class RunMode { Spherical, General, Both };

using LogFn = std::function<void(const std::string&)>;

// Full enumeration of {graph, complement} classes at the seed level.
std::vector<Graph> seed_classes(int n0);

// Solve one class in one mode.
AtlasEntry solve_class(const Graph& rep, int d, SolveMode mode);

// Extend-and-filter: both orientations of every surviving class, all
// one-vertex extensions, deduplicated by class_key, then solved.
std::vector<AtlasEntry> step_level(const std::vector<AtlasEntry>& survivors, int d,
                                   SolveMode mode, int jobs, const LogFn& log);

AtlasResult full_atlas(int d, int seed_n, int max_n, RunMode mode, int jobs,
                       const LogFn& log);

// Smallest dimension admitting a representation of g (edges strictly
// shorter); complete/empty graphs are single-distance configurations and
// are rejected.
int mydim(const Graph& g, int max_d = kMaxOrder);
// Feasibility of a representation of g in dimension d.
bool representable_in(const Graph& g, int d);

// Count of graphs (both orientations separately) with mydim exactly d,
// per order n. Uses full enumeration below 7 vertices and the surviving
// general-pipeline classes beyond.
std::map<int, int> mydim_census(int d, int jobs, const LogFn& log);

// JSON-lines catalog.
void write_catalog(const std::string& path, const AtlasResult& result, RunMode mode);
AtlasResult read_catalog(const std::string& path);

// Columns: n, code, mode, a_star, b_star, psd, rank, orientation,
// spherical_flag, jspherical, self_complementary, set_count.
std::string render_rows_tsv(const AtlasResult& result);
std::string render_rows_json(const AtlasResult& result);
std::string render_summary(const AtlasSummary& summary, RunMode mode);

// Deterministic worklist execution (results land by index).
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

} // namespace distset

#endif
