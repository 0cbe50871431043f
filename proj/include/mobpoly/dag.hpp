#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mobpoly/boolfn.hpp"
#include "mobpoly/lattice.hpp"
#include "mobpoly/poly.hpp"

namespace mobpoly {

inline constexpr std::size_t kMaxPaths = 1'000'000;
inline constexpr int kMaxOracleArcs = 20;

// Input digraph: named vertices, arcs in input order (ids 1..m), optional
// declared sources/sinks. Parallel arcs are allowed.
struct RawDigraph {
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> arcs; // (source vertex, target vertex)
    std::vector<int> declared_sources;
    std::vector<int> declared_sinks;

    int vertex(const std::string& name);           // find or add
    void add_arc(const std::string& u, const std::string& v);
};

struct Arc {
    int id;  // stable 1-based id from the input
    int src; // vertex index
    int dst;
};

// Normalized acyclic multigraph: one source s (no incoming arcs), one sink t
// (no outgoing arcs), at least one s-t path. Arc list order defines the bit
// position of each arc in every ArcSet.
struct Dag {
    std::vector<std::string> vertex_names;
    int s = -1;
    int t = -1;
    std::vector<Arc> arcs;
    std::vector<int> irrelevant; // ids of arcs on no s-t path; the arcs stay only without pruning

    std::size_t arc_count() const { return arcs.size(); }
    std::size_t vertex_count() const { return vertex_names.size(); }
    Bitset full_arc_set() const {
        Bitset b;
        for (std::size_t i = 0; i < arcs.size(); ++i) b.set(i);
        return b;
    }
};

// Merges all sources into s and all sinks into t (declared ones if given,
// inferred by degree otherwise), preserving the arc multiset and ids. With
// prune set, arcs on no s-t path are removed; otherwise they are kept and
// listed in `irrelevant`.
Dag normalize(const RawDigraph& g, bool prune = true);

// All simple s-t paths as arc sets, ordered lexicographically by arc id
// sequence from s.
std::vector<Bitset> enumerate_paths(const Dag& g, std::size_t max_paths = kMaxPaths);

// Union of all s-t paths inside h: arcs e with s reaching src(e) and dst(e)
// reaching t within h. Monotone and idempotent.
Bitset closure(const Dag& g, const Bitset& h);

bool is_union_of_paths(const Dag& g, const Bitset& h);

// Validity-based test: every vertex other than s,t has an incoming arc in h
// iff it has an outgoing arc in h. Agrees with the closure test on
// normalized dags; both are exposed for cross-checking.
bool all_vertices_valid(const Dag& g, const Bitset& h);

UnionFamily unions_of_paths(const Dag& g, std::size_t max_family = kMaxFamilySize,
                            std::size_t max_paths = kMaxPaths);

// |h| minus the number of distinct arc endpoints other than s,t, minus 1.
// The empty set gets -1.
long long D(const Dag& g, const Bitset& h);

// Strictly increasing chain empty = H_{-1} < H_0 < ... < H_D = h where each
// difference is an ear and D(H_k) = k. Deterministic: always grows from the
// smallest uncovered arc id.
std::vector<Bitset> ear_decomposition(const Dag& g, const Bitset& h);

// Difference between consecutive chain elements must be a path whose
// interior vertices touch no other arc of the larger set.
bool is_ear(const Dag& g, const Bitset& host, const Bitset& ear);

// p_G = sum over nonempty unions H of (-1)^{D(H)} times the monomial of H.
MultilinearPoly dag_polynomial(const Dag& g, std::size_t max_family = kMaxFamilySize,
                               std::size_t max_paths = kMaxPaths);

// Truth table of the connectivity function over arc-presence bits.
TruthTable connectivity_table(const Dag& g, int max_arcs = kMaxOracleArcs);

struct DualReport {
    MultilinearPoly poly;
    bool coeffs_in_unit_range = false; // all coefficients in {-1, 0, 1}
};

// Representing polynomial of the dual connectivity function, via the
// brute-force table.
DualReport dual_polynomial(const Dag& g, int max_arcs = kMaxOracleArcs);

struct VerifyReport {
    bool ok = false;
    std::string detail;       // empty when ok, otherwise the first mismatch
    std::size_t paths = 0;
    std::size_t family_size = 0;
};

// Compares dag_polynomial against interpolation of the brute-force table,
// and -mu(empty, H) against (-1)^{D(H)} over the whole union family.
VerifyReport verify_against_oracle(const Dag& g, int max_arcs = kMaxOracleArcs);

} // namespace mobpoly
