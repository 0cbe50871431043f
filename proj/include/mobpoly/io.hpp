#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mobpoly/boolfn.hpp"
#include "mobpoly/dag.hpp"
#include "mobpoly/gridcount.hpp"
#include "mobpoly/lattice.hpp"
#include "mobpoly/poly.hpp"

namespace mobpoly::io {

// Truth-table files: "truthtable v1 n=<n>" then one line of 2^n '0'/'1'
// characters, entry x giving f at the assignment whose bit i is
// (x >> i) & 1.
TruthTable read_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const TruthTable& t);

// Set-family files: "lattice v1 m=<m>" then one member per line as an
// ascending comma-separated list of 1-based ids, "-" for the empty set.
struct FamilyFile {
    int m = 0;
    std::vector<Bitset> members;
};
FamilyFile read_family(std::istream& in);
void write_family(std::ostream& out, int m, const std::vector<Bitset>& members);

// Digraph files: "digraph v1" then arc lines "u v" (one arc each,
// duplicates allowed) and optional "source u" / "sink v" directives.
RawDigraph read_digraph(std::istream& in);

// "1,3" <-> {0,2}; "-" is the empty set. ids must lie in [1, m].
std::string format_ids(const Bitset& s, char sep = ',');
Bitset parse_ids(const std::string& text, int m);

// Arc sets are bitsets over positions in g.arcs; files and reports use the
// stable 1-based arc ids instead (they differ once pruning removes arcs).
int max_arc_id(const Dag& g);
Bitset indices_to_ids(const Dag& g, const Bitset& idx);
Bitset ids_to_indices(const Dag& g, const Bitset& ids);
MultilinearPoly relabel_to_ids(const Dag& g, const MultilinearPoly& p);

// Signed decimal with an explicit leading sign: "+1", "-1", "+2", ...
std::string format_coef(const mpz_class& c);

// One term per line: "<signed coef> <1-based ids joined by '*'>",
// canonical term order, "-" for the constant term's empty monomial.
void write_poly_text(std::ostream& out, const MultilinearPoly& p);

// {"n": <n>, "terms": [{"coef": "<signed int>", "vars": [ids...]}, ...]}
std::string poly_to_json(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const std::string& text);

std::string growth_estimate_csv(const GrowthEstimate& e, bool header);
std::string growth_estimate_text(const GrowthEstimate& e);
std::string growth_estimate_json(const GrowthEstimate& e);

std::string growth_rows_csv(const std::vector<GrowthRow>& rows);
std::string growth_rows_text(const std::vector<GrowthRow>& rows);
std::string growth_rows_json(const std::vector<GrowthRow>& rows);

const char* strip_kind_name(StripKind k);

// Fixed-precision decimal used by every numeric report: six fractional
// digits, no exponent.
std::string format_fixed(double x);

} // namespace mobpoly::io
