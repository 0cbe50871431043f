#pragma once

#include <cstddef>
#include <vector>

#include "mobpoly/poly.hpp"

namespace mobpoly {

inline constexpr std::size_t kMaxFamilySize = 1'000'000;
inline constexpr int kMaxLatticeAtoms = 10;

// All unions of subsets of a generating antichain, including the empty
// union. Elements are held in canonical order (cardinality, then value).
struct UnionFamily {
    int n = 0;                    // ambient universe size
    std::vector<Bitset> elements; // canonical order, elements[0] == empty set
    std::vector<Bitset> atoms;    // the generating antichain, canonical order

    std::size_t size() const { return elements.size(); }
    bool contains(const Bitset& x) const;
    // Index of x in elements, or npos.
    std::size_t index_of(const Bitset& x) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Throws NotAntichain unless the sets are nonempty, distinct and pairwise
// incomparable.
void require_antichain(const std::vector<Bitset>& sets);

UnionFamily unions(const std::vector<Bitset>& antichain, int ambient_n,
                   std::size_t max_size = kMaxFamilySize);

// Fixpoint closure of {empty} under union with each generator; skips the
// antichain validation (used where the generators are antichains by
// construction, e.g. path sets).
UnionFamily unions_unchecked(const std::vector<Bitset>& generators, int ambient_n,
                             std::size_t max_size = kMaxFamilySize);

// The slice mu(empty, element) for every element, in family order.
struct MoebiusTable {
    std::vector<mpz_class> mu;
};

MoebiusTable moebius(const UnionFamily& u);

// Two-argument Moebius value mu(a, b) inside the family, computed on demand
// over the interval [a, b].
mpz_class moebius_interval(const UnionFamily& u, const Bitset& a, const Bitset& b);

// Representing polynomial of the monotone function whose prime implicants
// are the given antichain: term map S -> -mu(empty, S) over nonempty unions.
MultilinearPoly representing_poly(const std::vector<Bitset>& antichain, int ambient_n,
                                  std::size_t max_family = kMaxFamilySize);

// Abstract lattice check on a family of sets ordered by inclusion: a unique
// bottom (the empty set), pairwise joins (unique minimal upper bounds), and
// every member the join of the minimal nonempty members below it.
bool is_atomistic_lattice(const std::vector<Bitset>& family);

// Lattice given in atom representation: each member is the set of atoms
// below it, atoms are 1..m (bits 0..m-1).
struct AtomisticLattice {
    int m = 0;
    std::vector<Bitset> members; // canonical order

    // Validates: empty set, all singletons, the full atom set, and unique
    // joins. Throws TooManyAtoms / NotAtomistic.
    AtomisticLattice(int m_, std::vector<Bitset> members_, int max_atoms = kMaxLatticeAtoms);

    // Least member containing s (s given as a set of atoms).
    const Bitset& closure(const Bitset& s) const;

private:
    std::vector<std::size_t> cl_; // closure index per atom subset mask
};

struct SynthesisResult {
    int n = 0;                    // number of constructed variables
    std::vector<Bitset> kept;     // kept atom subsets, canonical order; kept[k] = u(k+1)
    std::vector<Bitset> implicants; // b_1..b_m over variables [n]
};

// Builds prime implicants b_1..b_m whose union family is isomorphic to l.
SynthesisResult synthesize_function(const AtomisticLattice& l);

// Checks the natural map (atom set A -> union of b_j over j in A) is an
// order-isomorphism from l onto u, where u was generated from
// synthesize_function(l).
bool verify_isomorphism(const AtomisticLattice& l, const UnionFamily& u);

} // namespace mobpoly
