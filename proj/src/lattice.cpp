#include "mobpoly/lattice.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace mobpoly {

bool UnionFamily::contains(const Bitset& x) const {
    return std::binary_search(elements.begin(), elements.end(), x, CanonicalLess{});
}

std::size_t UnionFamily::index_of(const Bitset& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x, CanonicalLess{});
    if (it == elements.end() || !(*it == x)) return npos;
    return static_cast<std::size_t>(it - elements.begin());
}

void require_antichain(const std::vector<Bitset>& sets) {
    if (sets.empty()) throw NotAntichain("empty generating set");
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) throw NotAntichain("the empty set is comparable to everything");
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i != j && sets[i].is_subset_of(sets[j]))
                throw NotAntichain("set " + std::to_string(i + 1) + " is contained in set " +
                                   std::to_string(j + 1));
        }
    }
}

UnionFamily unions_unchecked(const std::vector<Bitset>& generators, int ambient_n,
                             std::size_t max_size) {
    std::unordered_set<Bitset, Bitset::Hash> seen;
    std::deque<Bitset> queue;
    seen.insert(Bitset{});
    queue.push_back(Bitset{});
    while (!queue.empty()) {
        Bitset cur = std::move(queue.front());
        queue.pop_front();
        for (const Bitset& g : generators) {
            Bitset u = cur | g;
            if (seen.insert(u).second) {
                if (seen.size() > max_size)
                    throw TooLarge("union family exceeds " + std::to_string(max_size) +
                                   " elements");
                queue.push_back(u);
            }
        }
    }
    UnionFamily fam;
    fam.n = ambient_n;
    fam.elements.assign(seen.begin(), seen.end());
    std::sort(fam.elements.begin(), fam.elements.end(), CanonicalLess{});
    fam.atoms = generators;
    std::sort(fam.atoms.begin(), fam.atoms.end(), CanonicalLess{});
    return fam;
}

UnionFamily unions(const std::vector<Bitset>& antichain, int ambient_n, std::size_t max_size) {
    require_antichain(antichain);
    return unions_unchecked(antichain, ambient_n, max_size);
}

MoebiusTable moebius(const UnionFamily& u) {
    // Canonical order is a linear extension of inclusion, so a single sweep
    // resolves the recursion mu(empty, v) = -sum over proper subsets.
    MoebiusTable t;
    t.mu.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == 0) {
            t.mu[0] = 1; // elements[0] is the empty set
            continue;
        }
        mpz_class acc = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (u.elements[j].is_subset_of(u.elements[i])) acc += t.mu[j];
        t.mu[i] = -acc;
    }
    return t;
}

mpz_class moebius_interval(const UnionFamily& u, const Bitset& a, const Bitset& b) {
    if (u.index_of(a) == UnionFamily::npos || u.index_of(b) == UnionFamily::npos)
        throw DimensionMismatch("interval endpoint not in family");
    if (!a.is_subset_of(b)) return 0;
    // Collect the interval [a, b] (family order is a linear extension) and
    // run the recursion anchored at a.
    std::vector<const Bitset*> interval;
    for (const Bitset& x : u.elements)
        if (a.is_subset_of(x) && x.is_subset_of(b)) interval.push_back(&x);
    std::vector<mpz_class> mu(interval.size());
    for (std::size_t i = 0; i < interval.size(); ++i) {
        if (*interval[i] == a) {
            mu[i] = 1;
            continue;
        }
        mpz_class acc = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (interval[j]->is_subset_of(*interval[i])) acc += mu[j];
        mu[i] = -acc;
    }
    return mu.back(); // b is the interval's top, hence last in order
}

MultilinearPoly representing_poly(const std::vector<Bitset>& antichain, int ambient_n,
                                  std::size_t max_family) {
    UnionFamily fam = unions(antichain, ambient_n, max_family);
    MoebiusTable mu = moebius(fam);
    MultilinearPoly p;
    p.n = ambient_n;
    for (std::size_t i = 1; i < fam.size(); ++i) {
        mpz_class c = -mu.mu[i];
        if (c != 0) p.terms.emplace(fam.elements[i], std::move(c));
    }
    return p;
}

namespace {

// Unique minimal member containing target, or npos if absent/ambiguous.
std::size_t least_upper_bound(const std::vector<Bitset>& family, const Bitset& target) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!target.is_subset_of(family[i])) continue;
        if (best == static_cast<std::size_t>(-1) || family[i].is_subset_of(family[best])) {
            best = i;
        }
    }
    if (best == static_cast<std::size_t>(-1)) return best;
    // Minimality and uniqueness: no other superset of target may avoid
    // containing family[best].
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (i == best) continue;
        if (target.is_subset_of(family[i]) && !family[best].is_subset_of(family[i]))
            return static_cast<std::size_t>(-1);
    }
    return best;
}

} // namespace

bool is_atomistic_lattice(const std::vector<Bitset>& family) {
    if (family.empty()) return false;
    std::vector<Bitset> f = family;
    std::sort(f.begin(), f.end(), CanonicalLess{});
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.size() != family.size()) return false; // duplicates
    if (!f[0].empty()) return false;             // bottom must be the empty set

    // Pairwise joins must exist and be unique.
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i; j < f.size(); ++j)
            if (least_upper_bound(f, f[i] | f[j]) == static_cast<std::size_t>(-1)) return false;

    // Atoms: minimal nonempty members.
    std::vector<std::size_t> atoms;
    for (std::size_t i = 1; i < f.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 1; j < f.size(); ++j)
            if (j != i && f[j].is_subset_of(f[i])) {
                minimal = false;
                break;
            }
        if (minimal) atoms.push_back(i);
    }

    // Every member must be the join of the atoms below it.
    for (std::size_t i = 0; i < f.size(); ++i) {
        Bitset gen;
        for (std::size_t a : atoms)
            if (f[a].is_subset_of(f[i])) gen = gen | f[a];
        std::size_t lub = least_upper_bound(f, gen);
        if (lub == static_cast<std::size_t>(-1) || !(f[lub] == f[i])) return false;
    }
    return true;
}

AtomisticLattice::AtomisticLattice(int m_, std::vector<Bitset> members_, int max_atoms) : m(m_) {
    if (m < 1 || m > max_atoms)
        throw TooManyAtoms("atom count " + std::to_string(m) + " outside [1, " +
                           std::to_string(max_atoms) + "]");
    members = std::move(members_);
    std::sort(members.begin(), members.end(), CanonicalLess{});
    members.erase(std::unique(members.begin(), members.end()), members.end());

    Bitset top;
    for (int j = 0; j < m; ++j) top.set(static_cast<std::size_t>(j));
    auto present = [&](const Bitset& x) {
        return std::binary_search(members.begin(), members.end(), x, CanonicalLess{});
    };
    if (!present(Bitset{})) throw NotAtomistic("missing bottom (empty atom set)");
    for (int j = 0; j < m; ++j)
        if (!present(Bitset::singleton(static_cast<std::size_t>(j))))
            throw NotAtomistic("atom " + std::to_string(j + 1) + " is not a member");
    if (!present(top)) throw NotAtomistic("missing top (all atoms)");
    for (const Bitset& x : members)
        if (!x.is_subset_of(top)) throw NotAtomistic("member mentions an atom above m");

    // Closure of every atom subset; join uniqueness is validated on the way.
    cl_.resize(std::size_t{1} << m);
    for (std::uint32_t s = 0; s < cl_.size(); ++s) {
        std::size_t lub = least_upper_bound(members, Bitset::from_mask(s));
        if (lub == static_cast<std::size_t>(-1))
            throw NotAtomistic("atom set without a unique least member above it");
        cl_[s] = lub;
    }
}

const Bitset& AtomisticLattice::closure(const Bitset& s) const {
    std::uint64_t mask = 0;
    s.for_each_bit([&](std::size_t b) { mask |= std::uint64_t{1} << b; });
    return members[cl_[mask]];
}

SynthesisResult synthesize_function(const AtomisticLattice& l) {
    const std::uint32_t subsets = std::uint32_t{1} << l.m;
    // Precompute closures as masks.
    std::vector<std::uint32_t> cl(subsets);
    for (std::uint32_t s = 0; s < subsets; ++s) {
        std::uint32_t c = 0;
        l.closure(Bitset::from_mask(s)).for_each_bit([&](std::size_t b) {
            c |= std::uint32_t{1} << b;
        });
        cl[s] = c;
    }
    // Keep U iff every S whose closure meets U meets U itself.
    SynthesisResult r;
    for (std::uint32_t u = 1; u < subsets; ++u) {
        bool keep = true;
        for (std::uint32_t s = 0; s < subsets && keep; ++s)
            if ((cl[s] & u) && !(s & u)) keep = false;
        if (keep) r.kept.push_back(Bitset::from_mask(u));
    }
    std::sort(r.kept.begin(), r.kept.end(), CanonicalLess{});
    r.n = static_cast<int>(r.kept.size());
    r.implicants.assign(static_cast<std::size_t>(l.m), Bitset{});
    for (std::size_t k = 0; k < r.kept.size(); ++k) {
        r.kept[k].for_each_bit([&](std::size_t j) { r.implicants[j].set(k); });
    }
    return r;
}

bool verify_isomorphism(const AtomisticLattice& l, const UnionFamily& u) {
    SynthesisResult syn = synthesize_function(l);
    if (l.members.size() != u.size()) return false;
    std::vector<Bitset> image;
    image.reserve(l.members.size());
    for (const Bitset& x : l.members) {
        Bitset phi;
        x.for_each_bit([&](std::size_t j) { phi = phi | syn.implicants[j]; });
        if (!u.contains(phi)) return false;
        image.push_back(phi);
    }
    std::vector<Bitset> sorted = image;
    std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != u.size()) return false; // not injective/surjective
    // Order preservation in both directions.
    for (std::size_t i = 0; i < l.members.size(); ++i)
        for (std::size_t j = 0; j < l.members.size(); ++j) {
            bool before = l.members[i].is_subset_of(l.members[j]);
            bool after = image[i].is_subset_of(image[j]);
            if (before != after) return false;
        }
    return true;
}

} // namespace mobpoly
