#include "mobpoly/dag.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace mobpoly {

int RawDigraph::vertex(const std::string& name) {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return static_cast<int>(i);
    vertex_names.push_back(name);
    return static_cast<int>(vertex_names.size() - 1);
}

void RawDigraph::add_arc(const std::string& u, const std::string& v) {
    int a = vertex(u);
    int b = vertex(v);
    arcs.emplace_back(a, b);
}

namespace {

// Kahn topological check over a vertex count and arc list.
bool acyclic(std::size_t nv, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> indeg(nv, 0);
    std::vector<std::vector<int>> out(nv);
    for (const auto& [u, v] : arcs) {
        ++indeg[static_cast<std::size_t>(v)];
        out[static_cast<std::size_t>(u)].push_back(v);
    }
    std::deque<int> q;
    for (std::size_t v = 0; v < nv; ++v)
        if (indeg[v] == 0) q.push_back(static_cast<int>(v));
    std::size_t seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++seen;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) q.push_back(w);
    }
    return seen == nv;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base = "_" + base;
    return base;
}

// Vertices reachable from `from` along arcs of g restricted to h,
// following arcs forward (or backward).
std::vector<char> reach(const Dag& g, const Bitset& h, int from, bool forward) {
    std::vector<char> vis(g.vertex_count(), 0);
    std::deque<int> q{from};
    vis[static_cast<std::size_t>(from)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < g.arcs.size(); ++i) {
            if (!h.test(i)) continue;
            int a = forward ? g.arcs[i].src : g.arcs[i].dst;
            int b = forward ? g.arcs[i].dst : g.arcs[i].src;
            if (a == v && !vis[static_cast<std::size_t>(b)]) {
                vis[static_cast<std::size_t>(b)] = 1;
                q.push_back(b);
            }
        }
    }
    return vis;
}

} // namespace

Dag normalize(const RawDigraph& g, bool prune) {
    const std::size_t nv = g.vertex_names.size();
    if (g.arcs.empty()) throw NoPath("graph has no arcs");
    if (!acyclic(nv, g.arcs)) throw Cyclic("input graph has a directed cycle");

    std::vector<int> indeg(nv, 0), outdeg(nv, 0);
    for (const auto& [u, v] : g.arcs) {
        ++outdeg[static_cast<std::size_t>(u)];
        ++indeg[static_cast<std::size_t>(v)];
    }
    std::vector<char> is_source(nv, 0), is_sink(nv, 0);
    if (!g.declared_sources.empty()) {
        for (int v : g.declared_sources) is_source[static_cast<std::size_t>(v)] = 1;
    } else {
        for (std::size_t v = 0; v < nv; ++v)
            if (indeg[v] == 0 && outdeg[v] > 0) is_source[v] = 1;
    }
    if (!g.declared_sinks.empty()) {
        for (int v : g.declared_sinks) is_sink[static_cast<std::size_t>(v)] = 1;
    } else {
        for (std::size_t v = 0; v < nv; ++v)
            if (outdeg[v] == 0 && indeg[v] > 0) is_sink[v] = 1;
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (is_source[v] && indeg[v] > 0)
            throw ParseError("declared source '" + g.vertex_names[v] + "' has incoming arcs");
        if (is_sink[v] && outdeg[v] > 0)
            throw ParseError("declared sink '" + g.vertex_names[v] + "' has outgoing arcs");
        if (is_source[v] && is_sink[v])
            throw ParseError("vertex '" + g.vertex_names[v] + "' is both source and sink");
    }

    // Map old vertices to the merged vertex set.
    std::size_t nsources = static_cast<std::size_t>(
        std::count(is_source.begin(), is_source.end(), 1));
    std::size_t nsinks = static_cast<std::size_t>(std::count(is_sink.begin(), is_sink.end(), 1));
    if (nsources == 0 || nsinks == 0)
        throw NoPath("no source or no sink");

    Dag d;
    std::vector<int> remap(nv, -1);
    int s_idx = -1, t_idx = -1;
    if (nsources > 1) {
        d.vertex_names.push_back(fresh_name(g.vertex_names, "s"));
        s_idx = 0;
    }
    if (nsinks > 1) {
        d.vertex_names.push_back(fresh_name(g.vertex_names, "t"));
        t_idx = static_cast<int>(d.vertex_names.size()) - 1;
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (indeg[v] == 0 && outdeg[v] == 0) continue; // drop isolated vertices
        if (is_source[v] && nsources > 1) {
            remap[v] = s_idx;
            continue;
        }
        if (is_sink[v] && nsinks > 1) {
            remap[v] = t_idx;
            continue;
        }
        remap[v] = static_cast<int>(d.vertex_names.size());
        d.vertex_names.push_back(g.vertex_names[v]);
        if (is_source[v]) s_idx = remap[v];
        if (is_sink[v]) t_idx = remap[v];
    }
    d.s = s_idx;
    d.t = t_idx;
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        d.arcs.push_back(Arc{static_cast<int>(i) + 1, remap[static_cast<std::size_t>(g.arcs[i].first)],
                             remap[static_cast<std::size_t>(g.arcs[i].second)]});
    }

    // Arcs on some s-t path: s reaches the tail and the head reaches t.
    Bitset all = d.full_arc_set();
    Bitset relevant = closure(d, all);
    if (relevant.empty()) throw NoPath("source cannot reach sink");

    if (prune) {
        Dag pruned;
        pruned.s = -1;
        pruned.t = -1;
        std::vector<int> vmap(d.vertex_names.size(), -1);
        auto map_vertex = [&](int v) {
            if (vmap[static_cast<std::size_t>(v)] < 0) {
                vmap[static_cast<std::size_t>(v)] = static_cast<int>(pruned.vertex_names.size());
                pruned.vertex_names.push_back(d.vertex_names[static_cast<std::size_t>(v)]);
            }
            return vmap[static_cast<std::size_t>(v)];
        };
        map_vertex(d.s);
        for (std::size_t i = 0; i < d.arcs.size(); ++i)
            if (relevant.test(i))
                pruned.arcs.push_back(
                    Arc{d.arcs[i].id, map_vertex(d.arcs[i].src), map_vertex(d.arcs[i].dst)});
            else
                pruned.irrelevant.push_back(d.arcs[i].id);
        pruned.s = vmap[static_cast<std::size_t>(d.s)];
        pruned.t = vmap[static_cast<std::size_t>(d.t)];
        return pruned;
    }
    for (std::size_t i = 0; i < d.arcs.size(); ++i)
        if (!relevant.test(i)) d.irrelevant.push_back(d.arcs[i].id);
    return d;
}

std::vector<Bitset> enumerate_paths(const Dag& g, std::size_t max_paths) {
    // Out-adjacency in ascending arc order; a DFS visiting arcs in that
    // order emits paths in lexicographic order of their arc id sequences.
    std::vector<std::vector<std::size_t>> out(g.vertex_count());
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
        out[static_cast<std::size_t>(g.arcs[i].src)].push_back(i);

    std::vector<Bitset> paths;
    std::vector<std::size_t> stack; // arc indices of the current partial path
    struct Frame {
        int vertex;
        std::size_t next; // next out-arc position to try
    };
    std::vector<Frame> frames{{g.s, 0}};
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.vertex == g.t) {
            Bitset p;
            for (std::size_t a : stack) p.set(a);
            paths.push_back(std::move(p));
            if (paths.size() > max_paths)
                throw TooManyPaths("more than " + std::to_string(max_paths) + " s-t paths");
            frames.pop_back();
            if (!stack.empty()) stack.pop_back();
            continue;
        }
        const auto& adj = out[static_cast<std::size_t>(f.vertex)];
        if (f.next >= adj.size()) {
            frames.pop_back();
            if (!stack.empty()) stack.pop_back();
            continue;
        }
        std::size_t arc = adj[f.next++];
        stack.push_back(arc);
        frames.push_back(Frame{g.arcs[arc].dst, 0});
    }
    return paths;
}

Bitset closure(const Dag& g, const Bitset& h) {
    std::vector<char> from_s = reach(g, h, g.s, true);
    std::vector<char> to_t = reach(g, h, g.t, false);
    Bitset out;
    h.for_each_bit([&](std::size_t i) {
        if (from_s[static_cast<std::size_t>(g.arcs[i].src)] &&
            to_t[static_cast<std::size_t>(g.arcs[i].dst)])
            out.set(i);
    });
    return out;
}

bool is_union_of_paths(const Dag& g, const Bitset& h) { return closure(g, h) == h; }

bool all_vertices_valid(const Dag& g, const Bitset& h) {
    std::vector<char> has_in(g.vertex_count(), 0), has_out(g.vertex_count(), 0);
    h.for_each_bit([&](std::size_t i) {
        has_out[static_cast<std::size_t>(g.arcs[i].src)] = 1;
        has_in[static_cast<std::size_t>(g.arcs[i].dst)] = 1;
    });
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<int>(v) == g.s || static_cast<int>(v) == g.t) continue;
        if (has_in[v] != has_out[v]) return false;
    }
    return true;
}

UnionFamily unions_of_paths(const Dag& g, std::size_t max_family, std::size_t max_paths) {
    std::vector<Bitset> paths = enumerate_paths(g, max_paths);
    return unions_unchecked(paths, static_cast<int>(g.arc_count()), max_family);
}

long long D(const Dag& g, const Bitset& h) {
    std::set<int> internal;
    h.for_each_bit([&](std::size_t i) {
        if (g.arcs[i].src != g.s && g.arcs[i].src != g.t) internal.insert(g.arcs[i].src);
        if (g.arcs[i].dst != g.s && g.arcs[i].dst != g.t) internal.insert(g.arcs[i].dst);
    });
    return static_cast<long long>(h.count()) - static_cast<long long>(internal.size()) - 1;
}

namespace {

// In/out arc indices of h per vertex, ascending.
struct Incidence {
    std::vector<std::vector<std::size_t>> in, out;
};

Incidence incidence(const Dag& g, const Bitset& h) {
    Incidence inc;
    inc.in.resize(g.vertex_count());
    inc.out.resize(g.vertex_count());
    h.for_each_bit([&](std::size_t i) {
        inc.out[static_cast<std::size_t>(g.arcs[i].src)].push_back(i);
        inc.in[static_cast<std::size_t>(g.arcs[i].dst)].push_back(i);
    });
    return inc;
}

} // namespace

std::vector<Bitset> ear_decomposition(const Dag& g, const Bitset& h) {
    if (h.empty() || !is_union_of_paths(g, h))
        throw NotUnionOfPaths("ear decomposition requires a nonempty union of paths");
    Incidence inc = incidence(g, h);
    std::vector<char> touched(g.vertex_count(), 0); // vertex incident to a covered arc
    Bitset covered;
    std::vector<Bitset> chain{Bitset{}};

    auto cover = [&](const Bitset& ear) {
        covered = covered | ear;
        ear.for_each_bit([&](std::size_t i) {
            touched[static_cast<std::size_t>(g.arcs[i].src)] = 1;
            touched[static_cast<std::size_t>(g.arcs[i].dst)] = 1;
        });
        chain.push_back(covered);
    };

    // Initial path: greedy walk from s along the smallest uncovered arc ids.
    // Every arc of a union of paths lies on an s-t path inside it, so the
    // walk cannot get stuck.
    {
        Bitset ear;
        int v = g.s;
        while (v != g.t) {
            std::size_t arc = inc.out[static_cast<std::size_t>(v)].front();
            ear.set(arc);
            v = g.arcs[arc].dst;
        }
        cover(ear);
    }

    std::vector<int> order = h.bits();
    for (int bit : order) {
        std::size_t seed = static_cast<std::size_t>(bit);
        if (covered.test(seed)) continue;
        Bitset ear;
        ear.set(seed);
        int v = g.arcs[seed].src;
        while (v != g.s && v != g.t && !touched[static_cast<std::size_t>(v)]) {
            // v is interior and untouched, so all its h-arcs are uncovered;
            // validity gives it an incoming one.
            std::size_t arc = inc.in[static_cast<std::size_t>(v)].front();
            ear.set(arc);
            v = g.arcs[arc].src;
        }
        v = g.arcs[seed].dst;
        while (v != g.s && v != g.t && !touched[static_cast<std::size_t>(v)]) {
            std::size_t arc = inc.out[static_cast<std::size_t>(v)].front();
            ear.set(arc);
            v = g.arcs[arc].dst;
        }
        cover(ear);
    }
    return chain;
}

bool is_ear(const Dag& g, const Bitset& host, const Bitset& ear) {
    if (ear.empty()) return false;
    if (!ear.is_subset_of(host)) return false;
    // The ear must be a directed path u -> ... -> w.
    Incidence inc = incidence(g, ear);
    int start = -1, end = -1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t din = inc.in[v].size(), dout = inc.out[v].size();
        if (din > 1 || dout > 1) return false;
        if (dout == 1 && din == 0) {
            if (start >= 0) return false;
            start = static_cast<int>(v);
        }
        if (din == 1 && dout == 0) {
            if (end >= 0) return false;
            end = static_cast<int>(v);
        }
    }
    if (start < 0 || end < 0) return false;
    // Walk it to confirm connectivity and count arcs.
    std::size_t walked = 0;
    int v = start;
    while (v != end) {
        if (inc.out[static_cast<std::size_t>(v)].empty()) return false;
        std::size_t arc = inc.out[static_cast<std::size_t>(v)].front();
        ++walked;
        v = g.arcs[arc].dst;
    }
    if (walked != ear.count()) return false;
    // Interior vertices must touch no other arc of the host.
    Bitset rest = minus(host, ear);
    std::vector<char> rest_touch(g.vertex_count(), 0);
    rest.for_each_bit([&](std::size_t i) {
        rest_touch[static_cast<std::size_t>(g.arcs[i].src)] = 1;
        rest_touch[static_cast<std::size_t>(g.arcs[i].dst)] = 1;
    });
    v = start;
    while (v != end) {
        std::size_t arc = inc.out[static_cast<std::size_t>(v)].front();
        v = g.arcs[arc].dst;
        if (v != end && (rest_touch[static_cast<std::size_t>(v)] || v == g.s || v == g.t))
            return false;
    }
    return true;
}

MultilinearPoly dag_polynomial(const Dag& g, std::size_t max_family, std::size_t max_paths) {
    UnionFamily fam = unions_of_paths(g, max_family, max_paths);
    MultilinearPoly p;
    p.n = static_cast<int>(g.arc_count());
    for (std::size_t i = 1; i < fam.size(); ++i) {
        long long d = D(g, fam.elements[i]);
        p.terms.emplace(fam.elements[i], (d & 1) ? mpz_class(-1) : mpz_class(1));
    }
    return p;
}

TruthTable connectivity_table(const Dag& g, int max_arcs) {
    int n = static_cast<int>(g.arc_count());
    if (n > max_arcs)
        throw TooLarge("brute-force table limited to " + std::to_string(max_arcs) +
                       " arcs, graph has " + std::to_string(n));
    // Reachability sweep per arc subset, over vertices in topological order.
    std::vector<std::size_t> topo_order;
    {
        std::vector<int> indeg(g.vertex_count(), 0);
        std::vector<std::vector<int>> out(g.vertex_count());
        for (const Arc& a : g.arcs) {
            ++indeg[static_cast<std::size_t>(a.dst)];
            out[static_cast<std::size_t>(a.src)].push_back(a.dst);
        }
        std::deque<int> q;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (indeg[v] == 0) q.push_back(static_cast<int>(v));
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            topo_order.push_back(static_cast<std::size_t>(v));
            for (int w : out[static_cast<std::size_t>(v)])
                if (--indeg[static_cast<std::size_t>(w)] == 0) q.push_back(w);
        }
    }
    std::vector<std::size_t> vertex_pos(g.vertex_count());
    for (std::size_t p = 0; p < topo_order.size(); ++p) vertex_pos[topo_order[p]] = p;
    // Arcs sorted by topological position of their tail.
    std::vector<std::size_t> arc_order(g.arcs.size());
    std::iota(arc_order.begin(), arc_order.end(), std::size_t{0});
    std::sort(arc_order.begin(), arc_order.end(), [&](std::size_t a, std::size_t b) {
        return vertex_pos[static_cast<std::size_t>(g.arcs[a].src)] <
               vertex_pos[static_cast<std::size_t>(g.arcs[b].src)];
    });
    return TruthTable::build(n, [&](std::uint32_t mask) {
        std::vector<char> reach_v(g.vertex_count(), 0);
        reach_v[static_cast<std::size_t>(g.s)] = 1;
        for (std::size_t i : arc_order) {
            if ((mask >> i) & 1u) {
                if (reach_v[static_cast<std::size_t>(g.arcs[i].src)])
                    reach_v[static_cast<std::size_t>(g.arcs[i].dst)] = 1;
            }
        }
        return reach_v[static_cast<std::size_t>(g.t)] ? 1 : 0;
    });
}

DualReport dual_polynomial(const Dag& g, int max_arcs) {
    TruthTable t = connectivity_table(g, max_arcs);
    DualReport r;
    r.poly = interpolate(dualize(t));
    r.coeffs_in_unit_range = true;
    for (const auto& [vars, c] : r.poly.terms)
        if (c > 1 || c < -1) r.coeffs_in_unit_range = false;
    return r;
}

VerifyReport verify_against_oracle(const Dag& g, int max_arcs) {
    VerifyReport rep;
    TruthTable t = connectivity_table(g, max_arcs);
    MultilinearPoly oracle = interpolate(t);
    UnionFamily fam = unions_of_paths(g);
    rep.paths = fam.atoms.size();
    rep.family_size = fam.size();

    MultilinearPoly closed;
    closed.n = static_cast<int>(g.arc_count());
    for (std::size_t i = 1; i < fam.size(); ++i) {
        long long d = D(g, fam.elements[i]);
        closed.terms.emplace(fam.elements[i], (d & 1) ? mpz_class(-1) : mpz_class(1));
    }
    if (!(closed == oracle)) {
        // Name the first differing term in canonical order.
        auto a = closed.terms.begin();
        auto b = oracle.terms.begin();
        std::string where = "term maps differ";
        CanonicalLess less;
        while (a != closed.terms.end() && b != oracle.terms.end()) {
            if (a->first == b->first) {
                if (a->second != b->second) {
                    where = "coefficient mismatch on a shared monomial";
                    break;
                }
                ++a;
                ++b;
            } else if (less(a->first, b->first)) {
                where = "closed form has an extra monomial";
                break;
            } else {
                where = "closed form is missing a monomial";
                break;
            }
        }
        rep.ok = false;
        rep.detail = where;
        return rep;
    }

    MoebiusTable mu = moebius(fam);
    for (std::size_t i = 1; i < fam.size(); ++i) {
        mpz_class expect = (D(g, fam.elements[i]) & 1) ? mpz_class(-1) : mpz_class(1);
        if (-mu.mu[i] != expect) {
            rep.ok = false;
            rep.detail = "Moebius value disagrees with the sign form at family index " +
                         std::to_string(i);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace mobpoly
