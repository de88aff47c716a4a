#include "c5census/recognizers.hpp"

#include <stdexcept>
#include <unordered_set>

namespace c5census {

namespace {

// DFS over induced paths s = u0, u1, ..., u_{L-1} closing back to s.
// Interior vertices must avoid N(s); every vertex avoids the neighbourhoods
// of path vertices two or more steps back. All cycle vertices are > s, so
// each cycle is searched from its minimum label only.
struct CycleSearch {
    const Graph& g;
    int L;
    int path[kMaxVertices];
    VertexSet found = 0;

    CycleSearch(const Graph& gg, int len) : g(gg), L(len) {}

    bool run() {
        for (int s = 0; s + L <= g.n(); ++s) {
            path[0] = s;
            VertexSet above = vs_all(g.n()) >> (s + 1) << (s + 1);
            VertexSet firsts = g.neighbours(s) & above;
            while (firsts) {
                int u1 = vs_first(firsts);
                firsts &= firsts - 1;
                path[1] = u1;
                if (extend(2, vs_bit(s) | vs_bit(u1), 0, above)) return true;
            }
        }
        return false;
    }

    // depth = index of the vertex being chosen; banned accumulates the
    // neighbourhoods of path[1..depth-3], so candidates at this depth get
    // banned | N(path[depth-2]) (N(path[0]) is handled separately: interior
    // vertices avoid it, the closing vertex must hit it).
    bool extend(int depth, VertexSet used, VertexSet banned, VertexSet above) {
        int prev = path[depth - 1];
        VertexSet nb = depth == 2 ? banned : banned | g.neighbours(path[depth - 2]);
        if (depth == L - 1) {
            VertexSet cand = g.neighbours(prev) & g.neighbours(path[0]) & above & ~used & ~nb;
            // avoid walking each cycle in both directions
            cand = cand >> (path[1] + 1) << (path[1] + 1);
            if (cand) {
                path[depth] = vs_first(cand);
                found = used | vs_bit(path[depth]);
                return true;
            }
            return false;
        }
        VertexSet cand = g.neighbours(prev) & above & ~used & ~nb & ~g.neighbours(path[0]);
        while (cand) {
            int v = vs_first(cand);
            cand &= cand - 1;
            path[depth] = v;
            if (extend(depth + 1, used | vs_bit(v), nb, above)) return true;
        }
        return false;
    }
};

}  // namespace

bool has_induced_cycle(const Graph& g, int length) {
    return find_induced_cycle(g, length).has_value();
}

std::optional<VertexSet> find_induced_cycle(const Graph& g, int length) {
    if (length < 4) throw std::invalid_argument("has_induced_cycle: length must be >= 4");
    if (length > g.n()) return std::nullopt;
    CycleSearch cs(g, length);
    if (cs.run()) return cs.found;
    return std::nullopt;
}

bool is_induced_c5_free(const Graph& g) { return !has_induced_cycle(g, 5); }

bool is_perfect(const Graph& g) {
    if (g.n() > 20) throw std::invalid_argument("is_perfect: exact recogniser capped at n = 20");
    if (g.n() <= 4) return true;
    Graph gc = complement(g);
    for (int len = 5; len <= g.n(); len += 2) {
        if (has_induced_cycle(g, len) || has_induced_cycle(gc, len)) return false;
    }
    return true;
}

bool is_cluster_graph(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        VertexSet closed = g.neighbours(v) | vs_bit(v);
        VertexSet nb = g.neighbours(v);
        while (nb) {
            int u = vs_first(nb);
            nb &= nb - 1;
            if ((g.neighbours(u) | vs_bit(u)) != closed) return false;
        }
    }
    return true;
}

namespace {

// An induced P3 (if any) inside the set `rest`, as a mask of its 3 vertices.
VertexSet find_induced_p3(const Graph& g, VertexSet rest) {
    for (VertexSet it = rest; it; it &= it - 1) {
        int centre = vs_first(it);
        VertexSet nb = g.neighbours(centre) & rest;
        if (vs_size(nb) < 2) continue;
        for (VertexSet jt = nb; jt; jt &= jt - 1) {
            int u = vs_first(jt);
            VertexSet miss = nb & ~g.neighbours(u) & ~vs_bit(u);
            if (miss) return vs_bit(centre) | vs_bit(u) | vs_bit(vs_first(miss));
        }
    }
    return 0;
}

std::vector<VertexSet> cluster_components(const Graph& g, VertexSet rest) {
    std::vector<VertexSet> comps;
    VertexSet left = rest;
    while (left) {
        int v = vs_first(left);
        VertexSet comp = (g.neighbours(v) | vs_bit(v)) & rest;
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

// Branch on an induced P3 of the remainder: the distinguished clique block
// must contain one of its vertices. Prunes by the clique constraint.
struct GcpSearch {
    const Graph& g;
    bool use_memo;
    std::unordered_set<std::uint64_t> seen;

    explicit GcpSearch(const Graph& gg) : g(gg), use_memo(gg.n() > 12) {}

    bool run(VertexSet clique, VertexSet rest, GensplitWitness* w) {
        if (use_memo && !seen.insert(clique).second) return false;
        VertexSet p3 = find_induced_p3(g, rest);
        if (p3 == 0) {
            if (w) {
                w->block = clique;
                w->cliques = cluster_components(g, rest);
            }
            return true;
        }
        for (VertexSet it = p3; it; it &= it - 1) {
            int x = vs_first(it);
            if ((g.neighbours(x) & clique) == clique) {  // x completes the clique
                if (run(clique | vs_bit(x), rest & ~vs_bit(x), w)) return true;
            }
        }
        return false;
    }
};

bool admits_gcp(const Graph& g, GensplitWitness* w) {
    GcpSearch s(g);
    return s.run(0, vs_all(g.n()), w);
}

}  // namespace

bool is_generalised_split(const Graph& g, GensplitWitness* witness) {
    if (g.n() > 20)
        throw std::invalid_argument("is_generalised_split: recogniser capped at n = 20");
    if (admits_gcp(g, witness)) {
        if (witness) witness->on_complement = false;
        return true;
    }
    Graph gc = complement(g);
    if (admits_gcp(gc, witness)) {
        if (witness) witness->on_complement = true;
        return true;
    }
    return false;
}

namespace {

struct SubgraphSearch {
    const Graph& g;
    const Graph& f;
    int order[6];     // F vertices, by decreasing degree
    int image[6];
    VertexSet used = 0;

    SubgraphSearch(const Graph& gg, const Graph& ff) : g(gg), f(ff) {
        int k = f.n();
        for (int i = 0; i < k; ++i) order[i] = i;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (f.degree(order[j]) > f.degree(order[i])) std::swap(order[i], order[j]);
    }

    bool rec(int depth) {
        if (depth == f.n()) return true;
        int fv = order[depth];
        for (int gv = 0; gv < g.n(); ++gv) {
            if (vs_contains(used, gv)) continue;
            if (g.degree(gv) < f.degree(fv)) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j)
                if (f.adjacent(fv, order[j]) && !g.adjacent(gv, image[j])) ok = false;
            if (!ok) continue;
            image[depth] = gv;
            used |= vs_bit(gv);
            if (rec(depth + 1)) return true;
            used &= ~vs_bit(gv);
        }
        return false;
    }
};

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& f) {
    if (f.n() > 6) throw std::invalid_argument("contains_subgraph: F capped at 6 vertices");
    if (f.n() > g.n()) return false;
    if (f.edge_count() > g.edge_count()) return false;
    SubgraphSearch s(g, f);
    return s.rec(0);
}

bool ClassPredicate::eval(const Graph& g) const {
    switch (tag) {
        case Tag::AllGraphs: return true;
        case Tag::InducedC5Free: return is_induced_c5_free(g);
        case Tag::Perfect: return is_perfect(g);
        case Tag::GeneralisedSplit: return is_generalised_split(g);
        case Tag::NoSubgraphF: return !contains_subgraph(g, f);
        case Tag::ClusterGraph: return is_cluster_graph(g);
    }
    return false;
}

std::string ClassPredicate::name() const {
    switch (tag) {
        case Tag::AllGraphs: return "all";
        case Tag::InducedC5Free: return "c5free";
        case Tag::Perfect: return "perfect";
        case Tag::GeneralisedSplit: return "gensplit";
        case Tag::NoSubgraphF:
            return "nosub(v=" + std::to_string(f.n()) + ",e=" + std::to_string(f.edge_count()) +
                   ")";
        case Tag::ClusterGraph: return "cluster";
    }
    return "?";
}

ClassPredicate ClassPredicate::all() { return {Tag::AllGraphs, Graph()}; }
ClassPredicate ClassPredicate::c5free() { return {Tag::InducedC5Free, Graph()}; }
ClassPredicate ClassPredicate::perfect() { return {Tag::Perfect, Graph()}; }
ClassPredicate ClassPredicate::gensplit() { return {Tag::GeneralisedSplit, Graph()}; }
ClassPredicate ClassPredicate::cluster() { return {Tag::ClusterGraph, Graph()}; }

ClassPredicate ClassPredicate::no_subgraph(const Graph& f) {
    if (f.n() > 6) throw std::invalid_argument("ClassPredicate: forbidden F capped at 6 vertices");
    return {Tag::NoSubgraphF, f};
}

ClassPredicate ClassPredicate::parse(const std::string& name) {
    if (name == "all") return all();
    if (name == "c5free") return c5free();
    if (name == "perfect") return perfect();
    if (name == "gensplit") return gensplit();
    if (name == "cluster") return cluster();
    if (name.rfind("nosub:", 0) == 0) {
        std::string fx = name.substr(6);
        if (fx == "k2") return no_subgraph(Graph::complete(2));
        if (fx == "k3") return no_subgraph(Graph::complete(3));
        if (fx == "k4") return no_subgraph(Graph::complete(4));
        if (fx == "k5") return no_subgraph(Graph::complete(5));
        if (fx == "k6") return no_subgraph(Graph::complete(6));
        if (fx == "p3") return no_subgraph(Graph::path(3));
        if (fx == "p4") return no_subgraph(Graph::path(4));
        if (fx == "c4") return no_subgraph(Graph::cycle(4));
        if (fx == "c5") return no_subgraph(Graph::cycle(5));
    }
    throw std::invalid_argument("unknown class predicate: " + name);
}

}  // namespace c5census
