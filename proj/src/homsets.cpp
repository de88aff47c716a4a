#include "c5census/homsets.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "c5census/generators.hpp"
#include "c5census/recognizers.hpp"
#include "c5census/rng.hpp"

namespace c5census {

using Row = WideGraph::Row;

WideGraph::WideGraph(int n) : n_(n), rows_(n) {
    if (n < 1 || n > kCap) throw std::invalid_argument("WideGraph: vertex count must be in 1..128");
}

WideGraph::WideGraph(const Graph& g) : WideGraph(g.n()) {
    for (int v = 0; v < n_; ++v)
        for (VertexSet nb = g.neighbours(v); nb; nb &= nb - 1) rows_[v].set(vs_first(nb));
}

long long WideGraph::edge_count() const {
    long long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

void WideGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("WideGraph: bad edge endpoints");
    rows_[u].set(v);
    rows_[v].set(u);
}

WideGraph WideGraph::complemented() const {
    WideGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

WideGraph WideGraph::gnm(int n, long long m, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1 || n > kCap) throw std::invalid_argument("WideGraph::gnm: n must be in 1..128");
    long long total = pair_count(n);
    if (m < 0 || m > total) throw std::invalid_argument("WideGraph::gnm: m out of range");
    std::vector<long long> ranks(total);
    for (long long r = 0; r < total; ++r) ranks[r] = r;
    SplitMix64 rng(seed, stream);
    WideGraph g(n);
    for (long long i = 0; i < m; ++i) {
        std::uint64_t j = i + rng.below(ranks.size() - i);
        std::swap(ranks[i], ranks[j]);
        auto [u, v] = edge_unrank(n, ranks[i]);
        g.add_edge(u, v);
    }
    return g;
}

namespace {

int row_first(const Row& r) { return r.any() ? static_cast<int>(r._Find_first()) : -1; }
int row_next(const Row& r, int after) { return static_cast<int>(r._Find_next(after)); }

std::vector<int> row_to_list(const Row& r) {
    std::vector<int> out;
    for (int v = row_first(r); v >= 0 && v < WideGraph::kCap; v = row_next(r, v))
        out.push_back(v);
    return out;
}

// Tomita-style maximum clique: candidates are greedily coloured, vertices
// expanded in decreasing colour order, pruned by size + colour <= best.
struct CliqueSolver {
    const WideGraph& g;
    Row best;
    int best_size = 0;

    explicit CliqueSolver(const WideGraph& gg) : g(gg) {}

    void expand(const Row& r, int rsize, Row p) {
        if (p.none()) {
            if (rsize > best_size) {
                best_size = rsize;
                best = r;
            }
            return;
        }
        int order[WideGraph::kCap];
        int colour[WideGraph::kCap];
        int cnt = 0;
        Row uncoloured = p;
        int c = 0;
        while (uncoloured.any()) {
            ++c;
            Row avail = uncoloured;
            while (avail.any()) {
                int v = row_first(avail);
                order[cnt] = v;
                colour[cnt] = c;
                ++cnt;
                uncoloured.reset(v);
                avail &= ~g.neighbours(v);
                avail.reset(v);
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (rsize + colour[i] <= best_size) return;
            int v = order[i];
            Row r2 = r;
            r2.set(v);
            expand(r2, rsize + 1, p & g.neighbours(v));
            p.reset(v);
        }
    }
};

Row solve_max_clique(const WideGraph& g) {
    CliqueSolver s(g);
    Row all;
    for (int v = 0; v < g.n(); ++v) all.set(v);
    s.expand(Row{}, 0, all);
    return s.best;
}

}  // namespace

std::vector<int> max_clique_wide(const WideGraph& g) { return row_to_list(solve_max_clique(g)); }

VertexSet max_clique(const Graph& g) {
    VertexSet out = 0;
    for (int v : max_clique_wide(WideGraph(g))) out |= vs_bit(v);
    return out;
}

int clique_number(const Graph& g) { return vs_size(max_clique(g)); }

int independence_number(const Graph& g) { return vs_size(max_clique(complement(g))); }

HomWitness hom_number(const WideGraph& g) {
    std::vector<int> cl = max_clique_wide(g);
    std::vector<int> ind = max_clique_wide(g.complemented());
    HomWitness w;
    if (cl.size() >= ind.size()) {
        w.set = std::move(cl);
        w.is_clique = true;
    } else {
        w.set = std::move(ind);
        w.is_clique = false;
    }
    w.size = static_cast<int>(w.set.size());
    return w;
}

HomWitness hom_number(const Graph& g) { return hom_number(WideGraph(g)); }

namespace {

bool induces_p3(const WideGraph& g, int a, int b, int c, std::array<int, 3>* ordered) {
    int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
    if (e != 2) return false;
    int centre, x, y;
    if (!g.adjacent(a, b)) centre = c, x = a, y = b;
    else if (!g.adjacent(a, c)) centre = b, x = a, y = c;
    else centre = a, x = b, y = c;
    *ordered = {x, centre, y};
    return true;
}

std::vector<Row> cluster_cliques(const WideGraph& g, const Row& u) {
    std::vector<Row> qs;
    Row left = u;
    while (left.any()) {
        int v = row_first(left);
        Row q = g.neighbours(v);
        q.set(v);
        q &= u;
        qs.push_back(q);
        left &= ~q;
    }
    return qs;
}

// Simple augmenting-path maximum matching on a bipartite graph given as
// adjacency lists of the left side over right indices.
int bipartite_matching(const std::vector<std::vector<int>>& adj, int nright,
                       std::vector<int>& match_left) {
    int nleft = static_cast<int>(adj.size());
    std::vector<int> match_right(nright, -1);
    match_left.assign(nleft, -1);

    std::vector<char> visited(nright);
    std::function<bool(int)> augment = [&](int x) {
        for (int e : adj[x]) {
            if (visited[e]) continue;
            visited[e] = 1;
            if (match_right[e] == -1 || augment(match_right[e])) {
                match_right[e] = x;
                match_left[x] = e;
                return true;
            }
        }
        return false;
    };

    int matched = 0;
    for (int x = 0; x < nleft; ++x) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(x)) ++matched;
    }
    return matched;
}

// Greedy maximal disjoint family of induced triples over lexicographic
// (a,b,c); want_edges = 2 collects P3s, want_edges = 1 anti-P3s.
std::vector<std::array<int, 3>> greedy_triples(const WideGraph& g, int want_edges) {
    std::vector<std::array<int, 3>> out;
    std::vector<char> used(g.n(), 0);
    int n = g.n();
    for (int a = 0; a < n; ++a) {
        if (used[a]) continue;
        for (int b = a + 1; b < n; ++b) {
            if (used[a] || used[b]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (used[a] || used[b] || used[c]) continue;
                std::array<int, 3> t;
                if (want_edges == 2) {
                    if (!induces_p3(g, a, b, c, &t)) continue;
                } else {
                    int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
                    if (e != 1) continue;
                    if (g.adjacent(a, b)) t = {a, b, c};
                    else if (g.adjacent(a, c)) t = {a, c, b};
                    else t = {b, c, a};
                }
                out.push_back(t);
                used[a] = used[b] = used[c] = 1;
            }
        }
    }
    return out;
}

}  // namespace

PackingCertificate p3_packing_trichotomy(const WideGraph& g) {
    int n = g.n();
    if (n < 6) throw std::invalid_argument("p3_packing_trichotomy: need n >= 6");
    int target = (n + 5) / 6;

    PackingCertificate cert;
    cert.target = target;

    // step 1: greedy maximal induced-P3 family
    auto p3s = greedy_triples(g, 2);
    if (static_cast<int>(p3s.size()) >= target) {
        cert.outcome = PackingCertificate::Outcome::P3Packing;
        cert.triples = std::move(p3s);
        return cert;
    }

    // step 2: uncovered vertices induce a cluster graph
    Row uncovered;
    for (int v = 0; v < n; ++v) uncovered.set(v);
    for (auto& t : p3s) {
        uncovered.reset(t[0]);
        uncovered.reset(t[1]);
        uncovered.reset(t[2]);
    }
    auto cliques = cluster_cliques(g, uncovered);

    std::size_t biggest = 0;
    for (std::size_t i = 1; i < cliques.size(); ++i)
        if (cliques[i].count() > cliques[biggest].count()) biggest = i;
    if (!cliques.empty() && static_cast<int>(cliques[biggest].count()) > target) {
        cert.outcome = PackingCertificate::Outcome::HomogeneousSet;
        cert.hom_set = row_to_list(cliques[biggest]);
        cert.hom_is_clique = true;
        return cert;
    }
    if (static_cast<int>(cliques.size()) > target) {
        cert.outcome = PackingCertificate::Outcome::HomogeneousSet;
        for (const Row& q : cliques) cert.hom_set.push_back(row_first(q));
        cert.hom_is_clique = false;
        return cert;
    }

    // step 3: disjoint intra-clique edges, matched against leftover
    // vertices from other cliques; a matched (x, e) pair is an anti-P3.
    int nprime = static_cast<int>(uncovered.count());
    int budget = (nprime + 2) / 3;
    struct PickedEdge {
        int u, v, clique;
    };
    std::vector<PickedEdge> edges;
    Row edge_vertices;
    for (std::size_t qi = 0; qi < cliques.size() && static_cast<int>(edges.size()) < budget;
         ++qi) {
        std::vector<int> members = row_to_list(cliques[qi]);
        for (std::size_t i = 0; i + 1 < members.size() && static_cast<int>(edges.size()) < budget;
             i += 2) {
            edges.push_back({members[i], members[i + 1], static_cast<int>(qi)});
            edge_vertices.set(members[i]);
            edge_vertices.set(members[i + 1]);
        }
    }

    std::vector<int> xs;
    std::vector<int> x_clique;
    for (int v : row_to_list(uncovered & ~edge_vertices)) {
        for (std::size_t qi = 0; qi < cliques.size(); ++qi)
            if (cliques[qi][v]) {
                xs.push_back(v);
                x_clique.push_back(static_cast<int>(qi));
                break;
            }
    }
    std::size_t side = std::min(xs.size(), edges.size());
    xs.resize(side);
    x_clique.resize(side);
    edges.resize(side);

    std::vector<std::vector<int>> badj(side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j)
            if (x_clique[i] != edges[j].clique) badj[i].push_back(static_cast<int>(j));
    std::vector<int> match_left;
    int matched = side ? bipartite_matching(badj, static_cast<int>(side), match_left) : 0;

    if (matched >= target) {
        cert.outcome = PackingCertificate::Outcome::AntiP3Packing;
        for (std::size_t i = 0; i < side; ++i)
            if (match_left[i] >= 0) {
                const PickedEdge& e = edges[match_left[i]];
                cert.triples.push_back({e.u, e.v, xs[i]});
            }
        return cert;
    }

    // rescue: a direct greedy anti-P3 packing over the whole graph
    auto anti = greedy_triples(g, 1);
    if (static_cast<int>(anti.size()) >= target) {
        cert.outcome = PackingCertificate::Outcome::AntiP3Packing;
        cert.triples = std::move(anti);
        return cert;
    }

    // fallback: the construction can only fail when hom(G) is large; hand
    // back the exact largest homogeneous set.
    HomWitness w = hom_number(g);
    cert.outcome = PackingCertificate::Outcome::HomogeneousSet;
    cert.hom_set = w.set;
    cert.hom_is_clique = w.is_clique;
    return cert;
}

PackingCertificate p3_packing_trichotomy(const Graph& g) {
    return p3_packing_trichotomy(WideGraph(g));
}

bool verify_certificate(const WideGraph& g, const PackingCertificate& cert) {
    int n = g.n();
    using Outcome = PackingCertificate::Outcome;
    if (cert.outcome == Outcome::HomogeneousSet) {
        if (static_cast<int>(cert.hom_set.size()) <= cert.target) return false;
        std::vector<char> seen(n, 0);
        for (int v : cert.hom_set) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
        for (std::size_t i = 0; i < cert.hom_set.size(); ++i)
            for (std::size_t j = i + 1; j < cert.hom_set.size(); ++j)
                if (g.adjacent(cert.hom_set[i], cert.hom_set[j]) != cert.hom_is_clique)
                    return false;
        return true;
    }

    if (static_cast<int>(cert.triples.size()) < cert.target) return false;
    std::vector<char> used(n, 0);
    for (const auto& t : cert.triples) {
        auto [a, b, c] = t;
        if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n) return false;
        if (a == b || a == c || b == c) return false;
        if (used[a] || used[b] || used[c]) return false;
        used[a] = used[b] = used[c] = 1;
        if (cert.outcome == Outcome::P3Packing) {
            if (!(g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c))) return false;
        } else {
            if (!(g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c))) return false;
        }
    }
    return true;
}

bool verify_certificate(const Graph& g, const PackingCertificate& cert) {
    return verify_certificate(WideGraph(g), cert);
}

double HomDistribution::mean_all() const {
    double s = 0, c = 0;
    for (std::size_t h = 0; h < counts_all.size(); ++h) {
        s += static_cast<double>(h) * counts_all[h];
        c += counts_all[h];
    }
    return c > 0 ? s / c / n : 0.0;
}

double HomDistribution::mean_conditional() const {
    double s = 0, c = 0;
    for (std::size_t h = 0; h < counts_conditional.size(); ++h) {
        s += static_cast<double>(h) * counts_conditional[h];
        c += counts_conditional[h];
    }
    return c > 0 ? s / c / n : 0.0;
}

HomDistribution hom_distribution_experiment(int n, long long m, long long samples,
                                            std::uint64_t seed, int threads) {
    if (n > 20) throw std::invalid_argument("hom_distribution_experiment: capped at n = 20");
    if (samples < 1) throw std::invalid_argument("hom_distribution_experiment: samples >= 1");
    if (threads < 1) threads = 1;

    HomDistribution d;
    d.n = n;
    d.m = m;
    d.samples = samples;
    d.seed = seed;
    d.counts_all.assign(n + 1, 0);
    d.counts_conditional.assign(n + 1, 0);

    std::vector<std::vector<long long>> all(threads, std::vector<long long>(n + 1, 0));
    std::vector<std::vector<long long>> cond(threads, std::vector<long long>(n + 1, 0));
    std::atomic<long long> next{0};
    const long long block = 256;

    auto work = [&](int tid) {
        for (;;) {
            long long lo = next.fetch_add(block);
            if (lo >= samples) return;
            long long hi = std::min(samples, lo + block);
            for (long long i = lo; i < hi; ++i) {
                Graph g = gnm_sample(n, m, seed, static_cast<std::uint64_t>(i));
                int h = hom_number(g).size;
                ++all[tid][h];
                if (is_induced_c5_free(g)) ++cond[tid][h];
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (int t = 0; t < threads; ++t)
        for (int h = 0; h <= n; ++h) {
            d.counts_all[h] += all[t][h];
            d.counts_conditional[h] += cond[t][h];
        }
    for (int h = 0; h <= n; ++h) d.accepted += d.counts_conditional[h];

    if (static_cast<double>(d.accepted) < 1e-4 * static_cast<double>(samples))
        throw std::runtime_error("hom_distribution_experiment: acceptance rate below 1e-4 (" +
                                 std::to_string(d.accepted) + "/" + std::to_string(samples) +
                                 " samples passed the induced-C5-free filter)");
    return d;
}

}  // namespace c5census
