#include "c5census/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "c5census/rng.hpp"

namespace c5census {

ColouredGraph ColouredGraph::make(int k) {
    ColouredGraph r;
    r.k = k;
    r.vertex_colour.assign(k, 0);
    r.edge.assign(static_cast<std::size_t>(k) * k, static_cast<std::int8_t>(EdgeColour::Absent));
    return r;
}

namespace {

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for (VertexSet it = s; it; it &= it - 1) out.push_back(vs_first(it));
    return out;
}

// |A'| = floor(|A|/2) random half of A, drawn by partial shuffle.
VertexSet random_half(std::vector<int> pool, SplitMix64& rng) {
    std::size_t half = pool.size() / 2;
    VertexSet out = 0;
    for (std::size_t i = 0; i < half; ++i) {
        std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        out |= vs_bit(pool[i]);
    }
    return out;
}

struct PairProxy {
    double density = 0;
    double max_deviation = 0;
    bool regular = false;
};

// Sampling stand-in for epsilon-regularity: the pair passes when the
// density over `samples` random balanced half-subsets never deviates from
// the pair density by more than eps.
PairProxy pair_regularity_proxy(const Graph& g, VertexSet a, VertexSet b, double eps,
                                int samples, SplitMix64 rng) {
    PairProxy out;
    out.density = pair_density(g, a, b).to_double();
    auto la = set_to_list(a), lb = set_to_list(b);
    for (int t = 0; t < samples; ++t) {
        VertexSet ha = random_half(la, rng);
        VertexSet hb = random_half(lb, rng);
        if (ha == 0 || hb == 0) continue;
        double dev = std::abs(pair_density(g, ha, hb).to_double() - out.density);
        out.max_deviation = std::max(out.max_deviation, dev);
    }
    out.regular = out.max_deviation <= eps;
    return out;
}

// Greedy seeding by degree, then local swaps chasing all pair densities
// below 1/2; pairs must also pass the regularity proxy.
bool find_sparse_subpartition(const Graph& h, const TypeParams& params, SplitMix64& rng) {
    int s = h.n();
    int kp = params.k_sub;
    int q = s / kp;
    if (q < 1 || q < static_cast<int>(std::ceil(params.mu_proxy * s))) return false;

    std::vector<int> order(s);
    for (int i = 0; i < s; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return h.degree(x) != h.degree(y) ? h.degree(x) > h.degree(y)
                                                                    : x < y; });
    std::vector<std::vector<int>> parts(kp);
    for (int i = 0; i < kp * q; ++i) parts[i % kp].push_back(order[i]);

    auto part_mask = [&](int i) {
        VertexSet m = 0;
        for (int v : parts[i]) m |= vs_bit(v);
        return m;
    };
    auto worst_pair = [&](int* wi, int* wj) {
        double worst = -1;
        for (int i = 0; i < kp; ++i)
            for (int j = i + 1; j < kp; ++j) {
                double d = pair_density(h, part_mask(i), part_mask(j)).to_double();
                if (d > worst) {
                    worst = d;
                    *wi = i;
                    *wj = j;
                }
            }
        return worst;
    };

    int wi = 0, wj = 1;
    double worst = worst_pair(&wi, &wj);
    for (int iter = 0; iter < params.swap_iters && worst >= 0.5; ++iter) {
        // best single swap across the offending pair
        double best = worst;
        int bu = -1, bv = -1;
        for (std::size_t a = 0; a < parts[wi].size(); ++a)
            for (std::size_t b = 0; b < parts[wj].size(); ++b) {
                std::swap(parts[wi][a], parts[wj][b]);
                int ti, tj;
                double cand = worst_pair(&ti, &tj);
                std::swap(parts[wi][a], parts[wj][b]);
                if (cand < best) {
                    best = cand;
                    bu = static_cast<int>(a);
                    bv = static_cast<int>(b);
                }
            }
        if (bu < 0) break;  // local optimum
        std::swap(parts[wi][bu], parts[wj][bv]);
        worst = worst_pair(&wi, &wj);
    }
    if (worst >= 0.5) return false;

    for (int i = 0; i < kp; ++i)
        for (int j = i + 1; j < kp; ++j) {
            SplitMix64 sub(rng.next(), 0);
            if (!pair_regularity_proxy(h, part_mask(i), part_mask(j), params.eps_sub,
                                       params.proxy_samples, sub)
                     .regular)
                return false;
        }
    return true;
}

}  // namespace

std::pair<ColouredGraph, TypeDiagnostics> extract_type(const Graph& g, const Partition& p,
                                                       const TypeParams& params) {
    auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
    if (!in_unit(params.eps) || !in_unit(params.eps_sub) || !in_unit(params.d) ||
        !in_unit(params.mu_proxy) || params.k_sub < 2)
        throw std::invalid_argument(
            "extract_type: eps, eps_sub, d, mu_proxy must lie in (0,1) and k_sub >= 2");
    if (p.blocks.size() < 3)
        throw std::invalid_argument("extract_type: need an exceptional set plus k >= 2 blocks");
    if (!p.disjoint()) throw std::invalid_argument("extract_type: blocks overlap");
    int k = static_cast<int>(p.blocks.size()) - 1;
    int size = vs_size(p.blocks[1]);
    for (int i = 1; i <= k; ++i)
        if (vs_size(p.blocks[i]) != size)
            throw std::invalid_argument("extract_type: blocks 1..k must have equal size");
    if (size < 2 * params.k_sub)
        throw std::invalid_argument("extract_type: blocks too small for the subpartition search");

    ColouredGraph r = ColouredGraph::make(k);
    TypeDiagnostics diag;

    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            SplitMix64 rng(params.seed, static_cast<std::uint64_t>(i) * 64 + j);
            PairProxy px = pair_regularity_proxy(g, p.blocks[i], p.blocks[j], params.eps,
                                                 params.proxy_samples, rng);
            diag.pairs.push_back({i, j, px.density, px.max_deviation, px.regular});
            if (!px.regular) continue;
            EdgeColour c = EdgeColour::Grey;
            if (px.density < params.d) c = EdgeColour::White;
            else if (px.density > 1.0 - params.d) c = EdgeColour::Black;
            r.set_edge(i - 1, j - 1, c);
        }
    }

    for (int i = 1; i <= k; ++i) {
        Graph h = induced_subgraph(g, p.blocks[i]);
        SplitMix64 rng(params.seed, 1000 + static_cast<std::uint64_t>(i));
        SplitMix64 rng2(params.seed, 2000 + static_cast<std::uint64_t>(i));
        if (find_sparse_subpartition(h, params, rng)) {
            r.vertex_colour[i - 1] = 0;
            diag.vertex_method.push_back("sparse-heuristic");
        } else if (find_sparse_subpartition(complement(h), params, rng2)) {
            r.vertex_colour[i - 1] = 1;
            diag.vertex_method.push_back("dense-heuristic");
        } else {
            long long inner = h.edge_count();
            double dens = size >= 2 ? static_cast<double>(inner) / pair_count(size) : 0.0;
            r.vertex_colour[i - 1] = dens < 0.5 ? 0 : 1;
            diag.vertex_method.push_back("majority-fallback");
        }
    }
    return {std::move(r), std::move(diag)};
}

std::vector<std::pair<int, int>> grey_edges(const ColouredGraph& r) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < r.k; ++i)
        for (int j = i + 1; j < r.k; ++j)
            if (r.edge_colour(i, j) == EdgeColour::Grey) out.emplace_back(i, j);
    return out;
}

bool has_grey_triangle(const ColouredGraph& r) {
    std::vector<std::uint64_t> grey(r.k, 0);
    for (auto [i, j] : grey_edges(r)) {
        grey[i] |= vs_bit(j);
        grey[j] |= vs_bit(i);
    }
    for (int i = 0; i < r.k; ++i)
        for (std::uint64_t nb = grey[i]; nb; nb &= nb - 1) {
            int j = vs_first(nb);
            if (j > i && (grey[i] & grey[j]) != 0) return true;
        }
    return false;
}

namespace {

bool colhom_pair_ok(const Graph& f, const ColouredGraph& r, int u, int v, int hu, int hv) {
    bool fe = f.adjacent(u, v);
    if (hu == hv) {
        return fe ? r.vertex_colour[hu] == 1 : r.vertex_colour[hu] == 0;
    }
    EdgeColour c = r.edge_colour(hu, hv);
    if (c == EdgeColour::Absent) return false;  // condition (a)
    if (fe) return c == EdgeColour::Grey || c == EdgeColour::Black;
    return c == EdgeColour::White || c == EdgeColour::Grey;
}

bool colhom_search(const Graph& f, const ColouredGraph& r, std::vector<int>& h, int depth) {
    if (depth == f.n()) return true;
    for (int img = 0; img < r.k; ++img) {
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j) ok = colhom_pair_ok(f, r, depth, j, img, h[j]);
        if (!ok) continue;
        h[depth] = img;
        if (colhom_search(f, r, h, depth + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> coloured_homomorphism(const Graph& f, const ColouredGraph& r) {
    if (f.n() > 8) throw std::invalid_argument("coloured_homomorphism: v(F) capped at 8");
    if (r.k > 12) throw std::invalid_argument("coloured_homomorphism: k capped at 12");
    if (r.k == 0) return std::nullopt;
    std::vector<int> h(f.n(), -1);
    if (colhom_search(f, r, h, 0)) return h;
    return std::nullopt;
}

bool check_coloured_homomorphism(const Graph& f, const ColouredGraph& r,
                                 const std::vector<int>& h) {
    if (static_cast<int>(h.size()) != f.n()) return false;
    for (int v : h)
        if (v < 0 || v >= r.k) return false;
    for (int u = 0; u < f.n(); ++u)
        for (int v = u + 1; v < f.n(); ++v)
            if (!colhom_pair_ok(f, r, u, v, h[u], h[v])) return false;
    return true;
}

GreyTriangleSweep grey_triangle_c5_sweep() {
    GreyTriangleSweep sweep;
    Graph c5 = Graph::cycle(5);
    sweep.all_exist = true;
    for (int colouring = 0; colouring < 8; ++colouring) {
        ColouredGraph t = ColouredGraph::make(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) t.set_edge(i, j, EdgeColour::Grey);
        for (int i = 0; i < 3; ++i) t.vertex_colour[i] = (colouring >> i) & 1;

        auto& e = sweep.entries[colouring];
        e.vertex_colours = {t.vertex_colour[0], t.vertex_colour[1], t.vertex_colour[2]};
        auto h = coloured_homomorphism(c5, t);
        e.exists = h.has_value() && check_coloured_homomorphism(c5, t, *h);
        if (e.exists) e.witness = *h;
        sweep.all_exist = sweep.all_exist && e.exists;
    }
    return sweep;
}

}  // namespace c5census
