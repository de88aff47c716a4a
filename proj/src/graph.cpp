#include "c5census/graph.hpp"

#include <stdexcept>

namespace c5census {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_count());
    for (int i = 0; i < n_; ++i) {
        std::uint64_t nb = adj_[i] >> (i + 1) << (i + 1);  // neighbours above i
        while (nb) {
            int j = vs_first(nb);
            es.emplace_back(i, j);
            nb &= nb - 1;
        }
    }
    return es;
}

Graph Graph::empty(int n) { return GraphBuilder(n).seal(); }

Graph Graph::complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.seal();
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.seal();
}

Graph Graph::path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.seal();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    GraphBuilder b(n);
    for (auto [u, v] : es) b.add_edge(u, v);
    return b.seal();
}

Graph Graph::from_adjacency(int n, const std::uint64_t* rows) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("from_adjacency: vertex count must be in 1..64");
    Graph g;
    g.n_ = n;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~vs_all(n)) throw std::invalid_argument("from_adjacency: stray bits");
        if (vs_contains(rows[v], v)) throw std::invalid_argument("from_adjacency: self-loop");
        g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
        for (VertexSet nb = g.adj_[v]; nb; nb &= nb - 1)
            if (!g.adjacent(vs_first(nb), v))
                throw std::invalid_argument("from_adjacency: asymmetric rows");
    return g;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("GraphBuilder: vertex count must be in 1..64");
}

void GraphBuilder::check(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("GraphBuilder: bad edge endpoints");
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check(u, v);
    adj_[u] |= vs_bit(v);
    adj_[v] |= vs_bit(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
    check(u, v);
    adj_[u] &= ~vs_bit(v);
    adj_[v] &= ~vs_bit(u);
    return *this;
}

Graph GraphBuilder::seal() const {
    Graph g;
    g.n_ = n_;
    g.adj_ = adj_;
    return g;
}

bool Partition::disjoint() const {
    VertexSet seen = 0;
    for (VertexSet b : blocks) {
        if (b & seen) return false;
        seen |= b;
    }
    return true;
}

bool Partition::is_equipartition() const {
    if (blocks.size() <= 1) return true;
    int sz = vs_size(blocks[1]);
    for (std::size_t i = 2; i < blocks.size(); ++i)
        if (vs_size(blocks[i]) != sz) return false;
    return true;
}

Graph complement(const Graph& g) {
    int n = g.n();
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t nb = ~g.neighbours(v) & vs_all(n) & ~vs_bit(v);
        std::uint64_t above = nb >> (v + 1) << (v + 1);
        while (above) {
            int u = vs_first(above);
            b.add_edge(v, u);
            above &= above - 1;
        }
    }
    return b.seal();
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    s &= vs_all(g.n());
    int k = vs_size(s);
    if (k == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
    int label[kMaxVertices];
    int idx = 0;
    for (VertexSet it = s; it; it &= it - 1) label[idx++] = vs_first(it);
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(label[i], label[j])) b.add_edge(i, j);
    return b.seal();
}

long long cross_edges(const Graph& g, VertexSet a, VertexSet b) {
    long long e = 0;
    for (VertexSet it = a; it; it &= it - 1)
        e += vs_size(g.neighbours(vs_first(it)) & b);
    return e;
}

Frac pair_density(const Graph& g, VertexSet a, VertexSet b) {
    a &= vs_all(g.n());
    b &= vs_all(g.n());
    if (a == 0 || b == 0) throw std::invalid_argument("pair_density: empty side");
    if (a & b) throw std::invalid_argument("pair_density: sides overlap");
    std::uint64_t slots = static_cast<std::uint64_t>(vs_size(a)) * vs_size(b);
    return Frac(static_cast<std::uint64_t>(cross_edges(g, a, b)), slots);
}

long long edge_rank(int n, int i, int j) {
    if (i < 0 || j <= i || j >= n) throw std::invalid_argument("edge_rank: need 0 <= i < j < n");
    // pairs starting at i', i' < i, then offset within row i
    long long li = i;
    return li * n - li * (li + 1) / 2 + (j - i - 1);
}

std::pair<int, int> edge_unrank(int n, long long r) {
    if (r < 0 || r >= pair_count(n)) throw std::invalid_argument("edge_unrank: rank out of range");
    int i = 0;
    long long row = n - 1;
    while (r >= row) {
        r -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + static_cast<int>(r)};
}

}  // namespace c5census
