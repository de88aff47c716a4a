#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "c5census/rational.hpp"

namespace c5census {

constexpr int kMaxVertices = 64;

// Subset of vertex labels 0..63 as a bit mask.
using VertexSet = std::uint64_t;

inline VertexSet vs_all(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }
inline bool vs_contains(VertexSet s, int v) { return (s >> v) & 1ULL; }
inline int vs_size(VertexSet s) { return __builtin_popcountll(s); }
inline int vs_first(VertexSet s) { return __builtin_ctzll(s); }  // s != 0
inline VertexSet vs_bit(int v) { return 1ULL << v; }

// Iterate the vertices of a set: for (auto it = s; it; it &= it - 1) { v = vs_first(it); }

// Immutable labeled graph on up to 64 vertices, adjacency as one bit row
// per vertex. Values are cheap to copy and safe to share across threads.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    std::uint64_t neighbours(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1ULL; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    // Edge list sorted lexicographically by (i, j), i < j.
    std::vector<std::pair<int, int>> edges() const;

    static Graph empty(int n);
    static Graph complete(int n);
    static Graph cycle(int n);    // 0-1-...-(n-1)-0
    static Graph path(int n);     // 0-1-...-(n-1)
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es);
    // Validates symmetry and the absence of self-loops.
    static Graph from_adjacency(int n, const std::uint64_t* rows);

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

// The only mutable path to a Graph. Single-threaded use.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ULL; }
    Graph seal() const;

private:
    void check(int u, int v) const;
    int n_;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

// Ordered blocks; blocks[0] is the exceptional set and may be empty.
struct Partition {
    std::vector<VertexSet> blocks;

    bool disjoint() const;
    // True when blocks 1..k all have the same size.
    bool is_equipartition() const;
};

Graph complement(const Graph& g);

// Subgraph induced by s, relabeled by increasing original label.
Graph induced_subgraph(const Graph& g, VertexSet s);

// Exact e(A,B) / (|A||B|). A, B must be nonempty and disjoint.
Frac pair_density(const Graph& g, VertexSet a, VertexSet b);
long long cross_edges(const Graph& g, VertexSet a, VertexSet b);

// Lexicographic rank of the pair (i, j), i < j, among all pairs of [n];
// (0,1) -> 0, ..., (n-2,n-1) -> C(n,2)-1.
long long edge_rank(int n, int i, int j);
std::pair<int, int> edge_unrank(int n, long long r);

inline long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace c5census
