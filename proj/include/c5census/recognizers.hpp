#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c5census/graph.hpp"

namespace c5census {

// True iff some vertex subset of the given size induces exactly a cycle.
// length >= 4; length <= n.
bool has_induced_cycle(const Graph& g, int length);

// Same search, returning the vertex set of one induced cycle.
std::optional<VertexSet> find_induced_cycle(const Graph& g, int length);

bool is_induced_c5_free(const Graph& g);

// Exact recogniser via odd-hole search in G and its complement; n <= 20.
bool is_perfect(const Graph& g);

// Disjoint union of cliques, i.e. no induced P3.
bool is_cluster_graph(const Graph& g);

struct GensplitWitness {
    bool on_complement = false;  // partition found in complement(G)
    VertexSet block = 0;         // distinguished clique block (may be empty)
    std::vector<VertexSet> cliques;  // remaining cliques, no edges between them
};

// G or complement(G) admits a partition into cliques V1..Vk with no edges
// between Vi, Vj for i > j > 1; n <= 20.
bool is_generalised_split(const Graph& g, GensplitWitness* witness = nullptr);

// Weak (not necessarily induced) subgraph containment; v(F) <= 6.
bool contains_subgraph(const Graph& g, const Graph& f);

// Named membership test used by the census.
struct ClassPredicate {
    enum class Tag {
        AllGraphs,
        InducedC5Free,
        Perfect,
        GeneralisedSplit,
        NoSubgraphF,
        ClusterGraph,
    };

    Tag tag = Tag::AllGraphs;
    Graph f;  // forbidden weak subgraph, NoSubgraphF only (v(F) <= 6)

    bool eval(const Graph& g) const;
    std::string name() const;

    static ClassPredicate all();
    static ClassPredicate c5free();
    static ClassPredicate perfect();
    static ClassPredicate gensplit();
    static ClassPredicate cluster();
    static ClassPredicate no_subgraph(const Graph& f);
    // c5free | perfect | gensplit | cluster | all | nosub:k3 (and k4..k6, p3, p4, c4, c5)
    static ClassPredicate parse(const std::string& name);
};

}  // namespace c5census
