#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c5census/graph.hpp"

namespace c5census {

enum class EdgeColour : std::int8_t { Absent = -1, White = 0, Grey = 1, Black = 2 };

// Vertex- and edge-coloured reduced graph. Vertex colours are 0 (white) or
// 1 (black); edge colours are white / grey / black, absent pairs failed the
// regularity proxy.
struct ColouredGraph {
    int k = 0;
    std::vector<int> vertex_colour;
    std::vector<std::int8_t> edge;  // k*k matrix of EdgeColour values

    static ColouredGraph make(int k);
    EdgeColour edge_colour(int i, int j) const {
        return static_cast<EdgeColour>(edge[i * k + j]);
    }
    void set_edge(int i, int j, EdgeColour c) {
        edge[i * k + j] = edge[j * k + i] = static_cast<std::int8_t>(c);
    }
};

struct TypeParams {
    double eps = 0.25;       // regular-pair deviation tolerance
    double eps_sub = 0.25;   // subpartition tolerance
    double d = 0.1;          // edge-colour density threshold
    int k_sub = 2;           // subpartition part count
    double mu_proxy = 0.1;   // minimum subpartition part fraction
    int proxy_samples = 64;  // random half-subset trials per pair
    int swap_iters = 200;    // local-swap budget of the vertex heuristic
    std::uint64_t seed = 0;
};

struct TypeDiagnostics {
    struct PairInfo {
        int i = 0, j = 0;          // 1-based block indices
        double density = 0;
        double max_deviation = 0;  // worst half-subset deviation seen
        bool regular = false;
    };
    std::vector<PairInfo> pairs;
    // per block: "sparse-heuristic", "dense-heuristic" or "majority-fallback"
    std::vector<std::string> vertex_method;
};

// Reduced coloured graph of the partition under the sampling proxy for
// epsilon-regularity. Blocks 1..k must be non-empty, of equal size
// >= 2*k_sub; block 0 is the exceptional set. The output is a heuristic
// approximation of a regularity type, never a certified one; the
// diagnostics say which pairs failed the proxy and how each vertex was
// coloured.
std::pair<ColouredGraph, TypeDiagnostics> extract_type(const Graph& g, const Partition& p,
                                                       const TypeParams& params);

std::vector<std::pair<int, int>> grey_edges(const ColouredGraph& r);
bool has_grey_triangle(const ColouredGraph& r);

// Exhaustive backtracking search for a coloured homomorphism F -> R;
// v(F) <= 8 and k <= 12. Returns the vertex map when one exists.
std::optional<std::vector<int>> coloured_homomorphism(const Graph& f, const ColouredGraph& r);

// Validates the three coloured-homomorphism conditions for a given map.
bool check_coloured_homomorphism(const Graph& f, const ColouredGraph& r,
                                 const std::vector<int>& h);

struct GreyTriangleSweep {
    struct Entry {
        std::array<int, 3> vertex_colours{};
        bool exists = false;
        std::vector<int> witness;
    };
    std::array<Entry, 8> entries;
    bool all_exist = false;
};

// C5 into the all-grey triangle, for each of the 8 vertex colourings.
GreyTriangleSweep grey_triangle_c5_sweep();

}  // namespace c5census
