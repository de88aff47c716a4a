#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <vector>

#include "c5census/graph.hpp"

namespace c5census {

// The packing experiments run on instances beyond the 64-vertex Graph cap,
// so this module works on its own two-word rows; Graph values convert.
class WideGraph {
public:
    static constexpr int kCap = 128;
    using Row = std::bitset<kCap>;

    explicit WideGraph(int n);
    WideGraph(const Graph& g);  // NOLINT: deliberate implicit widening

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return rows_[u][v]; }
    const Row& neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(rows_[v].count()); }
    long long edge_count() const;
    void add_edge(int u, int v);
    WideGraph complemented() const;

    // Uniform m-subset of edge slots; same keyed-RNG discipline as the
    // 64-vertex samplers.
    static WideGraph gnm(int n, long long m, std::uint64_t seed, std::uint64_t stream = 0);

private:
    int n_;
    std::vector<Row> rows_;
};

// Largest clique of G, exact; branch and bound with a greedy colouring
// bound.
VertexSet max_clique(const Graph& g);
std::vector<int> max_clique_wide(const WideGraph& g);

int clique_number(const Graph& g);
int independence_number(const Graph& g);

struct HomWitness {
    int size = 0;
    std::vector<int> set;
    bool is_clique = false;
};

// hom(G) = max(omega, alpha), with a witness set.
HomWitness hom_number(const Graph& g);
HomWitness hom_number(const WideGraph& g);

struct PackingCertificate {
    enum class Outcome { P3Packing, AntiP3Packing, HomogeneousSet };

    Outcome outcome = Outcome::P3Packing;
    // P3 triple (a,b,c): path a-b-c (edges ab, bc; ac absent).
    // Anti-P3 triple (a,b,c): edge ab; c isolated from both.
    std::vector<std::array<int, 3>> triples;
    std::vector<int> hom_set;
    bool hom_is_clique = false;
    int target = 0;  // ceil(n/6)
};

// Constructive trichotomy: a disjoint induced-P3 packing of size >=
// ceil(n/6), or an anti-P3 packing of that size, or a homogeneous set
// larger than ceil(n/6). n >= 6.
PackingCertificate p3_packing_trichotomy(const WideGraph& g);
PackingCertificate p3_packing_trichotomy(const Graph& g);

// Re-derives every claimed property of the certificate from G.
bool verify_certificate(const WideGraph& g, const PackingCertificate& cert);
bool verify_certificate(const Graph& g, const PackingCertificate& cert);

struct HomDistribution {
    int n = 0;
    long long m = 0;
    long long samples = 0;
    long long accepted = 0;  // samples passing the induced-C5-free filter
    std::uint64_t seed = 0;
    // histogram over hom values 0..n
    std::vector<long long> counts_all;
    std::vector<long long> counts_conditional;

    double mean_all() const;
    double mean_conditional() const;
};

// Empirical distribution of hom(G)/n over G(n,m) samples, overall and
// conditioned on induced-C5-freeness by rejection. Aborts when the
// acceptance rate drops below 1e-4. n <= 20.
HomDistribution hom_distribution_experiment(int n, long long m, long long samples,
                                            std::uint64_t seed, int threads = 1);

}  // namespace c5census
