#pragma once

#include <cstdint>

#include "c5census/graph.hpp"

namespace c5census {

// The three split-graph constructions plus the G(n,m) baseline. All
// samplers are pure in (n, m, seed, stream): one canonical scaffold, the
// free edges drawn uniformly via the keyed SplitMix64 generator.

// Scaffold parameters of the k-partite construction for a given (n, m):
// parts of size v1 = ceil(n/2), v2 = floor(n/2) - k + 2 and k-2 singletons,
// complete between the non-first parts, x free edges from part 1.
struct KPartitePlan {
    int k = 0;
    int v1 = 0;
    int v2 = 0;
    long long x = 0;           // free edges between V1 and the rest
    long long scaffold = 0;    // fixed edges of G0
};

// Smallest k >= 2 whose x lands in [n^2/8 - n, n^2/8 + n]; throws when no
// feasible k exists.
KPartitePlan plan_kpartite(int n, long long m);

// Bipartite sides of size ceil(n/2) / floor(n/2), exactly m cross edges.
Graph bipartite_split_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream = 0);

// k-partite construction above, exactly m edges in total.
Graph kpartite_split_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream = 0);

// Complement of the appropriate low-density construction at C(n,2) - m
// edges; requires m > C(n,2)/2.
Graph complement_high_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream = 0);

// Uniform m-subset of the C(n,2) edge slots (partial Fisher-Yates on ranks).
Graph gnm_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream = 0);

// log2 of the number of distinct labeled graphs the construction for
// (n, m) can emit: the free-slot count choose the free-edge count, one
// fixed scaffold. Regimes: bipartite (m <= slots), k-partite, complement.
double split_family_log_count(int n, long long m);

// Regime picker used by the CLI "auto" kind.
enum class SplitRegime { Bipartite, KPartite, ComplementHigh };
SplitRegime split_regime(int n, long long m);
Graph split_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace c5census
