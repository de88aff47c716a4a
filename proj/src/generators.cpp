#include "c5census/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "c5census/entropy.hpp"
#include "c5census/rng.hpp"

namespace c5census {

namespace {

long long bipartite_slots(int n) {
    long long a = (n + 1) / 2;
    return a * (n - a);
}

// Choose m of the given slots uniformly (partial Fisher-Yates), add them.
void add_random_slots(GraphBuilder& b, std::vector<std::pair<int, int>>& slots, long long m,
                      SplitMix64& rng) {
    for (long long i = 0; i < m; ++i) {
        std::uint64_t j = i + rng.below(slots.size() - i);
        std::swap(slots[i], slots[j]);
        b.add_edge(slots[i].first, slots[i].second);
    }
}

void check_nm(int n, long long m) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("sampler: n must be in 1..64");
    if (m < 0 || m > pair_count(n)) throw std::invalid_argument("sampler: m out of range");
}

}  // namespace

Graph bipartite_split_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream) {
    check_nm(n, m);
    int a = (n + 1) / 2;
    if (m > bipartite_slots(n))
        throw std::invalid_argument("bipartite_split_sample: m exceeds the cross slot count");
    GraphBuilder b(n);
    std::vector<std::pair<int, int>> slots;
    slots.reserve(bipartite_slots(n));
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j) slots.emplace_back(i, j);
    SplitMix64 rng(seed, stream);
    add_random_slots(b, slots, m, rng);
    return b.seal();
}

KPartitePlan plan_kpartite(int n, long long m) {
    check_nm(n, m);
    long long window_centre = static_cast<long long>(n) * n / 8;
    int v1 = (n + 1) / 2;
    int rest = n - v1;
    for (int k = 2; rest - k + 2 >= 1; ++k) {
        KPartitePlan p;
        p.k = k;
        p.v1 = v1;
        p.v2 = rest - k + 2;
        long long kk = k - 2;
        p.scaffold = kk * p.v2 + kk * (kk - 1) / 2;  // V2-to-singletons + singleton pairs
        p.x = m - p.scaffold;
        if (p.x >= window_centre - n && p.x <= window_centre + n &&
            p.x <= static_cast<long long>(v1) * rest && p.x >= 0)
            return p;
    }
    throw std::invalid_argument("plan_kpartite: no feasible k for this (n, m)");
}

Graph kpartite_split_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream) {
    KPartitePlan p = plan_kpartite(n, m);
    GraphBuilder b(n);
    // labels: V1 = [0, v1), V2 = [v1, v1+v2), singletons above
    int v2_begin = p.v1, v2_end = p.v1 + p.v2;
    for (int s = v2_end; s < n; ++s) {
        for (int u = v2_begin; u < v2_end; ++u) b.add_edge(u, s);
        for (int t = s + 1; t < n; ++t) b.add_edge(s, t);
    }
    std::vector<std::pair<int, int>> slots;
    slots.reserve(static_cast<std::size_t>(p.v1) * (n - p.v1));
    for (int i = 0; i < p.v1; ++i)
        for (int j = p.v1; j < n; ++j) slots.emplace_back(i, j);
    SplitMix64 rng(seed, stream);
    add_random_slots(b, slots, p.x, rng);
    return b.seal();
}

Graph complement_high_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream) {
    check_nm(n, m);
    long long total = pair_count(n);
    if (2 * m <= total)
        throw std::invalid_argument("complement_high_sample: need m > C(n,2)/2");
    long long mc = total - m;
    Graph low = 4 * mc <= total ? bipartite_split_sample(n, mc, seed, stream)
                                : kpartite_split_sample(n, mc, seed, stream);
    return complement(low);
}

Graph gnm_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream) {
    check_nm(n, m);
    long long total = pair_count(n);
    std::vector<long long> ranks(total);
    for (long long r = 0; r < total; ++r) ranks[r] = r;
    SplitMix64 rng(seed, stream);
    GraphBuilder b(n);
    for (long long i = 0; i < m; ++i) {
        std::uint64_t j = i + rng.below(total - i);
        std::swap(ranks[i], ranks[j]);
        auto [u, v] = edge_unrank(n, ranks[i]);
        b.add_edge(u, v);
    }
    return b.seal();
}

SplitRegime split_regime(int n, long long m) {
    long long total = pair_count(n);
    if (2 * m > total) return SplitRegime::ComplementHigh;
    if (4 * m <= total) return SplitRegime::Bipartite;  // c <= 1/4
    return SplitRegime::KPartite;
}

Graph split_sample(int n, long long m, std::uint64_t seed, std::uint64_t stream) {
    switch (split_regime(n, m)) {
        case SplitRegime::Bipartite: return bipartite_split_sample(n, m, seed, stream);
        case SplitRegime::KPartite: return kpartite_split_sample(n, m, seed, stream);
        case SplitRegime::ComplementHigh: return complement_high_sample(n, m, seed, stream);
    }
    throw std::logic_error("unreachable");
}

double split_family_log_count(int n, long long m) {
    check_nm(n, m);
    long long total = pair_count(n);
    switch (split_regime(n, m)) {
        case SplitRegime::ComplementHigh: return split_family_log_count(n, total - m);
        case SplitRegime::Bipartite: return log2_binomial(bipartite_slots(n), m);
        case SplitRegime::KPartite: {
            KPartitePlan p = plan_kpartite(n, m);
            return log2_binomial(static_cast<long long>(p.v1) * (n - p.v1), p.x);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace c5census
