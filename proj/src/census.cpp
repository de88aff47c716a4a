#include "c5census/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <thread>

#include "c5census/entropy.hpp"
#include "c5census/generators.hpp"

namespace c5census {

namespace {

using u64 = std::uint64_t;
constexpr unsigned long long kSaturated = ~0ULL;

// ---- saturating binomial table for colex ranking --------------------------

struct BinTable {
    long long N, m;
    std::vector<unsigned long long> c;  // C[v][i], i in 0..m

    BinTable(long long N_, long long m_) : N(N_), m(m_), c((N + 1) * (m + 1), 0) {
        for (long long v = 0; v <= N; ++v) {
            at(v, 0) = 1;
            for (long long i = 1; i <= std::min(v, m); ++i) {
                unsigned long long a = at(v - 1, i - 1), b = at(v - 1, i);
                at(v, i) = (a == kSaturated || b == kSaturated || a + b < a) ? kSaturated : a + b;
            }
        }
    }
    unsigned long long& at(long long v, long long i) { return c[v * (m + 1) + i]; }
    unsigned long long get(long long v, long long i) const {
        return i < 0 || i > m || v < i ? (i == 0 ? 1 : 0) : c[v * (m + 1) + i];
    }
};

// ---- colex iteration over m-subsets of [N] --------------------------------

struct ColexIter {
    const BinTable& bt;
    long long N, m;
    std::vector<long long> a;  // ascending slot list

    ColexIter(const BinTable& b, long long N_, long long m_) : bt(b), N(N_), m(m_), a(m_) {}

    void load(unsigned long long rank) {
        long long v = N - 1;
        for (long long i = m; i >= 1; --i) {
            while (bt.get(v, i) > rank) --v;
            a[i - 1] = v;
            rank -= bt.get(v, i);
            --v;
        }
    }

    // Advance to the colex successor; removed/added report toggled slots.
    void next(std::vector<long long>& removed, std::vector<long long>& added) {
        removed.clear();
        added.clear();
        long long i = 0;
        while (i + 1 < m && a[i] + 1 == a[i + 1]) ++i;
        // a[0..i] is the contiguous run base..base+i; it becomes 0..i-1, base+i+1
        long long base = a[i] - i;
        for (long long j = 0; j <= i; ++j) {
            long long old_v = base + j;
            bool survives = old_v < i;  // stays as one of 0..i-1
            if (!survives) removed.push_back(old_v);
        }
        for (long long j = 0; j < i; ++j)
            if (j < base) added.push_back(j);
        added.push_back(a[i] + 1);
        a[i] += 1;
        for (long long j = 0; j < i; ++j) a[j] = j;
    }
};

// ---- predicate helpers on raw adjacency rows ------------------------------

bool mask_connected(const u64* adj, u64 mask) {
    int v0 = vs_first(mask);
    u64 seen = vs_bit(v0), frontier = seen;
    while (frontier) {
        u64 nxt = 0;
        while (frontier) {
            int v = vs_first(frontier);
            frontier &= frontier - 1;
            nxt |= adj[v] & mask & ~seen;
        }
        seen |= nxt;
        frontier = nxt;
    }
    return seen == mask;
}

// An L-set induces a cycle iff every inner degree is 2 and (for L >= 6,
// where C3+C4 style unions exist) it is connected.
bool set_induces_cycle(const u64* adj, u64 mask, int L) {
    for (u64 it = mask; it; it &= it - 1) {
        if (__builtin_popcountll(adj[vs_first(it)] & mask) != 2) return false;
    }
    return L == 5 || mask_connected(adj, mask);
}

// Enumerate k-subsets of the pool mask, unioned with req; stop early when
// the callback returns true.
template <typename F>
bool for_subsets(u64 pool, int k, u64 req, F&& f) {
    int verts[kMaxVertices];
    int np = 0;
    for (u64 it = pool; it; it &= it - 1) verts[np++] = vs_first(it);
    if (k > np) return false;
    int idx[kMaxVertices];
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        u64 mask = req;
        for (int i = 0; i < k; ++i) mask |= vs_bit(verts[idx[i]]);
        if (f(mask)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == np - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool find_cycle_all(const u64* adj, int n, int L, u64* witness) {
    return for_subsets(vs_all(n), L, 0, [&](u64 mask) {
        if (set_induces_cycle(adj, mask, L)) {
            *witness = mask;
            return true;
        }
        return false;
    });
}

bool find_cycle_through_pair(const u64* adj, int n, int L, int u, int v, u64* witness) {
    u64 req = vs_bit(u) | vs_bit(v);
    return for_subsets(vs_all(n) & ~req, L - 2, req, [&](u64 mask) {
        if (set_induces_cycle(adj, mask, L)) {
            *witness = mask;
            return true;
        }
        return false;
    });
}

bool cluster_check_raw(const u64* adj, int n) {
    for (int v = 0; v < n; ++v) {
        u64 closed = adj[v] | vs_bit(v);
        u64 nb = adj[v];
        while (nb) {
            int u = vs_first(nb);
            nb &= nb - 1;
            if ((adj[u] | vs_bit(u)) != closed) return false;
        }
    }
    return true;
}

struct Edge {
    int u, v;
};

// ---- incremental predicates ------------------------------------------------

struct AdjPair {
    const u64* adj;
    const u64* cadj;
    int n;
};

class IncPredicate {
public:
    virtual ~IncPredicate() = default;
    virtual bool full(const AdjPair& g) = 0;
    virtual bool step(const AdjPair& g, const std::vector<Edge>& removed,
                      const std::vector<Edge>& added) = 0;
};

class IncAll final : public IncPredicate {
public:
    bool full(const AdjPair&) override { return true; }
    bool step(const AdjPair&, const std::vector<Edge>&, const std::vector<Edge>&) override {
        return true;
    }
};

bool pair_inside(const std::vector<Edge>& es, u64 mask) {
    for (const Edge& e : es)
        if (vs_contains(mask, e.u) && vs_contains(mask, e.v)) return true;
    return false;
}

// Witness caching: a cached induced C5 on W stays valid while no toggled
// pair lands inside W; a C5 born from a toggle must contain that pair.
class IncC5Free final : public IncPredicate {
public:
    bool full(const AdjPair& g) override {
        has_ = find_cycle_all(g.adj, g.n, 5, &witness_);
        return !has_;
    }
    bool step(const AdjPair& g, const std::vector<Edge>& removed,
              const std::vector<Edge>& added) override {
        if (has_) {
            if (!pair_inside(removed, witness_) && !pair_inside(added, witness_)) return false;
            return full(g);
        }
        for (const Edge& e : removed)
            if (find_cycle_through_pair(g.adj, g.n, 5, e.u, e.v, &witness_)) {
                has_ = true;
                return false;
            }
        for (const Edge& e : added)
            if (find_cycle_through_pair(g.adj, g.n, 5, e.u, e.v, &witness_)) {
                has_ = true;
                return false;
            }
        return true;
    }

private:
    bool has_ = false;
    u64 witness_ = 0;
};

// Same scheme for odd holes in G and its complement; a toggle flips the
// same pair in both graphs, so one witness mask rule covers both sides.
class IncPerfect final : public IncPredicate {
public:
    bool full(const AdjPair& g) override {
        for (int L = 5; L <= g.n; L += 2) {
            if (find_cycle_all(g.adj, g.n, L, &witness_) ||
                find_cycle_all(g.cadj, g.n, L, &witness_)) {
                has_ = true;
                return false;
            }
        }
        has_ = false;
        return true;
    }
    bool step(const AdjPair& g, const std::vector<Edge>& removed,
              const std::vector<Edge>& added) override {
        if (has_) {
            if (!pair_inside(removed, witness_) && !pair_inside(added, witness_)) return false;
            return full(g);
        }
        auto through = [&](const Edge& e) {
            for (int L = 5; L <= g.n; L += 2) {
                if (find_cycle_through_pair(g.adj, g.n, L, e.u, e.v, &witness_) ||
                    find_cycle_through_pair(g.cadj, g.n, L, e.u, e.v, &witness_))
                    return true;
            }
            return false;
        };
        for (const Edge& e : removed)
            if (through(e)) {
                has_ = true;
                return false;
            }
        for (const Edge& e : added)
            if (through(e)) {
                has_ = true;
                return false;
            }
        return true;
    }

private:
    bool has_ = false;
    u64 witness_ = 0;
};

class IncCluster final : public IncPredicate {
public:
    bool full(const AdjPair& g) override { return cluster_check_raw(g.adj, g.n); }
    bool step(const AdjPair& g, const std::vector<Edge>&, const std::vector<Edge>&) override {
        return full(g);
    }
};

class IncGensplit final : public IncPredicate {
public:
    bool full(const AdjPair& g) override {
        return is_generalised_split(Graph::from_adjacency(g.n, g.adj));
    }
    bool step(const AdjPair& g, const std::vector<Edge>&, const std::vector<Edge>&) override {
        return full(g);
    }
};

// Weak-subgraph state is monotone: removals can only destroy the cached
// witness, additions can only create new copies.
class IncNoSubgraph final : public IncPredicate {
public:
    explicit IncNoSubgraph(const Graph& f) : f_(f) {
        int k = f_.n();
        for (int i = 0; i < k; ++i) order_[i] = i;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (f_.degree(order_[j]) > f_.degree(order_[i])) std::swap(order_[i], order_[j]);
    }

    bool full(const AdjPair& g) override {
        has_ = search(g, 0, 0);
        if (has_) record_witness();
        return !has_;
    }
    bool step(const AdjPair& g, const std::vector<Edge>& removed,
              const std::vector<Edge>& added) override {
        if (has_) {
            bool touched = false;
            for (const Edge& e : removed)
                for (auto [a, b] : witness_edges_)
                    if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) touched = true;
            if (!touched) return false;
            return full(g);
        }
        if (!added.empty()) return full(g);
        return true;
    }

private:
    bool search(const AdjPair& g, int depth, u64 used) {
        if (depth == f_.n()) return true;
        int fv = order_[depth];
        for (int gv = 0; gv < g.n; ++gv) {
            if (vs_contains(used, gv)) continue;
            if (__builtin_popcountll(g.adj[gv]) < f_.degree(fv)) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j)
                if (f_.adjacent(fv, order_[j]) && !vs_contains(g.adj[gv], image_[j])) ok = false;
            if (!ok) continue;
            image_[depth] = gv;
            if (search(g, depth + 1, used | vs_bit(gv))) return true;
        }
        return false;
    }
    void record_witness() {
        witness_edges_.clear();
        for (int i = 0; i < f_.n(); ++i)
            for (int j = i + 1; j < f_.n(); ++j)
                if (f_.adjacent(order_[i], order_[j]))
                    witness_edges_.push_back({image_[i], image_[j]});
    }

    Graph f_;
    int order_[6] = {};
    int image_[6] = {};
    bool has_ = false;
    std::vector<std::pair<int, int>> witness_edges_;
};

std::unique_ptr<IncPredicate> make_inc(const ClassPredicate& p) {
    using Tag = ClassPredicate::Tag;
    switch (p.tag) {
        case Tag::AllGraphs: return std::make_unique<IncAll>();
        case Tag::InducedC5Free: return std::make_unique<IncC5Free>();
        case Tag::Perfect: return std::make_unique<IncPerfect>();
        case Tag::GeneralisedSplit: return std::make_unique<IncGensplit>();
        case Tag::ClusterGraph: return std::make_unique<IncCluster>();
        case Tag::NoSubgraphF: return std::make_unique<IncNoSubgraph>(p.f);
    }
    throw std::logic_error("unreachable");
}

// ---- exact census worker ---------------------------------------------------

struct EdgeSlots {
    std::vector<Edge> by_rank;
    explicit EdgeSlots(int n) {
        by_rank.reserve(pair_count(n));
        for (long long r = 0; r < pair_count(n); ++r) {
            auto [u, v] = edge_unrank(n, r);
            by_rank.push_back({u, v});
        }
    }
};

class CensusWorker {
public:
    CensusWorker(int n, long long m, const BinTable& bt, const EdgeSlots& slots,
                 const ClassPredicate& pred)
        : n_(n), slots_(slots), iter_(bt, pair_count(n), m), pred_(make_inc(pred)) {}

    unsigned long long run_chunk(unsigned long long lo, unsigned long long hi) {
        iter_.load(lo);
        rebuild();
        AdjPair g{adj_, cadj_, n_};
        unsigned long long count = pred_->full(g) ? 1 : 0;
        for (unsigned long long r = lo + 1; r < hi; ++r) {
            iter_.next(removed_slots_, added_slots_);
            removed_.clear();
            added_.clear();
            for (long long s : removed_slots_) {
                Edge e = slots_.by_rank[s];
                toggle_off(e);
                removed_.push_back(e);
            }
            for (long long s : added_slots_) {
                Edge e = slots_.by_rank[s];
                toggle_on(e);
                added_.push_back(e);
            }
            if (pred_->step(g, removed_, added_)) ++count;
        }
        return count;
    }

private:
    void rebuild() {
        std::fill(adj_, adj_ + n_, 0);
        for (int v = 0; v < n_; ++v) cadj_[v] = vs_all(n_) & ~vs_bit(v);
        for (long long s : iter_.a) toggle_on(slots_.by_rank[s]);
    }
    void toggle_on(Edge e) {
        adj_[e.u] |= vs_bit(e.v);
        adj_[e.v] |= vs_bit(e.u);
        cadj_[e.u] &= ~vs_bit(e.v);
        cadj_[e.v] &= ~vs_bit(e.u);
    }
    void toggle_off(Edge e) {
        adj_[e.u] &= ~vs_bit(e.v);
        adj_[e.v] &= ~vs_bit(e.u);
        cadj_[e.u] |= vs_bit(e.v);
        cadj_[e.v] |= vs_bit(e.u);
    }

    int n_;
    const EdgeSlots& slots_;
    ColexIter iter_;
    std::unique_ptr<IncPredicate> pred_;
    u64 adj_[kMaxVertices] = {};
    u64 cadj_[kMaxVertices] = {};
    std::vector<long long> removed_slots_, added_slots_;
    std::vector<Edge> removed_, added_;
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void check_census_args(int n, long long m) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("census: n must be in 1..64");
    if (m < 0 || m > pair_count(n)) throw std::invalid_argument("census: m out of range");
}

void fill_exponents(CensusResult& r) {
    if (r.count == 0) {
        r.log2_count = -std::numeric_limits<double>::infinity();
        r.exponent = -std::numeric_limits<double>::infinity();
    } else {
        r.log2_count = big_log2(r.count);
        r.exponent = r.log2_count / static_cast<double>(pair_count(r.n));
    }
}

}  // namespace

CensusResult exact_census(int n, long long m, const ClassPredicate& pred, int threads,
                          bool force) {
    check_census_args(n, m);
    auto t0 = std::chrono::steady_clock::now();

    const long long N = pair_count(n);
    BigInt total = big_binomial(N, m);
    if (!force && total > BigInt(static_cast<double>(kCensusBudget)))
        throw BudgetError("exact census budget exceeded: C(" + std::to_string(N) + "," +
                          std::to_string(m) + ") = " + total.get_str() +
                          " > 1e10 (use force to override)");
    if (mpz_sizeinbase(total.get_mpz_t(), 2) > 62)
        throw BudgetError("exact census: subset ranks exceed 62 bits even for forced runs");

    const unsigned long long T = mpz_get_ui(total.get_mpz_t());
    const BinTable bt(N, m);
    const EdgeSlots slots(n);

    const unsigned long long kChunk = 1 << 16;
    const unsigned long long nchunks = T == 0 ? 0 : (T + kChunk - 1) / kChunk;
    std::vector<unsigned long> chunk_counts(nchunks, 0);
    std::atomic<unsigned long long> next{0};

    int nthreads = resolve_threads(threads);
    if (nchunks < static_cast<unsigned long long>(nthreads))
        nthreads = std::max(1, static_cast<int>(nchunks));
    auto work = [&]() {
        CensusWorker w(n, m, bt, slots, pred);
        for (;;) {
            unsigned long long c = next.fetch_add(1);
            if (c >= nchunks) return;
            unsigned long long lo = c * kChunk;
            unsigned long long hi = std::min(T, lo + kChunk);
            chunk_counts[c] = static_cast<unsigned long>(w.run_chunk(lo, hi));
        }
    };
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    CensusResult r;
    r.n = n;
    r.m = m;
    r.predicate = pred.name();
    r.mode = CensusMode::Exact;
    r.total = total;
    BigInt count = 0;
    for (unsigned long c : chunk_counts) count += c;
    r.count = count;
    r.threads_used = nthreads;
    fill_exponents(r);
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CensusResult monte_carlo_census(int n, long long m, const ClassPredicate& pred,
                                long long samples, std::uint64_t seed, int threads) {
    check_census_args(n, m);
    if (samples < 1) throw std::invalid_argument("monte_carlo_census: samples >= 1");
    auto t0 = std::chrono::steady_clock::now();

    int nthreads = resolve_threads(threads);
    std::atomic<long long> next{0};
    std::vector<long long> hits_per_thread(nthreads, 0);
    const long long block = 1024;
    auto work = [&](int tid) {
        long long local = 0;
        for (;;) {
            long long lo = next.fetch_add(block);
            if (lo >= samples) break;
            long long hi = std::min(samples, lo + block);
            for (long long i = lo; i < hi; ++i) {
                Graph g = gnm_sample(n, m, seed, static_cast<std::uint64_t>(i));
                if (pred.eval(g)) ++local;
            }
        }
        hits_per_thread[tid] = local;
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    long long hits = 0;
    for (long long h : hits_per_thread) hits += h;

    CensusResult r;
    r.n = n;
    r.m = m;
    r.predicate = pred.name();
    r.mode = CensusMode::MonteCarlo;
    r.samples = samples;
    r.hits = hits;
    r.seed = seed;
    r.threads_used = nthreads;
    r.total = big_binomial(pair_count(n), m);

    const double N = static_cast<double>(samples);
    r.p_hat = static_cast<double>(hits) / N;
    const double z = 1.959963984540054;  // 95% two-sided normal quantile
    double denom = 1.0 + z * z / N;
    double centre = r.p_hat + z * z / (2.0 * N);
    double hw = z * std::sqrt(r.p_hat * (1.0 - r.p_hat) / N + z * z / (4.0 * N * N));
    r.ci_lo = std::max(0.0, (centre - hw) / denom);
    r.ci_hi = std::min(1.0, (centre + hw) / denom);

    // rounded point estimate of the count
    BigInt est = r.total * static_cast<unsigned long>(hits);
    est += static_cast<unsigned long>(samples / 2);
    est /= static_cast<unsigned long>(samples);
    r.count = est;
    if (hits == 0) {
        r.log2_count = -std::numeric_limits<double>::infinity();
        r.exponent = r.log2_count;
    } else {
        r.log2_count = big_log2(r.total) + std::log2(static_cast<double>(hits)) -
                       std::log2(static_cast<double>(samples));
        r.exponent = r.log2_count / static_cast<double>(pair_count(n));
    }
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

long long edges_for_density(int n, double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("edges_for_density: c outside [0,1]");
    // nearbyint under the default FP environment rounds ties to even
    return static_cast<long long>(std::nearbyint(c * static_cast<double>(pair_count(n))));
}

std::vector<CurveRow> exponent_curve(const std::vector<int>& n_list,
                                     const std::vector<double>& c_list,
                                     const ClassPredicate& pred, CensusMode mode,
                                     long long samples, std::uint64_t seed, int threads,
                                     bool force) {
    std::vector<CurveRow> rows;
    for (int n : n_list) {
        for (double c : c_list) {
            CurveRow row;
            row.n = n;
            row.c_requested = c;
            row.m = edges_for_density(n, c);
            row.result = mode == CensusMode::Exact
                             ? exact_census(n, row.m, pred, threads, force)
                             : monte_carlo_census(n, row.m, pred, samples, seed, threads);
            row.h_ref = (c > 0.0 && c < 1.0) ? h_exponent(c) : 0.0;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

CensusResult subgraph_census(int n, long long m, const Graph& f, int threads, bool force) {
    return exact_census(n, m, ClassPredicate::no_subgraph(f), threads, force);
}

DangerousPairResult dangerous_pair_probability(TripleKind k1, TripleKind k2, const Frac& p) {
    if (p.num == 0 || p.num >= p.den)
        throw std::invalid_argument("dangerous_pair_probability: need 0 < p < 1");

    auto side_edges = [](TripleKind k, int base) {
        std::vector<std::pair<int, int>> es;
        es.push_back({base + 0, base + 1});
        if (k == TripleKind::P3) es.push_back({base + 1, base + 2});
        return es;
    };

    u64 fixed_adj[6] = {};
    auto add = [&](int u, int v) {
        fixed_adj[u] |= vs_bit(v);
        fixed_adj[v] |= vs_bit(u);
    };
    for (auto [u, v] : side_edges(k1, 0)) add(u, v);
    for (auto [u, v] : side_edges(k2, 3)) add(u, v);

    const std::pair<int, int> cross[9] = {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                          {1, 5}, {2, 3}, {2, 4}, {2, 5}};

    long long ne[10] = {};
    for (int s = 0; s < 512; ++s) {
        u64 adj[6];
        std::copy(fixed_adj, fixed_adj + 6, adj);
        for (int b = 0; b < 9; ++b)
            if (s >> b & 1) {
                adj[cross[b].first] |= vs_bit(cross[b].second);
                adj[cross[b].second] |= vs_bit(cross[b].first);
            }
        u64 w;
        if (find_cycle_all(adj, 6, 5, &w)) ne[__builtin_popcount(static_cast<unsigned>(s))] += 1;
    }

    DangerousPairResult res;
    res.kind1 = k1;
    res.kind2 = k2;
    res.p = p;
    Frac q(0, 1);
    for (int e = 0; e <= 9; ++e) {
        if (ne[e] == 0) continue;
        q = q + Frac(static_cast<std::uint64_t>(ne[e]), 1) * pow_weight(p, e, 9 - e);
    }
    res.q_exact = q;
    res.lower_bound = pow_weight(p, 4, 4);
    return res;
}

}  // namespace c5census
