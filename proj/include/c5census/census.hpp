#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "c5census/bigint.hpp"
#include "c5census/graph.hpp"
#include "c5census/rational.hpp"
#include "c5census/recognizers.hpp"

namespace c5census {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CensusMode { Exact, MonteCarlo };

struct CensusResult {
    int n = 0;
    long long m = 0;
    std::string predicate;
    CensusMode mode = CensusMode::Exact;

    BigInt count;            // exact count, or rounded point estimate in MC mode
    BigInt total;            // C(C(n,2), m)
    double log2_count = 0;   // -inf when count == 0
    double exponent = 0;     // log2_count / C(n,2)

    // Monte Carlo fields
    long long samples = 0;
    long long hits = 0;
    std::uint64_t seed = 0;
    double p_hat = 0;
    double ci_lo = 0, ci_hi = 0;  // Wilson 95% interval for the hit fraction

    int threads_used = 1;
    double wall_time_s = 0;
};

// Jobs with C(C(n,2), m) above this refuse to run unless forced.
inline constexpr double kCensusBudget = 1e10;

// Exact count of labeled m-edge graphs on [n] satisfying the predicate.
// Iterates edge subsets in colex order, data-parallel over contiguous rank
// chunks; the result is independent of the thread count.
CensusResult exact_census(int n, long long m, const ClassPredicate& pred, int threads = 0,
                          bool force = false);

// Fraction of G(n,m) samples passing the predicate, scaled by the total.
// Sample i uses RNG stream i, so the result is thread-count independent.
CensusResult monte_carlo_census(int n, long long m, const ClassPredicate& pred,
                                long long samples, std::uint64_t seed, int threads = 0);

// m = round(c * C(n,2)), ties to even.
long long edges_for_density(int n, double c);

struct CurveRow {
    int n = 0;
    double c_requested = 0;
    long long m = 0;
    CensusResult result;
    double h_ref = 0;  // h(m / C(n,2))
};

std::vector<CurveRow> exponent_curve(const std::vector<int>& n_list,
                                     const std::vector<double>& c_list,
                                     const ClassPredicate& pred, CensusMode mode,
                                     long long samples = 0, std::uint64_t seed = 0,
                                     int threads = 0, bool force = false);

// Census of m-edge graphs with no weak copy of F (v(F) <= 6).
CensusResult subgraph_census(int n, long long m, const Graph& f, int threads = 0,
                             bool force = false);

enum class TripleKind { P3, AntiP3 };

struct DangerousPairResult {
    TripleKind kind1 = TripleKind::P3;
    TripleKind kind2 = TripleKind::P3;
    Frac p;
    Frac q_exact;       // Pr[6-vertex union contains an induced C5]
    Frac lower_bound;   // p^4 (1-p)^4
};

// Exact probability, over all 2^9 cross-edge patterns between two fixed
// 3-vertex graphs, that the union contains an induced C5. Rational in p.
DangerousPairResult dangerous_pair_probability(TripleKind k1, TripleKind k2, const Frac& p);

}  // namespace c5census
