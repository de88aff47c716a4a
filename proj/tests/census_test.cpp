#include <doctest.h>

#include <cmath>

#include "c5census/census.hpp"
#include "c5census/entropy.hpp"
#include "c5census/graph.hpp"
#include "c5census/recognizers.hpp"

using namespace c5census;

TEST_CASE("exact census ground truth at (5,5)") {
    CHECK(exact_census(5, 5, ClassPredicate::all()).count == 252);
    CHECK(exact_census(5, 5, ClassPredicate::c5free()).count == 240);
    CHECK(exact_census(5, 5, ClassPredicate::perfect()).count == 240);
    // frozen from the first full-enumeration oracle run
    CHECK(exact_census(5, 5, ClassPredicate::gensplit()).count == 240);

    CensusResult r = exact_census(5, 5, ClassPredicate::c5free());
    CHECK(r.total == 252);
    CHECK(r.log2_count == doctest::Approx(std::log2(240.0)).epsilon(1e-12));
    CHECK(r.exponent == doctest::Approx(std::log2(240.0) / 10.0).epsilon(1e-12));
    // the exponent never exceeds the all-graphs exponent of the same cell
    CHECK(r.exponent <= log2_binomial(10, 5) / 10.0 + 1e-12);
    CensusResult r68 = exact_census(6, 8, ClassPredicate::c5free());
    CHECK(r68.exponent <= log2_binomial(15, 8) / 15.0 + 1e-12);
}

TEST_CASE("all-graphs census equals the binomial, exhaustively") {
    for (int n = 2; n <= 6; ++n)
        for (long long m = 0; m <= pair_count(n); ++m)
            CHECK(exact_census(n, m, ClassPredicate::all()).count ==
                  big_binomial(pair_count(n), m));
    for (long long m = 0; m <= 21; ++m)
        CHECK(exact_census(7, m, ClassPredicate::all()).count == big_binomial(21, m));
    for (long long m = 0; m <= 28; ++m)
        CHECK(exact_census(8, m, ClassPredicate::all()).count == big_binomial(28, m));
}

TEST_CASE("frozen regression counts at n = 6, 7") {
    CHECK(exact_census(6, 8, ClassPredicate::c5free()).count == 5895);
    CHECK(exact_census(6, 8, ClassPredicate::perfect()).count == 5895);
    CHECK(exact_census(6, 8, ClassPredicate::gensplit()).count == 5895);
    CHECK(exact_census(7, 10, ClassPredicate::c5free()).count == 278502);
    CHECK(exact_census(7, 10, ClassPredicate::perfect()).count == 278502);
}

TEST_CASE("incremental censuses match direct enumeration at every density") {
    // buckets all 2^15 graphs on 6 vertices by edge count, per predicate
    std::vector<long long> c5f(16, 0), per(16, 0), gsp(16, 0), clu(16, 0);
    for (std::uint64_t mask = 0; mask < (1ULL << 15); ++mask) {
        GraphBuilder b(6);
        int m = 0;
        for (long long r = 0; r < 15; ++r)
            if (mask >> r & 1) {
                auto [i, j] = edge_unrank(6, r);
                b.add_edge(i, j);
                ++m;
            }
        Graph g = b.seal();
        if (is_induced_c5_free(g)) ++c5f[m];
        if (is_perfect(g)) ++per[m];
        if (is_generalised_split(g)) ++gsp[m];
        if (is_cluster_graph(g)) ++clu[m];
    }
    for (long long m = 0; m <= 15; ++m) {
        CHECK(exact_census(6, m, ClassPredicate::c5free()).count ==
              static_cast<unsigned long>(c5f[m]));
        CHECK(exact_census(6, m, ClassPredicate::perfect()).count ==
              static_cast<unsigned long>(per[m]));
        CHECK(exact_census(6, m, ClassPredicate::gensplit()).count ==
              static_cast<unsigned long>(gsp[m]));
        CHECK(exact_census(6, m, ClassPredicate::cluster()).count ==
              static_cast<unsigned long>(clu[m]));
    }
}

TEST_CASE("complement duality of the class censuses") {
    for (int n = 4; n <= 6; ++n) {
        long long total = pair_count(n);
        for (long long m = 0; m <= total / 2; ++m) {
            for (auto pred : {ClassPredicate::c5free(), ClassPredicate::perfect(),
                              ClassPredicate::gensplit()}) {
                CHECK(exact_census(n, m, pred).count ==
                      exact_census(n, total - m, pred).count);
            }
        }
    }
}

TEST_CASE("census is independent of the worker count") {
    BigInt one = exact_census(7, 10, ClassPredicate::c5free(), 1).count;
    BigInt eight = exact_census(7, 10, ClassPredicate::c5free(), 8).count;
    CHECK(one == eight);
    CHECK(exact_census(7, 10, ClassPredicate::perfect(), 1).count ==
          exact_census(7, 10, ClassPredicate::perfect(), 5).count);
}

TEST_CASE("cluster census stays consistent with brute force") {
    // every 4-vertex graph: clusters among all m
    int direct = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        GraphBuilder b(4);
        for (long long r = 0; r < 6; ++r)
            if (mask >> r & 1) {
                auto [i, j] = edge_unrank(4, r);
                b.add_edge(i, j);
            }
        if (is_cluster_graph(b.seal())) ++direct;
    }
    BigInt via_census = 0;
    for (long long m = 0; m <= 6; ++m)
        via_census += exact_census(4, m, ClassPredicate::cluster()).count;
    CHECK(via_census == direct);
}

TEST_CASE("subgraph census") {
    // frozen from the full-enumeration oracle: 12 labeled C5s + 60 C4-plus-pendant
    CHECK(subgraph_census(5, 5, Graph::complete(3)).count == 72);
    CHECK(subgraph_census(4, 3, Graph::complete(2)).count == 0);
    CHECK(subgraph_census(4, 0, Graph::complete(2)).count == 1);

    // triangle-free totals on 5 vertices, against direct brute force
    BigInt total = 0;
    for (long long m = 0; m <= 10; ++m)
        total += subgraph_census(5, m, Graph::complete(3)).count;
    int direct = 0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        GraphBuilder b(5);
        for (long long r = 0; r < 10; ++r)
            if (mask >> r & 1) {
                auto [i, j] = edge_unrank(5, r);
                b.add_edge(i, j);
            }
        if (!contains_subgraph(b.seal(), Graph::complete(3))) ++direct;
    }
    CHECK(direct == 388);
    CHECK(total == direct);
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(exact_census(10, 22, ClassPredicate::all()), BudgetError);
    // force works where the rank space still fits
    CHECK(exact_census(5, 5, ClassPredicate::all(), 0, true).count == 252);
}

TEST_CASE("edges_for_density rounds ties to even") {
    CHECK(edges_for_density(5, 0.5) == 5);
    CHECK(edges_for_density(6, 0.5) == 8);    // 7.5 -> 8
    CHECK(edges_for_density(7, 0.5) == 10);   // 10.5 -> 10
    CHECK(edges_for_density(5, 0.25) == 2);   // 2.5 -> 2
    CHECK(edges_for_density(6, 0.25) == 4);   // 3.75 -> 4
    CHECK_THROWS_AS(edges_for_density(6, 1.5), std::invalid_argument);
}

TEST_CASE("monte carlo census agrees with the exact ratio") {
    const long long samples = 100000;
    CensusResult mc = monte_carlo_census(5, 5, ClassPredicate::c5free(), samples, 11);
    double p_true = 240.0 / 252.0;
    double sigma = std::sqrt(p_true * (1 - p_true) / samples);
    CHECK(std::abs(mc.p_hat - p_true) <= 3 * sigma);
    CHECK(mc.ci_lo <= p_true);
    CHECK(p_true <= mc.ci_hi);
    CHECK(mc.mode == CensusMode::MonteCarlo);

    // identical seeds and thread counts give identical results
    CensusResult a = monte_carlo_census(6, 7, ClassPredicate::perfect(), 20000, 3, 1);
    CensusResult b = monte_carlo_census(6, 7, ClassPredicate::perfect(), 20000, 3, 7);
    CHECK(a.hits == b.hits);
}

TEST_CASE("monte carlo of the trivial class is exact") {
    CensusResult mc = monte_carlo_census(6, 7, ClassPredicate::all(), 5000, 1);
    CHECK(mc.hits == mc.samples);
    CHECK(mc.count == mc.total);
    CHECK(mc.p_hat == 1.0);
    // Wilson interval at p_hat = 1 degenerates to [n/(n+z^2), 1]
    const double z = 1.959963984540054, N = 5000;
    CHECK(mc.ci_hi == 1.0);
    CHECK(mc.ci_lo == doctest::Approx(N / (N + z * z)).epsilon(1e-9));
}

TEST_CASE("perfect and C5-free coincide at (5,5), also by sampling") {
    CensusResult a = monte_carlo_census(5, 5, ClassPredicate::perfect(), 100000, 21);
    CensusResult b = monte_carlo_census(5, 5, ClassPredicate::c5free(), 100000, 22);
    CHECK(a.ci_lo <= b.ci_hi);
    CHECK(b.ci_lo <= a.ci_hi);
}

TEST_CASE("exponent curve") {
    auto rows = exponent_curve({5, 6}, {0.5}, ClassPredicate::c5free(), CensusMode::Exact);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].m == 5);
    CHECK(rows[1].m == 8);
    CHECK(rows[0].result.count == 240);
    CHECK(rows[1].result.count == 5895);
    CHECK(rows[0].h_ref == 0.5);

    auto all = exponent_curve({6}, {0.5}, ClassPredicate::all(), CensusMode::Exact);
    CHECK(all[0].result.exponent ==
          doctest::Approx(log2_binomial(15, 8) / 15.0).epsilon(1e-12));
}

TEST_CASE("dangerous pair exact values, frozen from the 512-pattern oracle") {
    using TK = TripleKind;
    auto q = [](TK a, TK b, Frac p) { return dangerous_pair_probability(a, b, p).q_exact; };

    CHECK(q(TK::P3, TK::P3, Frac(1, 2)) == Frac(13, 128));
    CHECK(q(TK::AntiP3, TK::AntiP3, Frac(1, 2)) == Frac(13, 128));
    CHECK(q(TK::P3, TK::AntiP3, Frac(1, 2)) == Frac(7, 128));
    CHECK(q(TK::AntiP3, TK::P3, Frac(1, 2)) == Frac(7, 128));

    CHECK(q(TK::P3, TK::P3, Frac(1, 10)) == Frac(12000069, 250000000));
    CHECK(q(TK::P3, TK::AntiP3, Frac(1, 10)) == Frac(657639, 50000000));
    CHECK(q(TK::AntiP3, TK::AntiP3, Frac(1, 10)) == Frac(153981, 250000000));

    // complement duality: swapping both kinds mirrors p <-> 1-p
    CHECK(q(TK::P3, TK::P3, Frac(9, 10)) == Frac(153981, 250000000));
    CHECK(q(TK::AntiP3, TK::AntiP3, Frac(9, 10)) == Frac(12000069, 250000000));

    DangerousPairResult r = dangerous_pair_probability(TK::P3, TK::P3, Frac(1, 2));
    CHECK(r.lower_bound == Frac(1, 256));
    CHECK(r.lower_bound <= r.q_exact);
}

TEST_CASE("dangerous pair bounds on a coarse grid") {
    using TK = TripleKind;
    for (int i = 1; i <= 19; ++i) {
        Frac p(static_cast<std::uint64_t>(i), 20);
        for (TK a : {TK::P3, TK::AntiP3})
            for (TK b : {TK::P3, TK::AntiP3}) {
                DangerousPairResult r = dangerous_pair_probability(a, b, p);
                CHECK(r.q_exact >= r.lower_bound);
                bool both_anti = a == TK::AntiP3 && b == TK::AntiP3;
                bool both_p3 = a == TK::P3 && b == TK::P3;
                if (!both_anti) CHECK(r.q_exact >= pow_weight(p, 2, 4));
                if (!both_p3) CHECK(r.q_exact >= pow_weight(p, 4, 2));
            }
    }
    CHECK_THROWS_AS(dangerous_pair_probability(TK::P3, TK::P3, Frac(0, 1)),
                    std::invalid_argument);
}
