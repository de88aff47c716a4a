// Acceptance suite: one pass/fail line per criterion. Run with no
// arguments for all criteria, or with a single criterion number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "c5census/census.hpp"
#include "c5census/entropy.hpp"
#include "c5census/generators.hpp"
#include "c5census/graph.hpp"
#include "c5census/homsets.hpp"
#include "c5census/recognizers.hpp"
#include "c5census/rng.hpp"
#include "c5census/types.hpp"

using namespace c5census;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "    FAILED: " << what << "\n";
        }
    }
    void note(const std::string& s) { detail << "    " << s << "\n"; }
};

// ---------------------------------------------------------------------------

bool criterion1(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    BigInt all = exact_census(5, 5, ClassPredicate::all(), 1).count;
    BigInt c5f = exact_census(5, 5, ClassPredicate::c5free(), 1).count;
    BigInt per = exact_census(5, 5, ClassPredicate::perfect(), 1).count;
    BigInt gsp = exact_census(5, 5, ClassPredicate::gensplit(), 1).count;
    double dt = seconds_since(t0);
    c.expect(all == 252, "all-graphs count 252, got " + all.get_str());
    c.expect(c5f == 240, "C5-free count 240, got " + c5f.get_str());
    c.expect(per == 240, "perfect count 240, got " + per.get_str());
    c.expect(gsp == 240, "generalised-split count (frozen oracle) 240, got " + gsp.get_str());
    c.expect(gsp <= 240, "generalised-split count <= 240");
    c.expect(dt < 1.0, "single-threaded runtime < 1 s, got " + std::to_string(dt));
    c.note("counts 252 / 240 / 240 / 240 in " + std::to_string(dt) + " s");
    return c.ok;
}

bool criterion2(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n : {5, 6, 7}) {
        for (double dens : {0.25, 0.5}) {
            long long m = edges_for_density(n, dens);
            BigInt s = exact_census(n, m, ClassPredicate::gensplit(), 8).count;
            BigInt p = exact_census(n, m, ClassPredicate::perfect(), 8).count;
            BigInt cc = exact_census(n, m, ClassPredicate::c5free(), 8).count;
            std::ostringstream cell;
            cell << "n=" << n << " c=" << dens << " m=" << m << ": S=" << s.get_str()
                 << " P=" << p.get_str() << " C=" << cc.get_str();
            c.note(cell.str());
            c.expect(s <= p, cell.str() + "  (S <= P)");
            c.expect(p <= cc, cell.str() + "  (P <= C)");
        }
    }
    double dt = seconds_since(t0);
    c.expect(dt < 600.0, "runtime < 10 min, got " + std::to_string(dt));
    return c.ok;
}

bool criterion3(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> ratios;  // log2(count)/log2(total), for the notes
    auto cell = [&](int n, double dens) {
        long long m = edges_for_density(n, dens);
        CensusResult r = exact_census(n, m, ClassPredicate::c5free(), 8);
        std::ostringstream row;
        row << "n=" << n << " m=" << m << " count=" << r.count.get_str()
            << " exponent=" << r.exponent;
        c.note(row.str());
        ratios.push_back(r.log2_count / big_log2(r.total));
        return r.exponent;
    };

    c.note("c = 0.5, h(0.5) = 0.5:");
    std::vector<double> e5;
    for (int n : {5, 6, 7, 8}) e5.push_back(cell(n, 0.5));
    for (double e : e5) c.expect(e > 0.5, "exponent exceeds h(0.5) = 0.5");
    for (std::size_t i = 0; i + 1 < e5.size(); ++i)
        c.expect(e5[i] > e5[i + 1],
                 "exponent strictly decreasing at c=0.5, step " + std::to_string(i + 5) + "->" +
                     std::to_string(i + 6) + " (" + std::to_string(e5[i]) + " vs " +
                     std::to_string(e5[i + 1]) + ")");

    c.note("c = 0.25, h(0.25) = 0.5:");
    std::vector<double> e25;
    for (int n : {5, 6, 7}) e25.push_back(cell(n, 0.25));
    for (double e : e25) c.expect(e > 0.5, "exponent exceeds h(0.25) = 0.5");
    for (std::size_t i = 0; i + 1 < e25.size(); ++i)
        c.expect(e25[i] > e25[i + 1],
                 "exponent strictly decreasing at c=0.25, step " + std::to_string(i + 5) + "->" +
                     std::to_string(i + 6) + " (" + std::to_string(e25[i]) + " vs " +
                     std::to_string(e25[i + 1]) + ")");

    double dt = seconds_since(t0);
    c.expect(dt < 300.0, "n=8 cell within 5 min, total " + std::to_string(dt));
    if (!c.ok) {
        c.note("note: the > h(c) checks hold; the strictly-decreasing checks fail because "
               "log2(count)/C(n,2) grows over n = 5..8 at desk scale (exact counts above)");
        std::ostringstream alt;
        alt << "note: the class/all ratio log2(count)/log2(total) at c=0.5 does fall: ";
        for (std::size_t i = 0; i < 4 && i < ratios.size(); ++i)
            alt << (i ? ", " : "") << ratios[i];
        c.note(alt.str());
    }
    return c.ok;
}

bool criterion4(Check& c) {
    for (int i = 1; i <= 1000; ++i) {
        double x = i / 1001.0;
        if (std::abs(h_exponent(x) - h_exponent(1.0 - x)) > 1e-12) {
            c.expect(false, "h symmetry at c = " + std::to_string(x));
            break;
        }
    }
    for (double b : {0.25, 0.75})
        c.expect(std::abs(h_exponent(b - 1e-9) - h_exponent(b + 1e-9)) <= 1e-12,
                 "h continuity at " + std::to_string(b));

    bool sandwich_ok = true;
    for (long long m = 1; m <= 2000 && sandwich_ok; ++m) {
        BigInt row = 1;
        for (long long k = 0; k <= m; ++k) {
            double lhs = (k == 0 || k == m) ? 0.0 : big_log2(row);
            double rhs = m * binary_entropy(static_cast<double>(k) / m);
            if (lhs > rhs + 1e-9) {
                sandwich_ok = false;
                c.expect(false, "upper sandwich bound at m=" + std::to_string(m) +
                                    " k=" + std::to_string(k));
                break;
            }
            row *= static_cast<unsigned long>(m - k);
            row /= static_cast<unsigned long>(k + 1);
        }
    }
    if (sandwich_ok) c.note("log2 C(m,k) <= m H(k/m) exact for all m <= 2000, all k");

    auto f = [](double x) { return h_exponent(x) - r_rate(x); };
    for (int i = 2; i <= 998; ++i) {
        double c0 = (i - 1) / 1000.0, c1 = i / 1000.0, c2 = (i + 1) / 1000.0;
        if (f(c2) - 2 * f(c1) + f(c0) > 1e-12) {
            c.expect(false, "concavity of h - r at c = " + std::to_string(c1));
            break;
        }
    }

    c.expect(r_rate_exact(Frac(1, 2)) == Frac(1, 18432), "r(1/2) = 1/18432 exactly");
    return c.ok;
}

bool criterion5(Check& c) {
    struct SamplerCase {
        const char* name;
        std::function<Graph(std::uint64_t)> sample;
        long long m;
    };
    std::vector<SamplerCase> cases = {
        {"bipartite n=16 m=32", [](std::uint64_t s) { return bipartite_split_sample(16, 32, s); },
         32},
        {"kpartite n=16 m=48", [](std::uint64_t s) { return kpartite_split_sample(16, 48, s); },
         48},
        {"high n=16 m=90", [](std::uint64_t s) { return complement_high_sample(16, 90, s); },
         90},
    };
    for (const auto& sc : cases) {
        bool all_ok = true;
        for (std::uint64_t seed = 0; seed < 1000 && all_ok; ++seed) {
            Graph g = sc.sample(seed);
            if (g.edge_count() != sc.m) {
                c.expect(false, std::string(sc.name) + ": edge count at seed " +
                                    std::to_string(seed));
                all_ok = false;
            }
            if (!is_generalised_split(g) || !is_perfect(g) || !is_induced_c5_free(g)) {
                c.expect(false, std::string(sc.name) + ": recogniser at seed " +
                                    std::to_string(seed));
                all_ok = false;
            }
        }
        if (all_ok) c.note(std::string(sc.name) + ": 1000 seeds, m exact, all recognisers pass");
    }

    // same seed, same graph, no matter how many threads are sampling
    for (const auto& sc : cases) {
        Graph reference = sc.sample(424242);
        std::vector<Graph> got(8, Graph::empty(1));
        std::vector<std::thread> pool;
        for (int t = 0; t < 8; ++t)
            pool.emplace_back([&, t] { got[t] = sc.sample(424242); });
        for (auto& th : pool) th.join();
        for (int t = 0; t < 8; ++t)
            c.expect(got[t] == reference,
                     std::string(sc.name) + ": reproducibility across threads");
    }
    return c.ok;
}

bool criterion6(Check& c) {
    long long verified = 0, packings = 0, hom_checked = 0, dichotomy_hits = 0;
    for (int n : {12, 30, 60, 120}) {
        for (double p : {0.2, 0.5, 0.8}) {
            long long m = static_cast<long long>(p * pair_count(n));
            for (std::uint64_t seed = 0; seed < 84; ++seed) {
                WideGraph g = WideGraph::gnm(n, m, seed, static_cast<std::uint64_t>(p * 10));
                PackingCertificate cert = p3_packing_trichotomy(g);
                if (!verify_certificate(g, cert)) {
                    c.expect(false, "certificate check at n=" + std::to_string(n) +
                                        " p=" + std::to_string(p) +
                                        " seed=" + std::to_string(seed));
                    return c.ok;
                }
                ++verified;
                if (cert.outcome != PackingCertificate::Outcome::HomogeneousSet) {
                    ++packings;
                    if (static_cast<int>(cert.triples.size()) < (n + 5) / 6)
                        c.expect(false, "packing below ceil(n/6) at n=" + std::to_string(n));
                }
                // exact hom is affordable away from the dense 120-vertex extremes
                bool hom_cheap = p == 0.5 || n <= 60;
                if (hom_cheap) {
                    ++hom_checked;
                    if (6 * hom_number(g).size <= n) {
                        ++dichotomy_hits;
                        if (cert.outcome == PackingCertificate::Outcome::HomogeneousSet)
                            c.expect(false, "hom <= n/6 but no packing at n=" +
                                                std::to_string(n) + " seed=" +
                                                std::to_string(seed));
                    }
                }
            }
        }
    }
    c.note(std::to_string(verified) + " certificates verified, " + std::to_string(packings) +
           " packings, " + std::to_string(hom_checked) + " instances with exact hom, " +
           std::to_string(dichotomy_hits) + " of them with hom <= n/6 (all packed)");
    c.expect(verified >= 1000, "at least 1000 seeded instances");
    c.expect(dichotomy_hits > 0, "the dichotomy precondition occurred at least once");
    return c.ok;
}

bool criterion7(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    using TK = TripleKind;
    for (int j = 1; j <= 99; ++j) {
        Frac p(static_cast<std::uint64_t>(j), 100);
        for (TK a : {TK::P3, TK::AntiP3})
            for (TK b : {TK::P3, TK::AntiP3}) {
                DangerousPairResult r = dangerous_pair_probability(a, b, p);
                bool both_anti = a == TK::AntiP3 && b == TK::AntiP3;
                bool both_p3 = a == TK::P3 && b == TK::P3;
                if (!(r.q_exact >= r.lower_bound))
                    c.expect(false, "q >= p^4(1-p)^4 at p=" + p.str());
                if (!both_anti && !(r.q_exact >= pow_weight(p, 2, 4)))
                    c.expect(false, "q >= p^2(1-p)^4 at p=" + p.str());
                if (!both_p3 && !(r.q_exact >= pow_weight(p, 4, 2)))
                    c.expect(false, "q >= p^4(1-p)^2 at p=" + p.str());
            }
    }
    double dt = seconds_since(t0);
    c.expect(dt < 1.0, "runtime < 1 s, got " + std::to_string(dt));
    c.note("all three bound families hold on the 99-point grid in " + std::to_string(dt) + " s");
    return c.ok;
}

bool criterion8(Check& c) {
    GreyTriangleSweep sweep = grey_triangle_c5_sweep();
    Graph c5 = Graph::cycle(5);
    for (const auto& e : sweep.entries) {
        std::string label = "colouring (" + std::to_string(e.vertex_colours[0]) + "," +
                            std::to_string(e.vertex_colours[1]) + "," +
                            std::to_string(e.vertex_colours[2]) + ")";
        c.expect(e.exists, label + ": coloured homomorphism exists");
        if (e.exists) {
            ColouredGraph t = ColouredGraph::make(3);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) t.set_edge(i, j, EdgeColour::Grey);
            t.vertex_colour = {e.vertex_colours[0], e.vertex_colours[1], e.vertex_colours[2]};
            c.expect(check_coloured_homomorphism(c5, t, e.witness),
                     label + ": witness satisfies all three conditions");
        }
    }
    if (c.ok) c.note("C5 -> all-grey triangle for all 8 vertex colourings, witnesses validated");
    return c.ok;
}

bool criterion9(Check& c) {
    // coloured homomorphism vs naive enumeration
    SplitMix64 rng(8675309, 0);
    int existing = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int fN = 2 + static_cast<int>(rng.below(4));
        int k = 2 + static_cast<int>(rng.below(3));
        Graph f = gnm_sample(fN, rng.below(pair_count(fN) + 1), rng.next());
        ColouredGraph r = ColouredGraph::make(k);
        for (int i = 0; i < k; ++i) r.vertex_colour[i] = static_cast<int>(rng.below(2));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                std::uint64_t roll = rng.below(4);
                if (roll < 3) r.set_edge(i, j, static_cast<EdgeColour>(roll));
            }
        bool naive = false;
        std::vector<int> h(fN, 0);
        for (;;) {
            if (check_coloured_homomorphism(f, r, h)) {
                naive = true;
                break;
            }
            int i = 0;
            while (i < fN && ++h[i] == k) h[i++] = 0;
            if (i == fN) break;
        }
        auto got = coloured_homomorphism(f, r);
        if (naive != got.has_value()) {
            c.expect(false, "coloured homomorphism mismatch at trial " + std::to_string(trial));
            break;
        }
        if (got) ++existing;
    }
    c.note("coloured homomorphism agrees with naive enumeration on 200 cases (" +
           std::to_string(existing) + " with a map)");

    // is_perfect vs the chi = omega definition (shared oracle below)
    struct Oracle {
        static int clique(const Graph& g, VertexSet within) {
            int best = 0;
            for (VertexSet mask = 0; mask < vs_bit(g.n() - 1) * 2; ++mask) {
                if ((mask & ~within) != 0) continue;
                bool cl = true;
                for (VertexSet it = mask; cl && it; it &= it - 1) {
                    int v = vs_first(it);
                    cl = (g.neighbours(v) & mask & ~vs_bit(v)) == (mask & ~vs_bit(v));
                }
                if (cl) best = std::max(best, vs_size(mask));
            }
            return best;
        }
        static int chromatic(const Graph& g, VertexSet within) {
            std::vector<int> verts;
            for (VertexSet it = within; it; it &= it - 1) verts.push_back(vs_first(it));
            if (verts.empty()) return 0;
            for (int k = 1;; ++k) {
                std::vector<int> colour(verts.size(), -1);
                std::function<bool(std::size_t)> rec = [&](std::size_t i) {
                    if (i == verts.size()) return true;
                    for (int col = 0; col < k; ++col) {
                        bool ok = true;
                        for (std::size_t j = 0; j < i && ok; ++j)
                            if (colour[j] == col && g.adjacent(verts[i], verts[j])) ok = false;
                        if (!ok) continue;
                        colour[i] = col;
                        if (rec(i + 1)) return true;
                    }
                    colour[i] = -1;
                    return false;
                };
                if (rec(0)) return k;
            }
        }
        static bool perfect(const Graph& g) {
            for (VertexSet mask = 1; mask < vs_bit(g.n() - 1) * 2; ++mask)
                if (chromatic(g, mask) != clique(g, mask)) return false;
            return true;
        }
    };

    bool perfect_ok = true;
    for (int n = 1; n <= 6 && perfect_ok; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << pair_count(n)); ++mask) {
            GraphBuilder b(n);
            for (long long r = 0; r < pair_count(n); ++r)
                if (mask >> r & 1) {
                    auto [i, j] = edge_unrank(n, r);
                    b.add_edge(i, j);
                }
            Graph g = b.seal();
            if (is_perfect(g) != Oracle::perfect(g)) {
                c.expect(false, "is_perfect mismatch, n=" + std::to_string(n) + " mask=" +
                                    std::to_string(mask));
                perfect_ok = false;
                break;
            }
        }
    }
    if (perfect_ok) c.note("is_perfect matches chi = omega exhaustively for n <= 6");
    int mismatches = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Graph g = gnm_sample(7, seed % 22, seed);
        if (is_perfect(g) != Oracle::perfect(g)) ++mismatches;
    }
    c.expect(mismatches == 0, "is_perfect vs definition on 1000 sampled n=7 graphs");
    return c.ok;
}

bool criterion10(Check& c) {
    CensusResult exact = exact_census(8, 14, ClassPredicate::c5free(), 8);
    const long long samples = 1000000;
    CensusResult mc = monte_carlo_census(8, 14, ClassPredicate::c5free(), samples, 20250810, 8);
    double p_true = mpz_get_d(exact.count.get_mpz_t()) / mpz_get_d(exact.total.get_mpz_t());
    double sigma = std::sqrt(p_true * (1.0 - p_true) / samples);
    double dev = std::abs(mc.p_hat - p_true) / sigma;
    std::ostringstream s;
    s << "exact fraction = " << p_true << ", MC p_hat = " << mc.p_hat << " (" << dev
      << " sigma, 1e6 samples)";
    c.note(s.str());
    c.expect(dev <= 3.0, "MC estimate within 3 sigma of the exact ratio");
    return c.ok;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(Check&)> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "exact census ground truth at (5,5)", criterion1},
    {2, "sandwich S <= P <= C on all computed cells", criterion2},
    {3, "trend toward h(c) over n", criterion3},
    {4, "entropy suite", criterion4},
    {5, "generator soundness and reproducibility", criterion5},
    {6, "packing trichotomy sweep and dichotomy", criterion6},
    {7, "dangerous-pair probability bounds", criterion7},
    {8, "grey-triangle sweep", criterion8},
    {9, "oracle equivalence", criterion9},
    {10, "Monte Carlo consistency at (8,14)", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (const auto& crit : kCriteria) {
        if (only != 0 && crit.id != only) continue;
        Check chk;
        bool ok = false;
        try {
            ok = crit.run(chk);
        } catch (const std::exception& e) {
            chk.detail << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.name
                  << "\n"
                  << chk.detail.str();
        if (!ok) ++failures;
    }
    return failures;
}
