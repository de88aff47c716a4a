#include "c5census/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "c5census/census.hpp"
#include "c5census/entropy.hpp"
#include "c5census/generators.hpp"
#include "c5census/graph_io.hpp"
#include "c5census/homsets.hpp"
#include "c5census/recognizers.hpp"
#include "c5census/types.hpp"

namespace c5census {

namespace {

using nlohmann::json;

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

json manifest(const std::string& subcommand, json params, std::uint64_t seed, int threads,
              double wall) {
    return json{{"schema_version", kSchemaVersion},
                {"tool_version", kToolVersion},
                {"subcommand", subcommand},
                {"params", std::move(params)},
                {"seed", seed},
                {"threads", threads},
                {"wall_time_s", wall}};
}

void emit(std::ostream& out, const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << '\n';
    } else {
        std::ofstream f(path);
        if (!f) throw ParseError("cannot open output file: " + path);
        f << payload;
    }
}

Frac parse_frac(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long a = std::stoll(s.substr(0, slash));
        long long b = std::stoll(s.substr(slash + 1));
        if (a < 0 || b <= 0) throw CLI::ValidationError("--p", "need a nonnegative fraction");
        return Frac(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Frac(std::stoull(s), 1);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < s.size() - dot - 1; ++i) den *= 10;
    return Frac(std::stoull(digits), den);
}

Graph read_graph_arg(const std::string& path) {
    if (path.empty() || path == "-") return read_graph_text(std::cin);
    return read_graph_file(path);
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json census_json(const std::string& cmd, const json& params, const CensusResult& r) {
    json result{{"count_str", r.count.get_str()},
                {"total_str", r.total.get_str()},
                {"log2_count", std::isfinite(r.log2_count) ? json(r.log2_count) : json()},
                {"exponent", std::isfinite(r.exponent) ? json(r.exponent) : json()}};
    if (r.mode == CensusMode::MonteCarlo) {
        result["samples"] = r.samples;
        result["hits"] = r.hits;
        result["p_hat"] = r.p_hat;
        result["ci_lo"] = r.ci_lo;
        result["ci_hi"] = r.ci_hi;
    }
    return json{{"schema_version", kSchemaVersion}, {"command", cmd},
                {"params", params},               {"result", result},
                {"seed", r.seed},                 {"threads", r.threads_used},
                {"wall_time_s", r.wall_time_s}};
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

const char* outcome_name(PackingCertificate::Outcome o) {
    switch (o) {
        case PackingCertificate::Outcome::P3Packing: return "p3-packing";
        case PackingCertificate::Outcome::AntiP3Packing: return "anti-p3-packing";
        case PackingCertificate::Outcome::HomogeneousSet: return "homogeneous-set";
    }
    return "?";
}

std::vector<int> set_to_labels(VertexSet s) {
    std::vector<int> out;
    for (VertexSet it = s; it; it &= it - 1) out.push_back(vs_first(it));
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"census and structure experiments for induced-C5-free, perfect and "
                 "generalised split graphs"};
    app.set_config("--config", "", "key=value config file ([subcommand] section); flags win");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("c5census ") + kToolVersion +
                                          " (schema " + std::to_string(kSchemaVersion) + ")");

    // ---- census ----
    auto* c = app.add_subcommand("census", "count m-edge graphs on [n] in a class");
    c->configurable();
    int cn = 0;
    long long cm = -1;
    double cc = -1;
    std::string cclass = "all", cmode = "exact", cjson, ccsv;
    long long csamples = 100000;
    std::uint64_t cseed = 0;
    int cthreads = 0;
    bool cforce = false;
    c->add_option("--n", cn, "vertex count")->required();
    c->add_option("--m", cm, "edge count");
    c->add_option("--c", cc, "density; m = round(c*C(n,2)), ties to even");
    c->add_option("--class", cclass, "all|c5free|perfect|gensplit|cluster|nosub:<f>");
    c->add_option("--mode", cmode, "exact|mc")->check(CLI::IsMember({"exact", "mc"}));
    c->add_option("--samples", csamples, "Monte Carlo sample count");
    c->add_option("--seed", cseed, "Monte Carlo seed");
    c->add_option("--threads", cthreads, "worker threads (0 = hardware)");
    c->add_flag("--force", cforce, "override the 1e10 subset budget");
    c->add_option("--json", cjson, "write JSON here ('-' = stdout)");
    c->add_option("--csv", ccsv, "write a CSV row here");

    // ---- curve ----
    auto* cv = app.add_subcommand("curve",
                                  "entropy curves, or census exponent curves with --class");
    cv->configurable();
    std::string cvn, cvc = "", cvclass, cvmode = "exact", cvcsv;
    int cvgrid = 0;
    long long cvsamples = 100000;
    std::uint64_t cvseed = 0;
    int cvthreads = 0;
    bool cvforce = false;
    cv->add_option("--n", cvn, "comma list of vertex counts (census mode)");
    cv->add_option("--c", cvc, "comma list of densities");
    cv->add_option("--grid", cvgrid, "entropy mode: use c = i/(grid+1), i = 1..grid");
    cv->add_option("--class", cvclass, "class predicate; enables census mode");
    cv->add_option("--mode", cvmode, "exact|mc")->check(CLI::IsMember({"exact", "mc"}));
    cv->add_option("--samples", cvsamples, "Monte Carlo sample count");
    cv->add_option("--seed", cvseed, "Monte Carlo seed");
    cv->add_option("--threads", cvthreads, "worker threads");
    cv->add_flag("--force", cvforce, "override the census budget");
    cv->add_option("--csv", cvcsv, "write CSV here ('-' = stdout)");

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "sample graphs from the constructions");
    gen->configurable();
    gen->alias("sample");
    std::string gkind = "auto", gout;
    int gn = 0;
    long long gm = 0;
    std::uint64_t gseed = 0, gstream = 0;
    int gcount = 1;
    gen->add_option("--kind", gkind, "bipartite|kpartite|high|gnm|auto")
        ->check(CLI::IsMember({"bipartite", "kpartite", "high", "gnm", "auto"}));
    gen->add_option("--n", gn, "vertex count")->required();
    gen->add_option("--m", gm, "edge count")->required();
    gen->add_option("--seed", gseed, "seed");
    gen->add_option("--stream", gstream, "first stream id");
    gen->add_option("--count", gcount, "how many graphs (streams stream, stream+1, ...)");
    gen->add_option("--out", gout, "output file ('-' = stdout)");

    // ---- recognize ----
    auto* rec = app.add_subcommand("recognize", "class membership of one graph");
    rec->configurable();
    std::string rclass, rin;
    bool rwitness = false;
    rec->add_option("--class", rclass, "c5free|perfect|gensplit|cluster")
        ->required()
        ->check(CLI::IsMember({"c5free", "perfect", "gensplit", "cluster"}));
    rec->add_option("--in", rin, "graph file ('-' = stdin)");
    rec->add_flag("--witness", rwitness, "print the witness partition (gensplit)");

    // ---- packing ----
    auto* pk = app.add_subcommand("packing", "P3 / anti-P3 packing trichotomy");
    pk->configurable();
    std::string pin, pjson;
    pk->add_option("--in", pin, "graph file ('-' = stdin)");
    pk->add_option("--json", pjson, "write JSON here ('-' = stdout)");

    // ---- hom ----
    auto* hm = app.add_subcommand("hom", "largest clique / independent set");
    hm->configurable();
    std::string hin;
    hm->add_option("--in", hin, "graph file ('-' = stdin)");

    // ---- homdist ----
    auto* hd = app.add_subcommand("homdist", "hom(G)/n distribution, conditioned on C5-freeness");
    hd->configurable();
    int hdn = 0;
    long long hdm = 0, hdsamples = 10000;
    std::uint64_t hdseed = 0;
    int hdthreads = 1;
    std::string hdcsv;
    hd->add_option("--n", hdn, "vertex count")->required();
    hd->add_option("--m", hdm, "edge count")->required();
    hd->add_option("--samples", hdsamples, "sample count");
    hd->add_option("--seed", hdseed, "seed");
    hd->add_option("--threads", hdthreads, "worker threads");
    hd->add_option("--csv", hdcsv, "write the histogram CSV here");

    // ---- typecheck ----
    auto* tc = app.add_subcommand("typecheck", "extract the coloured type of a partition");
    tc->configurable();
    std::string tgraph, tpartition, tjson;
    TypeParams tparams;
    tc->add_option("--graph", tgraph, "graph file")->required();
    tc->add_option("--partition", tpartition, "partition file")->required();
    tc->add_option("--d", tparams.d, "edge-colour density threshold");
    tc->add_option("--eps", tparams.eps, "regularity proxy tolerance");
    tc->add_option("--eps-sub", tparams.eps_sub, "subpartition tolerance");
    tc->add_option("--k-sub", tparams.k_sub, "subpartition part count");
    tc->add_option("--mu", tparams.mu_proxy, "min subpartition part fraction");
    tc->add_option("--proxy-samples", tparams.proxy_samples, "half-subset trials per pair");
    tc->add_option("--seed", tparams.seed, "proxy seed");
    tc->add_option("--json", tjson, "write JSON here ('-' = stdout)");

    // ---- dangerous-pair ----
    auto* dp = app.add_subcommand("dangerous-pair", "exact induced-C5 completion probability");
    dp->configurable();
    std::string dk1 = "p3", dk2 = "p3", dpp = "1/2", djson;
    dp->add_option("--kind1", dk1, "p3|antip3")->check(CLI::IsMember({"p3", "antip3"}));
    dp->add_option("--kind2", dk2, "p3|antip3")->check(CLI::IsMember({"p3", "antip3"}));
    dp->add_option("--p", dpp, "edge probability, rational a/b or decimal");
    dp->add_option("--json", djson, "write JSON here ('-' = stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    // ------------------------------------------------------------------
    if (*c) {
        if ((cm < 0) == (cc < 0))
            throw CLI::ValidationError("census", "give exactly one of --m / --c");
        if (cm < 0) cm = edges_for_density(cn, cc);
        ClassPredicate pred = ClassPredicate::parse(cclass);
        CensusResult r = cmode == "exact"
                             ? exact_census(cn, cm, pred, cthreads, cforce)
                             : monte_carlo_census(cn, cm, pred, csamples, cseed, cthreads);
        json params{{"n", cn}, {"m", cm},       {"class", pred.name()},
                    {"mode", cmode}};
        if (cmode == "mc") params["samples"] = csamples;
        json doc = census_json("census", params, r);
        if (!ccsv.empty()) {
            std::ostringstream csv;
            csv << "n,m,class,mode,count,total,log2_count,exponent\n"
                << cn << ',' << cm << ',' << pred.name() << ',' << cmode << ','
                << r.count.get_str() << ',' << r.total.get_str() << ','
                << fmt17(r.log2_count) << ',' << fmt17(r.exponent) << '\n';
            emit(out, ccsv, csv.str());
        }
        emit(out, cjson, doc.dump(2));
        return 0;
    }

    if (*cv) {
        std::ostringstream csv;
        if (cvclass.empty()) {
            std::vector<double> cs;
            if (cvgrid > 0)
                for (int i = 1; i <= cvgrid; ++i)
                    cs.push_back(static_cast<double>(i) / (cvgrid + 1));
            else if (!cvc.empty())
                cs = parse_double_list(cvc);
            else
                throw CLI::ValidationError("curve", "need --c or --grid");
            csv << "c,h,r,h_minus_r,subgraph_r3\n";
            for (double x : cs) {
                double h = h_exponent(x), r = r_rate(x);
                double s3 = subgraph_exponent(3, x);
                csv << fmt17(x) << ',' << fmt17(h) << ',' << fmt17(r) << ','
                    << fmt17(h - r) << ',' << fmt17(s3) << '\n';
            }
        } else {
            if (cvn.empty() || cvc.empty())
                throw CLI::ValidationError("curve", "census mode needs --n and --c");
            auto rows = exponent_curve(parse_int_list(cvn), parse_double_list(cvc),
                                       ClassPredicate::parse(cvclass),
                                       cvmode == "exact" ? CensusMode::Exact
                                                         : CensusMode::MonteCarlo,
                                       cvsamples, cvseed, cvthreads, cvforce);
            csv << "n,c,m,count,total,log2_count,exponent,h_ref\n";
            for (const auto& row : rows)
                csv << row.n << ',' << fmt17(row.c_requested) << ',' << row.m << ','
                    << row.result.count.get_str() << ',' << row.result.total.get_str() << ','
                    << fmt17(row.result.log2_count) << ',' << fmt17(row.result.exponent) << ','
                    << fmt17(row.h_ref) << '\n';
        }
        emit(out, cvcsv.empty() ? "-" : cvcsv, csv.str());
        return 0;
    }

    if (*gen) {
        std::ostringstream text;
        for (int i = 0; i < gcount; ++i) {
            std::uint64_t stream = gstream + static_cast<std::uint64_t>(i);
            Graph g = [&] {
                if (gkind == "bipartite") return bipartite_split_sample(gn, gm, gseed, stream);
                if (gkind == "kpartite") return kpartite_split_sample(gn, gm, gseed, stream);
                if (gkind == "high") return complement_high_sample(gn, gm, gseed, stream);
                if (gkind == "gnm") return gnm_sample(gn, gm, gseed, stream);
                return split_sample(gn, gm, gseed, stream);
            }();
            if (i) text << '\n';
            text << write_graph_text(g);
        }
        emit(out, gout.empty() ? "-" : gout, text.str());
        return 0;
    }

    if (*rec) {
        Graph g = read_graph_arg(rin);
        bool member = false;
        GensplitWitness w;
        if (rclass == "c5free") member = is_induced_c5_free(g);
        else if (rclass == "perfect") member = is_perfect(g);
        else if (rclass == "cluster") member = is_cluster_graph(g);
        else member = is_generalised_split(g, &w);
        if (member) {
            out << "in class " << rclass << '\n';
            if (rwitness && rclass == "gensplit") {
                out << "side: " << (w.on_complement ? "complement" : "graph") << '\n';
                out << "block:";
                for (int v : set_to_labels(w.block)) out << ' ' << v;
                out << '\n';
                for (std::size_t i = 0; i < w.cliques.size(); ++i) {
                    out << "clique " << i << ':';
                    for (int v : set_to_labels(w.cliques[i])) out << ' ' << v;
                    out << '\n';
                }
            }
            return 0;
        }
        if (rclass == "c5free") out << "contains induced C5\n";
        else out << "not in class " << rclass << '\n';
        return 1;
    }

    if (*pk) {
        Graph g = read_graph_arg(pin);
        double t0 = now_seconds();
        PackingCertificate cert = p3_packing_trichotomy(g);
        bool ok = verify_certificate(g, cert);
        json doc{{"outcome", outcome_name(cert.outcome)},
                 {"target", cert.target},
                 {"verified", ok}};
        if (cert.outcome == PackingCertificate::Outcome::HomogeneousSet) {
            doc["set"] = cert.hom_set;
            doc["set_kind"] = cert.hom_is_clique ? "clique" : "independent";
        } else {
            doc["triples"] = cert.triples;
        }
        doc["manifest"] = manifest("packing", json{{"n", g.n()}, {"m", g.edge_count()}}, 0, 1,
                                   now_seconds() - t0);
        emit(out, pjson.empty() ? "-" : pjson, doc.dump(2));
        return ok ? 0 : 1;
    }

    if (*hm) {
        Graph g = read_graph_arg(hin);
        HomWitness w = hom_number(g);
        json doc{{"n", g.n()},
                 {"m", g.edge_count()},
                 {"hom", w.size},
                 {"omega", clique_number(g)},
                 {"alpha", independence_number(g)},
                 {"kind", w.is_clique ? "clique" : "independent"},
                 {"witness", w.set}};
        out << doc.dump(2) << '\n';
        return 0;
    }

    if (*hd) {
        double t0 = now_seconds();
        HomDistribution d = hom_distribution_experiment(hdn, hdm, hdsamples, hdseed, hdthreads);
        std::ostringstream csv;
        csv << "hom,count_all,count_conditional\n";
        for (int h = 0; h <= d.n; ++h)
            csv << h << ',' << d.counts_all[h] << ',' << d.counts_conditional[h] << '\n';
        if (!hdcsv.empty()) emit(out, hdcsv, csv.str());
        json doc{{"n", d.n},
                 {"m", d.m},
                 {"samples", d.samples},
                 {"accepted", d.accepted},
                 {"mean_all", d.mean_all()},
                 {"mean_conditional", d.mean_conditional()},
                 {"manifest", manifest("homdist",
                                       json{{"n", hdn}, {"m", hdm}, {"samples", hdsamples}},
                                       hdseed, hdthreads, now_seconds() - t0)}};
        if (hdcsv.empty()) doc["csv"] = csv.str();
        out << doc.dump(2) << '\n';
        return 0;
    }

    if (*tc) {
        Graph g = read_graph_file(tgraph);
        Partition p = read_partition_file(tpartition, g.n());
        auto [r, diag] = extract_type(g, p, tparams);
        json edges = json::array();
        for (int i = 0; i < r.k; ++i)
            for (int j = i + 1; j < r.k; ++j) {
                EdgeColour col = r.edge_colour(i, j);
                if (col == EdgeColour::Absent) continue;
                const char* name = col == EdgeColour::White ? "0"
                                   : col == EdgeColour::Grey ? "half"
                                                             : "1";
                edges.push_back(json{{"i", i}, {"j", j}, {"col", name}});
            }
        json pairs = json::array();
        for (const auto& pi : diag.pairs)
            pairs.push_back(json{{"i", pi.i},
                                 {"j", pi.j},
                                 {"density", pi.density},
                                 {"max_deviation", pi.max_deviation},
                                 {"regular", pi.regular}});
        json doc{{"k", r.k},
                 {"vcol", r.vertex_colour},
                 {"edges", edges},
                 {"diagnostics",
                  json{{"pairs", pairs}, {"vertex_method", diag.vertex_method},
                       {"proxy_only", true}}},
                 {"manifest", manifest("typecheck",
                                       json{{"d", tparams.d},
                                            {"eps", tparams.eps},
                                            {"eps_sub", tparams.eps_sub},
                                            {"k_sub", tparams.k_sub},
                                            {"mu_proxy", tparams.mu_proxy}},
                                       tparams.seed, 1, 0.0)}};
        emit(out, tjson.empty() ? "-" : tjson, doc.dump(2));
        return 0;
    }

    if (*dp) {
        auto kind = [](const std::string& s) {
            return s == "p3" ? TripleKind::P3 : TripleKind::AntiP3;
        };
        DangerousPairResult r = dangerous_pair_probability(kind(dk1), kind(dk2), parse_frac(dpp));
        json doc{{"kind1", dk1},
                 {"kind2", dk2},
                 {"p", r.p.str()},
                 {"q_exact", r.q_exact.str()},
                 {"q", r.q_exact.to_double()},
                 {"lower_bound", r.lower_bound.str()},
                 {"lower_bound_value", r.lower_bound.to_double()},
                 {"bound_holds", r.lower_bound <= r.q_exact}};
        emit(out, djson.empty() ? "-" : djson, doc.dump(2));
        return 0;
    }

    err << "no subcommand\n";
    return 2;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help / --version
        err << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        err << "budget: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "input: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace c5census
