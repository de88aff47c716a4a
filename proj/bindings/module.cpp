#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "c5census/census.hpp"
#include "c5census/cli.hpp"
#include "c5census/entropy.hpp"
#include "c5census/generators.hpp"
#include "c5census/graph_io.hpp"
#include "c5census/homsets.hpp"
#include "c5census/recognizers.hpp"
#include "c5census/types.hpp"

namespace py = pybind11;
using namespace c5census;

namespace {

VertexSet to_set(const std::vector<int>& labels, int n) {
    VertexSet s = 0;
    for (int v : labels) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex label out of range");
        s |= vs_bit(v);
    }
    return s;
}

std::vector<int> to_labels(VertexSet s) {
    std::vector<int> out;
    for (VertexSet it = s; it; it &= it - 1) out.push_back(vs_first(it));
    return out;
}

py::int_ big_to_int(const BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.get_str());
}

py::dict census_dict(const CensusResult& r) {
    py::dict d;
    d["n"] = r.n;
    d["m"] = r.m;
    d["predicate"] = r.predicate;
    d["mode"] = r.mode == CensusMode::Exact ? "exact" : "mc";
    d["count"] = big_to_int(r.count);
    d["total"] = big_to_int(r.total);
    d["log2_count"] = r.log2_count;
    d["exponent"] = r.exponent;
    if (r.mode == CensusMode::MonteCarlo) {
        d["samples"] = r.samples;
        d["hits"] = r.hits;
        d["seed"] = r.seed;
        d["p_hat"] = r.p_hat;
        d["ci"] = py::make_tuple(r.ci_lo, r.ci_hi);
    }
    d["threads"] = r.threads_used;
    d["wall_time_s"] = r.wall_time_s;
    return d;
}

TripleKind parse_kind(const std::string& s) {
    if (s == "p3") return TripleKind::P3;
    if (s == "antip3") return TripleKind::AntiP3;
    throw std::invalid_argument("kind must be 'p3' or 'antip3'");
}

Frac parse_p(const std::pair<std::uint64_t, std::uint64_t>& p) {
    return Frac(p.first, p.second);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "census and structure experiments for induced-C5-free, perfect and "
              "generalised split graphs";
    m.attr("__version__") = kToolVersion;

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Graph::n)
        .def("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("neighbours", [](const Graph& g, int v) { return to_labels(g.neighbours(v)); })
        .def_static("empty", &Graph::empty)
        .def_static("complete", &Graph::complete)
        .def_static("cycle", &Graph::cycle)
        .def_static("path", &Graph::path)
        .def_static("from_text", [](const std::string& text) { return read_graph_text(text); })
        .def("to_text", [](const Graph& g) { return write_graph_text(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    m.def("complement", [](const Graph& g) { return complement(g); });
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& s) {
        return induced_subgraph(g, to_set(s, g.n()));
    });
    m.def("pair_density",
          [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
              Frac d = pair_density(g, to_set(a, g.n()), to_set(b, g.n()));
              return py::make_tuple(d.num, d.den);
          });
    m.def("edge_rank", &edge_rank);
    m.def("edge_unrank", &edge_unrank);

    // recognizers
    m.def("is_induced_c5_free", &is_induced_c5_free);
    m.def("has_induced_cycle", &has_induced_cycle, py::arg("g"), py::arg("length"));
    m.def("is_perfect", &is_perfect);
    m.def("is_cluster_graph", &is_cluster_graph);
    m.def("is_generalised_split", [](const Graph& g, bool with_witness) -> py::object {
        if (!with_witness) return py::bool_(is_generalised_split(g));
        GensplitWitness w;
        bool ok = is_generalised_split(g, &w);
        if (!ok) return py::none();
        py::dict d;
        d["on_complement"] = w.on_complement;
        d["block"] = to_labels(w.block);
        py::list cl;
        for (VertexSet q : w.cliques) cl.append(to_labels(q));
        d["cliques"] = cl;
        return d;
    }, py::arg("g"), py::arg("with_witness") = false);
    m.def("contains_subgraph", &contains_subgraph);

    // entropy
    m.def("binary_entropy", &binary_entropy);
    m.def("h_exponent", &h_exponent);
    m.def("r_rate", &r_rate);
    m.def("r_rate_exact", [](std::uint64_t num, std::uint64_t den) {
        Frac r = r_rate_exact(Frac(num, den));
        return py::make_tuple(r.num, r.den);
    });
    m.def("subgraph_exponent",
          [](int r, double c) { return subgraph_exponent(r, c); });
    m.def("log2_binomial", &log2_binomial);

    // generators
    m.def("gnm_sample", &gnm_sample, py::arg("n"), py::arg("m"), py::arg("seed"),
          py::arg("stream") = 0);
    m.def("bipartite_split_sample", &bipartite_split_sample, py::arg("n"), py::arg("m"),
          py::arg("seed"), py::arg("stream") = 0);
    m.def("kpartite_split_sample", &kpartite_split_sample, py::arg("n"), py::arg("m"),
          py::arg("seed"), py::arg("stream") = 0);
    m.def("complement_high_sample", &complement_high_sample, py::arg("n"), py::arg("m"),
          py::arg("seed"), py::arg("stream") = 0);
    m.def("split_sample", &split_sample, py::arg("n"), py::arg("m"), py::arg("seed"),
          py::arg("stream") = 0);
    m.def("split_family_log_count", &split_family_log_count);

    // census
    m.def("exact_census",
          [](int n, long long m, const std::string& cls, int threads, bool force) {
              return census_dict(exact_census(n, m, ClassPredicate::parse(cls), threads, force));
          },
          py::arg("n"), py::arg("m"), py::arg("predicate") = "all", py::arg("threads") = 0,
          py::arg("force") = false);
    m.def("monte_carlo_census",
          [](int n, long long m, const std::string& cls, long long samples, std::uint64_t seed,
             int threads) {
              return census_dict(
                  monte_carlo_census(n, m, ClassPredicate::parse(cls), samples, seed, threads));
          },
          py::arg("n"), py::arg("m"), py::arg("predicate"), py::arg("samples"), py::arg("seed"),
          py::arg("threads") = 0);
    m.def("edges_for_density", &edges_for_density);
    m.def("dangerous_pair",
          [](const std::string& k1, const std::string& k2,
             std::pair<std::uint64_t, std::uint64_t> p) {
              DangerousPairResult r =
                  dangerous_pair_probability(parse_kind(k1), parse_kind(k2), parse_p(p));
              py::dict d;
              d["q_exact"] = py::make_tuple(r.q_exact.num, r.q_exact.den);
              d["q"] = r.q_exact.to_double();
              d["lower_bound"] = py::make_tuple(r.lower_bound.num, r.lower_bound.den);
              d["bound_holds"] = r.lower_bound <= r.q_exact;
              return d;
          },
          py::arg("kind1"), py::arg("kind2"), py::arg("p"));

    // homsets
    m.def("clique_number", &clique_number);
    m.def("independence_number", &independence_number);
    m.def("hom_number", [](const Graph& g) {
        HomWitness w = hom_number(g);
        py::dict d;
        d["hom"] = w.size;
        d["set"] = w.set;
        d["kind"] = w.is_clique ? "clique" : "independent";
        return d;
    });

    py::class_<PackingCertificate>(m, "PackingCertificate")
        .def_property_readonly("outcome",
                               [](const PackingCertificate& c) {
                                   switch (c.outcome) {
                                       case PackingCertificate::Outcome::P3Packing:
                                           return "p3-packing";
                                       case PackingCertificate::Outcome::AntiP3Packing:
                                           return "anti-p3-packing";
                                       default: return "homogeneous-set";
                                   }
                               })
        .def_readonly("triples", &PackingCertificate::triples)
        .def_readonly("hom_set", &PackingCertificate::hom_set)
        .def_readonly("hom_is_clique", &PackingCertificate::hom_is_clique)
        .def_readonly("target", &PackingCertificate::target);

    m.def("p3_packing_trichotomy",
          [](const Graph& g) { return p3_packing_trichotomy(g); });
    m.def("verify_certificate",
          [](const Graph& g, const PackingCertificate& c) { return verify_certificate(g, c); });
    m.def("hom_distribution",
          [](int n, long long m, long long samples, std::uint64_t seed, int threads) {
              HomDistribution d = hom_distribution_experiment(n, m, samples, seed, threads);
              py::dict out;
              out["n"] = d.n;
              out["m"] = d.m;
              out["samples"] = d.samples;
              out["accepted"] = d.accepted;
              out["counts_all"] = d.counts_all;
              out["counts_conditional"] = d.counts_conditional;
              out["mean_all"] = d.mean_all();
              out["mean_conditional"] = d.mean_conditional();
              return out;
          },
          py::arg("n"), py::arg("m"), py::arg("samples"), py::arg("seed"),
          py::arg("threads") = 1);

    // coloured types
    py::class_<ColouredGraph>(m, "ColouredGraph")
        .def(py::init([](int k) { return ColouredGraph::make(k); }))
        .def_readonly("k", &ColouredGraph::k)
        .def_readwrite("vertex_colour", &ColouredGraph::vertex_colour)
        .def("set_edge",
             [](ColouredGraph& r, int i, int j, const std::string& col) {
                 EdgeColour c = col == "0"      ? EdgeColour::White
                                : col == "half" ? EdgeColour::Grey
                                : col == "1"    ? EdgeColour::Black
                                                : EdgeColour::Absent;
                 if (c == EdgeColour::Absent)
                     throw std::invalid_argument("colour must be '0', 'half' or '1'");
                 r.set_edge(i, j, c);
             })
        .def("edge_colour", [](const ColouredGraph& r, int i, int j) -> py::object {
            switch (r.edge_colour(i, j)) {
                case EdgeColour::White: return py::str("0");
                case EdgeColour::Grey: return py::str("half");
                case EdgeColour::Black: return py::str("1");
                default: return py::none();
            }
        });

    m.def("coloured_homomorphism",
          [](const Graph& f, const ColouredGraph& r) -> py::object {
              auto h = coloured_homomorphism(f, r);
              if (!h) return py::none();
              return py::cast(*h);
          });
    m.def("has_grey_triangle", &has_grey_triangle);
    m.def("grey_triangle_c5_sweep", [] {
        GreyTriangleSweep s = grey_triangle_c5_sweep();
        py::list out;
        for (const auto& e : s.entries) {
            py::dict d;
            d["vertex_colours"] = e.vertex_colours;
            d["exists"] = e.exists;
            d["witness"] = e.witness;
            out.append(d);
        }
        return out;
    });
}
