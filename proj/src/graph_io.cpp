#include "c5census/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace c5census {

std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [i, j] : es) out << i << ' ' << j << '\n';
    return out.str();
}

static Graph parse_graph_lines(std::istream& in) {
    int n = 0;
    long long m = -1;
    if (!(in >> n >> m)) throw ParseError("graph header: expected \"n m\"");
    if (n < 1 || n > kMaxVertices) throw ParseError("graph header: n out of range 1..64");
    if (m < 0 || m > pair_count(n)) throw ParseError("graph header: bad edge count");
    GraphBuilder b(n);
    for (long long e = 0; e < m; ++e) {
        int i = -1, j = -1;
        if (!(in >> i >> j)) throw ParseError("graph body: missing edge line");
        if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
            throw ParseError("graph body: edge must satisfy 0 <= i < j < n");
        if (b.has_edge(i, j)) throw ParseError("graph body: duplicate edge");
        b.add_edge(i, j);
    }
    return b.seal();
}

Graph read_graph_text(std::istream& in) { return parse_graph_lines(in); }

Graph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_lines(in);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_graph_lines(in);
}

std::vector<Graph> read_graph_blocks(std::istream& in) {
    std::vector<Graph> out;
    while (in >> std::ws, in.good() && !in.eof()) {
        out.push_back(parse_graph_lines(in));
    }
    return out;
}

Partition read_partition_text(std::istream& in, int n) {
    Partition p;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        VertexSet block = 0;
        int v;
        while (ls >> v) {
            if (v < 0 || v >= n) throw ParseError("partition: vertex label out of range");
            if (vs_contains(block, v)) throw ParseError("partition: repeated label in block");
            block |= vs_bit(v);
        }
        p.blocks.push_back(block);
    }
    if (p.blocks.empty()) throw ParseError("partition: empty file");
    if (!p.disjoint()) throw ParseError("partition: blocks overlap");
    return p;
}

Partition read_partition_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open partition file: " + path);
    return read_partition_text(in, n);
}

}  // namespace c5census
