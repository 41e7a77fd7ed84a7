// graph_io.hpp — text format for bipartite graphs, DIMACS-flavoured:
//
//   c free-form comment
//   p bip <a> <b>        mandatory header, part sizes
//   e <x> <y>            edge, 1-based indices into X and Y
//
// parse(write(G)) == G exactly; the writer emits edges in lexicographic
// order so equal graphs serialize to identical bytes.
#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "whc/bipartite_graph.hpp"

namespace whc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

inline BipartiteGraph parse_graph_stream(std::istream& in) {
    int line_no = 0;
    int a = -1, b = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (a >= 0) throw ParseError(line_no, "duplicate header");
            std::string kind;
            if (!(ls >> kind) || kind != "bip")
                throw ParseError(line_no, "expected 'p bip <a> <b>'");
            if (!(ls >> a >> b)) throw ParseError(line_no, "part sizes must be integers");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after header");
            if (a < 1 || b < 1 || a > BipartiteGraph::kMaxPart || b > BipartiteGraph::kMaxPart)
                throw ParseError(line_no, "part sizes must be in [1, 64]");
            continue;
        }
        if (tag == "e") {
            if (a < 0) throw ParseError(line_no, "edge before 'p bip' header");
            int x = 0, y = 0;
            if (!(ls >> x >> y)) throw ParseError(line_no, "edge needs two integer endpoints");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after edge");
            if (x < 1 || x > a || y < 1 || y > b)
                throw ParseError(line_no, "edge (" + std::to_string(x) + "," +
                                              std::to_string(y) + ") out of range for p bip " +
                                              std::to_string(a) + " " + std::to_string(b));
            edges.emplace_back(x - 1, y - 1);
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    if (a < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p bip' header");
    return BipartiteGraph::from_edge_list(a, b, edges);
}

inline BipartiteGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_stream(in);
}

inline std::string write_graph_text(const BipartiteGraph& g) {
    std::string out = "p bip " + std::to_string(g.part_x()) + " " +
                      std::to_string(g.part_y()) + "\n";
    for (const auto& [i, j] : g.edges())
        out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return out;
}

} // namespace whc
