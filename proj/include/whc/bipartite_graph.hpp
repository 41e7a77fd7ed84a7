// bipartite_graph.hpp — immutable bipartite graph with parts X (size a) and
// Y (size b), adjacency stored as one 64-bit row mask per X vertex.
// Within-part edges are unrepresentable, so every value is bipartite and
// simple by construction. All operations are pure; edits return new values.
//
// Indexing is 0-based internally. Report/serialization layers translate to
// the 1-based labels x1..xn, y1..yn used in human-facing output.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace whc {

struct DegreeSequence {
    std::vector<int> all;       // ascending, size a+b
    std::vector<int> x_degrees; // ascending, size a
    std::vector<int> y_degrees; // ascending, size b

    // 1-based ascending index d_1 <= ... <= d_{a+b} (maps to all[i-1]).
    int d(int i) const { return all.at(static_cast<std::size_t>(i) - 1); }
};

class BipartiteGraph {
public:
    using Row = std::uint64_t;
    static constexpr int kMaxPart = 64;

    BipartiteGraph(int a, int b, std::vector<Row> rows)
        : a_(a), b_(b), rows_(std::move(rows)) {
        if (a_ < 0 || b_ < 0 || a_ > kMaxPart || b_ > kMaxPart)
            throw std::invalid_argument("part sizes must be in [0, 64]");
        if (static_cast<int>(rows_.size()) != a_)
            throw std::invalid_argument("row count does not match part size");
        const Row mask = row_mask();
        for (const Row r : rows_)
            if (r & ~mask) throw std::invalid_argument("adjacency row exceeds part Y");
        recount();
    }

    static BipartiteGraph from_edge_list(int a, int b,
                                         const std::vector<std::pair<int, int>>& edges) {
        if (a < 1 || b < 1)
            throw std::invalid_argument("part sizes must be at least 1");
        if (a > kMaxPart || b > kMaxPart)
            throw std::invalid_argument("part sizes above 64 are unsupported");
        std::vector<Row> rows(static_cast<std::size_t>(a), 0);
        for (const auto& [i, j] : edges) {
            if (i < 0 || i >= a || j < 0 || j >= b)
                throw std::invalid_argument("edge (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") out of range for " +
                                            std::to_string(a) + "x" + std::to_string(b) +
                                            " graph");
            rows[static_cast<std::size_t>(i)] |= Row{1} << j; // duplicates collapse
        }
        return BipartiteGraph(a, b, std::move(rows));
    }

    int part_x() const { return a_; }
    int part_y() const { return b_; }
    bool balanced() const { return a_ == b_; }

    // Part size n of a balanced graph; balanced-only operations go through this.
    int balanced_n() const {
        if (!balanced())
            throw std::invalid_argument("operation requires a balanced bipartite graph (|X| = |Y|)");
        return a_;
    }

    bool has_edge(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1; }
    Row row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<Row>& rows() const { return rows_; }

    Row column(int j) const {
        Row c = 0;
        for (int i = 0; i < a_; ++i) c |= ((rows_[static_cast<std::size_t>(i)] >> j) & 1) << i;
        return c;
    }

    int edge_count() const { return edge_count_; }
    int degree_x(int i) const { return deg_x_[static_cast<std::size_t>(i)]; }
    int degree_y(int j) const { return deg_y_[static_cast<std::size_t>(j)]; }

    int min_degree() const {
        int d = a_ + b_; // above any possible degree
        for (int v : deg_x_) d = std::min(d, v);
        for (int v : deg_y_) d = std::min(d, v);
        return d;
    }

    DegreeSequence degree_sequence() const {
        DegreeSequence s;
        s.x_degrees = deg_x_;
        s.y_degrees = deg_y_;
        std::sort(s.x_degrees.begin(), s.x_degrees.end());
        std::sort(s.y_degrees.begin(), s.y_degrees.end());
        s.all.reserve(static_cast<std::size_t>(a_ + b_));
        s.all.insert(s.all.end(), deg_x_.begin(), deg_x_.end());
        s.all.insert(s.all.end(), deg_y_.begin(), deg_y_.end());
        std::sort(s.all.begin(), s.all.end());
        return s;
    }

    // Minimum degree sum over nonadjacent cross pairs; absent when complete.
    std::optional<int> sigma() const {
        balanced_n();
        std::optional<int> best;
        for (int i = 0; i < a_; ++i) {
            Row non = ~rows_[static_cast<std::size_t>(i)] & row_mask();
            while (non) {
                const int j = std::countr_zero(non);
                non &= non - 1;
                const int sum = deg_x_[static_cast<std::size_t>(i)] + deg_y_[static_cast<std::size_t>(j)];
                if (!best || sum < *best) best = sum;
            }
        }
        return best;
    }

    // Same parts, edge present exactly when absent here. Involution.
    BipartiteGraph quasi_complement() const {
        std::vector<Row> rows(rows_.size());
        const Row mask = row_mask();
        for (std::size_t i = 0; i < rows_.size(); ++i) rows[i] = ~rows_[i] & mask;
        return BipartiteGraph(a_, b_, std::move(rows));
    }

    bool is_complete_bipartite() const { return edge_count_ == a_ * b_; }

    // (#X vertices of degree n, #Y vertices of degree n) for a balanced graph.
    std::pair<int, int> full_side_count() const {
        const int n = balanced_n();
        int fx = 0, fy = 0;
        for (int d : deg_x_) fx += (d == n);
        for (int d : deg_y_) fy += (d == n);
        return {fx, fy};
    }

    BipartiteGraph with_edge(int i, int j) const {
        if (i < 0 || i >= a_ || j < 0 || j >= b_)
            throw std::invalid_argument("with_edge: index out of range");
        std::vector<Row> rows = rows_;
        rows[static_cast<std::size_t>(i)] |= Row{1} << j;
        return BipartiteGraph(a_, b_, std::move(rows));
    }

    BipartiteGraph without_edge(int i, int j) const {
        if (i < 0 || i >= a_ || j < 0 || j >= b_)
            throw std::invalid_argument("without_edge: index out of range");
        std::vector<Row> rows = rows_;
        rows[static_cast<std::size_t>(i)] &= ~(Row{1} << j);
        return BipartiteGraph(a_, b_, std::move(rows));
    }

    // Parts swapped: X becomes Y and vice versa.
    BipartiteGraph transposed() const {
        std::vector<Row> rows(static_cast<std::size_t>(b_), 0);
        for (int j = 0; j < b_; ++j) rows[static_cast<std::size_t>(j)] = column(j);
        return BipartiteGraph(b_, a_, std::move(rows));
    }

    // Lexicographic (i, j) edge list.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int i = 0; i < a_; ++i) {
            Row r = rows_[static_cast<std::size_t>(i)];
            while (r) {
                out.emplace_back(i, std::countr_zero(r));
                r &= r - 1;
            }
        }
        return out;
    }

    // Row-major biadjacency bit-code; defined for a*b <= 64. Bit i*b + j is
    // edge (i, j). Used as the enumeration index over all graphs of a shape.
    std::uint64_t code() const {
        if (a_ * b_ > 64) throw std::invalid_argument("code(): biadjacency exceeds 64 bits");
        std::uint64_t c = 0;
        for (int i = 0; i < a_; ++i)
            c |= rows_[static_cast<std::size_t>(i)] << (i * b_);
        return c;
    }

    static BipartiteGraph from_code(int a, int b, std::uint64_t code) {
        if (a < 1 || b < 1 || a * b > 64)
            throw std::invalid_argument("from_code: need 1 <= a, b and a*b <= 64");
        std::vector<Row> rows(static_cast<std::size_t>(a), 0);
        const Row mask = (b == 64) ? ~Row{0} : ((Row{1} << b) - 1);
        for (int i = 0; i < a; ++i) rows[static_cast<std::size_t>(i)] = (code >> (i * b)) & mask;
        return BipartiteGraph(a, b, std::move(rows));
    }

    friend bool operator==(const BipartiteGraph& lhs, const BipartiteGraph& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.rows_ == rhs.rows_;
    }
    friend bool operator!=(const BipartiteGraph& lhs, const BipartiteGraph& rhs) {
        return !(lhs == rhs);
    }

    Row row_mask() const { return (b_ == 64) ? ~Row{0} : ((Row{1} << b_) - 1); }

private:
    void recount() {
        deg_x_.assign(static_cast<std::size_t>(a_), 0);
        deg_y_.assign(static_cast<std::size_t>(b_), 0);
        edge_count_ = 0;
        for (int i = 0; i < a_; ++i) {
            const Row r = rows_[static_cast<std::size_t>(i)];
            deg_x_[static_cast<std::size_t>(i)] = std::popcount(r);
            edge_count_ += deg_x_[static_cast<std::size_t>(i)];
            Row bits = r;
            while (bits) {
                ++deg_y_[static_cast<std::size_t>(std::countr_zero(bits))];
                bits &= bits - 1;
            }
        }
    }

    int a_;
    int b_;
    std::vector<Row> rows_;
    std::vector<int> deg_x_;
    std::vector<int> deg_y_;
    int edge_count_ = 0;
};

} // namespace whc
