// graph.hpp
// Simple undirected graphs on up to 64 vertices, stored as one 64-bit
// neighbor mask per vertex. Values are immutable after construction; all
// editing operations return a fresh Graph. Includes graph6 and plain
// edge-list interchange.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starcrit {

// Unordered edge, normalized to u < v on construction.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("edge endpoints coincide: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) <=> std::pair(b.u, b.v);
    }
};

// Thrown by graph6 decoding; carries the byte offset of the offending input.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() : n_(0), m_(0) {}
    explicit Graph(int n);

    // Duplicate edges collapse to one; self-loops and out-of-range endpoints
    // are rejected.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }
    // Neighbor set of v as a bit mask.
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const;

    // All edges, sorted by (u, v). This is the canonical edge order used by
    // every per-edge report.
    std::vector<Edge> edges() const;

    bool has_edge(const Edge& e) const { return e.v < n_ && adjacent(e.u, e.v); }

    Graph add_edge(const Edge& e) const;
    Graph delete_edge(const Edge& e) const;    // e must be present
    Graph delete_vertex(int v) const;          // remaining vertices relabeled order-preservingly
    Graph complement() const;

    // True iff a traversal from vertex 0 reaches every vertex. n >= 1 required.
    bool is_connected() const;

    bool is_complete() const { return m_ == n_ * (n_ - 1) / 2; }

    // graph6 interchange (single-byte size field, n <= 62).
    std::string to_graph6() const;
    static Graph from_graph6(std::string_view s);

    // Plain text: first line "n m", then m lines "u v".
    std::string to_edge_list_text() const;
    static Graph from_edge_list_text(std::string_view text);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range, n=" + std::to_string(n_));
    }
    void set_edge_unchecked(int u, int v);

    int n_;
    int m_;
    std::vector<std::uint64_t> adj_;
};

}  // namespace starcrit
