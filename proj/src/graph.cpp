// graph.cpp

#include "starcrit/graph.hpp"

#include <bit>
#include <sstream>

namespace starcrit {

Graph::Graph(int n) : n_(n), m_(0) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::set_edge_unchecked(int u, int v) {
    std::uint64_t& row_u = adj_[static_cast<std::size_t>(u)];
    if ((row_u >> v) & 1u) return;  // duplicates collapse
    row_u |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++m_;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + "), n=" + std::to_string(n));
        if (a == b)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(a) + "," + std::to_string(b) + ")");
        g.set_edge_unchecked(a, b);
    }
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = u + 1 >= 64 ? 0 : adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::add_edge(const Edge& e) const {
    check_vertex(e.u);
    check_vertex(e.v);
    Graph g = *this;
    g.set_edge_unchecked(e.u, e.v);
    return g;
}

Graph Graph::delete_edge(const Edge& e) const {
    check_vertex(e.u);
    check_vertex(e.v);
    if (!adjacent(e.u, e.v))
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not present");
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
    g.adj_[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
    --g.m_;
    return g;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    Graph g(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        int nu = u < v ? u : u - 1;
        std::uint64_t row = adj_[static_cast<std::size_t>(u)];
        // drop bit v, shift the higher bits down by one
        std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
        std::uint64_t high = (v + 1 < max_vertices) ? row >> (v + 1) << v : 0;
        g.adj_[static_cast<std::size_t>(nu)] = low | high;
    }
    int total = 0;
    for (int u = 0; u < g.n_; ++u) total += std::popcount(g.adj_[static_cast<std::size_t>(u)]);
    g.m_ = total / 2;
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (int v = 0; v < n_; ++v)
        g.adj_[static_cast<std::size_t>(v)] = full & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    g.m_ = n_ * (n_ - 1) / 2 - m_;
    return g;
}

bool Graph::is_connected() const {
    if (n_ < 1) throw std::invalid_argument("is_connected requires n >= 1");
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[static_cast<std::size_t>(v)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

std::string Graph::to_graph6() const {
    if (n_ > 62) throw std::invalid_argument("graph6 single-byte size field limited to n <= 62, n=" + std::to_string(n_));
    std::string out;
    out.push_back(static_cast<char>(n_ + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph Graph::from_graph6(std::string_view s) {
    if (s.empty()) throw Graph6Error("empty graph6 string", 0);
    unsigned char first = static_cast<unsigned char>(s[0]);
    if (first < 63 || first > 126) throw Graph6Error("size byte outside 63..126", 0);
    if (first == 126) throw Graph6Error("multi-byte size field not supported (n > 62)", 0);
    int n = first - 63;
    int total_bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((total_bits + 5) / 6);
    if (s.size() < 1 + need) throw Graph6Error("truncated bit stream", s.size());
    if (s.size() > 1 + need) throw Graph6Error("trailing data after graph6 payload", 1 + need);

    Graph g(n);
    int bit = 0;
    int i = 0, j = 1;
    for (std::size_t byte = 1; byte <= need; ++byte) {
        unsigned char c = static_cast<unsigned char>(s[byte]);
        if (c < 63 || c > 126) throw Graph6Error("payload byte outside 63..126", byte);
        int val = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int x = (val >> b) & 1;
            if (bit < total_bits) {
                if (x) g.set_edge_unchecked(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (x) {
                throw Graph6Error("nonzero padding bits", byte);
            }
        }
    }
    return g;
}

std::string Graph::to_edge_list_text() const {
    std::ostringstream os;
    os << n_ << ' ' << m_ << '\n';
    for (const Edge& e : edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph Graph::from_edge_list_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    long long n = -1, m = -1;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: expected header line \"n m\"");
    if (n < 0 || n > max_vertices) throw std::invalid_argument("edge list: vertex count " + std::to_string(n) + " outside 0..64");
    if (m < 0) throw std::invalid_argument("edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    std::string rest;
    if (is >> rest) throw std::invalid_argument("edge list: trailing data after " + std::to_string(m) + " edges");
    return from_edge_list(static_cast<int>(n), edges);
}

}  // namespace starcrit
