// patterns.cpp

#include "starcrit/patterns.hpp"

#include <bit>
#include <initializer_list>
#include <sstream>
#include <utility>

namespace starcrit {

namespace {

// Independent k-set scan in ascending order; the first hit is the
// lex-smallest tuple.
std::optional<std::vector<int>> find_independent(const Graph& g, int k) {
    int n = g.vertex_count();
    std::vector<int> pick;
    auto rec = [&](auto&& self, int lo, std::uint64_t forbidden) -> bool {
        if (static_cast<int>(pick.size()) == k) return true;
        for (int v = lo; v < n; ++v) {
            if ((forbidden >> v) & 1u) continue;
            pick.push_back(v);
            if (self(self, v + 1, forbidden | g.neighbors(v) | (std::uint64_t{1} << v))) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(rec, 0, 0)) return pick;
    return std::nullopt;
}

// 2K2 scan: (a,b,c,d), edges ab and cd only, a<b, c<d, a<c. Appends the
// trailing isolated vertex when with_k1 is set. Loop nesting follows the
// tuple order, so the first hit is lexicographically smallest.
std::optional<std::vector<int>> find_two_k2(const Graph& g, bool with_k1) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = a + 1; c < n; ++c) {
                if (c == b) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (d == b || !g.adjacent(c, d)) continue;
                    if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d)) continue;
                    if (!with_k1) return std::vector<int>{a, b, c, d};
                    for (int e = 0; e < n; ++e) {
                        if (e == a || e == b || e == c || e == d) continue;
                        if (g.adjacent(e, a) || g.adjacent(e, b) || g.adjacent(e, c) || g.adjacent(e, d)) continue;
                        return std::vector<int>{a, b, c, d, e};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// P3+P2 scan: (x,y,z,a,b) with induced path x-y-z (no xz edge), edge ab,
// x<z, a<b, no edges between the parts.
std::optional<std::vector<int>> find_p3_plus_p2(const Graph& g) {
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (y == x || !g.adjacent(x, y)) continue;
            for (int z = x + 1; z < n; ++z) {
                if (z == y || !g.adjacent(y, z) || g.adjacent(x, z)) continue;
                for (int a = 0; a < n; ++a) {
                    if (a == x || a == y || a == z) continue;
                    if (g.adjacent(a, x) || g.adjacent(a, y) || g.adjacent(a, z)) continue;
                    for (int b = a + 1; b < n; ++b) {
                        if (b == x || b == y || b == z || !g.adjacent(a, b)) continue;
                        if (g.adjacent(b, x) || g.adjacent(b, y) || g.adjacent(b, z)) continue;
                        return std::vector<int>{x, y, z, a, b};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

int pattern_order(PatternKind kind) {
    switch (kind) {
        case PatternKind::I3: return 3;
        case PatternKind::TwoK2: return 4;
        case PatternKind::I4: return 4;
        case PatternKind::TwoK2PlusK1: return 5;
        case PatternKind::P3PlusP2: return 5;
    }
    throw std::logic_error("unreachable");
}

int pattern_edge_count(PatternKind kind) {
    switch (kind) {
        case PatternKind::I3: return 0;
        case PatternKind::TwoK2: return 2;
        case PatternKind::I4: return 0;
        case PatternKind::TwoK2PlusK1: return 2;
        case PatternKind::P3PlusP2: return 3;
    }
    throw std::logic_error("unreachable");
}

std::string pattern_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::I3: return "I3";
        case PatternKind::TwoK2: return "2K2";
        case PatternKind::I4: return "I4";
        case PatternKind::TwoK2PlusK1: return "2K2+K1";
        case PatternKind::P3PlusP2: return "P3+P2";
    }
    throw std::logic_error("unreachable");
}

std::optional<PatternWitness> find_induced(const Graph& g, PatternKind kind) {
    std::optional<std::vector<int>> tuple;
    switch (kind) {
        case PatternKind::I3: tuple = find_independent(g, 3); break;
        case PatternKind::I4: tuple = find_independent(g, 4); break;
        case PatternKind::TwoK2: tuple = find_two_k2(g, false); break;
        case PatternKind::TwoK2PlusK1: tuple = find_two_k2(g, true); break;
        case PatternKind::P3PlusP2: tuple = find_p3_plus_p2(g); break;
    }
    if (!tuple) return std::nullopt;
    return PatternWitness{kind, std::move(*tuple)};
}

bool witness_valid(const Graph& g, const PatternWitness& w) {
    const std::vector<int>& v = w.vertices;
    if (static_cast<int>(v.size()) != pattern_order(w.kind)) return false;
    int n = g.vertex_count();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= n) return false;
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    }

    // role-prescribed edge set inside the tuple
    std::vector<std::pair<int, int>> want;
    switch (w.kind) {
        case PatternKind::I3:
        case PatternKind::I4:
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i - 1] >= v[i]) return false;
            break;
        case PatternKind::TwoK2:
        case PatternKind::TwoK2PlusK1:
            if (!(v[0] < v[1] && v[2] < v[3] && v[0] < v[2])) return false;
            want = {{0, 1}, {2, 3}};
            break;
        case PatternKind::P3PlusP2:
            if (!(v[0] < v[2] && v[3] < v[4])) return false;
            want = {{0, 1}, {1, 2}, {3, 4}};
            break;
    }
    int edges_found = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            bool adj = g.adjacent(v[i], v[j]);
            bool prescribed = false;
            for (auto [a, b] : want)
                if ((static_cast<std::size_t>(a) == i && static_cast<std::size_t>(b) == j) ||
                    (static_cast<std::size_t>(a) == j && static_cast<std::size_t>(b) == i))
                    prescribed = true;
            if (adj != prescribed) return false;
            if (adj) ++edges_found;
        }
    }
    return edges_found == pattern_edge_count(w.kind);
}

bool is_free(const Graph& g, const std::vector<PatternKind>& kinds) {
    for (PatternKind k : kinds)
        if (find_induced(g, k)) return false;
    return true;
}

bool contains_p4_subgraph(const Graph& g) {
    int n = g.vertex_count();
    for (int b = 0; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
            if (!g.adjacent(b, c)) continue;
            // b-c is the middle edge; extend to a-b and c-d
            std::uint64_t as = g.neighbors(b) & ~(std::uint64_t{1} << c);
            std::uint64_t ds = g.neighbors(c) & ~(std::uint64_t{1} << b);
            if (!as || !ds) continue;
            // need a != d; fails only if both sets are the same singleton
            if ((as & ~ds) || (ds & ~as) || std::popcount(as) > 1) return true;
        }
    }
    return false;
}

bool contains_p4_subgraph_by_degree(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("degree-argument P4 detector requires a connected graph");
    if (g.vertex_count() < 4) return false;
    return !is_star_graph(g);
}

bool is_star_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1 || !g.is_connected()) return false;
    if (g.edge_count() != n - 1) return false;
    int big = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2) ++big;
    return big <= 1;
}

bool complement_is_c3c4_free(const Graph& g) {
    // direct scan on the complement
    Graph comp = g.complement();
    int n = comp.vertex_count();
    bool direct = true;
    for (int a = 0; a < n && direct; ++a)
        for (int b = a + 1; b < n && direct; ++b) {
            if (!comp.adjacent(a, b)) continue;
            if (comp.neighbors(a) & comp.neighbors(b)) direct = false;  // C3
        }
    if (direct) {
        // C4 subgraph: two vertices with two common neighbors
        for (int a = 0; a < n && direct; ++a)
            for (int b = a + 1; b < n && direct; ++b)
                if (std::popcount(comp.neighbors(a) & comp.neighbors(b)) >= 2) direct = false;
    }

    // same predicate through g: no I3 (triangle in complement) and no induced
    // 2K2 (chordless C4 in complement); a chorded C4 has a triangle
    bool via_patterns = !find_induced(g, PatternKind::I3) && !find_induced(g, PatternKind::TwoK2);

    if (direct != via_patterns)
        throw std::logic_error("complement C3/C4 detectors disagree on " + g.to_graph6());
    return direct;
}

bool complement_is_k4_free(const Graph& g) {
    return !find_induced(g, PatternKind::I4).has_value();
}

std::string format_witness(const PatternWitness& w, bool one_based) {
    const int off = one_based ? 1 : 0;
    const std::vector<int>& v = w.vertices;
    std::ostringstream os;
    auto group = [&](std::initializer_list<int> idx, char sep) {
        os << '(';
        bool first = true;
        for (int i : idx) {
            if (!first) os << sep;
            os << v[static_cast<std::size_t>(i)] + off;
            first = false;
        }
        os << ')';
    };
    switch (w.kind) {
        case PatternKind::I3: group({0, 1, 2}, ','); break;
        case PatternKind::I4: group({0, 1, 2, 3}, ','); break;
        case PatternKind::TwoK2:
            group({0, 1}, ',');
            os << ',';
            group({2, 3}, ',');
            break;
        case PatternKind::TwoK2PlusK1:
            group({0, 1}, ',');
            os << ',';
            group({2, 3}, ',');
            os << ',';
            group({4}, ',');
            break;
        case PatternKind::P3PlusP2:
            group({0, 1, 2}, '-');
            os << ',';
            group({3, 4}, ',');
            break;
    }
    return os.str();
}

}  // namespace starcrit
