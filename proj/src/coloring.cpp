// coloring.cpp
// The chi_s solver runs a feasibility DFS per k, k increasing from a greedy
// clique bound. Vertices are colored in static descending-degree order
// (index tie-break); a branch dies as soon as the new vertex lies on a
// monochromatic edge or closes a bicolored 4-path, and color symmetry is
// broken by allowing at most one fresh color beyond those already used.

#include "starcrit/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace starcrit {

Coloring Coloring::of(std::vector<int> colors) {
    Coloring c;
    c.k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    for (int x : colors)
        if (x < 1) throw std::invalid_argument("colors must be positive, got " + std::to_string(x));
    c.colors = std::move(colors);
    return c;
}

Coloring Coloring::normalized() const {
    std::vector<int> rename(static_cast<std::size_t>(k) + 1, 0);
    Coloring out;
    out.colors.reserve(colors.size());
    int next = 0;
    for (int x : colors) {
        if (rename[static_cast<std::size_t>(x)] == 0) rename[static_cast<std::size_t>(x)] = ++next;
        out.colors.push_back(rename[static_cast<std::size_t>(x)]);
    }
    out.k = next;
    return out;
}

namespace {

void require_matching_length(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring length " + std::to_string(c.colors.size()) +
                                    " != vertex count " + std::to_string(g.vertex_count()));
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    require_matching_length(g, c);
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::uint64_t nb = u + 1 >= 64 ? 0 : g.neighbors(u) >> (u + 1) << (u + 1);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)]) return false;
        }
    }
    return true;
}

std::optional<BicoloredP4Witness> find_bicolored_p4(const Graph& g, const Coloring& c) {
    require_matching_length(g, c);
    if (!is_proper(g, c)) throw std::invalid_argument("find_bicolored_p4 requires a proper coloring");
    auto col = [&](int v) { return c.colors[static_cast<std::size_t>(v)]; };

    std::optional<std::array<int, 4>> best;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        std::uint64_t bs = g.neighbors(a);
        while (bs) {
            int b = std::countr_zero(bs);
            bs &= bs - 1;
            std::uint64_t cs = g.neighbors(b) & ~(std::uint64_t{1} << a);
            while (cs) {
                int cc = std::countr_zero(cs);
                cs &= cs - 1;
                if (col(cc) != col(a)) continue;
                std::uint64_t ds = g.neighbors(cc) & ~(std::uint64_t{1} << a) & ~(std::uint64_t{1} << b);
                while (ds) {
                    int d = std::countr_zero(ds);
                    ds &= ds - 1;
                    if (col(d) != col(b)) continue;
                    std::array<int, 4> path{a, b, cc, d};
                    std::array<int, 4> rev{d, cc, b, a};
                    if (rev < path) path = rev;  // direction-normalized
                    if (!best || path < *best) best = path;
                }
            }
        }
    }
    if (!best) return std::nullopt;
    return BicoloredP4Witness{*best, col((*best)[0]), col((*best)[1])};
}

bool is_star_coloring(const Graph& g, const Coloring& c) {
    require_matching_length(g, c);
    if (!is_proper(g, c)) return false;
    return !find_bicolored_p4(g, c).has_value();
}

bool two_class_union_is_star_forest(const Graph& g, const Coloring& c, int i, int j) {
    require_matching_length(g, c);
    if (!is_proper(g, c)) throw std::invalid_argument("two_class_union_is_star_forest requires a proper coloring");
    if (i == j) return true;  // one class is edgeless

    std::uint64_t members = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.colors[static_cast<std::size_t>(v)] == i || c.colors[static_cast<std::size_t>(v)] == j)
            members |= std::uint64_t{1} << v;

    std::uint64_t left = members;
    while (left) {
        int start = std::countr_zero(left);
        // flood one component inside `members`
        std::uint64_t comp = std::uint64_t{1} << start, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors(v) & members;
            }
            frontier = next & ~comp;
            comp |= next;
        }
        left &= ~comp;

        int verts = std::popcount(comp);
        int deg2 = 0, twice_edges = 0;
        std::uint64_t scan = comp;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(g.neighbors(v) & comp);
            twice_edges += d;
            if (d >= 2) ++deg2;
        }
        if (twice_edges / 2 != verts - 1 || deg2 > 1) return false;  // not a star
    }
    return true;
}

namespace {

// Feasibility DFS shared by the proper and star solvers.
class ExactSolver {
public:
    ExactSolver(const Graph& g, bool star) : g_(g), n_(g.vertex_count()), star_(star) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
        color_.assign(static_cast<std::size_t>(n_), 0);
    }

    // Greedy clique along the vertex order; chi_s >= chi >= this.
    int clique_lower_bound() const {
        std::uint64_t clique = 0;
        int size = 0;
        for (int v : order_) {
            if ((g_.neighbors(v) & clique) == clique) {
                clique |= std::uint64_t{1} << v;
                ++size;
            }
        }
        return std::max(size, 1);
    }

    bool feasible(int k) {
        k_ = k;
        std::fill(color_.begin(), color_.end(), 0);
        colored_ = 0;
        return dfs(0, 0);
    }

    Coloring certificate() const { return Coloring::of(color_).normalized(); }

private:
    bool dfs(std::size_t idx, int used) {
        if (idx == order_.size()) return true;
        int v = order_[idx];
        int limit = std::min(used + 1, k_);  // at most one fresh color
        std::uint64_t nb = g_.neighbors(v) & colored_;
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            std::uint64_t scan = nb;
            while (scan) {
                int u = std::countr_zero(scan);
                scan &= scan - 1;
                if (color_[static_cast<std::size_t>(u)] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            color_[static_cast<std::size_t>(v)] = c;
            colored_ |= std::uint64_t{1} << v;
            if (!star_ || !closes_bicolored_p4(v)) {
                if (dfs(idx + 1, std::max(used, c))) return true;
            }
            colored_ &= ~(std::uint64_t{1} << v);
            color_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    // Any bicolored 4-path through v, over colored vertices only. Paths not
    // through v were checked when their own last vertex was colored.
    bool closes_bicolored_p4(int v) const {
        int cv = color_[static_cast<std::size_t>(v)];
        std::uint64_t nb_v = g_.neighbors(v) & colored_;

        // v as endpoint: v-b-c-d with col(c)=col(v), col(d)=col(b)
        std::uint64_t bs = nb_v;
        while (bs) {
            int b = std::countr_zero(bs);
            bs &= bs - 1;
            int cb = color_[static_cast<std::size_t>(b)];
            std::uint64_t cs = g_.neighbors(b) & colored_ & ~(std::uint64_t{1} << v);
            while (cs) {
                int c = std::countr_zero(cs);
                cs &= cs - 1;
                if (color_[static_cast<std::size_t>(c)] != cv) continue;
                std::uint64_t ds = g_.neighbors(c) & colored_ & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << b);
                while (ds) {
                    int d = std::countr_zero(ds);
                    ds &= ds - 1;
                    if (color_[static_cast<std::size_t>(d)] == cb) return true;
                }
            }
        }

        // v internal: a-v-c-d with col(a)=col(c), col(d)=col(v); covers v in
        // either middle position via path reversal
        std::uint64_t as = nb_v;
        while (as) {
            int a = std::countr_zero(as);
            as &= as - 1;
            int ca = color_[static_cast<std::size_t>(a)];
            std::uint64_t cs = nb_v & ~(std::uint64_t{1} << a);
            while (cs) {
                int c = std::countr_zero(cs);
                cs &= cs - 1;
                if (color_[static_cast<std::size_t>(c)] != ca) continue;
                std::uint64_t ds = g_.neighbors(c) & colored_ & ~(std::uint64_t{1} << a) & ~(std::uint64_t{1} << v);
                while (ds) {
                    int d = std::countr_zero(ds);
                    ds &= ds - 1;
                    if (color_[static_cast<std::size_t>(d)] == cv) return true;
                }
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    bool star_;
    int k_ = 0;
    std::vector<int> order_;
    std::vector<int> color_;
    std::uint64_t colored_ = 0;
};

std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> comps;
    int n = g.vertex_count();
    std::uint64_t left = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (left) {
        int start = std::countr_zero(left);
        std::uint64_t comp = std::uint64_t{1} << start, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask, std::vector<int>& back_map) {
    back_map.clear();
    std::uint64_t scan = mask;
    while (scan) {
        back_map.push_back(std::countr_zero(scan));
        scan &= scan - 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < back_map.size(); ++i)
        for (std::size_t j = i + 1; j < back_map.size(); ++j)
            if (g.adjacent(back_map[i], back_map[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edge_list(static_cast<int>(back_map.size()), edges);
}

// Solve one connected piece; cap limits the search (cap = n+1 for "no cap").
// Returns the colors found, or k == cap with no certificate.
struct PieceResult {
    int k;
    std::vector<int> colors;  // empty when capped out
};

PieceResult solve_piece(const Graph& g, bool star, int cap) {
    ExactSolver solver(g, star);
    int lb = solver.clique_lower_bound();
    for (int k = lb; k < cap; ++k) {
        if (solver.feasible(k)) {
            Coloring c = solver.certificate();
            return {c.k, c.colors};
        }
    }
    return {cap, {}};
}

ColoringResult solve(const Graph& g, bool star) {
    if (g.vertex_count() < 1) throw std::invalid_argument("solver requires n >= 1");
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    int k = 0;
    for (std::uint64_t mask : component_masks(g)) {
        std::vector<int> back;
        Graph piece = induced_subgraph(g, mask, back);
        PieceResult r = solve_piece(piece, star, piece.vertex_count() + 1);
        k = std::max(k, r.k);
        for (std::size_t i = 0; i < back.size(); ++i)
            colors[static_cast<std::size_t>(back[i])] = r.colors[i];
    }
    Coloring cert = Coloring::of(std::move(colors)).normalized();
    return {k, cert};
}

int solve_capped(const Graph& g, bool star, int cap) {
    if (g.vertex_count() < 1) throw std::invalid_argument("solver requires n >= 1");
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    int k = 1;
    for (std::uint64_t mask : component_masks(g)) {
        std::vector<int> back;
        Graph piece = induced_subgraph(g, mask, back);
        k = std::max(k, solve_piece(piece, star, cap).k);
        if (k >= cap) return cap;
    }
    return k;
}

}  // namespace

ColoringResult chromatic_number(const Graph& g) { return solve(g, false); }

ColoringResult star_chromatic_number(const Graph& g) { return solve(g, true); }

int star_chromatic_number_capped(const Graph& g, int cap) { return solve_capped(g, true, cap); }

int chromatic_number_capped(const Graph& g, int cap) { return solve_capped(g, false, cap); }

int star_chromatic_number_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("oracle requires n >= 1");
    if (n > 9) throw std::invalid_argument("oracle limited to n <= 9, got n=" + std::to_string(n));

    int best = n;  // all-distinct always works
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    // restricted-growth enumeration of set partitions; branches whose block
    // count already reaches the best are cut, as are improper assignments
    auto rec = [&](auto&& self, int v, int max_block) -> void {
        if (max_block + 1 >= best) return;
        if (v == n) {
            std::vector<int> colors(block.begin(), block.end());
            for (int& x : colors) ++x;
            if (is_star_coloring(g, Coloring::of(colors))) best = max_block + 1;
            return;
        }
        for (int b = 0; b <= std::min(max_block + 1, best - 2); ++b) {
            bool clash = false;
            for (int u = 0; u < v; ++u)
                if (block[static_cast<std::size_t>(u)] == b && g.adjacent(u, v)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            block[static_cast<std::size_t>(v)] = b;
            self(self, v + 1, std::max(max_block, b));
        }
    };
    block[0] = 0;
    rec(rec, 1, 0);
    return best;
}

}  // namespace starcrit
