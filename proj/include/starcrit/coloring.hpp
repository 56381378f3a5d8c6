// coloring.hpp
// Star-coloring validation and exact chromatic / star-chromatic number
// solvers. The branch-and-bound solver is certified: it always returns a
// coloring that passes is_star_coloring, and minimality is established by
// exhausting the search at k-1. An independent exhaustive set-partition
// oracle is provided for cross-checking at n <= 9.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "starcrit/graph.hpp"

namespace starcrit {

// Vertex -> color assignment. Colors are 1..k; k is the maximum value
// present (0 for an empty assignment).
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    static Coloring of(std::vector<int> colors);

    // Renames colors to 1..k in order of first use along vertex index.
    Coloring normalized() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// A 4-vertex path a-b-c-d colored with exactly two alternating colors:
// col(a)=col(c)=color_ac, col(b)=col(d)=color_bd.
struct BicoloredP4Witness {
    std::array<int, 4> path;
    int color_ac;
    int color_bd;
};

bool is_proper(const Graph& g, const Coloring& c);  // throws on length mismatch

// Smallest witness (path direction normalized, then lexicographic) among all
// bicolored 4-paths, or absent. Requires a proper coloring.
std::optional<BicoloredP4Witness> find_bicolored_p4(const Graph& g, const Coloring& c);

// Proper and no bicolored P4. Total: improper colorings return false.
bool is_star_coloring(const Graph& g, const Coloring& c);

// Every component of the subgraph induced by color classes i and j is a
// star. Requires a proper coloring; i == j is true by convention.
bool two_class_union_is_star_forest(const Graph& g, const Coloring& c, int i, int j);

struct ColoringResult {
    int k;
    Coloring coloring;
};

// Exact proper chromatic number with certificate. n >= 1.
ColoringResult chromatic_number(const Graph& g);

// Exact star chromatic number with certificate. n >= 1. Disconnected inputs
// are solved per component and the maximum is taken (no 4-path crosses
// components).
ColoringResult star_chromatic_number(const Graph& g);

// min(chi_s(g), cap): feasibility is searched for k < cap only, so a cap
// known to be an upper bound (e.g. chi_s of a supergraph) skips the final
// feasibility proof. cap >= 1.
int star_chromatic_number_capped(const Graph& g, int cap);
int chromatic_number_capped(const Graph& g, int cap);

// Independent oracle: enumerates all set partitions of V in restricted-growth
// order and tests is_star_coloring. n <= 9.
int star_chromatic_number_oracle(const Graph& g);

}  // namespace starcrit
