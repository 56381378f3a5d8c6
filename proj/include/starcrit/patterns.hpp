// patterns.hpp
// Detectors for the five forbidden induced patterns (I3, 2K2, I4, 2K2+K1,
// P3+P2), plus P4-as-subgraph and the star-graph test. Detection is a direct
// scan over role-normalized vertex tuples; the first hit in scan order is the
// lexicographically smallest witness.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starcrit/graph.hpp"

namespace starcrit {

enum class PatternKind { I3, TwoK2, I4, TwoK2PlusK1, P3PlusP2 };

int pattern_order(PatternKind kind);       // 3, 4, 4, 5, 5
int pattern_edge_count(PatternKind kind);  // 0, 2, 0, 2, 3
std::string pattern_name(PatternKind kind);

// Vertex tuple evidencing an induced pattern. Role conventions:
//   I3, I4:      ascending vertices
//   2K2:         (a,b,c,d) with edges ab, cd; a<b, c<d, a<c
//   2K2+K1:      (a,b,c,d,e) as 2K2 plus trailing isolated vertex e
//   P3+P2:       (x,y,z,a,b) with path x-y-z and edge ab; x<z, a<b
struct PatternWitness {
    PatternKind kind;
    std::vector<int> vertices;
};

// Lexicographically smallest role-normalized witness, or absent.
std::optional<PatternWitness> find_induced(const Graph& g, PatternKind kind);

// Re-checks a witness tuple against g: distinct vertices, exactly the
// role-prescribed edges, no others.
bool witness_valid(const Graph& g, const PatternWitness& w);

bool is_free(const Graph& g, const std::vector<PatternKind>& kinds);

// P4 as a subgraph (three consecutive edges on four distinct vertices; NOT
// induced). The 4-tuple scan is the canonical detector.
bool contains_p4_subgraph(const Graph& g);

// Same predicate via the degree argument (two vertices of degree >= 2 force a
// P4 in a connected graph). Connected inputs only; exposed so the argument
// itself can be tested against the scan.
bool contains_p4_subgraph_by_degree(const Graph& g);

// Connected, acyclic, and at most one vertex of degree >= 2. K1 counts.
bool is_star_graph(const Graph& g);

// complement(g) has no C3 and no C4 as subgraphs. Computed two ways (direct
// subgraph scan on the complement, and I3/induced-2K2 freeness of g) which
// must agree; disagreement throws.
bool complement_is_c3c4_free(const Graph& g);

// complement(g) has no K4, i.e. g has no I4.
bool complement_is_k4_free(const Graph& g);

std::string format_witness(const PatternWitness& w, bool one_based = false);

}  // namespace starcrit
