// enumerate.hpp
// Isomorphism-reduced enumeration of small graphs (exhaustive-permutation
// canonical forms, augmentation by one vertex), executable verification of
// the paper-scale claims over those graphs, and exact-integer edge-bound
// audits.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcrit/graph.hpp"

namespace starcrit {

// Lexicographically minimal upper-triangle bit string over all vertex
// permutations, bits in column order (0,1),(0,2),(1,2),(0,3),... with the
// first pair most significant. Equal forms <=> isomorphic (n <= 8).
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);  // n <= 8, else rejected

// The graph whose adjacency *is* the given upper-triangle bit string.
Graph graph_from_bits(int n, std::uint64_t bits);

// One representative per isomorphism class, in canonical-form order. Each
// returned graph is its own canonical representative. Results are cached.
// 1 <= n <= 8.
const std::vector<Graph>& enumerate_all(int n);
const std::vector<Graph>& enumerate_connected(int n);

enum class Claim {
    ThreeCritical,   // only K3 and P4 are 3-critical, over orders <= n
    LemFree,         // chi_s = n-1  <=>  (I3,2K2)-free, non-complete, order n >= 5
    N1Critical,      // characterization of (n-1)-critical == direct method
    LemFreeN2,       // chi_s = n-2  <=>  (I4,2K2+K1,P3+P2)-free, given I3 or 2K2
    N2Critical,      // characterization of (n-2)-critical == direct method
    NoProperN1,      // no graph with chi = n-1 is proper-coloring critical
    LemP4,           // star graph <=> no P4 subgraph, order n >= 4
    EdgeBoundsN1,    // every (n-1)-critical graph satisfies the n-1 edge bounds
    EdgeBoundsN2,    // every (n-2)-critical graph satisfies the n-2 edge bounds
};

std::optional<Claim> parse_claim(const std::string& id);
std::string claim_id(Claim claim);
std::vector<std::string> claim_ids();

struct VerificationRun {
    std::string claim;
    int n = 0;
    long graphs_examined = 0;           // graphs meeting the claim's hypothesis
    std::vector<std::string> counterexamples;  // graph6, canonical order

    bool verified() const { return counterexamples.empty(); }
};

// Runs a claim over the internal enumeration (or `pool` when given, e.g. an
// externally generated graph6 list; graphs outside the claim's population are
// skipped). Claims whose statement requires a minimum order skip smaller n.
// Evaluation fans out over `jobs` workers; output is scheduling-independent.
VerificationRun verify_claim(Claim claim, int n, int jobs = 1);
VerificationRun verify_claim_over(Claim claim, int n, const std::vector<Graph>& pool, int jobs = 1);

enum class BoundKind { N1Critical, N2Critical };

// Edge-count bounds, decided in pure integer arithmetic:
//   N1: (n^2 - n - n*sqrt(n))/2 < m <= (n-1)(n-2)/2
//       strict half via t = n^2 - n - 2m; satisfied iff t < 0 or t^2 < n^3
//   N2: n(n-3)/6 <= m <= n(n-3)/2, via 6m >= n(n-3) and 2m <= n(n-3)
struct BoundsReport {
    int n = 0;
    int m = 0;
    std::string bound_name;
    bool lower_ok = false;
    bool upper_ok = false;
    std::string lower_text;  // the inequality instantiated at (n, m)
    std::string upper_text;

    bool satisfied() const { return lower_ok && upper_ok; }
};

BoundsReport audit_bounds(const Graph& g, BoundKind kind);

// Complement-side consequences: for chi_s = n-1 the complement must be
// (C3,C4)-free with at most n*sqrt(n-1)/2 edges; for chi_s = n-2 it must be
// K4-free with at most n^2/3 edges. All verdicts integer-exact.
struct ComplementConditionsReport {
    int n = 0;
    int complement_m = 0;
    bool c3c4_free = false;
    bool c3c4_edge_bound_ok = false;  // 4*m̄^2 <= n^2(n-1)
    bool k4_free = false;
    bool turan_edge_bound_ok = false;  // 3*m̄ <= n^2
};

ComplementConditionsReport audit_complement_conditions(const Graph& g);

}  // namespace starcrit
