// criticality.hpp
// k-criticality decided directly from per-edge star chromatic numbers, and
// via the (I3,2K2) / (I4,2K2+K1,P3+P2) freeness characterizations. The direct
// method is ground truth; a characterization disagreeing with it is an
// internal error, not a result.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starcrit/coloring.hpp"
#include "starcrit/graph.hpp"
#include "starcrit/patterns.hpp"

namespace starcrit {

struct CriticalityReport {
    int chi_s = 0;
    int k_claimed = 0;
    bool premise_holds = false;  // k_claimed == chi_s
    std::vector<std::pair<Edge, int>> per_edge;  // chi_s(G-e), canonical edge order
    bool is_critical = false;
    std::optional<Edge> failing_edge;  // first edge whose deletion keeps chi_s
};

// chi_s(g) == k and chi_s(g-e) < k for every edge. m >= 1 required.
// If k != chi_s(g) the report flags the failed premise and skips the
// per-edge sweep.
CriticalityReport is_k_critical_direct(const Graph& g, int k);

struct CharacterizationVerdict {
    std::string claim;
    bool applicable = false;
    std::string inapplicable_reason;
    bool holds = false;
    // Pattern found in g itself (refutes the freeness half).
    std::optional<PatternWitness> freeness_violation;
    // For the criticality forms: one witness per edge deletion, absent where
    // G-e has none (which refutes the claim).
    std::vector<std::pair<Edge, std::optional<PatternWitness>>> per_edge;
};

// chi_s(G) = n-1  <=>  G is (I3,2K2)-free; non-complete, n >= 5.
CharacterizationVerdict chi_s_equals_n_minus_1(const Graph& g);

// (n-1)-critical <=> (I3,2K2)-free and every G-e contains I3 or 2K2.
CharacterizationVerdict is_n_minus_1_critical(const Graph& g);

// chi_s(G) = n-2 <=> G is (I4,2K2+K1,P3+P2)-free; n >= 5 and G contains an
// I3 or an induced 2K2.
CharacterizationVerdict chi_s_equals_n_minus_2(const Graph& g);

// (n-2)-critical <=> free as above and every G-e contains one of the three.
CharacterizationVerdict is_n_minus_2_critical(const Graph& g);

struct CriticalityLabel {
    enum class Kind { ThreeCritical, NMinus1Critical, NMinus2Critical, KCritical, NotCritical };
    Kind kind;
    int chi_s;
    std::string text() const;  // "3-critical", "(n-1)-critical", ..., "k-critical(5)", "not-critical"
};

// Labels g by direct criticality at k = chi_s(g). The (n-1) characterizations
// are cross-checked against the direct method and a disagreement throws
// std::logic_error with both certificates; the (n-2) freeness test is not a
// valid fast path (C6 is free yet has chi_s = 3) and never gates the label.
// Edgeless graphs are labeled not-critical.
CriticalityLabel classify_critical(const Graph& g);

}  // namespace starcrit
