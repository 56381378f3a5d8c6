// enumerate.cpp
// Canonical forms by exhaustive permutation search with prefix pruning:
// vertices are placed one at a time, the new column of upper-triangle bits is
// compared against the incumbent minimum, and branches that are already
// larger die immediately. Augmentation then extends every (n-1)-vertex class
// by one vertex with all 2^(n-1) neighborhoods and deduplicates on the form.

#include "starcrit/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "starcrit/coloring.hpp"
#include "starcrit/criticality.hpp"
#include "starcrit/patterns.hpp"

namespace starcrit {

namespace {

int triangle_bits(int n) { return n * (n - 1) / 2; }

struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0;
    int total = 0;
    std::uint64_t best = 0;
    std::array<int, 8> placed{};
    std::uint64_t used = 0;

    // depth d: labels 0..d-1 assigned; prefix holds d(d-1)/2 bits
    void dfs(int d, std::uint64_t prefix) {
        int prefix_len = triangle_bits(d);
        if (d == n) {
            if (prefix < best) best = prefix;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < d; ++i) col = (col << 1) | (g->adjacent(placed[static_cast<std::size_t>(i)], v) ? 1 : 0);
            std::uint64_t next = (prefix << d) | col;
            // compare against the incumbent's prefix of the same length
            if (next > (best >> (total - (prefix_len + d)))) continue;
            placed[static_cast<std::size_t>(d)] = v;
            used |= std::uint64_t{1} << v;
            dfs(d + 1, next);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

std::uint64_t identity_bits(const Graph& g) {
    std::uint64_t bits = 0;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
    return bits;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_form limited to n <= 8, got n=" + std::to_string(n));
    if (n <= 1) return {n, 0};
    CanonSearch search;
    search.g = &g;
    search.n = n;
    search.total = triangle_bits(n);
    search.best = identity_bits(g);
    search.dfs(0, 0);
    return {n, search.best};
}

Graph graph_from_bits(int n, std::uint64_t bits) {
    std::vector<std::pair<int, int>> edges;
    int pos = triangle_bits(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((bits >> --pos) & 1u) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

namespace {

std::mutex enum_mutex;
std::map<int, std::vector<Graph>> all_cache;
std::map<int, std::vector<Graph>> connected_cache;

std::vector<Graph> build_all(int n) {
    if (n == 1) return {Graph(1)};
    const std::vector<Graph>& smaller = enumerate_all(n - 1);
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& parent : smaller) {
        std::vector<std::pair<int, int>> base;
        for (const Edge& e : parent.edges()) base.emplace_back(e.u, e.v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<std::pair<int, int>> edges = base;
            for (int v = 0; v < n - 1; ++v)
                if ((mask >> v) & 1u) edges.emplace_back(v, n - 1);
            seen.insert(canonical_form(Graph::from_edge_list(n, edges)).bits);
        }
    }
    std::vector<std::uint64_t> forms(seen.begin(), seen.end());
    std::sort(forms.begin(), forms.end());
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (std::uint64_t bits : forms) out.push_back(graph_from_bits(n, bits));
    return out;
}

}  // namespace

const std::vector<Graph>& enumerate_all(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumeration limited to 1 <= n <= 8, got n=" + std::to_string(n));
    {
        std::lock_guard<std::mutex> lock(enum_mutex);
        auto it = all_cache.find(n);
        if (it != all_cache.end()) return it->second;
    }
    std::vector<Graph> built = build_all(n);  // recurses on n-1 with the lock released
    std::lock_guard<std::mutex> lock(enum_mutex);
    return all_cache.emplace(n, std::move(built)).first->second;
}

const std::vector<Graph>& enumerate_connected(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumeration limited to 1 <= n <= 8, got n=" + std::to_string(n));
    {
        std::lock_guard<std::mutex> lock(enum_mutex);
        auto it = connected_cache.find(n);
        if (it != connected_cache.end()) return it->second;
    }
    const std::vector<Graph>& all = enumerate_all(n);
    std::vector<Graph> connected;
    for (const Graph& g : all)
        if (g.is_connected()) connected.push_back(g);
    std::lock_guard<std::mutex> lock(enum_mutex);
    return connected_cache.emplace(n, std::move(connected)).first->second;
}

// ---------------------------------------------------------------------------
// claim verification

std::optional<Claim> parse_claim(const std::string& id) {
    if (id == "3critical") return Claim::ThreeCritical;
    if (id == "lem-free") return Claim::LemFree;
    if (id == "n1critical" || id == "n1-critical") return Claim::N1Critical;
    if (id == "lem-free-n2") return Claim::LemFreeN2;
    if (id == "n2critical" || id == "n2-critical") return Claim::N2Critical;
    if (id == "no-proper-n1") return Claim::NoProperN1;
    if (id == "lem-p4") return Claim::LemP4;
    if (id == "edge-bounds-n1") return Claim::EdgeBoundsN1;
    if (id == "edge-bounds-n2") return Claim::EdgeBoundsN2;
    return std::nullopt;
}

std::string claim_id(Claim claim) {
    switch (claim) {
        case Claim::ThreeCritical: return "3critical";
        case Claim::LemFree: return "lem-free";
        case Claim::N1Critical: return "n1critical";
        case Claim::LemFreeN2: return "lem-free-n2";
        case Claim::N2Critical: return "n2critical";
        case Claim::NoProperN1: return "no-proper-n1";
        case Claim::LemP4: return "lem-p4";
        case Claim::EdgeBoundsN1: return "edge-bounds-n1";
        case Claim::EdgeBoundsN2: return "edge-bounds-n2";
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> claim_ids() {
    return {"3critical", "lem-free", "n1critical", "lem-free-n2", "n2critical",
            "no-proper-n1", "lem-p4", "edge-bounds-n1", "edge-bounds-n2"};
}

namespace {

bool has_i3_or_2k2(const Graph& g) {
    return find_induced(g, PatternKind::I3).has_value() || find_induced(g, PatternKind::TwoK2).has_value();
}

// chi_s(g) == k with every edge deletion dropping below k; assumes m >= 1
// checks are done by the caller when needed.
bool direct_star_critical_at(const Graph& g, int k, int chi_s) {
    if (chi_s != k) return false;
    for (const Edge& e : g.edges())
        if (star_chromatic_number_capped(g.delete_edge(e), k) >= k) return false;
    return true;
}

// One claim evaluated on one graph. Returns population membership and, for
// members, whether the claim holds.
struct ClaimOutcome {
    bool in_population = false;
    bool holds = true;
};

ClaimOutcome evaluate(Claim claim, int n, const Graph& g) {
    ClaimOutcome out;
    int gn = g.vertex_count();
    if (gn < 1 || !g.is_connected()) return out;  // all claims quantify over connected graphs
    switch (claim) {
        case Claim::ThreeCritical: {
            if (gn > n) return out;
            out.in_population = true;
            bool expected = false;
            if (gn == 3 && g.edge_count() == 3) expected = true;                       // K3
            if (gn == 4 && g.edge_count() == 3 && canonical_form(g) == canonical_form(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})))
                expected = true;                                                       // P4
            bool actual = false;
            if (g.edge_count() >= 1) {
                int chi_s = star_chromatic_number(g).k;
                actual = direct_star_critical_at(g, 3, chi_s);
            }
            out.holds = (actual == expected);
            return out;
        }
        case Claim::LemFree: {
            if (gn != n || g.is_complete()) return out;
            out.in_population = true;
            bool lhs = star_chromatic_number(g).k == n - 1;
            bool rhs = is_free(g, {PatternKind::I3, PatternKind::TwoK2});
            out.holds = (lhs == rhs);
            return out;
        }
        case Claim::N1Critical: {
            if (gn != n || g.is_complete()) return out;
            out.in_population = true;
            CharacterizationVerdict verdict = is_n_minus_1_critical(g);
            int chi_s = star_chromatic_number(g).k;
            bool direct = g.edge_count() >= 1 && direct_star_critical_at(g, n - 1, chi_s);
            out.holds = (verdict.applicable && verdict.holds == direct);
            return out;
        }
        case Claim::LemFreeN2: {
            if (gn != n || !has_i3_or_2k2(g)) return out;
            out.in_population = true;
            bool lhs = star_chromatic_number(g).k == n - 2;
            bool rhs = is_free(g, {PatternKind::I4, PatternKind::TwoK2PlusK1, PatternKind::P3PlusP2});
            out.holds = (lhs == rhs);
            return out;
        }
        case Claim::N2Critical: {
            if (gn != n || !has_i3_or_2k2(g)) return out;
            out.in_population = true;
            CharacterizationVerdict verdict = is_n_minus_2_critical(g);
            int chi_s = star_chromatic_number(g).k;
            bool direct = g.edge_count() >= 1 && direct_star_critical_at(g, n - 2, chi_s);
            out.holds = (verdict.applicable && verdict.holds == direct);
            return out;
        }
        case Claim::NoProperN1: {
            if (gn != n) return out;
            int chi = chromatic_number(g).k;
            if (chi != n - 1) return out;
            out.in_population = true;
            bool critical = true;
            for (const Edge& e : g.edges())
                if (chromatic_number_capped(g.delete_edge(e), chi) >= chi) {
                    critical = false;
                    break;
                }
            out.holds = !critical;
            return out;
        }
        case Claim::LemP4: {
            if (gn != n) return out;
            out.in_population = true;
            out.holds = (is_star_graph(g) == !contains_p4_subgraph(g));
            return out;
        }
        case Claim::EdgeBoundsN1: {
            if (gn != n || g.edge_count() < 1) return out;
            int chi_s = star_chromatic_number(g).k;
            if (!direct_star_critical_at(g, n - 1, chi_s)) return out;
            out.in_population = true;
            out.holds = audit_bounds(g, BoundKind::N1Critical).satisfied();
            return out;
        }
        case Claim::EdgeBoundsN2: {
            if (gn != n || g.edge_count() < 1) return out;
            int chi_s = star_chromatic_number(g).k;
            if (!direct_star_critical_at(g, n - 2, chi_s)) return out;
            out.in_population = true;
            out.holds = audit_bounds(g, BoundKind::N2Critical).satisfied();
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

int claim_min_n(Claim claim) {
    switch (claim) {
        case Claim::LemFree:
        case Claim::N1Critical:
        case Claim::LemFreeN2:
        case Claim::N2Critical:
        case Claim::EdgeBoundsN1:
        case Claim::EdgeBoundsN2:
            return 5;
        case Claim::LemP4:
            return 4;
        default:
            return 1;
    }
}

VerificationRun run_over_pool(Claim claim, int n, const std::vector<Graph>& pool, int jobs) {
    VerificationRun run;
    run.claim = claim_id(claim);
    run.n = n;
    if (n < claim_min_n(claim)) return run;  // below the claim's stated order: nothing to check

    std::vector<signed char> verdict(pool.size(), -1);  // -1 skip, 0 fail, 1 ok
    long examined = 0;

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            ClaimOutcome out = evaluate(claim, n, pool[i]);
            verdict[i] = out.in_population ? (out.holds ? 1 : 0) : -1;
        }
    };

    int threads = std::max(1, jobs);
    if (threads == 1 || pool.size() < 2) {
        worker(0, pool.size());
    } else {
        std::vector<std::thread> crew;
        std::size_t chunk = (pool.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            std::size_t begin = static_cast<std::size_t>(t) * chunk;
            std::size_t end = std::min(pool.size(), begin + chunk);
            if (begin >= end) break;
            crew.emplace_back(worker, begin, end);
        }
        for (std::thread& th : crew) th.join();
    }

    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (verdict[i] < 0) continue;
        ++examined;
        if (verdict[i] == 0) run.counterexamples.push_back(pool[i].to_graph6());
    }
    run.graphs_examined = examined;
    return run;
}

}  // namespace

VerificationRun verify_claim(Claim claim, int n, int jobs) {
    if (n < 1 || n > 8) throw std::invalid_argument("claim verification limited to 1 <= n <= 8, got n=" + std::to_string(n));
    std::vector<Graph> pool;
    if (claim == Claim::ThreeCritical) {
        for (int k = 1; k <= n; ++k)
            for (const Graph& g : enumerate_connected(k)) pool.push_back(g);
    } else {
        pool = enumerate_connected(n);
    }
    return run_over_pool(claim, n, pool, jobs);
}

VerificationRun verify_claim_over(Claim claim, int n, const std::vector<Graph>& pool, int jobs) {
    return run_over_pool(claim, n, pool, jobs);
}

// ---------------------------------------------------------------------------
// edge-bound audits, integer arithmetic only

namespace {

std::string fraction_text(long long num, long long den) {
    std::ostringstream os;
    if (num % den == 0)
        os << num / den;
    else
        os << num << "/" << den;
    return os.str();
}

}  // namespace

BoundsReport audit_bounds(const Graph& g, BoundKind kind) {
    BoundsReport r;
    long long n = g.vertex_count();
    long long m = g.edge_count();
    r.n = static_cast<int>(n);
    r.m = static_cast<int>(m);
    if (kind == BoundKind::N1Critical) {
        r.bound_name = "(n-1)-critical";
        // strict lower: m > (n^2 - n - n*sqrt(n))/2  <=>  t < 0 or t^2 < n^3
        // with t = n^2 - n - 2m
        long long t = n * n - n - 2 * m;
        r.lower_ok = t < 0 || t * t < n * n * n;
        long long upper = (n - 1) * (n - 2) / 2;
        r.upper_ok = m <= upper;
        r.lower_text = "(n^2-n-n*sqrt(n))/2 < " + std::to_string(m);
        r.upper_text = std::to_string(m) + " <= " + std::to_string(upper);
    } else {
        r.bound_name = "(n-2)-critical";
        r.lower_ok = 6 * m >= n * (n - 3);
        r.upper_ok = 2 * m <= n * (n - 3);
        r.lower_text = fraction_text(n * (n - 3), 6) + " <= " + std::to_string(m);
        r.upper_text = std::to_string(m) + " <= " + fraction_text(n * (n - 3), 2);
    }
    return r;
}

ComplementConditionsReport audit_complement_conditions(const Graph& g) {
    ComplementConditionsReport r;
    long long n = g.vertex_count();
    Graph comp = g.complement();
    long long cm = comp.edge_count();
    r.n = static_cast<int>(n);
    r.complement_m = static_cast<int>(cm);
    r.c3c4_free = complement_is_c3c4_free(g);
    // m̄ <= n*sqrt(n-1)/2  <=>  (2m̄)^2 <= n^2 (n-1)
    r.c3c4_edge_bound_ok = 4 * cm * cm <= n * n * (n - 1);
    r.k4_free = complement_is_k4_free(g);
    r.turan_edge_bound_ok = 3 * cm <= n * n;
    return r;
}

}  // namespace starcrit
