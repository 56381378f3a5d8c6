// families.cpp
// The horn and double-horn generators transcribe the 1-based edge-set
// definitions and shift to 0-based; structural consequences (clique sizes,
// degrees, edge counts) are asserted in tests, not here.

#include "starcrit/families.hpp"

namespace starcrit {

namespace {

void require_min(int n, int min, const char* family) {
    if (n < min)
        throw std::invalid_argument(std::string(family) + " requires n >= " + std::to_string(min) + ", got " + std::to_string(n));
}

}  // namespace

Graph horn(int n) {
    require_min(n, 5, "horn");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 1; j <= n - 1; ++j) edges.emplace_back(i - 1, j - 1);
    edges.emplace_back(n - 2, n - 1);  // v_{n-1} v_n
    return Graph::from_edge_list(n, edges);
}

Graph double_horn(int n) {
    require_min(n, 5, "double_horn");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n - 4; ++i)
        for (int j = i + 1; j <= n - 4; ++j) edges.emplace_back(i - 1, j - 1);
    for (int i = 1; i <= n - 5; ++i) edges.emplace_back(n - 3 - 1, i - 1);
    for (int i = 2; i <= n - 4; ++i) edges.emplace_back(n - 2 - 1, i - 1);
    edges.emplace_back(n - 2 - 1, n - 3 - 1);
    edges.emplace_back(n - 1 - 1, n - 3 - 1);
    edges.emplace_back(n - 1, n - 2 - 1);
    return Graph::from_edge_list(n, edges);
}

Graph cone_c5(int n) {
    require_min(n, 5, "cone_c5");
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    for (int i = 5; i < n; ++i)
        for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
    return Graph::from_edge_list(n, edges);
}

Graph standard(Family family, int n) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case Family::Complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        case Family::Path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::Cycle:
            if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case Family::Star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case Family::Independent:
            break;
        default:
            throw std::invalid_argument("standard() only handles the plain families");
    }
    return Graph::from_edge_list(n, edges);
}

Graph make_family(Family family, int n) {
    switch (family) {
        case Family::Horn: return horn(n);
        case Family::DoubleHorn: return double_horn(n);
        case Family::ConeC5: return cone_c5(n);
        default: return standard(family, n);
    }
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "horn") return Family::Horn;
    if (name == "double-horn") return Family::DoubleHorn;
    if (name == "cone-c5") return Family::ConeC5;
    if (name == "complete") return Family::Complete;
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "independent") return Family::Independent;
    return std::nullopt;
}

std::string family_name(Family family) {
    switch (family) {
        case Family::Horn: return "horn";
        case Family::DoubleHorn: return "double-horn";
        case Family::ConeC5: return "cone-c5";
        case Family::Complete: return "complete";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::Independent: return "independent";
    }
    throw std::logic_error("unreachable");
}

}  // namespace starcrit
