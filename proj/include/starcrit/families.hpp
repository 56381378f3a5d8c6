// families.hpp
// Generators for the named graph families: horn H_n and double-horn D_n
// (transcribed literally from their edge-set definitions), the iterated cone
// over C5, and the standard test graphs.

#pragma once

#include <optional>
#include <string>

#include "starcrit/graph.hpp"

namespace starcrit {

enum class Family { Horn, DoubleHorn, ConeC5, Complete, Path, Cycle, Star, Independent };

// E(H_n) = { v_i v_j : 1 <= i <= n-3, i+1 <= j <= n-1 } + { v_{n-1} v_n },
// shifted to 0-based. n >= 5. m = (n-1)(n-2)/2.
Graph horn(int n);

// Clique on [n-4]; v_{n-3} ~ v_i for i in [n-5]; v_{n-2} ~ v_i for
// i in 2..n-4; plus v_{n-2}v_{n-3}, v_{n-1}v_{n-3}, v_n v_{n-2}. n >= 5.
// D_5 comes out disconnected (v_1 isolated); the generator follows the
// definition and leaves connectivity to the caller.
Graph double_horn(int n);

// G_5 = C5; G_i adds a vertex adjacent to everything in G_{i-1}. n >= 5.
Graph cone_c5(int n);

// Complete, Path, Cycle (n >= 3), Star K_{1,n-1}, Independent. n >= 1.
Graph standard(Family family, int n);

// Dispatch over all families, including the paper ones.
Graph make_family(Family family, int n);

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family family);

}  // namespace starcrit
