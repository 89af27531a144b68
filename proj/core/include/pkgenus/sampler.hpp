#pragma once

#include <vector>

#include "pkgenus/diagram.hpp"
#include "pkgenus/random.hpp"
#include "pkgenus/unicellular.hpp"

namespace pkgenus {

/// The glue path a sampler walked: genera 0 = g_0 < g_1 < ... < g_r = g and
/// the vertex sets V_0..V_{r-1} glued at each step (|V_i| = 2(g_{i+1}-g_i)+1,
/// handles valid in the map before step i).
struct GluePathTrace {
  std::vector<int> genus_sequence;
  std::vector<std::vector<VertexHandle>> vertex_sets;
};

/// Uniform non-crossing perfect matching on 2n points, via the cycle lemma
/// applied to a random word of n up-steps and n+1 down-steps. Returned as a
/// 0-based partner table. Worst-case O(n).
std::vector<int> uniform_noncrossing_partners(int n, RandomSource& rng);

/// Uniform plane tree with n edges as a rooted genus-0 unicellular map.
/// n = 0 gives the single-vertex map. Throws PreconditionError if n < 0.
UnicellularMap uniform_plane_tree(int n, RandomSource& rng);

/// Uniform k-subset of the vertices of `map`, sorted by tour order. Each set
/// has probability 1/C(vertex_count, k). Throws PreconditionError unless k is
/// odd and at most the vertex count.
std::vector<VertexHandle> select_vertices(const UnicellularMap& map, int k, RandomSource& rng);

/// Uniform rooted unicellular map with n edges and genus g: a uniform plane
/// tree lifted along a random glue path. Optionally reports the tree and
/// the path. Throws InfeasibleError unless 0 <= g <= n/2.
UnicellularMap uniform_unicellular_map(int n, int g, RandomSource& rng,
                                       GluePathTrace* trace = nullptr,
                                       UnicellularMap* plane_tree = nullptr);

/// Uniform perfect matching with n arcs and genus g.
Diagram uniform_matching(int n, int g, RandomSource& rng, GluePathTrace* trace = nullptr);

/// Spreads a perfect matching over `length` backbone positions: a uniform
/// set of length-2n positions stays unpaired and the arcs keep their order.
/// Throws PreconditionError if the matching does not fit.
Diagram insert_unpaired(const Diagram& matching, int length, RandomSource& rng);

/// Uniform diagram of genus g on `length` vertices. Throws InfeasibleError
/// if there is none.
Diagram uniform_diagram(int length, int g, RandomSource& rng);

}  // namespace pkgenus
