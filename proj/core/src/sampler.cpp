#include "pkgenus/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pkgenus/enumerate.hpp"
#include "pkgenus/errors.hpp"

namespace pkgenus {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<int> uniform_noncrossing_partners(int n, RandomSource& rng) {
  if (n < 0) throw PreconditionError("uniform_noncrossing_partners: negative size");
  const int len = 2 * n + 1;
  // Uniform arrangement of n up-steps and n+1 down-steps, drawn left to
  // right from an urn.
  std::vector<signed char> word(at(len));
  std::uint64_t ups = static_cast<std::uint64_t>(n);
  for (int i = 0; i < len; ++i) {
    const std::uint64_t left = static_cast<std::uint64_t>(len - i);
    const bool up = rng.uniform_below(left) < ups;
    word[at(i)] = up ? 1 : -1;
    if (up) --ups;
  }
  // The rotation starting at the first minimum of the prefix sums is the
  // unique one whose proper prefixes stay non-negative.
  int start = 0;
  int lowest = 0;
  int height = 0;
  for (int i = 0; i < len; ++i) {
    if (height < lowest) {
      lowest = height;
      start = i;
    }
    height += word[at(i)];
  }
  std::vector<int> partner(at(2 * n), -1);
  std::vector<int> open;
  open.reserve(at(n));
  for (int pos = 0; pos < 2 * n; ++pos) {
    if (word[at((start + pos) % len)] > 0) {
      open.push_back(pos);
    } else {
      const int left = open.back();
      open.pop_back();
      partner[at(left)] = pos;
      partner[at(pos)] = left;
    }
  }
  return partner;
}

UnicellularMap uniform_plane_tree(int n, RandomSource& rng) {
  return UnicellularMap::from_partners(uniform_noncrossing_partners(n, rng), true);
}

std::vector<VertexHandle> select_vertices(const UnicellularMap& map, int k, RandomSource& rng) {
  std::vector<VertexHandle> all = map.vertices();
  const int count = static_cast<int>(all.size());
  if (k < 1 || k % 2 == 0 || k > count) {
    throw PreconditionError("select_vertices: need odd k <= " + std::to_string(count) +
                            ", got " + std::to_string(k));
  }
  // Sequential selection: step i picks uniformly among the count-i vertices
  // not chosen yet.
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(count - i)));
    std::swap(all[at(i)], all[at(j)]);
  }
  all.resize(at(k));
  std::sort(all.begin(), all.end(), [&](VertexHandle a, VertexHandle b) {
    return map.precedes(a.min_half_edge, b.min_half_edge);
  });
  return all;
}

UnicellularMap uniform_unicellular_map(int n, int g, RandomSource& rng, GluePathTrace* trace,
                                       UnicellularMap* plane_tree) {
  if (n < 0 || g < 0 || 2 * g > n) {
    throw InfeasibleError("no matching with " + std::to_string(n) + " arcs has genus " +
                          std::to_string(g));
  }
  UnicellularMap map = uniform_plane_tree(n, rng);
  if (plane_tree) *plane_tree = map;
  if (trace) {
    trace->genus_sequence.assign(1, 0);
    trace->vertex_sets.clear();
  }
  CountTables& tables = count_tables();
  int genus = 0;
  while (genus < g) {
    const int next = tables.next_genus_sampler(genus, g, n).sample(rng);
    const auto chosen = select_vertices(map, 2 * (next - genus) + 1, rng);
    glue_lambda_in_place(map, chosen);
    genus = next;
    if (trace) {
      trace->genus_sequence.push_back(genus);
      trace->vertex_sets.push_back(chosen);
    }
  }
  return map;
}

Diagram uniform_matching(int n, int g, RandomSource& rng, GluePathTrace* trace) {
  return unicellular_to_matching(uniform_unicellular_map(n, g, rng, trace));
}

Diagram insert_unpaired(const Diagram& matching, int length, RandomSource& rng) {
  if (!matching.is_matching() || matching.length() > length) {
    throw PreconditionError("insert_unpaired: need a perfect matching on at most " +
                            std::to_string(length) + " vertices");
  }
  const int unpaired = length - matching.length();
  std::vector<int> positions(at(length));
  std::iota(positions.begin(), positions.end(), 0);
  for (int i = 0; i < unpaired; ++i) {
    const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(length - i)));
    std::swap(positions[at(i)], positions[at(j)]);
  }
  std::vector<char> is_unpaired(at(length), 0);
  for (int i = 0; i < unpaired; ++i) is_unpaired[at(positions[at(i)])] = 1;
  std::vector<int> slot;
  slot.reserve(at(matching.length()));
  for (int p = 0; p < length; ++p) {
    if (!is_unpaired[at(p)]) slot.push_back(p + 1);
  }
  std::vector<Arc> arcs;
  arcs.reserve(matching.arcs().size());
  for (const Arc& a : matching.arcs()) {
    arcs.push_back({slot[at(a.left - 1)], slot[at(a.right - 1)]});
  }
  return Diagram(length, std::move(arcs));
}

Diagram uniform_diagram(int length, int g, RandomSource& rng) {
  const int n = count_tables().arcs_sampler(length, g).sample(rng);
  return insert_unpaired(uniform_matching(n, g, rng), length, rng);
}

}  // namespace pkgenus
