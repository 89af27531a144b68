#pragma once

#include <span>
#include <vector>

#include "pkgenus/diagram.hpp"
#include "pkgenus/fatgraph.hpp"

namespace pkgenus {

/// A vertex, identified by its minimum half-edge: the first half-edge
/// through which the tour enters it.
struct VertexHandle {
  int min_half_edge = -1;

  friend auto operator<=>(const VertexHandle&, const VertexHandle&) = default;
};

enum class TrisectionType { Unknown, I, II };

/// A down-step h (sigma(h) at or before h in the tour) whose sigma-successor
/// is not the minimum of its vertex.
struct Trisection {
  int half_edge = -1;
  VertexHandle vertex;
  TrisectionType type = TrisectionType::Unknown;
};

/// Position of every half-edge along the face cycle, starting at the root.
struct TourOrder {
  std::vector<int> rank;
};

/// A rooted fatgraph with a single boundary component. Vertex count is
/// edges + 1 - 2*genus. The root half-edge starts the tour gamma = alpha∘sigma.
///
/// Maps built from matchings carry half-edge labels equal to backbone
/// positions (0-based) and are rooted at the last position, which lies on the
/// vertex dual to the exterior loop. Gluing and slicing keep labels, alpha
/// and root fixed and only rewire sigma.
class UnicellularMap {
 public:
  /// The map with no edges: one vertex, no half-edges.
  UnicellularMap() = default;

  /// Throws StructuralError unless sigma is a permutation, alpha a
  /// fixed-point-free involution on the same points, and alpha∘sigma a single
  /// cycle. `root` must be a valid half-edge when there is at least one edge.
  UnicellularMap(std::vector<int> sigma, std::vector<int> alpha, int root);

  /// The map of a perfect matching given as a 0-based partner table, built
  /// in O(n) sequential passes (see matching_to_unicellular). When the
  /// matching is known to be non-crossing, pass `planar` to skip counting
  /// vertices. Throws StructuralError if `partner` is not a fixed-point-free
  /// involution.
  static UnicellularMap from_partners(std::vector<int> partner, bool planar = false);

  int edges() const noexcept { return static_cast<int>(alpha_.size()) / 2; }
  int half_edges() const noexcept { return static_cast<int>(alpha_.size()); }
  int root() const noexcept { return root_; }
  int vertex_count() const noexcept { return vertex_count_; }
  int genus() const noexcept { return (edges() + 1 - vertex_count_) / 2; }

  int sigma(int h) const { return sigma_[static_cast<std::size_t>(h)]; }
  int sigma_inverse(int h) const { return sigma_inv_[static_cast<std::size_t>(h)]; }
  int alpha(int h) const { return alpha_[static_cast<std::size_t>(h)]; }
  int gamma(int h) const { return alpha(sigma(h)); }

  /// Tour rank of h; the root has rank 0.
  int rank(int h) const { return rank_[static_cast<std::size_t>(h)]; }
  int half_edge_at(int rank) const { return tour_[static_cast<std::size_t>(rank)]; }
  bool precedes(int a, int b) const { return rank(a) < rank(b); }

  VertexHandle vertex_of(int h) const;
  bool is_vertex_min(int h) const { return vertex_of(h).min_half_edge == h; }

  /// All vertices, ordered by the tour rank of their minimum half-edge.
  std::vector<VertexHandle> vertices() const;

  /// The sigma-cycle of v starting at its minimum half-edge.
  std::vector<int> vertex_cycle(VertexHandle v) const;
  int degree(VertexHandle v) const;

  Permutation sigma_permutation() const { return Permutation(sigma_); }
  Permutation alpha_permutation() const { return Permutation(alpha_); }
  Fatgraph fatgraph() const { return Fatgraph(sigma_permutation(), alpha_permutation()); }

  /// Relabels every half-edge by its backbone position in the matching
  /// this map encodes (see unicellular_to_matching). Two maps are
  /// isomorphic as rooted maps iff their canonical forms are equal.
  UnicellularMap canonical() const;

  friend bool operator==(const UnicellularMap& a, const UnicellularMap& b) {
    return a.root_ == b.root_ && a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_;
  }

  // In-place rewiring used by the gluing and slicing operations below.

  /// Glue the three distinct vertices containing a1 <γ a2 <γ a3 into one:
  /// sigma(a1), sigma(a2), sigma(a3) become the old sigma(a2), sigma(a3),
  /// sigma(a1). Returns the new sigma^{-1}(a3), a trisection of the result.
  int glue_in_place(int a1, int a2, int a3);

  /// Inverse rewiring of glue_in_place.
  void unglue_in_place(int a1, int a2, int a3);

 private:
  void rebuild_tour();
  void swap_tour_segments(int first, int middle, int last);
  void count_vertices();

  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<int> alpha_;
  int root_ = -1;
  std::vector<int> tour_;
  std::vector<int> rank_;
  int vertex_count_ = 1;
};

/// Dual of the backbone-collapsed fatgraph of a perfect matching with n arcs:
/// n edges, n+1-2g vertices, one face. Half-edge labels are the 0-based
/// backbone positions and the tour visits them in the order
/// 2n-1, 0, 1, ..., 2n-2. The root 2n-1 sits on the exterior-loop vertex,
/// at the corner where the rainbow's plant is attached.
/// Throws PreconditionError if `matching` has unpaired vertices.
UnicellularMap matching_to_unicellular(const Diagram& matching);

/// Inverse of matching_to_unicellular: half-edge with tour rank k becomes
/// backbone position k-1 (the root becomes position 2n-1).
Diagram unicellular_to_matching(const UnicellularMap& map);

TourOrder tour(const UnicellularMap& map);

/// All trisections in tour order of their half-edge. Exactly 2g of them.
std::vector<Trisection> find_trisections(const UnicellularMap& map);

bool is_trisection(const UnicellularMap& map, int half_edge);

struct GlueResult {
  UnicellularMap map;
  Trisection trisection;
};

/// Glues three distinct vertices; genus goes up by one. The returned
/// trisection sigma^{-1}(a3) has type I.
GlueResult glue_phi(const UnicellularMap& map, VertexHandle v1, VertexHandle v2, VertexHandle v3);

/// Glues v1, v2 with the vertex of trisection t at a3 = sigma(t), which must
/// come after both minimum half-edges in the tour. The trisection t persists
/// with type II.
GlueResult glue_psi(const UnicellularMap& map, VertexHandle v1, VertexHandle v2, const Trisection& t);

/// Glues 2k+1 vertices (sorted by tour order): glue_phi on the last three,
/// then glue_psi on the preceding pairs from right to left. Genus goes up by k.
GlueResult glue_lambda(const UnicellularMap& map, std::span<const VertexHandle> vertices);

struct SliceStep {
  int a1 = -1;
  int a2 = -1;
  int a3 = -1;
  TrisectionType type = TrisectionType::Unknown;
};

/// One slice at trisection `half_edge`, in place: splits its vertex into
/// three and reports the split points. Type I iff a3 is minimal in its new
/// vertex; otherwise sigma^{-1}(a3) = half_edge is still a trisection.
SliceStep slice_once(UnicellularMap& map, int half_edge);

struct SliceResult {
  UnicellularMap map;
  std::vector<VertexHandle> vertices;
};

/// In-place form of glue_lambda, for callers that own the map.
Trisection glue_lambda_in_place(UnicellularMap& map, std::span<const VertexHandle> vertices);

/// Repeated slicing until a type I slice. Returns the lower-genus map and the
/// 2i+1 vertices (tour order) that glue_lambda would merge back.
SliceResult slice_xi(const UnicellularMap& map, const Trisection& t);

/// Type of a trisection, determined by slicing a copy once.
TrisectionType classify_trisection_type(const UnicellularMap& map, const Trisection& t);

}  // namespace pkgenus
