#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pkgenus/fatgraph.hpp"

namespace pkgenus {

/// An arc (left, right) between 1-based backbone positions, left < right.
struct Arc {
  int left = 0;
  int right = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Backbone vertices 1..length with arcs in the upper half-plane. Every
/// vertex is the endpoint of at most one arc. Arcs are kept sorted by their
/// left endpoint.
class Diagram {
 public:
  Diagram() = default;

  /// Throws StructuralError on out-of-range endpoints, left >= right, or a
  /// vertex shared by two arcs.
  Diagram(int length, std::vector<Arc> arcs);

  /// `partner[i]` is the 0-based partner of position i, or -1 when unpaired.
  static Diagram from_partners(std::span<const int> partner);

  int length() const noexcept { return length_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  bool is_matching() const noexcept { return 2 * arc_count() == length_; }

  /// 0-based partner table, -1 for unpaired positions.
  std::vector<int> partners() const;

  /// The arc-induced matching: unpaired vertices removed, remaining
  /// positions relabeled in order.
  Diagram strip_unpaired() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  int length_ = 0;
  std::vector<Arc> arcs_;
};

/// Fatgraph of a perfect matching with n arcs after adding the rainbow and
/// collapsing the backbone: half-edges 0..2n+1, sigma = (0 1 ... 2n+1),
/// alpha pairs arc endpoints (shifted by one) plus the rainbow (0, 2n+1).
Fatgraph rainbow_fatgraph(const Diagram& matching);

/// Throws PreconditionError if `matching` has unpaired vertices.
/// boundary_count includes the boundary on top of the rainbow.
GenusResult genus_of_matching(const Diagram& matching);

/// Genus of the arc-induced matching. The empty structure has no rainbow:
/// one vertex, one boundary component, genus 0.
GenusResult genus_of_diagram(const Diagram& diagram);

/// Calls `visit` on every perfect matching of 2n points, in lexicographic
/// order of partner tables. There are (2n-1)!! of them.
void for_each_matching(int n, const std::function<void(const Diagram&)>& visit);

/// (2n-1)!!, the number of perfect matchings on 2n points.
std::uint64_t matching_count(int n);

}  // namespace pkgenus
