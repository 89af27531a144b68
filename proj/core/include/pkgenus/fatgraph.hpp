#pragma once

#include <vector>

#include "pkgenus/permutation.hpp"

namespace pkgenus {

/// An orientable fatgraph (H, sigma, alpha): sigma gives the cyclic order of
/// half-edges around each vertex, alpha pairs half-edges into edges.
class Fatgraph {
 public:
  Fatgraph() = default;

  /// Throws StructuralError if the sizes differ or alpha is not a
  /// fixed-point-free involution.
  Fatgraph(Permutation sigma, Permutation alpha);

  int half_edges() const noexcept { return sigma_.size(); }
  int edges() const noexcept { return sigma_.size() / 2; }
  int vertices() const { return sigma_.cycle_count(); }

  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& alpha() const noexcept { return alpha_; }

  /// gamma = alpha ∘ sigma, whose cycles are the boundary components.
  Permutation gamma() const { return compose(alpha_, sigma_); }

  /// Poincaré dual (H, alpha ∘ sigma, alpha): vertices and boundary
  /// components trade places.
  Fatgraph dual() const { return Fatgraph(gamma(), alpha_); }

 private:
  Permutation sigma_;
  Permutation alpha_;
};

struct BoundaryDecomposition {
  std::vector<std::vector<int>> cycles;

  int count() const noexcept { return static_cast<int>(cycles.size()); }
};

BoundaryDecomposition trace_boundaries(const Fatgraph& fatgraph);

struct GenusResult {
  int genus = 0;
  int boundary_count = 0;
  int euler = 0;

  friend bool operator==(const GenusResult&, const GenusResult&) = default;
};

/// chi = v - e + r and g = 1 - chi/2. Assumes a connected fatgraph.
GenusResult genus_of(const Fatgraph& fatgraph);

}  // namespace pkgenus
