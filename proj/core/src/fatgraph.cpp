#include "pkgenus/fatgraph.hpp"

#include "pkgenus/errors.hpp"

namespace pkgenus {

Fatgraph::Fatgraph(Permutation sigma, Permutation alpha)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {
  if (sigma_.size() != alpha_.size()) {
    throw StructuralError("sigma and alpha act on different half-edge sets");
  }
  if (!alpha_.is_fixed_point_free_involution()) {
    throw StructuralError("alpha is not a fixed-point-free involution");
  }
}

BoundaryDecomposition trace_boundaries(const Fatgraph& fatgraph) {
  return BoundaryDecomposition{fatgraph.gamma().cycles()};
}

GenusResult genus_of(const Fatgraph& fatgraph) {
  const int r = trace_boundaries(fatgraph).count();
  const int chi = fatgraph.vertices() - fatgraph.edges() + r;
  return GenusResult{1 - chi / 2, r, chi};
}

}  // namespace pkgenus
