#include "pkgenus/unicellular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pkgenus/errors.hpp"

namespace pkgenus {

namespace {

std::size_t at(int h) { return static_cast<std::size_t>(h); }

// min_of[h] = minimum half-edge of the vertex containing h.
std::vector<int> vertex_min_table(const UnicellularMap& map) {
  std::vector<int> min_of(at(map.half_edges()), -1);
  for (int k = 0; k < map.half_edges(); ++k) {
    const int h = map.half_edge_at(k);
    if (min_of[at(h)] >= 0) continue;
    int x = h;
    do {
      min_of[at(x)] = h;
      x = map.sigma(x);
    } while (x != h);
  }
  return min_of;
}

void require_vertex_min(const UnicellularMap& map, VertexHandle v, const char* op) {
  if (v.min_half_edge < 0 || v.min_half_edge >= map.half_edges() ||
      !map.is_vertex_min(v.min_half_edge)) {
    throw PreconditionError(std::string(op) + ": half-edge " + std::to_string(v.min_half_edge) +
                            " is not the minimum of a vertex");
  }
}

void sort_by_tour(const UnicellularMap& map, std::vector<int>& half_edges) {
  std::sort(half_edges.begin(), half_edges.end(),
            [&](int a, int b) { return map.rank(a) < map.rank(b); });
}

}  // namespace

UnicellularMap::UnicellularMap(std::vector<int> sigma, std::vector<int> alpha, int root)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), root_(root) {
  if (sigma_.size() != alpha_.size()) {
    throw StructuralError("sigma and alpha act on different half-edge sets");
  }
  if (sigma_.size() % 2 != 0) throw StructuralError("odd number of half-edges");
  if (!Permutation(alpha_).is_fixed_point_free_involution()) {
    throw StructuralError("alpha is not a fixed-point-free involution");
  }
  const Permutation inv = Permutation(sigma_).inverse();
  sigma_inv_.assign(inv.image().begin(), inv.image().end());
  if (sigma_.empty()) {
    root_ = -1;
  } else if (root_ < 0 || root_ >= half_edges()) {
    throw StructuralError("root half-edge out of range");
  }
  rebuild_tour();
  count_vertices();
}

UnicellularMap UnicellularMap::from_partners(std::vector<int> partner, bool planar) {
  const int size = static_cast<int>(partner.size());
  UnicellularMap m;
  if (size == 0) return m;
  if (size % 2 != 0) throw StructuralError("odd number of half-edges");
  for (int h = 0; h < size; ++h) {
    const int p = partner[at(h)];
    if (p < 0 || p >= size || p == h || partner[at(p)] != h) {
      throw StructuralError("partner table is not a perfect matching");
    }
  }
  m.alpha_ = std::move(partner);
  m.sigma_.resize(at(size));
  m.sigma_inv_.resize(at(size));
  m.tour_.resize(at(size));
  m.rank_.resize(at(size));
  // sigma(h) = alpha(h+1), so the face visits the positions in order and
  // sigma^{-1}(h) = alpha(h) - 1.
  for (int h = 0; h < size; ++h) {
    m.sigma_[at(h)] = m.alpha_[at(h + 1 == size ? 0 : h + 1)];
    m.sigma_inv_[at(h)] = m.alpha_[at(h)] == 0 ? size - 1 : m.alpha_[at(h)] - 1;
    m.tour_[at(h)] = h == 0 ? size - 1 : h - 1;
    m.rank_[at(h)] = h + 1 == size ? 0 : h + 1;
  }
  m.root_ = size - 1;
  if (planar) {
    m.vertex_count_ = size / 2 + 1;
  } else {
    m.count_vertices();
  }
  return m;
}

// Gluing or ungluing only swaps two adjacent stretches of the tour; `first`
// is the tour position after the fixed point, `middle` starts the stretch
// that moves to the front, `last` is one past the end.
void UnicellularMap::swap_tour_segments(int first, int middle, int last) {
  std::rotate(tour_.begin() + first, tour_.begin() + middle, tour_.begin() + last);
  for (int k = first; k < last; ++k) rank_[at(tour_[at(k)])] = k;
}

void UnicellularMap::rebuild_tour() {
  const int size = half_edges();
  tour_.resize(at(size));
  rank_.assign(at(size), -1);
  if (size == 0) return;
  int h = root_;
  for (int k = 0; k < size; ++k) {
    if (rank_[at(h)] >= 0) {
      throw StructuralError("alpha∘sigma has more than one cycle; not a unicellular map");
    }
    rank_[at(h)] = k;
    tour_[at(k)] = h;
    h = gamma(h);
  }
}

void UnicellularMap::count_vertices() {
  if (sigma_.empty()) {
    vertex_count_ = 1;
    return;
  }
  std::vector<char> seen(sigma_.size(), 0);
  vertex_count_ = 0;
  for (int h = 0; h < half_edges(); ++h) {
    if (seen[at(h)]) continue;
    ++vertex_count_;
    for (int x = h; !seen[at(x)]; x = sigma(x)) seen[at(x)] = 1;
  }
}

VertexHandle UnicellularMap::vertex_of(int h) const {
  int best = h;
  for (int x = sigma(h); x != h; x = sigma(x)) {
    if (rank(x) < rank(best)) best = x;
  }
  return VertexHandle{best};
}

std::vector<VertexHandle> UnicellularMap::vertices() const {
  std::vector<VertexHandle> out;
  if (half_edges() == 0) {
    out.push_back(VertexHandle{-1});
    return out;
  }
  out.reserve(at(vertex_count_));
  std::vector<char> seen(at(half_edges()), 0);
  for (int h : tour_) {
    if (seen[at(h)]) continue;
    out.push_back(VertexHandle{h});
    int x = h;
    do {
      seen[at(x)] = 1;
      x = sigma(x);
    } while (x != h);
  }
  return out;
}

std::vector<int> UnicellularMap::vertex_cycle(VertexHandle v) const {
  std::vector<int> cycle;
  if (v.min_half_edge < 0) return cycle;
  int x = v.min_half_edge;
  do {
    cycle.push_back(x);
    x = sigma(x);
  } while (x != v.min_half_edge);
  return cycle;
}

int UnicellularMap::degree(VertexHandle v) const {
  if (v.min_half_edge < 0) return 0;
  int d = 0;
  int x = v.min_half_edge;
  do {
    ++d;
    x = sigma(x);
  } while (x != v.min_half_edge);
  return d;
}

UnicellularMap UnicellularMap::canonical() const {
  const int size = half_edges();
  if (size == 0) return {};
  auto pos = [&](int h) { return (rank(h) + size - 1) % size; };
  std::vector<int> sigma(at(size));
  std::vector<int> alpha(at(size));
  for (int h = 0; h < size; ++h) {
    sigma[at(pos(h))] = pos(this->sigma(h));
    alpha[at(pos(h))] = pos(this->alpha(h));
  }
  return UnicellularMap(std::move(sigma), std::move(alpha), size - 1);
}

int UnicellularMap::glue_in_place(int a1, int a2, int a3) {
  const int s1 = sigma(a1);
  const int s2 = sigma(a2);
  const int s3 = sigma(a3);
  sigma_[at(a1)] = s2;
  sigma_[at(a2)] = s3;
  sigma_[at(a3)] = s1;
  sigma_inv_[at(s2)] = a1;
  sigma_inv_[at(s3)] = a2;
  sigma_inv_[at(s1)] = a3;
  const int r1 = rank(a1);
  const int r2 = rank(a2);
  const int r3 = rank(a3);
  if (r1 < r2 && r2 < r3) {
    swap_tour_segments(r1 + 1, r2 + 1, r3 + 1);
  } else {
    rebuild_tour();
  }
  vertex_count_ -= 2;
  return sigma_inverse(a3);
}

void UnicellularMap::unglue_in_place(int a1, int a2, int a3) {
  const int t1 = sigma(a1);
  const int t2 = sigma(a2);
  const int t3 = sigma(a3);
  sigma_[at(a1)] = t3;
  sigma_[at(a2)] = t1;
  sigma_[at(a3)] = t2;
  sigma_inv_[at(t3)] = a1;
  sigma_inv_[at(t1)] = a2;
  sigma_inv_[at(t2)] = a3;
  const int r1 = rank(a1);
  const int r2 = rank(a2);
  const int r3 = rank(a3);
  if (r1 < r3 && r3 < r2) {
    swap_tour_segments(r1 + 1, r3 + 1, r2 + 1);
  } else {
    rebuild_tour();
  }
  vertex_count_ += 2;
}

UnicellularMap matching_to_unicellular(const Diagram& matching) {
  if (!matching.is_matching()) {
    throw PreconditionError("matching_to_unicellular needs a perfect matching");
  }
  return UnicellularMap::from_partners(matching.partners());
}

Diagram unicellular_to_matching(const UnicellularMap& map) {
  const int size = map.half_edges();
  std::vector<int> partner(at(size), -1);
  for (int k = 0; k < size; ++k) {
    const int h = map.half_edge_at(k);
    const int position = (k + size - 1) % size;
    partner[at(position)] = (map.rank(map.alpha(h)) + size - 1) % size;
  }
  return Diagram::from_partners(partner);
}

TourOrder tour(const UnicellularMap& map) {
  TourOrder order;
  order.rank.resize(at(map.half_edges()));
  for (int h = 0; h < map.half_edges(); ++h) order.rank[at(h)] = map.rank(h);
  return order;
}

bool is_trisection(const UnicellularMap& map, int half_edge) {
  if (half_edge < 0 || half_edge >= map.half_edges()) return false;
  const int next = map.sigma(half_edge);
  return map.rank(next) <= map.rank(half_edge) && !map.is_vertex_min(next);
}

std::vector<Trisection> find_trisections(const UnicellularMap& map) {
  std::vector<Trisection> out;
  const auto min_of = vertex_min_table(map);
  for (int k = 0; k < map.half_edges(); ++k) {
    const int h = map.half_edge_at(k);
    const int next = map.sigma(h);
    if (map.rank(next) <= k && min_of[at(next)] != next) {
      out.push_back(Trisection{h, VertexHandle{min_of[at(h)]}, TrisectionType::Unknown});
    }
  }
  if (static_cast<int>(out.size()) != 2 * map.genus()) {
    throw std::logic_error("trisection count " + std::to_string(out.size()) +
                           " differs from 2g = " + std::to_string(2 * map.genus()));
  }
  return out;
}

GlueResult glue_phi(const UnicellularMap& map, VertexHandle v1, VertexHandle v2, VertexHandle v3) {
  for (VertexHandle v : {v1, v2, v3}) require_vertex_min(map, v, "glue_phi");
  if (v1 == v2 || v2 == v3 || v1 == v3) throw PreconditionError("glue_phi: vertices must be distinct");
  std::vector<int> a{v1.min_half_edge, v2.min_half_edge, v3.min_half_edge};
  sort_by_tour(map, a);
  GlueResult result{map, {}};
  const int tau = result.map.glue_in_place(a[0], a[1], a[2]);
  result.trisection = Trisection{tau, VertexHandle{a[0]}, TrisectionType::I};
  return result;
}

GlueResult glue_psi(const UnicellularMap& map, VertexHandle v1, VertexHandle v2, const Trisection& t) {
  if (!is_trisection(map, t.half_edge)) {
    throw PreconditionError("glue_psi: half-edge " + std::to_string(t.half_edge) + " is not a trisection");
  }
  require_vertex_min(map, v1, "glue_psi");
  require_vertex_min(map, v2, "glue_psi");
  const VertexHandle vt = map.vertex_of(t.half_edge);
  if (v1 == v2 || v1 == vt || v2 == vt) {
    throw PreconditionError("glue_psi: the three vertices must be distinct");
  }
  const int a3 = map.sigma(t.half_edge);
  std::vector<int> a{v1.min_half_edge, v2.min_half_edge};
  sort_by_tour(map, a);
  if (!map.precedes(a[1], a3)) {
    throw PreconditionError("glue_psi: both vertices must precede sigma(trisection) in the tour");
  }
  GlueResult result{map, {}};
  const int tau = result.map.glue_in_place(a[0], a[1], a3);
  if (tau != t.half_edge) throw std::logic_error("glue_psi: trisection did not persist");
  result.trisection = Trisection{tau, VertexHandle{a[0]}, TrisectionType::II};
  return result;
}

Trisection glue_lambda_in_place(UnicellularMap& m, std::span<const VertexHandle> vertices) {
  const int count = static_cast<int>(vertices.size());
  if (count < 3 || count % 2 == 0) {
    throw PreconditionError("glue_lambda: need an odd number (>= 3) of vertices, got " +
                            std::to_string(count));
  }
  std::vector<int> a;
  a.reserve(vertices.size());
  for (VertexHandle v : vertices) {
    require_vertex_min(m, v, "glue_lambda");
    a.push_back(v.min_half_edge);
  }
  sort_by_tour(m, a);
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
    throw PreconditionError("glue_lambda: vertices must be distinct");
  }

  const int k = (count - 1) / 2;
  int tau = m.glue_in_place(a[at(2 * k - 2)], a[at(2 * k - 1)], a[at(2 * k)]);
  TrisectionType type = TrisectionType::I;
  for (int i = 1; i < k; ++i) {
    const int a1 = a[at(2 * k - 2 * i - 2)];
    const int a2 = a[at(2 * k - 2 * i - 1)];
    const int a3 = m.sigma(tau);
    if (!m.precedes(a2, a3)) throw std::logic_error("glue_lambda: tour order broken during merge");
    if (m.glue_in_place(a1, a2, a3) != tau) throw std::logic_error("glue_lambda: trisection lost");
    type = TrisectionType::II;
  }
  return Trisection{tau, m.vertex_of(tau), type};
}

GlueResult glue_lambda(const UnicellularMap& map, std::span<const VertexHandle> vertices) {
  GlueResult result{map, {}};
  result.trisection = glue_lambda_in_place(result.map, vertices);
  return result;
}

SliceStep slice_once(UnicellularMap& map, int half_edge) {
  if (!is_trisection(map, half_edge)) {
    throw PreconditionError("slice: half-edge " + std::to_string(half_edge) + " is not a trisection");
  }
  SliceStep step;
  step.a1 = map.vertex_of(half_edge).min_half_edge;
  step.a3 = map.sigma(half_edge);
  // a2: the tour-earliest half-edge strictly between a1 and a3 around the
  // vertex that comes after a3 in the tour.
  for (int x = map.sigma(step.a1); x != step.a3; x = map.sigma(x)) {
    if (map.precedes(step.a3, x) && (step.a2 < 0 || map.precedes(x, step.a2))) step.a2 = x;
  }
  if (step.a2 < 0) throw std::logic_error("slice: no admissible a2 for a trisection");
  map.unglue_in_place(step.a1, step.a2, step.a3);
  step.type = map.is_vertex_min(step.a3) ? TrisectionType::I : TrisectionType::II;
  return step;
}

SliceResult slice_xi(const UnicellularMap& map, const Trisection& t) {
  SliceResult result{map, {}};
  std::vector<int> picked;
  for (;;) {
    const SliceStep step = slice_once(result.map, t.half_edge);
    picked.push_back(step.a1);
    picked.push_back(step.a2);
    if (step.type == TrisectionType::I) {
      picked.push_back(step.a3);
      break;
    }
  }
  result.vertices.reserve(picked.size());
  for (int h : picked) result.vertices.push_back(result.map.vertex_of(h));
  return result;
}

TrisectionType classify_trisection_type(const UnicellularMap& map, const Trisection& t) {
  UnicellularMap copy = map;
  return slice_once(copy, t.half_edge).type;
}

}  // namespace pkgenus
