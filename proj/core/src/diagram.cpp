#include "pkgenus/diagram.hpp"

#include <algorithm>
#include <string>

#include "pkgenus/errors.hpp"

namespace pkgenus {

Diagram::Diagram(int length, std::vector<Arc> arcs) : length_(length), arcs_(std::move(arcs)) {
  if (length_ < 0) throw StructuralError("negative diagram length");
  std::vector<char> used(static_cast<std::size_t>(length_) + 1, 0);
  for (const Arc& a : arcs_) {
    if (a.left < 1 || a.right > length_ || a.left >= a.right) {
      throw StructuralError("bad arc (" + std::to_string(a.left) + "," + std::to_string(a.right) +
                            ") for length " + std::to_string(length_));
    }
    for (int v : {a.left, a.right}) {
      if (used[static_cast<std::size_t>(v)]) {
        throw StructuralError("vertex " + std::to_string(v) + " is paired twice");
      }
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (!std::is_sorted(arcs_.begin(), arcs_.end())) std::sort(arcs_.begin(), arcs_.end());
}

Diagram Diagram::from_partners(std::span<const int> partner) {
  const int length = static_cast<int>(partner.size());
  std::vector<Arc> arcs;
  arcs.reserve(partner.size() / 2);
  for (int i = 0; i < length; ++i) {
    const int j = partner[static_cast<std::size_t>(i)];
    if (j < -1 || j >= length) throw StructuralError("partner index out of range");
    if (j > i) {
      if (partner[static_cast<std::size_t>(j)] != i) throw StructuralError("partner table is not symmetric");
      arcs.push_back({i + 1, j + 1});
    } else if (j >= 0 && partner[static_cast<std::size_t>(j)] != i) {
      throw StructuralError("partner table is not symmetric");
    }
  }
  return Diagram(length, std::move(arcs));
}

std::vector<int> Diagram::partners() const {
  std::vector<int> p(static_cast<std::size_t>(length_), -1);
  for (const Arc& a : arcs_) {
    p[static_cast<std::size_t>(a.left - 1)] = a.right - 1;
    p[static_cast<std::size_t>(a.right - 1)] = a.left - 1;
  }
  return p;
}

Diagram Diagram::strip_unpaired() const {
  const auto p = partners();
  std::vector<int> relabel(p.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= 0) relabel[i] = next++;
  }
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    arcs.push_back({relabel[static_cast<std::size_t>(a.left - 1)] + 1,
                    relabel[static_cast<std::size_t>(a.right - 1)] + 1});
  }
  return Diagram(next, std::move(arcs));
}

Fatgraph rainbow_fatgraph(const Diagram& matching) {
  if (!matching.is_matching()) {
    throw PreconditionError("rainbow_fatgraph needs a perfect matching");
  }
  const int n = matching.arc_count();
  const int h = 2 * n + 2;
  std::vector<int> sigma(static_cast<std::size_t>(h));
  std::vector<int> alpha(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) sigma[static_cast<std::size_t>(i)] = (i + 1) % h;
  alpha[0] = h - 1;
  alpha[static_cast<std::size_t>(h - 1)] = 0;
  for (const Arc& a : matching.arcs()) {
    alpha[static_cast<std::size_t>(a.left)] = a.right;
    alpha[static_cast<std::size_t>(a.right)] = a.left;
  }
  return Fatgraph(Permutation(std::move(sigma)), Permutation(std::move(alpha)));
}

GenusResult genus_of_matching(const Diagram& matching) {
  if (!matching.is_matching()) {
    throw PreconditionError("genus_of_matching: diagram has unpaired vertices; use genus_of_diagram");
  }
  if (matching.arc_count() == 0) return GenusResult{0, 1, 2};
  return genus_of(rainbow_fatgraph(matching));
}

GenusResult genus_of_diagram(const Diagram& diagram) {
  return genus_of_matching(diagram.strip_unpaired());
}

namespace {

void extend_matching(std::vector<int>& partner, int first_free,
                     const std::function<void(const Diagram&)>& visit) {
  const int size = static_cast<int>(partner.size());
  while (first_free < size && partner[static_cast<std::size_t>(first_free)] >= 0) ++first_free;
  if (first_free == size) {
    visit(Diagram::from_partners(partner));
    return;
  }
  for (int j = first_free + 1; j < size; ++j) {
    if (partner[static_cast<std::size_t>(j)] >= 0) continue;
    partner[static_cast<std::size_t>(first_free)] = j;
    partner[static_cast<std::size_t>(j)] = first_free;
    extend_matching(partner, first_free + 1, visit);
    partner[static_cast<std::size_t>(first_free)] = -1;
    partner[static_cast<std::size_t>(j)] = -1;
  }
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Diagram&)>& visit) {
  if (n < 0) throw PreconditionError("negative arc count");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  extend_matching(partner, 0, visit);
}

std::uint64_t matching_count(int n) {
  std::uint64_t result = 1;
  for (int k = 3; k <= 2 * n - 1; k += 2) result *= static_cast<std::uint64_t>(k);
  return result;
}

}  // namespace pkgenus
