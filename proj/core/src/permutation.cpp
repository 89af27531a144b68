#include "pkgenus/permutation.hpp"

#include <string>

#include "pkgenus/errors.hpp"

namespace pkgenus {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= n) {
      throw StructuralError("permutation image " + std::to_string(x) + " outside 0.." +
                            std::to_string(n - 1));
    }
    if (hit[static_cast<std::size_t>(x)]) {
      throw StructuralError("permutation hits " + std::to_string(x) + " twice");
    }
    hit[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> image(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) image[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int size, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) image[static_cast<std::size_t>(i)] = i;
  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int x = cycle[k];
      if (x < 0 || x >= size || seen[static_cast<std::size_t>(x)]) {
        throw StructuralError("cycles are not disjoint on 0.." + std::to_string(size - 1));
      }
      seen[static_cast<std::size_t>(x)] = 1;
      image[static_cast<std::size_t>(x)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(image_.size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    auto& cycle = out.emplace_back();
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> seen(image_.size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  return count;
}

bool Permutation::is_fixed_point_free_involution() const {
  for (int i = 0; i < size(); ++i) {
    const int j = (*this)(i);
    if (j == i || (*this)(j) != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw StructuralError("composing permutations of different sizes");
  }
  std::vector<int> image(static_cast<std::size_t>(inner.size()));
  for (int i = 0; i < inner.size(); ++i) image[static_cast<std::size_t>(i)] = outer(inner(i));
  return Permutation(std::move(image));
}

}  // namespace pkgenus
