#pragma once

#include <span>
#include <vector>

namespace pkgenus {

/// A bijection on {0, ..., size-1}.
class Permutation {
 public:
  Permutation() = default;

  /// Throws StructuralError unless `image` is a bijection on 0..image.size()-1.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int size);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int size, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int point) const { return image_[static_cast<std::size_t>(point)]; }
  std::span<const int> image() const noexcept { return image_; }

  Permutation inverse() const;

  /// Cycles in order of their smallest point; each cycle starts at that point.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  bool is_fixed_point_free_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (outer ∘ inner)(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace pkgenus
