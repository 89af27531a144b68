#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pkgenus/errors.hpp"
#include "pkgenus/random.hpp"

namespace pkgenus {

/// A finite distribution with exact rational probabilities. Sampling draws a
/// uniform integer below the common denominator and locates it among the
/// cumulative numerators, so no floating-point rounding enters.
template <class T>
class ExactDistribution {
 public:
  /// Throws PreconditionError on an empty support, a negative weight, or
  /// weights that do not sum to exactly 1.
  explicit ExactDistribution(std::vector<std::pair<T, mpq_class>> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty()) throw PreconditionError("sample_exact: empty support");
    denominator_ = 1;
    mpq_class total = 0;
    for (const auto& [item, p] : weights_) {
      if (sgn(p) < 0) throw PreconditionError("sample_exact: negative probability");
      mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), p.get_den_mpz_t());
      total += p;
    }
    if (total != 1) throw PreconditionError("sample_exact: probabilities do not sum to 1");

    cumulative_.reserve(weights_.size());
    mpz_class running = 0;
    for (const auto& entry : weights_) {
      running += entry.second.get_num() * (denominator_ / entry.second.get_den());
      cumulative_.push_back(running);
    }
    small_ = mpz_fits_ulong_p(denominator_.get_mpz_t()) != 0;
    if (small_) {
      denominator64_ = denominator_.get_ui();
      for (const auto& c : cumulative_) cumulative64_.push_back(c.get_ui());
    }
  }

  const T& sample(RandomSource& rng) const {
    std::size_t index;
    if (small_) {
      const std::uint64_t u = rng.uniform_below(denominator64_);
      index = static_cast<std::size_t>(
          std::upper_bound(cumulative64_.begin(), cumulative64_.end(), u) - cumulative64_.begin());
    } else {
      const mpz_class u = rng.uniform_below(denominator_);
      index = static_cast<std::size_t>(
          std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
    }
    return weights_[index].first;
  }

  std::span<const std::pair<T, mpq_class>> support() const noexcept { return weights_; }
  const mpz_class& denominator() const noexcept { return denominator_; }

 private:
  std::vector<std::pair<T, mpq_class>> weights_;
  mpz_class denominator_;
  std::vector<mpz_class> cumulative_;
  bool small_ = false;
  std::uint64_t denominator64_ = 0;
  std::vector<std::uint64_t> cumulative64_;
};

/// One-shot draw from an exact distribution.
template <class T>
T sample_exact(std::vector<std::pair<T, mpq_class>> weights, RandomSource& rng) {
  return ExactDistribution<T>(std::move(weights)).sample(rng);
}

}  // namespace pkgenus
