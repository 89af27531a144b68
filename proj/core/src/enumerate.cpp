#include "pkgenus/enumerate.hpp"

#include <string>

#include "pkgenus/errors.hpp"

namespace pkgenus {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

mpz_class CountTables::epsilon(int g, int n) {
  std::lock_guard lock(mutex_);
  return epsilon_locked(g, n);
}

mpz_class CountTables::epsilon_locked(int g, int n) {
  if (g < 0 || n < 0 || 2 * g > n) return 0;
  if (auto it = epsilon_.find({g, n}); it != epsilon_.end()) return it->second;
  mpz_class value;
  if (g == 0) {
    value = binomial(2L * n, n) / (n + 1);
  } else {
    mpz_class sum = 0;
    for (int k = 1; k <= g; ++k) {
      sum += binomial(n + 1L - 2L * (g - k), 2L * k + 1) * epsilon_locked(g - k, n);
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), 2UL * static_cast<unsigned long>(g))) {
      throw std::logic_error("epsilon recursion produced a non-integral count");
    }
    value = sum / (2 * g);
  }
  epsilon_.emplace(std::make_pair(g, n), value);
  return value;
}

mpz_class CountTables::delta(int g, int length, int n) {
  if (n < 0 || 2 * n > length) {
    throw PreconditionError("delta: need 0 <= 2n <= length, got n=" + std::to_string(n) +
                            ", length=" + std::to_string(length));
  }
  return binomial(length, length - 2L * n) * epsilon(g, n);
}

mpz_class CountTables::delta_total(int g, int length) {
  mpz_class total = 0;
  for (int n = 0; 2 * n <= length; ++n) total += delta(g, length, n);
  return total;
}

mpq_class CountTables::path_weight(int h, int g, int n) {
  std::lock_guard lock(mutex_);
  return path_weight_locked(h, g, n);
}

mpq_class CountTables::path_weight_locked(int h, int g, int n) {
  if (h < 0 || h > g) {
    throw PreconditionError("path_weight: need 0 <= h <= g, got h=" + std::to_string(h) +
                            ", g=" + std::to_string(g));
  }
  if (h == g) return 1;
  const auto key = std::make_tuple(h, g, n);
  if (auto it = path_weight_.find(key); it != path_weight_.end()) return it->second;
  mpq_class sum = 0;
  for (int t = h + 1; t <= g; ++t) {
    const mpz_class ways = binomial(n + 1L - 2L * h, 2L * (t - h) + 1);
    if (ways == 0) continue;
    sum += mpq_class(ways, 2 * t) * path_weight_locked(t, g, n);
  }
  sum.canonicalize();
  path_weight_.emplace(key, sum);
  return sum;
}

GenusStepDistribution CountTables::next_genus_distribution(int current, int target, int n) {
  std::lock_guard lock(mutex_);
  return next_genus_locked(current, target, n);
}

GenusStepDistribution CountTables::next_genus_locked(int current, int target, int n) {
  if (current < 0 || current >= target) {
    throw PreconditionError("next_genus_distribution: need 0 <= current < target");
  }
  const mpq_class total = path_weight_locked(current, target, n);
  if (sgn(total) == 0) {
    throw InfeasibleError("no glue path from genus " + std::to_string(current) + " to genus " +
                          std::to_string(target) + " with " + std::to_string(n) + " edges");
  }
  GenusStepDistribution dist;
  for (int t = current + 1; t <= target; ++t) {
    mpq_class p(binomial(n + 1L - 2L * current, 2L * (t - current) + 1), 2 * t);
    p.canonicalize();
    p *= path_weight_locked(t, target, n);
    p /= total;
    dist.support.emplace_back(t, p);
  }
  return dist;
}

ArcCountDistribution CountTables::arcs_distribution(int length, int g) {
  std::lock_guard lock(mutex_);
  return arcs_locked(length, g);
}

ArcCountDistribution CountTables::arcs_locked(int length, int g) {
  if (length < 0 || g < 0) throw PreconditionError("arcs_distribution: negative argument");
  std::vector<std::pair<int, mpz_class>> counts;
  mpz_class total = 0;
  for (int n = 2 * g; 2 * n <= length; ++n) {
    mpz_class c = binomial(length, length - 2L * n) * epsilon_locked(g, n);
    total += c;
    counts.emplace_back(n, std::move(c));
  }
  if (sgn(total) == 0) {
    throw InfeasibleError("no diagram of genus " + std::to_string(g) + " on " +
                          std::to_string(length) + " vertices");
  }
  ArcCountDistribution dist;
  for (auto& [n, c] : counts) {
    mpq_class p(c, total);
    p.canonicalize();
    dist.support.emplace_back(n, p);
  }
  return dist;
}

const ExactDistribution<int>& CountTables::next_genus_sampler(int current, int target, int n) {
  std::lock_guard lock(mutex_);
  auto& slot = genus_samplers_[std::make_tuple(current, target, n)];
  if (!slot) slot = std::make_unique<ExactDistribution<int>>(next_genus_locked(current, target, n).support);
  return *slot;
}

const ExactDistribution<int>& CountTables::arcs_sampler(int length, int g) {
  std::lock_guard lock(mutex_);
  auto& slot = arc_samplers_[std::make_pair(length, g)];
  if (!slot) slot = std::make_unique<ExactDistribution<int>>(arcs_locked(length, g).support);
  return *slot;
}

CountTables& count_tables() {
  static CountTables tables;
  return tables;
}

}  // namespace pkgenus
