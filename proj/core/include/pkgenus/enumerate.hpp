#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pkgenus/exact_distribution.hpp"

namespace pkgenus {

/// C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Probabilities of the next genus in a glue path, for t in (current, target].
struct GenusStepDistribution {
  std::vector<std::pair<int, mpq_class>> support;
};

/// Probabilities of the arc count n of a uniform diagram.
struct ArcCountDistribution {
  std::vector<std::pair<int, mpq_class>> support;
};

/// Memoized exact counts of one-face maps and diagrams by genus.
///
/// All entries are exact. Lookups take an internal lock, so a single
/// instance can be shared between sampler threads.
class CountTables {
 public:
  /// Number of rooted unicellular maps (equivalently matchings) with n edges
  /// and genus g, from
  ///   2g eps_g(n) = sum_{k=1..g} C(n+1-2(g-k), 2k+1) eps_{g-k}(n),
  /// with eps_0(n) the Catalan number. Zero outside 0 <= g <= n/2.
  mpz_class epsilon(int g, int n);

  /// Diagrams on `length` vertices with n arcs and genus g:
  /// C(length, length-2n) eps_g(n). Throws PreconditionError if 2n > length.
  mpz_class delta(int g, int length, int n);

  /// Sum of delta(g, length, n) over n.
  mpz_class delta_total(int g, int length);

  /// Weighted number of glue paths from genus h to genus g on n edges:
  /// W(g->g) = 1, W(h->g) = sum_{t=h+1..g} C(n+1-2h, 2(t-h)+1)/(2t) W(t->g).
  /// Throws PreconditionError if h > g or h < 0.
  mpq_class path_weight(int h, int g, int n);

  /// Throws PreconditionError unless current < target, InfeasibleError when
  /// no glue path reaches `target`.
  GenusStepDistribution next_genus_distribution(int current, int target, int n);

  /// Throws InfeasibleError when no diagram of this genus and length exists.
  ArcCountDistribution arcs_distribution(int length, int g);

  /// Cached samplers for the two distributions above.
  const ExactDistribution<int>& next_genus_sampler(int current, int target, int n);
  const ExactDistribution<int>& arcs_sampler(int length, int g);

 private:
  mpz_class epsilon_locked(int g, int n);
  mpq_class path_weight_locked(int h, int g, int n);
  GenusStepDistribution next_genus_locked(int current, int target, int n);
  ArcCountDistribution arcs_locked(int length, int g);

  std::recursive_mutex mutex_;
  std::map<std::pair<int, int>, mpz_class> epsilon_;
  std::map<std::tuple<int, int, int>, mpq_class> path_weight_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<ExactDistribution<int>>> genus_samplers_;
  std::map<std::pair<int, int>, std::unique_ptr<ExactDistribution<int>>> arc_samplers_;
};

/// Process-wide tables used by the free functions and the samplers.
CountTables& count_tables();

inline mpz_class epsilon(int g, int n) { return count_tables().epsilon(g, n); }
inline mpz_class delta(int g, int length, int n) { return count_tables().delta(g, length, n); }
inline mpz_class delta_total(int g, int length) { return count_tables().delta_total(g, length); }
inline mpq_class path_weight(int h, int g, int n) { return count_tables().path_weight(h, g, n); }
inline GenusStepDistribution next_genus_distribution(int current, int target, int n) {
  return count_tables().next_genus_distribution(current, target, n);
}
inline ArcCountDistribution arcs_distribution(int length, int g) {
  return count_tables().arcs_distribution(length, g);
}

}  // namespace pkgenus
