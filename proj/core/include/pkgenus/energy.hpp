#pragma once

#include <array>
#include <span>
#include <vector>

#include "pkgenus/diagram.hpp"
#include "pkgenus/random.hpp"
#include "pkgenus/unicellular.hpp"

namespace pkgenus {

/// Weights of the simplified loop energy. A structure S is weighted by
/// exp(eta(S)); there is no temperature.
struct EnergyParams {
  double arc = 0.0;         // b, per arc
  double hairpin = 0.0;     // L^hp
  double interior = 0.0;    // L^int
  double multi = 0.0;       // L^mul
  double pseudoknot = 0.0;  // L^pk_1

  /// Energy of one labeled vertex: (L^mul + L^pk_1) / 3.
  double label_energy() const noexcept { return (multi + pseudoknot) / 3.0; }

  friend bool operator==(const EnergyParams&, const EnergyParams&) = default;
};

enum class LoopClass { Hairpin, Interior, Multi, Pseudoknot, Root };

const char* to_string(LoopClass kind) noexcept;

/// Handle used for the plant: the degree-one vertex the rainbow becomes in
/// the dual. It has no half-edge in the rainbow-free map.
inline constexpr VertexHandle kPlant{-2};

/// One vertex of the dual map, i.e. one loop of the structure. `degree`
/// counts the plant edge on the exterior-loop vertex.
struct Loop {
  VertexHandle vertex;
  int degree = 0;
  LoopClass kind = LoopClass::Hairpin;
  bool exterior = false;  // the loop outside all arcs

  /// Number of arcs on the loop's boundary (degree without the plant edge).
  int size() const noexcept { return exterior ? degree - 1 : degree; }
};

/// Loops of a matching's dual map. The first entry is the plant (Root, degree
/// 1, no energy); the rest follow tour order. A vertex containing a
/// trisection is Pseudoknot; otherwise degree 1, 2, >2 give Hairpin,
/// Interior, Multi.
std::vector<Loop> classify_loops(const UnicellularMap& map);
std::vector<Loop> classify_loops(const Diagram& matching);

/// T(v) for a loop class. Pseudoknot vertices carry L^mul; the pseudoknot
/// term itself is added once per structure.
double loop_energy(LoopClass kind, const EnergyParams& params) noexcept;

/// eta = n*b + sum T(v) + [g = 1] L^pk_1 for a perfect matching of genus 0
/// or 1. Throws PreconditionError for higher genus or unpaired vertices.
double eta_direct(const Diagram& matching, const EnergyParams& params);

/// A genus-0 perfect matching with labeled dual vertices (handles refer to
/// matching_to_unicellular(matching)).
struct LabeledStructure {
  Diagram matching;
  std::vector<VertexHandle> labels;
};

/// eta of a genus-0 matching where each labeled vertex contributes
/// label_energy() instead of its class energy. Any number of labels.
/// Throws PreconditionError on genus != 0, repeated or invalid labels.
double eta_with_labels(const LabeledStructure& s, const EnergyParams& params);

/// eta_with_labels restricted to exactly three labels; equals eta_direct of
/// the genus-1 matching obtained by gluing the three labeled vertices.
double eta_labeled(const LabeledStructure& s, const EnergyParams& params);

/// Partition functions of genus-0 matchings with 0..3 labeled dual vertices,
/// theta0(k, m) = sum over (matching with m arcs, k-subset of its m+1
/// vertices) of exp(eta with labels), and the genus-1 function
/// theta1(m) = theta0(3, m) / 2.
///
/// Entries are stored as long double scaled by rho^-m, with rho adjusted
/// during the build so that nothing overflows; absolute values are
/// available in log form.
class PartitionTables {
 public:
  static constexpr int kMaxLabels = 3;

  PartitionTables() = default;
  PartitionTables(int max_arcs, const EnergyParams& params);

  int max_arcs() const noexcept { return max_arcs_; }
  const EnergyParams& params() const noexcept { return params_; }

  double log_theta0(int labels, int arcs) const;
  double theta0(int labels, int arcs) const;
  double log_theta1(int arcs) const;
  double theta1(int arcs) const;

  /// log of vartheta1(length, n) = C(length, length-2n) theta1(n).
  double log_vartheta1(int length, int arcs) const;
  /// log of vartheta1(length) = sum over n.
  double log_vartheta1(int length) const;

  /// Draws a genus-0 matching with `arcs` arcs and `labels` labeled vertices
  /// with probability exp(eta)/theta0(labels, arcs), by stochastic
  /// backtracking through the tables.
  LabeledStructure sample_labeled(int arcs, int labels, RandomSource& rng) const;

  /// The probability sample_labeled assigns to `s`, recomputed by replaying
  /// its decisions.
  double sampling_probability(const LabeledStructure& s) const;

 private:
  enum Table { kArcRooted, kSeq0, kSeq1, kSeq2, kTheta, kTableCount };

  long double& cell(Table t, int k, int m) {
    return values_[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
  }
  long double value(Table t, int k, int m) const {
    if (k < 0 || m < 0) return 0.0L;
    return values_[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
  }
  void rescale(int upto, long double factor_per_level);
  void check_arcs(int arcs) const;

  int max_arcs_ = -1;
  EnergyParams params_;
  long double log_rho_ = 0.0L;
  long double arc_weight_ = 1.0L;  // exp(b) / rho
  long double hairpin_weight_ = 1.0L;
  long double interior_weight_ = 1.0L;
  long double multi_weight_ = 1.0L;
  long double label_weight_ = 1.0L;
  std::array<std::array<std::vector<long double>, kMaxLabels + 1>, kTableCount> values_;
};

/// O(n^2) build of all tables up to `max_arcs`.
PartitionTables build_partitions(int max_arcs, const EnergyParams& params);

/// Genus-1 matching with n arcs drawn with probability exp(eta)/theta1(n):
/// a weighted 3-labeled genus-0 structure whose labeled vertices are glued.
Diagram sample_genus1_matching(const PartitionTables& tables, int arcs, RandomSource& rng);

/// Genus-1 diagram on `length` vertices drawn with probability
/// exp(eta)/vartheta1(length). Tables must cover length/2 arcs.
/// Throws InfeasibleError for length < 4.
Diagram sample_genus1(int length, const PartitionTables& tables, RandomSource& rng);

/// Arc count of a weighted genus-1 diagram: n with probability
/// vartheta1(length, n) / vartheta1(length).
int sample_genus1_arc_count(int length, const PartitionTables& tables, RandomSource& rng);

}  // namespace pkgenus
