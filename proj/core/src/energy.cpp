#include "pkgenus/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "pkgenus/errors.hpp"
#include "pkgenus/sampler.hpp"

namespace pkgenus {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Rescale once a level drifts this far (natural log) from 1.
constexpr long double kDriftLimit = 1000.0L;

LoopClass class_of_degree(int degree) {
  if (degree == 1) return LoopClass::Hairpin;
  if (degree == 2) return LoopClass::Interior;
  return LoopClass::Multi;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Index of the entry selected by `target` in a running sum, falling back to
// the last positive weight when rounding leaves a residue.
struct Picker {
  long double target;
  int last_positive = -1;
  bool take(long double weight, int index) {
    if (weight <= 0.0L) return false;
    last_positive = index;
    target -= weight;
    return target < 0.0L;
  }
};

}  // namespace

const char* to_string(LoopClass kind) noexcept {
  switch (kind) {
    case LoopClass::Hairpin: return "hairpin";
    case LoopClass::Interior: return "interior";
    case LoopClass::Multi: return "multi";
    case LoopClass::Pseudoknot: return "pseudoknot";
    case LoopClass::Root: return "root";
  }
  return "?";
}

std::vector<Loop> classify_loops(const UnicellularMap& map) {
  std::vector<Loop> loops;
  loops.push_back(Loop{kPlant, 1, LoopClass::Root});
  if (map.edges() == 0) {
    loops.push_back(Loop{VertexHandle{-1}, 1, LoopClass::Hairpin, true});
    return loops;
  }
  std::set<VertexHandle> knotted;
  for (const Trisection& t : find_trisections(map)) knotted.insert(t.vertex);
  const VertexHandle exterior = map.vertex_of(map.root());
  for (VertexHandle v : map.vertices()) {
    const int degree = map.degree(v) + (v == exterior ? 1 : 0);
    const LoopClass kind = knotted.count(v) ? LoopClass::Pseudoknot : class_of_degree(degree);
    loops.push_back(Loop{v, degree, kind, v == exterior});
  }
  return loops;
}

std::vector<Loop> classify_loops(const Diagram& matching) {
  return classify_loops(matching_to_unicellular(matching));
}

double loop_energy(LoopClass kind, const EnergyParams& params) noexcept {
  switch (kind) {
    case LoopClass::Hairpin: return params.hairpin;
    case LoopClass::Interior: return params.interior;
    case LoopClass::Multi:
    case LoopClass::Pseudoknot: return params.multi;
    case LoopClass::Root: return 0.0;
  }
  return 0.0;
}

double eta_direct(const Diagram& matching, const EnergyParams& params) {
  const UnicellularMap map = matching_to_unicellular(matching);
  const int g = map.genus();
  if (g > 1) {
    throw PreconditionError("eta_direct: genus " + std::to_string(g) + " is above 1");
  }
  double eta = map.edges() * params.arc;
  for (const Loop& loop : classify_loops(map)) eta += loop_energy(loop.kind, params);
  if (g == 1) eta += params.pseudoknot;
  return eta;
}

double eta_with_labels(const LabeledStructure& s, const EnergyParams& params) {
  const UnicellularMap map = matching_to_unicellular(s.matching);
  if (map.genus() != 0) throw PreconditionError("eta_with_labels: matching is not planar");
  std::set<VertexHandle> labels(s.labels.begin(), s.labels.end());
  if (labels.size() != s.labels.size()) throw PreconditionError("eta_with_labels: repeated label");
  double eta = map.edges() * params.arc;
  std::size_t matched = 0;
  for (const Loop& loop : classify_loops(map)) {
    if (labels.count(loop.vertex) && loop.kind != LoopClass::Root) {
      eta += params.label_energy();
      ++matched;
    } else {
      eta += loop_energy(loop.kind, params);
    }
  }
  if (matched != labels.size()) throw PreconditionError("eta_with_labels: label is not a vertex");
  return eta;
}

double eta_labeled(const LabeledStructure& s, const EnergyParams& params) {
  if (s.labels.size() != 3) throw PreconditionError("eta_labeled: expected three labels");
  return eta_with_labels(s, params);
}

// Tables, per label count k and arc count m (all scaled by rho^-m):
//   arc-rooted  A_k(m)  = e^b theta_k(m-1)             an arc and what it encloses
//   seq0        P_k(m)  = [m=0,k=0] + seq1              any sequence of arc-rooted parts
//   seq1        P1_k(m) = sum A_{k1}(j) P_{k-k1}(m-j)   at least one part
//   seq2        P2_k(m) = sum A_{k1}(j) P1_{k-k1}(m-j)  at least two parts
//   theta       theta_k(m) = hp [m=0,k=0] + int A_k(m) + mul P2_k(m) + lab P_{k-1}(m)
// The outer loop gets the same treatment as any other, its plant degree
// taking the place of the closing arc.
PartitionTables::PartitionTables(int max_arcs, const EnergyParams& params)
    : max_arcs_(max_arcs), params_(params) {
  if (max_arcs < 0) throw PreconditionError("build_partitions: negative size");
  for (auto& table : values_) {
    for (auto& row : table) row.assign(at(max_arcs + 1), 0.0L);
  }
  const long double exp_arc = std::exp(static_cast<long double>(params.arc));
  hairpin_weight_ = std::exp(static_cast<long double>(params.hairpin));
  interior_weight_ = std::exp(static_cast<long double>(params.interior));
  multi_weight_ = std::exp(static_cast<long double>(params.multi));
  label_weight_ = std::exp(static_cast<long double>(params.label_energy()));
  arc_weight_ = exp_arc;

  for (int m = 0; m <= max_arcs; ++m) {
    for (int k = 0; k <= kMaxLabels; ++k) {
      cell(kArcRooted, k, m) = m > 0 ? arc_weight_ * value(kTheta, k, m - 1) : 0.0L;
    }
    std::array<long double, kMaxLabels + 1> seq1{};
    std::array<long double, kMaxLabels + 1> seq2{};
    for (int j = 1; j <= m; ++j) {
      for (int k1 = 0; k1 <= kMaxLabels; ++k1) {
        const long double a = value(kArcRooted, k1, j);
        if (a == 0.0L) continue;
        for (int k = k1; k <= kMaxLabels; ++k) {
          seq1[at(k)] += a * value(kSeq0, k - k1, m - j);
          seq2[at(k)] += a * value(kSeq1, k - k1, m - j);
        }
      }
    }
    for (int k = 0; k <= kMaxLabels; ++k) {
      const bool empty = m == 0 && k == 0;
      cell(kSeq1, k, m) = seq1[at(k)];
      cell(kSeq2, k, m) = seq2[at(k)];
      cell(kSeq0, k, m) = (empty ? 1.0L : 0.0L) + seq1[at(k)];
    }
    for (int k = 0; k <= kMaxLabels; ++k) {
      long double theta = (m == 0 && k == 0 ? hairpin_weight_ : 0.0L) +
                          interior_weight_ * value(kArcRooted, k, m) +
                          multi_weight_ * value(kSeq2, k, m);
      if (k > 0) theta += label_weight_ * value(kSeq0, k - 1, m);
      cell(kTheta, k, m) = theta;
    }
    const long double level = value(kSeq0, 0, m);
    if (m > 0 && std::fabs(std::log(level)) > kDriftLimit) rescale(m, std::log(level) / m);
  }
}

// Divides level j by exp(j * log_factor) and folds the factor into rho.
void PartitionTables::rescale(int upto, long double log_factor) {
  for (int j = 0; j <= upto; ++j) {
    const long double f = std::exp(-log_factor * j);
    for (auto& table : values_) {
      for (auto& row : table) row[at(j)] *= f;
    }
  }
  log_rho_ += log_factor;
  arc_weight_ *= std::exp(-log_factor);
}

void PartitionTables::check_arcs(int arcs) const {
  if (arcs < 0 || arcs > max_arcs_) {
    throw PreconditionError("partition tables cover 0.." + std::to_string(max_arcs_) +
                            " arcs, asked for " + std::to_string(arcs));
  }
}

double PartitionTables::log_theta0(int labels, int arcs) const {
  check_arcs(arcs);
  if (labels < 0 || labels > kMaxLabels) throw PreconditionError("log_theta0: label count out of range");
  const long double v = value(kTheta, labels, arcs);
  if (v <= 0.0L) return kNegInf;
  return static_cast<double>(std::log(v) + arcs * log_rho_);
}

double PartitionTables::theta0(int labels, int arcs) const { return std::exp(log_theta0(labels, arcs)); }

double PartitionTables::log_theta1(int arcs) const { return log_theta0(3, arcs) - std::log(2.0); }

double PartitionTables::theta1(int arcs) const { return std::exp(log_theta1(arcs)); }

double PartitionTables::log_vartheta1(int length, int arcs) const {
  if (arcs < 0 || 2 * arcs > length) throw PreconditionError("log_vartheta1: too many arcs");
  return log_binomial(length, 2 * arcs) + log_theta1(arcs);
}

double PartitionTables::log_vartheta1(int length) const {
  if (length < 0) throw PreconditionError("log_vartheta1: negative length");
  std::vector<double> terms;
  for (int n = 2; 2 * n <= length; ++n) terms.push_back(log_vartheta1(length, n));
  if (terms.empty()) return kNegInf;
  const double top = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum);
}

LabeledStructure PartitionTables::sample_labeled(int arcs, int labels, RandomSource& rng) const {
  check_arcs(arcs);
  if (labels < 0 || labels > kMaxLabels) throw PreconditionError("sample_labeled: label count out of range");
  if (value(kTheta, labels, arcs) <= 0.0L) {
    throw InfeasibleError("no planar structure with " + std::to_string(arcs) + " arcs has " +
                          std::to_string(labels) + " loops to label");
  }
  enum class Kind { Loop, Seq0, Seq1, Seq2, Open, Close };
  struct Task {
    Kind kind;
    int m;
    int k;
    int anchor;
  };
  std::vector<int> partner(at(2 * arcs), -1);
  std::vector<int> open;
  std::vector<int> anchors;
  std::vector<Task> stack{{Kind::Loop, arcs, labels, 2 * arcs - 1}};
  int cursor = 0;

  // Chooses a first part (j, k1) of a sequence with at least one part, the
  // rest being drawn from `rest`. j is scanned from both ends alternately.
  auto split = [&](Table rest, long double total, int m, int k) {
    Picker pick{static_cast<long double>(rng.uniform01()) * total};
    auto try_j = [&](int j) {
      for (int k1 = 0; k1 <= k; ++k1) {
        const long double w = value(kArcRooted, k1, j) * value(rest, k - k1, m - j);
        const int id = j * (kMaxLabels + 1) + k1;
        if (pick.take(w, id)) return true;
      }
      return false;
    };
    for (int lo = 1, hi = m; lo <= hi; ++lo, --hi) {
      if (try_j(lo)) break;
      if (hi != lo && try_j(hi)) break;
    }
    return std::pair<int, int>{pick.last_positive / (kMaxLabels + 1),
                               pick.last_positive % (kMaxLabels + 1)};
  };

  while (!stack.empty()) {
    const Task task = stack.back();
    stack.pop_back();
    switch (task.kind) {
      case Kind::Loop: {
        const int m = task.m;
        const int k = task.k;
        const long double options[4] = {
            m == 0 && k == 0 ? hairpin_weight_ : 0.0L,
            interior_weight_ * value(kArcRooted, k, m),
            multi_weight_ * value(kSeq2, k, m),
            k > 0 ? label_weight_ * value(kSeq0, k - 1, m) : 0.0L,
        };
        Picker pick{static_cast<long double>(rng.uniform01()) * value(kTheta, k, m)};
        for (int i = 0; i < 4; ++i) {
          if (pick.take(options[i], i)) break;
        }
        switch (pick.last_positive) {
          case 1: stack.push_back({Kind::Open, m, k, -1}); break;
          case 2: stack.push_back({Kind::Seq2, m, k, -1}); break;
          case 3:
            anchors.push_back(task.anchor);
            stack.push_back({Kind::Seq0, m, k - 1, -1});
            break;
          default: break;
        }
        break;
      }
      case Kind::Seq0:
        if (task.m > 0) stack.push_back({Kind::Seq1, task.m, task.k, -1});
        break;
      case Kind::Seq1:
      case Kind::Seq2: {
        const bool two = task.kind == Kind::Seq2;
        const auto [j, k1] = split(two ? kSeq1 : kSeq0, value(two ? kSeq2 : kSeq1, task.k, task.m),
                                   task.m, task.k);
        stack.push_back({two ? Kind::Seq1 : Kind::Seq0, task.m - j, task.k - k1, -1});
        stack.push_back({Kind::Open, j, k1, -1});
        break;
      }
      case Kind::Open: {
        const int left = cursor++;
        open.push_back(left);
        stack.push_back({Kind::Close, 0, 0, -1});
        stack.push_back({Kind::Loop, task.m - 1, task.k, left});
        break;
      }
      case Kind::Close: {
        const int right = cursor++;
        const int left = open.back();
        open.pop_back();
        partner[at(left)] = right;
        partner[at(right)] = left;
        break;
      }
    }
  }

  LabeledStructure out{Diagram::from_partners(partner), {}};
  if (arcs == 0) {
    if (labels == 1) out.labels.push_back(VertexHandle{-1});
    return out;
  }
  const UnicellularMap map = matching_to_unicellular(out.matching);
  for (int a : anchors) out.labels.push_back(map.vertex_of(a));
  std::sort(out.labels.begin(), out.labels.end(), [&](VertexHandle x, VertexHandle y) {
    return map.rank(x.min_half_edge) < map.rank(y.min_half_edge);
  });
  return out;
}

double PartitionTables::sampling_probability(const LabeledStructure& s) const {
  const Diagram& matching = s.matching;
  if (!matching.is_matching()) throw PreconditionError("sampling_probability: unpaired vertices");
  const int n = matching.arc_count();
  const int labels = static_cast<int>(s.labels.size());
  check_arcs(n);
  if (labels > kMaxLabels) throw PreconditionError("sampling_probability: too many labels");
  if (genus_of_matching(matching).genus != 0) return 0.0;

  // Anchor of each labeled loop: left end of its closing arc, or 2n-1 outside.
  const std::set<VertexHandle> wanted(s.labels.begin(), s.labels.end());
  if (static_cast<int>(wanted.size()) != labels) throw PreconditionError("sampling_probability: repeated label");
  const std::vector<int> partner = matching.partners();
  std::vector<int> labeled_at(at(2 * n + 1), 0);
  bool outer_labeled = false;
  int found = 0;
  if (n == 0) {
    outer_labeled = wanted.count(VertexHandle{-1}) > 0;
    found = outer_labeled ? 1 : 0;
  } else {
    const UnicellularMap map = matching_to_unicellular(matching);
    for (int i = 0; i < 2 * n; ++i) {
      if (partner[at(i)] > i && wanted.count(map.vertex_of(i))) {
        labeled_at[at(i)] = 1;
        ++found;
      }
    }
    if (wanted.count(map.vertex_of(2 * n - 1))) {
      outer_labeled = true;
      ++found;
    }
  }
  if (found != labels) throw PreconditionError("sampling_probability: label is not a vertex");
  std::vector<int> prefix(at(2 * n + 1), 0);
  for (int i = 0; i < 2 * n; ++i) prefix[at(i + 1)] = prefix[at(i)] + labeled_at[at(i)];

  long double log_p = 0.0L;
  auto factor = [&](long double num, long double den) {
    if (num <= 0.0L || den <= 0.0L) return false;
    log_p += std::log(num) - std::log(den);
    return true;
  };
  // Replays one loop: its children are the arcs starting at `first` and
  // following each other up to `stop`.
  auto replay = [&](int m, int k, bool labeled, int first, int stop) {
    std::vector<std::pair<int, int>> parts;
    for (int i = first; i < stop; i = partner[at(i)] + 1) {
      const int j = partner[at(i)];
      parts.emplace_back((j - i + 1) / 2, prefix[at(j)] - prefix[at(i)]);
    }
    const long double theta = value(kTheta, k, m);
    const int count = static_cast<int>(parts.size());
    int level = 0;
    if (labeled) {
      if (!factor(label_weight_ * value(kSeq0, k - 1, m), theta)) return false;
      --k;
      level = count > 0 ? 1 : 0;
    } else if (count == 0) {
      return factor(m == 0 && k == 0 ? hairpin_weight_ : 0.0L, theta);
    } else if (count == 1) {
      return factor(interior_weight_ * value(kArcRooted, k, m), theta);
    } else {
      if (!factor(multi_weight_ * value(kSeq2, k, m), theta)) return false;
      level = 2;
    }
    for (const auto& [j, k1] : parts) {
      if (level == 0) level = 1;
      const Table total = level == 2 ? kSeq2 : kSeq1;
      const Table rest = level == 2 ? kSeq1 : kSeq0;
      if (!factor(value(kArcRooted, k1, j) * value(rest, k - k1, m - j), value(total, k, m))) return false;
      m -= j;
      k -= k1;
      --level;
    }
    return m == 0 && k == 0;
  };

  if (!replay(n, labels, outer_labeled, 0, 2 * n)) return 0.0;
  for (int i = 0; i < 2 * n; ++i) {
    const int j = partner[at(i)];
    if (j < i) continue;
    if (!replay((j - i - 1) / 2, prefix[at(j)] - prefix[at(i)],
                labeled_at[at(i)] != 0, i + 1, j)) {
      return 0.0;
    }
  }
  return static_cast<double>(std::exp(log_p));
}

PartitionTables build_partitions(int max_arcs, const EnergyParams& params) {
  return PartitionTables(max_arcs, params);
}

Diagram sample_genus1_matching(const PartitionTables& tables, int arcs, RandomSource& rng) {
  if (arcs < 2) throw InfeasibleError("genus 1 needs at least two arcs");
  LabeledStructure s = tables.sample_labeled(arcs, 3, rng);
  UnicellularMap map = matching_to_unicellular(s.matching);
  glue_lambda_in_place(map, s.labels);
  return unicellular_to_matching(map);
}

int sample_genus1_arc_count(int length, const PartitionTables& tables, RandomSource& rng) {
  if (length < 4) throw InfeasibleError("genus 1 needs at least four vertices");
  if (length / 2 > tables.max_arcs()) {
    throw PreconditionError("partition tables too small for length " + std::to_string(length));
  }
  std::vector<double> logs;
  for (int n = 2; 2 * n <= length; ++n) logs.push_back(tables.log_vartheta1(length, n));
  const double top = *std::max_element(logs.begin(), logs.end());
  if (!std::isfinite(top)) throw InfeasibleError("genus-1 weights vanish for this length");
  double total = 0.0;
  for (double& l : logs) total += (l = std::exp(l - top));
  double target = rng.uniform01() * total;
  int last = 2;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (logs[i] <= 0.0) continue;
    last = 2 + static_cast<int>(i);
    target -= logs[i];
    if (target < 0.0) break;
  }
  return last;
}

Diagram sample_genus1(int length, const PartitionTables& tables, RandomSource& rng) {
  const int arcs = sample_genus1_arc_count(length, tables, rng);
  return insert_unpaired(sample_genus1_matching(tables, arcs, rng), length, rng);
}

}  // namespace pkgenus
