#pragma once

#include <vector>

#include "oracles.hpp"
#include "pkgenus/diagram.hpp"
#include "pkgenus/energy.hpp"

inline pkgenus::Diagram to_diagram(const oracle::Partners& p) { return pkgenus::Diagram::from_partners(p); }

inline oracle::Partners to_partners(const pkgenus::Diagram& d) { return d.partners(); }

inline oracle::Params to_oracle(const pkgenus::EnergyParams& p) {
  return {p.arc, p.hairpin, p.interior, p.multi, p.pseudoknot};
}

/// The parameter vector used throughout the energy tests and shipped as the
/// example configuration.
inline pkgenus::EnergyParams test_vector() {
  pkgenus::EnergyParams p;
  p.arc = 0.1;
  p.hairpin = -0.2;
  p.interior = 0.05;
  p.multi = -0.1;
  p.pseudoknot = 0.3;
  return p;
}

#include <map>

#include <boost/math/distributions/chi_squared.hpp>

/// Upper-tail p-value of Pearson's statistic for `observed` counts against a
/// uniform law on `cells` outcomes (unseen outcomes count as zero).
template <class Key>
double uniform_chi_square_p(const std::map<Key, int>& observed, double cells, double draws) {
  const double expected = draws / cells;
  double chi2 = (cells - static_cast<double>(observed.size())) * expected;
  for (const auto& [key, c] : observed) chi2 += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(cells - 1);
  return boost::math::cdf(boost::math::complement(dist, chi2));
}
