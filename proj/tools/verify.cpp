#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "cli.hpp"
#include "pkgenus/energy.hpp"
#include "pkgenus/enumerate.hpp"
#include "pkgenus/sampler.hpp"
#include "pkgenus/unicellular.hpp"

namespace pkgenus::cli {

namespace {

const char* verdict(bool ok) { return ok ? "OK" : "FAIL"; }

bool census(int n, std::ostream& out) {
  std::vector<std::uint64_t> by_genus(static_cast<std::size_t>(n / 2 + 1), 0);
  for_each_matching(n, [&](const Diagram& d) { ++by_genus[static_cast<std::size_t>(genus_of_matching(d).genus)]; });
  bool ok = true;
  std::uint64_t sum = 0;
  out << "n=" << n << ":";
  for (int g = 0; g <= n / 2; ++g) {
    const std::uint64_t c = by_genus[static_cast<std::size_t>(g)];
    out << ' ' << c;
    sum += c;
    ok = ok && mpz_class(std::to_string(c)) == epsilon(g, n);
  }
  ok = ok && sum == matching_count(n);
  out << " | sum " << sum << " = " << 2 * n - 1 << "!! " << verdict(ok) << '\n';
  return ok;
}

bool bijection(int max_n, std::ostream& out) {
  std::uint64_t maps = 0;
  std::uint64_t pairs = 0;
  bool laws = true;
  bool trips = true;
  for (int n = 1; n <= max_n; ++n) {
    for_each_matching(n, [&](const Diagram& d) {
      const UnicellularMap map = matching_to_unicellular(d);
      ++maps;
      const auto ts = find_trisections(map);
      laws = laws && static_cast<int>(ts.size()) == 2 * map.genus();
      for (const Trisection& t : ts) {
        ++pairs;
        const SliceResult s = slice_xi(map, t);
        const GlueResult g = glue_lambda(s.map, s.vertices);
        trips = trips && g.map == map && g.trisection.half_edge == t.half_edge;
      }
    });
  }
  out << "2g trisections: " << verdict(laws) << " (" << maps << " maps)\n";
  out << "slice/glue round trip: " << verdict(trips) << " (" << pairs << " pairs)\n";
  return laws && trips;
}

bool partition_functions(int max_m, std::ostream& out) {
  bool ok = true;
  for (const EnergyParams& q : {EnergyParams{}, EnergyParams{0.1, -0.2, 0.05, -0.1, 0.3}}) {
    const PartitionTables t = build_partitions(max_m, q);
    for (int m = 0; m <= max_m; ++m) {
      std::vector<long double> brute(4, 0.0L);
      for_each_matching(m, [&](const Diagram& d) {
        if (genus_of_matching(d).genus != 0) return;
        const std::vector<VertexHandle> vs = matching_to_unicellular(d).vertices();
        const unsigned v = static_cast<unsigned>(vs.size());
        for (unsigned mask = 0; mask < (1u << v); ++mask) {
          const int k = __builtin_popcount(mask);
          if (k > 3) continue;
          LabeledStructure s{d, {}};
          for (unsigned i = 0; i < v; ++i) {
            if (mask >> i & 1u) s.labels.push_back(vs[i]);
          }
          brute[static_cast<std::size_t>(k)] += std::exp(static_cast<long double>(eta_with_labels(s, q)));
        }
      });
      for (int k = 0; k <= 3; ++k) {
        const long double a = t.theta0(k, m);
        const long double b = brute[static_cast<std::size_t>(k)];
        ok = ok && std::fabs(a - b) <= 1e-9L * std::max(std::fabs(a), std::fabs(b));
      }
    }
  }
  out << "partition functions: " << verdict(ok) << " (m<=" << max_m << ", k=0..3)\n";
  return ok;
}

bool uniformity(int n, int samples, unsigned long long seed, std::ostream& out) {
  const int g = n / 2;
  std::map<std::vector<int>, std::uint64_t> seen;
  for (int i = 0; i < samples; ++i) {
    RandomSource rng(seed, static_cast<std::uint64_t>(i));
    ++seen[uniform_matching(n, g, rng).partners()];
  }
  const double cells = epsilon(g, n).get_d();
  const double expected = samples / cells;
  double chi2 = (cells - static_cast<double>(seen.size())) * expected;
  for (const auto& [m, c] : seen) chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  bool ok = true;
  double p = 1.0;
  if (cells > 1) {
    const boost::math::chi_squared dist(cells - 1);
    p = boost::math::cdf(boost::math::complement(dist, chi2));
    ok = p > 1e-3;
  }
  std::ostringstream line;
  line << "uniformity n=" << n << " g=" << g << ": chi2=" << chi2 << " df=" << cells - 1 << " p=" << p;
  out << line.str() << ' ' << verdict(ok) << '\n';
  return ok;
}

}  // namespace

int verify(int max_edges, int samples, unsigned long long seed, std::ostream& out) {
  bool ok = true;
  for (int n = 1; n <= max_edges; ++n) ok = census(n, out) && ok;
  ok = bijection(std::min(max_edges, 5), out) && ok;
  ok = partition_functions(std::min(max_edges, 6), out) && ok;
  ok = uniformity(std::clamp(max_edges, 2, 4), samples, seed, out) && ok;
  out << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace pkgenus::cli
