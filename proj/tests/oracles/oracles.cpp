#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <utility>

namespace oracle {

std::vector<Partners> all_matchings(int n) {
  std::vector<Partners> out;
  Partners p(static_cast<std::size_t>(2 * n), -1);
  std::function<void()> rec = [&] {
    int first = -1;
    for (int i = 0; i < 2 * n; ++i) {
      if (p[i] < 0) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      out.push_back(p);
      return;
    }
    for (int j = first + 1; j < 2 * n; ++j) {
      if (p[j] >= 0) continue;
      p[first] = j;
      p[j] = first;
      rec();
      p[first] = p[j] = -1;
    }
  };
  rec();
  return out;
}

std::vector<std::vector<int>> rainbow_cycles(const Partners& p) {
  const int n = static_cast<int>(p.size()) / 2;
  const int h = 2 * n + 2;
  std::vector<int> alpha(h);
  alpha[0] = h - 1;
  alpha[h - 1] = 0;
  for (int i = 0; i < 2 * n; ++i) alpha[i + 1] = p[i] + 1;
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(h, false);
  for (int s = 0; s < h; ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = s; !seen[x]; x = alpha[(x + 1) % h]) {
      seen[x] = true;
      c.push_back(x);
    }
    cycles.push_back(c);
  }
  return cycles;
}

int genus(const Partners& p) {
  const int n = static_cast<int>(p.size()) / 2;
  const int r = static_cast<int>(rainbow_cycles(p).size());
  // v = 1, e = n + 1: 2 - 2g = 1 - (n + 1) + r.
  return (n + 2 - r) / 2;
}

std::vector<Loop> loops(const Partners& p) {
  const int top = static_cast<int>(p.size()) + 1;
  std::vector<Loop> out;
  for (const auto& c : rainbow_cycles(p)) {
    Loop l;
    l.degree = static_cast<int>(c.size());
    l.plant = c.size() == 1 && c[0] == top;
    int descents = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[(i + 1) % c.size()] <= c[i]) ++descents;
    }
    l.knotted = descents > 1;
    out.push_back(l);
  }
  return out;
}

double loop_weight(const Loop& l, const Params& q) {
  if (l.plant) return 0;
  if (l.knotted) return q.mul;
  if (l.degree == 1) return q.hp;
  if (l.degree == 2) return q.in;
  return q.mul;
}

double eta(const Partners& p, const Params& q) {
  const int n = static_cast<int>(p.size()) / 2;
  double e = n * q.b;
  for (const Loop& l : loops(p)) e += loop_weight(l, q);
  if (genus(p) == 1) e += q.pk;
  return e;
}

long double theta0(int k, int m, const Params& q) {
  const double label = (q.mul + q.pk) / 3;
  long double total = 0;
  for (const Partners& p : all_matchings(m)) {
    if (genus(p) != 0) continue;
    std::vector<double> w;
    for (const Loop& l : loops(p)) {
      if (!l.plant) w.push_back(loop_weight(l, q));
    }
    const int v = static_cast<int>(w.size());
    double base = m * q.b;
    for (double x : w) base += x;
    for (unsigned mask = 0; mask < (1u << v); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      double e = base;
      for (int i = 0; i < v; ++i) {
        if (mask >> i & 1u) e += label - w[i];
      }
      total += std::exp(static_cast<long double>(e));
    }
  }
  return total;
}

mpz_class harer_zagier(int g, int n) {
  static std::map<std::pair<int, int>, mpz_class> memo;
  if (g < 0 || n < 0 || 2 * g > n) return 0;
  if (n == 0) return g == 0 ? 1 : 0;
  const auto key = std::make_pair(g, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  mpz_class v = 2 * (2 * n - 1) * harer_zagier(g, n - 1);
  if (n >= 2) v += mpz_class(n - 1) * (2 * n - 1) * (2 * n - 3) * harer_zagier(g - 1, n - 2);
  v /= (n + 1);
  memo[key] = v;
  return v;
}

std::uint64_t diagrams_brute(int length, int g) {
  std::uint64_t count = 0;
  Partners p(static_cast<std::size_t>(length), -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == length) {
      Partners core;
      std::vector<int> index(length, -1);
      int c = 0;
      for (int x = 0; x < length; ++x) {
        if (p[x] >= 0) index[x] = c++;
      }
      core.resize(c);
      for (int x = 0; x < length; ++x) {
        if (p[x] >= 0) core[index[x]] = index[p[x]];
      }
      const int gg = c == 0 ? 0 : genus(core);
      if (gg == g) ++count;
      return;
    }
    if (p[i] >= 0) {
      rec(i + 1);
      return;
    }
    rec(i + 1);  // i unpaired
    for (int j = i + 1; j < length; ++j) {
      if (p[j] >= 0) continue;
      p[i] = j;
      p[j] = i;
      rec(i + 1);
      p[i] = p[j] = -1;
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
