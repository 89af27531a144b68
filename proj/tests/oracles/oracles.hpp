#pragma once

// Brute-force reference implementations. They share no code with the
// library: matchings are plain partner tables, loops are the boundary
// cycles of the rainbow fatgraph traced by hand, and counts come from the
// Harer-Zagier recursion rather than the trisection recursion.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Partners = std::vector<int>;  // 0-based, partner[i] == j iff arc (i, j)

/// All perfect matchings on 2n points, by recursive pairing of the first
/// free point.
std::vector<Partners> all_matchings(int n);

/// Boundary cycles of the backbone-collapsed fatgraph with the rainbow
/// added: half-edges 0..2n+1, sigma(h) = h+1 mod 2n+2, alpha pairs arcs
/// (shifted by one) and (0, 2n+1); gamma = alpha(sigma(h)).
std::vector<std::vector<int>> rainbow_cycles(const Partners& p);

/// Genus from the Euler relation on the rainbow fatgraph.
int genus(const Partners& p);

struct Loop {
  int degree = 0;      // length of the boundary cycle
  bool plant = false;  // the cycle over the rainbow
  bool knotted = false;  // more than one cyclic descent
};

std::vector<Loop> loops(const Partners& p);

struct Params {
  double b = 0, hp = 0, in = 0, mul = 0, pk = 0;
};

/// Energy of one loop when unlabeled.
double loop_weight(const Loop& l, const Params& q);

/// eta of a matching of genus 0 or 1.
double eta(const Partners& p, const Params& q);

/// Sum over planar matchings with m arcs and k-subsets of their non-plant
/// loops of exp(eta), each labeled loop weighted (mul + pk) / 3.
long double theta0(int k, int m, const Params& q);

/// Harer-Zagier: (n+1) e_g(n) = 2(2n-1) e_g(n-1) + (n-1)(2n-1)(2n-3) e_{g-1}(n-2).
mpz_class harer_zagier(int g, int n);

/// Number of diagrams on `length` vertices with genus g, by brute force over
/// all partial matchings. Practical up to length 12.
std::uint64_t diagrams_brute(int length, int g);

}  // namespace oracle
