#pragma once
// Ehrhart counting, h*-vectors, reciprocity, and the structure theorem for
// degree <= 1 polytopes. Counts are exact; dilates of high-dimensional lattice
// pyramids are counted by peeling (i(Pyr Q, k) = sum_{j<=k} i(Q, j)) instead
// of scanning.

#include "gorpoly/polytope.hpp"

namespace gorpoly {

// |kP ∩ Z^n| and |int(kP) ∩ Z^n| (interior_count(p, 0) = 0 by convention).
Int ehrhart_count(const Polytope& p, long k);
Int interior_count(const Polytope& p, long k);
std::vector<Int> ehrhart_counts_upto(const Polytope& p, long kmax);
std::vector<Int> interior_counts_upto(const Polytope& p, long kmax);

struct HStar {
  std::vector<Int> h;  // h*_0 .. h*_n
  int dim = 0;         // n = affine dimension
  int degree = 0;      // max j with h*_j != 0
  Int nv;              // sum of entries = normalized volume
};
HStar h_star(const Polytope& p);

// h*_j == h*_{degree-j} for all j.
bool is_palindromic(const HStar& hs);

// Value of the Ehrhart polynomial at any integer t (negative included):
// i(P,t) = sum_j h*_j * binom(t + n - j, n).
Int ehrhart_eval(const HStar& hs, const Int& t);

// Structure of polytopes with h*-degree <= 1: unimodular simplex, the
// exceptional simplex conv{0, 2e1, 2e2, e3, ..., en}, or a Lawrence prism
// over a unimodular simplex with heights theta (sum theta = normalized
// volume, h*_1 = sum theta - 1).
enum class LowDegreeKind { BasicSimplex, ExceptionalSimplex, LawrencePrism };
struct LowDegreeStructure {
  LowDegreeKind kind;
  std::vector<Int> heights;  // LawrencePrism only; sorted descending
};
LowDegreeStructure degree_le1_structure(const Polytope& p);

}  // namespace gorpoly
