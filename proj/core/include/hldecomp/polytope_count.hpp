#pragma once

// Lattice-point counting for the graded multiplicities of L(pi).
//
// For a multipartition mu with |mu_i| = r_i there is one variable C_{d,r,i}
// per (i, r, 1 <= d <= m_{i,r}), grouped by (r, i). The polytope is
//
//   C_{d,r,i} >= 0
//   sum_d C_{d,r,i} <= P_{r,i}                         for every group (r, i)
//   sum_{i=i_j}^{i_{j+1}} C_{m_{i,1},1,i} >= 1        for every consecutive pair
//   sum d * C_{d,r,i} = |gamma| - K - p
//
// and the number of its points at grade p is the contribution of mu to the
// coefficient of q^p. A pair inequality is only imposed when every node of its
// range has at least one row of length 1; otherwise it is vacuous.

#include <cstdint>
#include <utility>
#include <vector>

#include "hldecomp/hl_category.hpp"
#include "hldecomp/multipartition.hpp"
#include "hldecomp/qpolynomial.hpp"

namespace hldecomp {

struct PolytopeVariable {
  std::int64_t d = 1;
  std::int64_t r = 1;
  int i = 1;
  friend bool operator==(const PolytopeVariable&, const PolytopeVariable&) = default;
};

/// sum of the listed variables <= cap.
struct CapGroup {
  std::int64_t r = 1;
  int i = 1;
  std::int64_t cap = 0;
  std::vector<std::size_t> variables;
};

struct PolytopeSpec {
  std::vector<PolytopeVariable> variables;
  std::vector<CapGroup> groups;
  /// Each entry: variable indices whose sum must be >= 1.
  std::vector<std::vector<std::size_t>> pair_constraints;
  /// Set when a required capacity is negative; the polytope is then empty.
  bool infeasible = false;

  /// Index of C_{d,r,i}, or -1.
  std::ptrdiff_t find(std::int64_t d, std::int64_t r, int i) const;
};

PolytopeSpec build_polytope(const Multipartition& mu, const Weight& lambda,
                            const std::vector<std::pair<int, int>>& pairs,
                            EmptyGroupPolicy policy = EmptyGroupPolicy::Enforce);

enum class CountStrategy {
  /// Depth-first over groups with capacity pruning and a level histogram.
  DepthFirst,
  /// Dynamic programming over groups keyed by (level, satisfied pairs).
  GradeSliced,
  /// Every point of the box [0, cap]^vars, filtered. Reference only.
  NaiveBox,
};

/// Coefficient at q^p = number of points at level height - k - p.
QPolynomial count_by_grade(const PolytopeSpec& spec, std::int64_t height, std::int64_t k,
                           CountStrategy strategy = CountStrategy::DepthFirst);

struct MultiplicityOptions {
  EmptyGroupPolicy policy = EmptyGroupPolicy::Enforce;
  CountStrategy strategy = CountStrategy::DepthFirst;
  Pruning pruning = Pruning::Capacities;
};

/// Per-multipartition contribution, for diagnostics.
struct MultipartitionTerm {
  Multipartition mu;
  std::int64_t k = 0;
  QPolynomial count;
};

/// [L(pi) : V(wt(pi) - gamma)]_q. Throws InvalidWordError.
QPolynomial multiplicity(const DrinfeldWord& word, const RootLatticeElement& gamma,
                         const MultiplicityOptions& options = {});

/// Same sum, keeping every multipartition that was counted.
std::vector<MultipartitionTerm> multiplicity_terms(const DrinfeldWord& word,
                                                   const RootLatticeElement& gamma,
                                                   const MultiplicityOptions& options = {});

}  // namespace hldecomp
