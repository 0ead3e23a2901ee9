#pragma once

// Dimension oracle for spaces of symmetric Laurent polynomials f(x_gamma) in
// the variables x_{i,r} (1 <= i <= n, 1 <= r <= r_i), homogeneous of degree
// -p - |gamma| + e_gamma, subject to
//
//   (bounds)   -lo_i <= deg_{x_{i,r}} f <= r_{i-1} + r_{i+1} - 2
//   (serre)    f|_{x_{i,1} = x_{i,2} = x_{i+-1,1}} = 0
//   (collapse) z^{lambda_i} f|_{x_{i,1} = ... = x_{i,r} = z} has no pole at z = 0
//   (interval) z^{xi_{i,j}} f|_{x_{i,1} = ... = x_{j,1} = z} has no pole at z = 0
//
// The graded multiplicity [M : V(lambda - gamma)]_q is sum_p dim * q^p.
//
// f is written in the orbit basis of monomial symmetric functions of the group
// S_{r_1} x ... x S_{r_n}; every condition is linear in the orbit coefficients
// and is extracted exactly after substituting a fresh variable z.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hldecomp/decomposition.hpp"
#include "hldecomp/exact_rank.hpp"
#include "hldecomp/hl_category.hpp"
#include "hldecomp/root_system.hpp"

namespace hldecomp {

enum class OracleMode {
  /// Interval conditions only for the consecutive pairs of a word.
  Pair,
  /// Interval conditions for every positive root, from a normalized xi.
  FullXi,
};

std::string_view to_string(OracleMode mode);

struct OracleInput {
  OracleMode mode = OracleMode::FullXi;
  Weight lambda;
  /// Set in FullXi mode.
  std::optional<XiTuple> xi;
  /// Set in Pair mode.
  std::optional<DrinfeldWord> word;

  int rank() const { return lambda.rank(); }

  /// Pair mode for L(pi). Throws InvalidWordError.
  static OracleInput from_word(const DrinfeldWord& word);
  /// FullXi mode for M_{xi,lambda}. Throws NonDominantError.
  static OracleInput from_xi(const XiTuple& xi, const Weight& lambda);
};

struct VariableSet {
  /// r_i, 0-based by node.
  std::vector<std::int64_t> count;
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  int rank() const { return static_cast<int>(count.size()); }
  std::int64_t total() const;
  /// Some node carries variables but has lo > hi.
  bool empty_box() const;
};

VariableSet variable_bounds(const OracleInput& input, const RootLatticeElement& gamma);

/// Orbit representative: for each node the sorted exponents of its variables,
/// concatenated node by node.
using Orbit = std::vector<std::int64_t>;

/// All orbits of total degree `degree`, in lexicographic order.
std::vector<Orbit> orbit_basis(const VariableSet& vars, std::int64_t degree);

/// -p - |gamma| + e_gamma.
std::int64_t orbit_degree(const RootLatticeElement& gamma, std::int64_t p);

/// The p for which the orbit basis can be nonempty.
struct GradeWindow {
  std::int64_t min = 0;
  std::int64_t max = -1;
  bool empty() const { return max < min; }
};
GradeWindow grade_window(const VariableSet& vars, const RootLatticeElement& gamma);

struct ConditionTag {
  enum class Kind { LowerBound, UpperBound, Serre, Collapse, Interval };
  Kind kind;
  /// Node for bounds, collapse and serre; interval start otherwise.
  int i = 1;
  /// Neighbour for serre; interval end for interval.
  int j = 1;
  /// Number of merged variables of node i for collapse.
  std::int64_t r = 0;
  /// The admissible bound: exponent bound for bounds, pole order otherwise.
  std::int64_t bound = 0;

  std::string to_string() const;
  friend bool operator==(const ConditionTag&, const ConditionTag&) = default;
};

struct ConstraintMatrix {
  std::vector<Orbit> orbits;
  SparseMatrix matrix{0};
  /// Source condition of every row.
  std::vector<ConditionTag> row_tags;
  /// Every condition that can cut the space at this gamma: the variable
  /// bounds, plus each substitution condition not implied by the bounds.
  std::vector<ConditionTag> conditions;

  /// Column of an orbit, or -1.
  std::ptrdiff_t column(const Orbit& orbit) const;
};

/// Conditions that are not automatically satisfied by the variable bounds.
std::vector<ConditionTag> active_conditions(const OracleInput& input,
                                            const RootLatticeElement& gamma);

ConstraintMatrix build_constraints(const OracleInput& input, const RootLatticeElement& gamma,
                                   std::int64_t p);

std::size_t dim_v(const OracleInput& input, const RootLatticeElement& gamma, std::int64_t p);

/// sum_p dim_v(p) q^p over the grade window.
QPolynomial oracle_multiplicity(const OracleInput& input, const RootLatticeElement& gamma);

/// Every dominant gamma, or only `only_gamma`. Throws NonDominantError when
/// lambda - only_gamma is not dominant.
GradedDecomposition oracle_decomposition(const OracleInput& input,
                                         const std::optional<RootLatticeElement>& only_gamma = {});

}  // namespace hldecomp
