#pragma once

// Graded decompositions ch M = sum_gamma [M : V(lambda - gamma)]_q ch V(lambda - gamma)
// and their reports.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hldecomp/hl_category.hpp"
#include "hldecomp/polytope_count.hpp"
#include "hldecomp/qpolynomial.hpp"
#include "hldecomp/root_system.hpp"

namespace hldecomp {

enum class DecompositionSource {
  /// Lattice-point formula for L(pi).
  Polytope,
  /// Functional oracle restricted to the consecutive pairs of a word.
  OraclePair,
  /// Functional oracle for a truncated module M_{xi,lambda}.
  OracleFull,
};

std::string_view to_string(DecompositionSource s);

struct DecompositionEntry {
  RootLatticeElement gamma;
  /// lambda - gamma.
  Weight mu_weight;
  /// dim V(lambda - gamma).
  BigInt dim;
  QPolynomial poly;

  friend bool operator==(const DecompositionEntry&, const DecompositionEntry&) = default;
};

struct GradedDecomposition {
  int n = 1;
  Weight weight;
  std::optional<DrinfeldWord> word;
  std::optional<XiTuple> xi;
  DecompositionSource source = DecompositionSource::Polytope;
  /// Every gamma that was checked, including those with zero multiplicity.
  std::vector<RootLatticeElement> domain;
  /// Nonzero multiplicities, ordered by |gamma| then lexicographically.
  std::vector<DecompositionEntry> entries;

  /// Multiplicity at gamma; zero when gamma was checked and vanished.
  QPolynomial at(const RootLatticeElement& gamma) const;
  bool checked(const RootLatticeElement& gamma) const;

  friend bool operator==(const GradedDecomposition&, const GradedDecomposition&) = default;
};

/// Builds an entry list from per-gamma polynomials; zero polynomials are
/// dropped and the rest sorted.
std::vector<DecompositionEntry> make_entries(
    const Weight& lambda, const std::vector<std::pair<RootLatticeElement, QPolynomial>>& polys);

/// Graded decomposition of L(pi) over every dominant gamma, or only over
/// `only_gamma` when given. Throws InvalidWordError, and NonDominantError when
/// wt(pi) - only_gamma is not dominant.
GradedDecomposition graded_decomposition(const DrinfeldWord& word,
                                         const MultiplicityOptions& options = {},
                                         const std::optional<RootLatticeElement>& only_gamma = {});

/// sum_gamma mult(q = 1) * dim V(lambda - gamma).
BigInt total_dimension(const GradedDecomposition& dec);

enum class ReportFormat { Plain, Json, Latex };

/// Throws InputError for an unknown name.
ReportFormat parse_report_format(std::string_view name);

std::string report(const GradedDecomposition& dec, ReportFormat format);

std::string to_json(const GradedDecomposition& dec);
/// Throws InputError on malformed input.
GradedDecomposition decomposition_from_json(std::string_view text);

}  // namespace hldecomp
