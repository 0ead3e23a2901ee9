#pragma once

// Height functions, the prime words pi_{kappa,J} they define, membership of a
// word in the prime family P+_Z(1), and the xi-tuple attached to a weight.
//
// Spectral parameters a = q^m are stored by their integer exponent m.
//
// Orientation: a sink is a strict local minimum of kappa restricted to J and a
// source a strict local maximum. Between consecutive marked vertices kappa is
// strictly monotone, so a sink i and the next source i' satisfy
// kappa(i') - kappa(i) = i' - i, and the exponents (kappa(i), kappa(i') + 2)
// differ by +(i' - i + 2) as the spacing rule requires.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hldecomp/root_system.hpp"

namespace hldecomp {

/// kappa : {1..n} -> Z with |kappa(i+1) - kappa(i)| <= 1.
class HeightFunction {
 public:
  explicit HeightFunction(std::vector<std::int64_t> values);

  int rank() const { return static_cast<int>(values_.size()); }
  /// 1-based.
  std::int64_t operator()(int i) const { return values_.at(i - 1); }
  const std::vector<std::int64_t>& values() const { return values_; }

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Closed node interval [lo, hi].
struct IntervalJ {
  int lo = 1;
  int hi = 1;
  bool contains(int i) const { return lo <= i && i <= hi; }
  friend bool operator==(const IntervalJ&, const IntervalJ&) = default;
};

/// One factor varpi_{i, q^m}.
struct WordFactor {
  int node = 1;
  std::int64_t exponent = 0;
  friend auto operator<=>(const WordFactor&, const WordFactor&) = default;
};

/// A product varpi_{i_1,q^{m_1}} ... varpi_{i_k,q^{m_k}} over sl_{n+1}.
/// Construction does not validate membership in P+_Z(1); see validate_p1().
class DrinfeldWord {
 public:
  DrinfeldWord(int n, std::vector<WordFactor> factors);

  int rank() const { return n_; }
  const std::vector<WordFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// "i1:m1,i2:m2,..."
  std::string to_string() const;

  friend bool operator==(const DrinfeldWord&, const DrinfeldWord&) = default;

 private:
  int n_;
  std::vector<WordFactor> factors_;
};

struct MarkedVertices {
  std::vector<int> sinks;
  std::vector<int> sources;
};

/// Strict local minima (sinks) and maxima (sources) of kappa restricted to J.
/// A single-node interval counts its node as a sink.
/// Throws FlatEdgeError if kappa(i) == kappa(i+1) for some lo <= i < hi.
MarkedVertices marked_vertices(const HeightFunction& kappa, IntervalJ J);

/// pi_{kappa,J}: factors (i, kappa(i)) at sinks and (i, kappa(i) + 2) at
/// sources, ordered by node.
DrinfeldWord pi_from_interval(const HeightFunction& kappa, IntervalJ J);

struct ValidationIssue {
  enum class Kind { NodeOutOfRange, NotStrictlyIncreasing, Spacing, Alternation };
  Kind kind;
  /// Index j (0-based) of the first factor involved.
  std::size_t position;
  std::string message;
};

/// Empty iff the word lies in P+_Z(1).
std::vector<ValidationIssue> validate_p1(const DrinfeldWord& word);

/// Throws InvalidWordError carrying every issue found by validate_p1().
void require_valid(const DrinfeldWord& word);

struct HeightInterval {
  HeightFunction kappa;
  IntervalJ interval;
};

/// Inverse of pi_from_interval. Off J, kappa continues with the slope of the
/// nearest edge inside J (constant for single-factor words).
/// Throws InvalidWordError for invalid or empty words.
HeightInterval pi_to_height_interval(const DrinfeldWord& word);

/// wt(pi) = sum_j varpi_{i_j}.
Weight weight_of(const DrinfeldWord& word);

/// Adjacent node pairs (i_j, i_{j+1}).
std::vector<std::pair<int, int>> consecutive_pairs(const DrinfeldWord& word);

/// Raw (not necessarily normalized) xi values keyed by positive root.
using RawXi = std::map<PositiveRoot, std::int64_t>;

/// A normalized tuple xi_alpha = min { xi_beta : beta >= alpha }.
class XiTuple {
 public:
  int rank() const { return n_; }
  std::int64_t operator[](const PositiveRoot& alpha) const;
  std::int64_t at(int lo, int hi) const { return (*this)[PositiveRoot{lo, hi}]; }
  const RawXi& values() const { return values_; }

  /// True when every entry equals the minimum over its superintervals.
  static bool is_normalized(const RawXi& values, int n);

  /// "1-1:2,2-2:2,1-2:2"
  std::string to_string() const;

  friend bool operator==(const XiTuple&, const XiTuple&) = default;

 private:
  friend XiTuple normalize_xi(const RawXi& raw, int n);
  XiTuple(int n, RawXi values) : n_(n), values_(std::move(values)) {}
  int n_ = 0;
  RawXi values_;
};

/// xi'_alpha = min { xi_beta : beta >= alpha }. Every positive root of rank n
/// must be present and nonnegative; throws InputError otherwise.
XiTuple normalize_xi(const RawXi& raw, int n);

/// xi_alpha = ceil(lambda(h_alpha) / 2); already normalized.
XiTuple xi_from_weight(const Weight& lambda);

/// xi_alpha = value for every alpha.
XiTuple constant_xi(int n, std::int64_t value);

}  // namespace hldecomp
