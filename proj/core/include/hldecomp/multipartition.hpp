#pragma once

// Partitions, multipartitions and the statistics used by the lattice-point
// formula:
//   mu_i(s)      boxes in the first s columns of mu_i
//   m_{i,r}      number of rows of length r in mu_i
//   d(mu_i)      number of rows of mu_i
//   P_{s,i}      lambda_i - 2 mu_i(s) + mu_{i-1}(s) + mu_{i+1}(s)
//   K            sum_i ( sum_j (2 j mu_i^j - mu_{i+1}(mu_i^j)) - lambda_i d(mu_i) )

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hldecomp/root_system.hpp"

namespace hldecomp {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::int64_t> parts);
  Partition(std::initializer_list<std::int64_t> parts)
      : Partition(std::vector<std::int64_t>(parts)) {}

  const std::vector<std::int64_t>& parts() const { return parts_; }
  /// |mu|.
  std::int64_t size() const;
  /// d(mu).
  std::int64_t rows() const { return static_cast<std::int64_t>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Largest part, 0 for the empty partition.
  std::int64_t first() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

/// mu(s) = sum_j min(mu^j, s).
std::int64_t col_count(const Partition& mu, std::int64_t s);

/// Number of parts equal to r.
std::int64_t row_mult(const Partition& mu, std::int64_t r);

/// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(std::int64_t m);

/// (mu_1, ..., mu_n).
class Multipartition {
 public:
  explicit Multipartition(std::vector<Partition> components);

  int rank() const { return static_cast<int>(components_.size()); }
  /// 1-based; the empty partition outside [1, n].
  const Partition& operator[](int i) const;
  const std::vector<Partition>& components() const { return components_; }

  /// (|mu_1|, ..., |mu_n|).
  RootLatticeElement gamma() const;

  std::string to_string() const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// P^{mu,lambda}_{s,i}; may be negative.
std::int64_t compute_p(const Multipartition& mu, const Weight& lambda, std::int64_t s, int i);

/// K^lambda_mu.
std::int64_t compute_k(const Multipartition& mu, const Weight& lambda);

/// How the capacity inequalities sum_{d<=m_{i,r}} C_{d,r,i} <= P_{r,i} are
/// treated when the group (r, i) has no variables (m_{i,r} = 0).
enum class EmptyGroupPolicy {
  /// The inequality reads 0 <= P_{r,i} and must hold.
  Enforce,
  /// The inequality is dropped.
  Relax,
};

enum class Pruning {
  /// Every multipartition with |mu_i| = r_i.
  None,
  /// Only multipartitions whose capacities P_{s,i} admit a lattice point.
  Capacities,
};

/// True when every group capacity that must hold is nonnegative.
bool capacities_feasible(const Multipartition& mu, const Weight& lambda, EmptyGroupPolicy policy);

/// All multipartitions with |mu_i| = r_i, optionally pruned by
/// capacities_feasible(). Deterministic order.
std::vector<Multipartition> enumerate_multipartitions(
    const RootLatticeElement& gamma, const Weight& lambda, Pruning prune,
    EmptyGroupPolicy policy = EmptyGroupPolicy::Enforce);

}  // namespace hldecomp
