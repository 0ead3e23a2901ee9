#pragma once

// Type A_n root and weight lattice arithmetic.
//
// Weights live in the fundamental-weight basis, root lattice elements in the
// simple-root basis. The only conversion between the two is
// weight_minus_gamma().

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hldecomp {

using BigInt = mpz_class;

/// Rank n of the Lie algebra sl_{n+1}.
class Rank {
 public:
  explicit Rank(int n);
  int value() const { return n_; }
  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

/// The positive root alpha_lo + ... + alpha_hi, 1 <= lo <= hi <= n.
struct PositiveRoot {
  int lo = 1;
  int hi = 1;

  /// Interval inclusion: [lo, hi] is a subset of [other.lo, other.hi].
  bool is_below(const PositiveRoot& other) const {
    return other.lo <= lo && hi <= other.hi;
  }
  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// An integral weight in the fundamental basis; coordinate i is the value on
/// the simple coroot h_i.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight zero(int n) { return Weight(std::vector<std::int64_t>(n, 0)); }
  static Weight fundamental(int n, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  /// 1-based coordinate.
  std::int64_t operator[](int i) const { return coords_.at(i - 1); }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight operator+(const Weight& other) const;
  Weight operator*(std::int64_t k) const;

  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// gamma = sum r_i alpha_i with all r_i >= 0.
class RootLatticeElement {
 public:
  RootLatticeElement() = default;
  explicit RootLatticeElement(std::vector<std::int64_t> coeffs);
  RootLatticeElement(std::initializer_list<std::int64_t> coeffs)
      : RootLatticeElement(std::vector<std::int64_t>(coeffs)) {}

  static RootLatticeElement zero(int n) {
    return RootLatticeElement(std::vector<std::int64_t>(n, 0));
  }

  int rank() const { return static_cast<int>(coeffs_.size()); }
  /// 1-based coefficient; 0 outside [1, n] so that r_0 = r_{n+1} = 0.
  std::int64_t operator[](int i) const {
    return (i < 1 || i > rank()) ? 0 : coeffs_[i - 1];
  }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// |gamma| = sum r_i.
  std::int64_t height() const;
  /// e_gamma = sum_{i<n} r_i r_{i+1}.
  std::int64_t e_gamma() const;
  bool is_zero() const { return height() == 0; }

  std::string to_string() const;

  friend auto operator<=>(const RootLatticeElement&, const RootLatticeElement&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
std::ostream& operator<<(std::ostream& os, const RootLatticeElement& g);

std::vector<PositiveRoot> positive_roots(Rank rank);

/// lambda(h_alpha) = lambda_lo + ... + lambda_hi.
std::int64_t pairing(const Weight& lambda, const PositiveRoot& alpha);

/// (lambda - gamma)(h_i) = lambda_i - 2 r_i + r_{i-1} + r_{i+1}.
Weight weight_minus_gamma(const Weight& lambda, const RootLatticeElement& gamma);

/// All gamma in Q+ with lambda - gamma dominant, sorted by height then
/// lexicographically.
std::vector<RootLatticeElement> enumerate_dominant_gammas(const Weight& lambda);

/// Upper bound on r_k over all gamma with lambda - gamma dominant:
/// floor(sum_j Cinv_{kj} lambda_j) where Cinv is the inverse Cartan matrix.
std::vector<std::int64_t> dominant_gamma_bounds(const Weight& lambda);

/// Weyl dimension formula for A_n. Throws NonDominantError.
BigInt weyl_dim(const Weight& mu);

/// The simple root alpha_i expressed in the fundamental basis.
Weight simple_root_as_weight(int n, int i);

/// The linear functional <nu, 2 rho^vee> = sum_i i (n+1-i) nu_i, strictly
/// increasing along the dominance order.
std::int64_t dominance_height(const Weight& nu);

/// Orders gammas by height, then lexicographically.
bool gamma_less(const RootLatticeElement& a, const RootLatticeElement& b);

}  // namespace hldecomp
