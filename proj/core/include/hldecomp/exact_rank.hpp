#pragma once

// Rank of sparse integer matrices: exact fraction-free elimination over Z and
// a fast rank modulo a prime. The modular rank never exceeds the rational rank,
// so a full column rank mod p certifies nullity 0.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hldecomp {

class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, mpz_class>>;

  explicit SparseMatrix(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<Row>& row_data() const { return rows_; }

  /// Zero entries are dropped; an all-zero row is not stored. Returns whether
  /// the row was kept.
  bool add_row(const std::map<std::size_t, mpz_class>& entries);

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

enum class EliminationOrder {
  Natural,
  /// Rows and columns both visited back to front.
  Reversed,
  /// Rows and columns permuted by a seeded shuffle.
  Shuffled,
};

/// Exact rank over Q.
std::size_t exact_rank(const SparseMatrix& m, EliminationOrder order = EliminationOrder::Natural,
                       std::uint64_t seed = 0);

inline constexpr std::uint64_t kRankPrime = 2305843009213693951ULL;  // 2^61 - 1

/// Rank over Z/prime.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t prime = kRankPrime);

/// cols - rank, skipping exact elimination when the modular rank is full.
std::size_t nullity(const SparseMatrix& m);

}  // namespace hldecomp
