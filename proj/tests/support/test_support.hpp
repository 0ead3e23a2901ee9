#pragma once

// Shared helpers for the test suites: word grids and reference computations
// written independently of the library's algorithms.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "hldecomp/hl_category.hpp"
#include "hldecomp/root_system.hpp"

namespace hldecomp::reference {

/// Every word in P+_Z(1) of rank n with 0 < k <= k_max factors whose first
/// exponent lies in `first_exponents`.
inline std::vector<DrinfeldWord> valid_words(int n, int k_max,
                                             const std::vector<std::int64_t>& first_exponents) {
  std::vector<DrinfeldWord> out;
  std::vector<WordFactor> cur;
  std::function<void(int)> extend = [&](int k) {
    if (!cur.empty() && validate_p1(DrinfeldWord(n, cur)).empty()) out.emplace_back(n, cur);
    if (k == k_max) return;
    const int start = cur.empty() ? 1 : cur.back().node + 1;
    for (int node = start; node <= n; ++node) {
      if (cur.empty()) {
        for (auto m : first_exponents) {
          cur.push_back({node, m});
          extend(k + 1);
          cur.pop_back();
        }
        continue;
      }
      const std::int64_t step = node - cur.back().node + 2;
      for (std::int64_t sign : {1, -1}) {
        cur.push_back({node, cur.back().exponent + sign * step});
        if (validate_p1(DrinfeldWord(n, cur)).empty()) extend(k + 1);
        cur.pop_back();
      }
    }
  };
  extend(0);
  return out;
}

/// dim V(mu) by the hook-content formula for the partition with
/// column lengths read off mu.
inline mpz_class hook_content_dim(const Weight& mu) {
  const int n = mu.rank();
  std::vector<std::int64_t> rows(n, 0);  // partition parts lambda_1 >= ... >= lambda_n
  for (int k = n; k >= 1; --k) rows[k - 1] = (k < n ? rows[k] : 0) + mu[k];
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < rows[i]; ++j) {
      std::int64_t below = 0;
      for (int t = i + 1; t < n && rows[t] > j; ++t) ++below;
      const std::int64_t hook = rows[i] - j - 1 + below + 1;
      num *= n + 1 + (j - i);
      den *= hook;
    }
  return num / den;
}

/// Every gamma in the box [0, bound]^n with lambda - gamma dominant.
inline std::vector<RootLatticeElement> brute_dominant_gammas(const Weight& lambda,
                                                             std::int64_t bound) {
  const int n = lambda.rank();
  std::vector<RootLatticeElement> out;
  std::vector<std::int64_t> r(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      RootLatticeElement g(r);
      if (weight_minus_gamma(lambda, g).is_dominant()) out.push_back(g);
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      r[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Rank over Q by dense Gaussian elimination with rational pivots.
inline std::size_t dense_rational_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace hldecomp::reference
