#include "hldecomp/exact_rank.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

namespace hldecomp {

bool SparseMatrix::add_row(const std::map<std::size_t, mpz_class>& entries) {
  Row row;
  for (const auto& [c, v] : entries)
    if (v != 0) row.emplace_back(c, v);
  if (row.empty()) return false;
  rows_.push_back(std::move(row));
  return true;
}

namespace {

struct Permutation {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> col_rank;  // column -> position in the visiting order
};

Permutation make_order(const SparseMatrix& m, EliminationOrder order, std::uint64_t seed) {
  Permutation p;
  p.rows.resize(m.rows());
  std::iota(p.rows.begin(), p.rows.end(), 0);
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  if (order == EliminationOrder::Reversed) {
    std::reverse(p.rows.begin(), p.rows.end());
    std::reverse(cols.begin(), cols.end());
  } else if (order == EliminationOrder::Shuffled) {
    std::mt19937_64 rng(seed);
    std::shuffle(p.rows.begin(), p.rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
  }
  p.col_rank.resize(m.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) p.col_rank[cols[k]] = k;
  return p;
}

// Rows are kept sorted by visiting position; the leading entry is front().
template <typename T>
using PosRow = std::vector<std::pair<std::size_t, T>>;

template <typename T, typename Combine, typename Normalize>
std::size_t echelon_rank(const SparseMatrix& m, const Permutation& perm,
                         const std::function<T(const mpz_class&)>& convert, Combine combine,
                         Normalize normalize) {
  std::unordered_map<std::size_t, PosRow<T>> pivots;
  for (auto r : perm.rows) {
    PosRow<T> row;
    for (const auto& [c, v] : m.row_data()[r]) {
      T x = convert(v);
      if (!(x == T(0))) row.emplace_back(perm.col_rank[c], std::move(x));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        normalize(row);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = combine(row, it->second);
      normalize(row);
    }
  }
  return pivots.size();
}

// a * row - b * pivot, with a, b chosen to cancel the shared leading entry.
PosRow<mpz_class> combine_z(const PosRow<mpz_class>& row, const PosRow<mpz_class>& pivot) {
  mpz_class g = gcd(row.front().second, pivot.front().second);
  const mpz_class a = pivot.front().second / g;
  const mpz_class b = row.front().second / g;
  PosRow<mpz_class> out;
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      mpz_class v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_z(PosRow<mpz_class>& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  for (auto& [c, v] : row) v /= g;
}

__extension__ typedef unsigned __int128 u128;

struct ModP {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const u128 x = static_cast<u128>(a) * b;
    if (p == kRankPrime) {
      // Mersenne reduction: 2^61 = 1 mod p.
      std::uint64_t r = static_cast<std::uint64_t>(x & kRankPrime) +
                        static_cast<std::uint64_t>(x >> 61);
      return r >= p ? r - p : r;
    }
    return static_cast<std::uint64_t>(x % p);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }
};

}  // namespace

std::size_t exact_rank(const SparseMatrix& m, EliminationOrder order, std::uint64_t seed) {
  const auto perm = make_order(m, order, seed);
  return echelon_rank<mpz_class>(
      m, perm, [](const mpz_class& v) { return v; }, combine_z, normalize_z);
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t prime) {
  const ModP f{prime};
  const std::size_t cols = m.cols();
  // Pivot rows are monic and stored sparse; each incoming row is reduced in a
  // dense accumulator, which avoids reallocating on every elimination step.
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> pivot(cols);
  std::vector<bool> has_pivot(cols, false);
  std::vector<std::uint64_t> acc(cols, 0);
  std::size_t rank = 0;
  for (const auto& src : m.row_data()) {
    if (rank == cols) break;
    std::size_t lead = cols, last = 0;
    for (const auto& [c, v] : src) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), prime);
      acc[c] = r.get_ui();
      if (acc[c] != 0) {
        lead = std::min(lead, c);
        last = std::max(last, c);
      }
    }
    for (std::size_t c = lead; c < cols && c <= last; ++c) {
      if (acc[c] == 0) continue;
      if (!has_pivot[c]) {
        const auto inv = f.inv(acc[c]);
        auto& row = pivot[c];
        for (std::size_t d = c; d <= last; ++d)
          if (acc[d] != 0) {
            row.emplace_back(d, f.mul(acc[d], inv));
            acc[d] = 0;
          }
        has_pivot[c] = true;
        ++rank;
        break;
      }
      const auto b = acc[c];
      for (const auto& [d, v] : pivot[c]) {
        acc[d] = f.sub(acc[d], f.mul(b, v));
        last = std::max(last, d);
      }
    }
  }
  return rank;
}

std::size_t nullity(const SparseMatrix& m) {
  if (m.rows() >= m.cols() && rank_mod_p(m) == m.cols()) return 0;
  return m.cols() - exact_rank(m);
}

}  // namespace hldecomp
