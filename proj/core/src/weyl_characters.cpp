#include "hldecomp/weyl_characters.hpp"

#include <numeric>

#include "hldecomp/errors.hpp"
#include "parallel.hpp"

namespace hldecomp {

BigInt CharacterTable::multiplicity(const Weight& w) const {
  auto it = weights.find(w);
  return it == weights.end() ? BigInt(0) : it->second;
}

BigInt CharacterTable::total() const {
  BigInt s = 0;
  for (const auto& [w, m] : weights) s += m;
  return s;
}

namespace {

using Row = std::vector<std::int64_t>;
// Epsilon-coordinate content of the rows below and including a given row.
using Content = std::map<Row, BigInt>;

class PatternCounter {
 public:
  const Content& below(const Row& row) {
    auto it = memo_.find(row);
    if (it != memo_.end()) return it->second;
    Content out;
    const std::int64_t row_sum = std::accumulate(row.begin(), row.end(), std::int64_t{0});
    if (row.size() == 1) {
      out[{row_sum}] = 1;
    } else {
      for_each_child(row, [&](const Row& child) {
        const std::int64_t child_sum =
            std::accumulate(child.begin(), child.end(), std::int64_t{0});
        for (const auto& [eps, count] : below(child)) {
          Row extended = eps;
          extended.push_back(row_sum - child_sum);
          out[extended] += count;
        }
      });
    }
    return memo_.emplace(row, std::move(out)).first->second;
  }

  // Calls fn on every row of length k-1 interlacing `row`.
  template <typename Fn>
  static void for_each_child(const Row& row, Fn&& fn) {
    Row child(row.size() - 1);
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == child.size()) {
        fn(child);
        return;
      }
      for (std::int64_t b = row[j + 1]; b <= row[j]; ++b) {
        child[j] = b;
        self(self, j + 1);
      }
    };
    rec(rec, 0);
  }

 private:
  std::map<Row, Content> memo_;
};

Weight from_epsilon(const Row& eps) {
  std::vector<std::int64_t> c(eps.size() - 1);
  for (std::size_t i = 0; i + 1 < eps.size(); ++i) c[i] = eps[i] - eps[i + 1];
  return Weight(std::move(c));
}

void require_dominant(const Weight& w) {
  if (!w.is_dominant()) throw NonDominantError("weight " + w.to_string() + " is not dominant");
}

}  // namespace

CharacterTable weight_multiplicities(const Weight& mu) {
  require_dominant(mu);
  const int n = mu.rank();
  Row top(n + 1, 0);
  for (int k = n; k >= 1; --k) top[k - 1] = top[k] + mu[k];

  CharacterTable table{mu, {}};
  if (n + 1 == 1) return table;
  const std::int64_t top_sum = std::accumulate(top.begin(), top.end(), std::int64_t{0});

  std::vector<Row> children;
  PatternCounter::for_each_child(top, [&](const Row& c) { children.push_back(c); });
  std::vector<std::map<Weight, BigInt>> partial(children.size());
  detail::parallel_for(children.size(), [&](std::size_t c) {
    PatternCounter counter;
    const auto& child = children[c];
    const std::int64_t child_sum = std::accumulate(child.begin(), child.end(), std::int64_t{0});
    for (const auto& [eps, count] : counter.below(child)) {
      Row full = eps;
      full.push_back(top_sum - child_sum);
      partial[c][from_epsilon(full)] += count;
    }
  });
  for (const auto& part : partial)
    for (const auto& [w, m] : part) table.weights[w] += m;
  return table;
}

Weight simple_reflection(const Weight& w, int i) {
  return w + simple_root_as_weight(w.rank(), i) * (-w[i]);
}

TensorDecomposition tensor_decompose(const Weight& mu, const Weight& nu, PeelOrder order) {
  require_dominant(mu);
  require_dominant(nu);
  if (mu.rank() != nu.rank()) throw InputError("tensor factors have different ranks");
  const auto a = weight_multiplicities(mu);
  const auto b = weight_multiplicities(nu);
  std::map<Weight, BigInt> remainder;
  for (const auto& [wa, ma] : a.weights)
    for (const auto& [wb, mb] : b.weights) remainder[wa + wb] += ma * mb;

  TensorDecomposition out;
  while (!remainder.empty()) {
    const Weight* top = nullptr;
    std::int64_t best = 0;
    for (const auto& [w, m] : remainder) {
      const auto h = dominance_height(w);
      const bool better = !top || h > best ||
                          (h == best && order == PeelOrder::LargestFirst && *top < w);
      if (better) {
        top = &w;
        best = h;
      }
    }
    const Weight lambda = *top;
    const BigInt c = remainder.at(lambda);
    if (c < 0 || !lambda.is_dominant())
      throw Error("character peeling failed at weight " + lambda.to_string());
    out[lambda] += c;
    for (const auto& [w, m] : weight_multiplicities(lambda).weights) {
      auto& r = remainder[w];
      r -= c * m;
      if (r == 0) remainder.erase(w);
    }
  }
  return out;
}

TensorDecomposition tensor_power_decompose(const Weight& mu, int N) {
  if (N < 1) throw InputError("tensor power must be at least 1");
  require_dominant(mu);
  TensorDecomposition current{{mu, 1}};
  for (int k = 2; k <= N; ++k) {
    TensorDecomposition next;
    for (const auto& [lambda, c] : current)
      for (const auto& [nu, m] : tensor_decompose(lambda, mu)) next[nu] += c * m;
    current = std::move(next);
  }
  return current;
}

BigInt tensor_power_multiplicity(const Weight& mu, int N, const Weight& nu) {
  require_dominant(nu);
  const auto dec = tensor_power_decompose(mu, N);
  auto it = dec.find(nu);
  return it == dec.end() ? BigInt(0) : it->second;
}

}  // namespace hldecomp
