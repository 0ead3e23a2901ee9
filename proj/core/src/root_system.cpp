#include "hldecomp/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hldecomp/errors.hpp"

namespace hldecomp {

Rank::Rank(int n) : n_(n) {
  if (n < 1) throw InputError("rank must be at least 1, got " + std::to_string(n));
}

Weight Weight::fundamental(int n, int i) {
  if (i < 1 || i > n) throw InputError("fundamental weight index out of range");
  std::vector<std::int64_t> c(n, 0);
  c[i - 1] = 1;
  return Weight(std::move(c));
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

Weight Weight::operator+(const Weight& other) const {
  if (other.rank() != rank()) throw InputError("rank mismatch in weight addition");
  std::vector<std::int64_t> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Weight(std::move(c));
}

Weight Weight::operator*(std::int64_t k) const {
  std::vector<std::int64_t> c(coords_);
  for (auto& x : c) x *= k;
  return Weight(std::move(c));
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string Weight::to_string() const { return join(coords_); }

RootLatticeElement::RootLatticeElement(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (auto r : coeffs_)
    if (r < 0) throw InputError("root lattice element must lie in Q+");
}

std::int64_t RootLatticeElement::height() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

std::int64_t RootLatticeElement::e_gamma() const {
  std::int64_t e = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) e += coeffs_[i] * coeffs_[i + 1];
  return e;
}

std::string RootLatticeElement::to_string() const { return join(coeffs_); }

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }
std::ostream& operator<<(std::ostream& os, const RootLatticeElement& g) {
  return os << g.to_string();
}

std::vector<PositiveRoot> positive_roots(Rank rank) {
  const int n = rank.value();
  std::vector<PositiveRoot> roots;
  roots.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  // Ordered by length, then by starting node.
  for (int len = 1; len <= n; ++len)
    for (int i = 1; i + len - 1 <= n; ++i) roots.push_back({i, i + len - 1});
  return roots;
}

std::int64_t pairing(const Weight& lambda, const PositiveRoot& alpha) {
  if (alpha.lo < 1 || alpha.hi > lambda.rank() || alpha.lo > alpha.hi)
    throw InputError("positive root out of range for weight");
  std::int64_t s = 0;
  for (int t = alpha.lo; t <= alpha.hi; ++t) s += lambda[t];
  return s;
}

Weight weight_minus_gamma(const Weight& lambda, const RootLatticeElement& gamma) {
  if (lambda.rank() != gamma.rank()) throw InputError("rank mismatch between weight and gamma");
  const int n = lambda.rank();
  std::vector<std::int64_t> c(n);
  for (int i = 1; i <= n; ++i) c[i - 1] = lambda[i] - 2 * gamma[i] + gamma[i - 1] + gamma[i + 1];
  return Weight(std::move(c));
}

std::vector<std::int64_t> dominant_gamma_bounds(const Weight& lambda) {
  const std::int64_t n = lambda.rank();
  std::vector<std::int64_t> bound(n);
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t num = 0;
    for (std::int64_t j = 1; j <= n; ++j)
      num += std::min(k, j) * (n + 1 - std::max(k, j)) * lambda[static_cast<int>(j)];
    bound[k - 1] = num / (n + 1);
  }
  return bound;
}

bool gamma_less(const RootLatticeElement& a, const RootLatticeElement& b) {
  const auto ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs() < b.coeffs();
}

std::vector<RootLatticeElement> enumerate_dominant_gammas(const Weight& lambda) {
  if (!lambda.is_dominant()) throw NonDominantError("enumerate_dominant_gammas: weight " +
                                                    lambda.to_string() + " is not dominant");
  const int n = lambda.rank();
  const auto bound = dominant_gamma_bounds(lambda);
  std::vector<RootLatticeElement> out;
  std::vector<std::int64_t> r(n + 2, 0);  // r[0] = r[n+1] = 0

  // Coordinate i of lambda - gamma is final once r_{i+1} is chosen.
  auto coord = [&](int i) { return lambda[i] - 2 * r[i] + r[i - 1] + r[i + 1]; };

  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      if (coord(n) >= 0) out.emplace_back(std::vector<std::int64_t>(r.begin() + 1, r.begin() + n + 1));
      return;
    }
    for (std::int64_t v = 0; v <= bound[i - 1]; ++v) {
      r[i] = v;
      if (i >= 2 && coord(i - 1) < 0) continue;
      self(self, i + 1);
    }
    r[i] = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), gamma_less);
  return out;
}

BigInt weyl_dim(const Weight& mu) {
  if (!mu.is_dominant())
    throw NonDominantError("weyl_dim: weight " + mu.to_string() + " is not dominant");
  const int n = mu.rank();
  BigInt num = 1, den = 1;
  for (int i = 1; i <= n; ++i) {
    std::int64_t partial = 0;
    for (int j = i; j <= n; ++j) {
      partial += mu[j];
      num *= BigInt(static_cast<long>(partial + j - i + 1));
      den *= BigInt(j - i + 1);
    }
  }
  return num / den;
}

Weight simple_root_as_weight(int n, int i) {
  std::vector<std::int64_t> c(n, 0);
  c[i - 1] = 2;
  if (i > 1) c[i - 2] = -1;
  if (i < n) c[i] = -1;
  return Weight(std::move(c));
}

std::int64_t dominance_height(const Weight& nu) {
  const std::int64_t n = nu.rank();
  std::int64_t h = 0;
  for (std::int64_t k = 1; k <= n; ++k) h += k * (n + 1 - k) * nu[static_cast<int>(k)];
  return h;
}

}  // namespace hldecomp
