#include "hldecomp/multipartition.hpp"

#include <algorithm>
#include <sstream>

#include "hldecomp/errors.hpp"

namespace hldecomp {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) throw InputError("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
}

std::int64_t Partition::size() const {
  std::int64_t s = 0;
  for (auto p : parts_) s += p;
  return s;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) os << ',';
    os << parts_[j];
  }
  os << ')';
  return os.str();
}

std::int64_t col_count(const Partition& mu, std::int64_t s) {
  if (s < 0) throw InputError("col_count: s must be nonnegative");
  std::int64_t c = 0;
  for (auto p : mu.parts()) c += std::min(p, s);
  return c;
}

std::int64_t row_mult(const Partition& mu, std::int64_t r) {
  return std::count(mu.parts().begin(), mu.parts().end(), r);
}

std::vector<Partition> partitions_of(std::int64_t m) {
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {}

const Partition& Multipartition::operator[](int i) const {
  static const Partition empty;
  if (i < 1 || i > rank()) return empty;
  return components_[i - 1];
}

RootLatticeElement Multipartition::gamma() const {
  std::vector<std::int64_t> r;
  r.reserve(components_.size());
  for (const auto& p : components_) r.push_back(p.size());
  return RootLatticeElement(std::move(r));
}

std::string Multipartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ", ";
    s += components_[i].to_string();
  }
  return s + ")";
}

std::int64_t compute_p(const Multipartition& mu, const Weight& lambda, std::int64_t s, int i) {
  return lambda[i] - 2 * col_count(mu[i], s) + col_count(mu[i - 1], s) +
         col_count(mu[i + 1], s);
}

std::int64_t compute_k(const Multipartition& mu, const Weight& lambda) {
  std::int64_t k = 0;
  for (int i = 1; i <= mu.rank(); ++i) {
    const auto& parts = mu[i].parts();
    for (std::size_t j = 0; j < parts.size(); ++j)
      k += 2 * static_cast<std::int64_t>(j + 1) * parts[j] - col_count(mu[i + 1], parts[j]);
    k -= lambda[i] * mu[i].rows();
  }
  return k;
}

namespace {

bool node_feasible(const Multipartition& mu, const Weight& lambda, int i, EmptyGroupPolicy policy) {
  const std::int64_t ri = mu[i].size();
  for (std::int64_t s = 1; s <= ri; ++s) {
    if (policy == EmptyGroupPolicy::Relax && row_mult(mu[i], s) == 0) continue;
    if (compute_p(mu, lambda, s, i) < 0) return false;
  }
  return true;
}

}  // namespace

bool capacities_feasible(const Multipartition& mu, const Weight& lambda, EmptyGroupPolicy policy) {
  for (int i = 1; i <= mu.rank(); ++i)
    if (!node_feasible(mu, lambda, i, policy)) return false;
  return true;
}

std::vector<Multipartition> enumerate_multipartitions(const RootLatticeElement& gamma,
                                                      const Weight& lambda, Pruning prune,
                                                      EmptyGroupPolicy policy) {
  const int n = gamma.rank();
  if (lambda.rank() != n) throw InputError("rank mismatch between gamma and lambda");
  std::vector<std::vector<Partition>> choices(n);
  for (int i = 1; i <= n; ++i) choices[i - 1] = partitions_of(gamma[i]);

  std::vector<Multipartition> out;
  // Unset components stay empty; node i's capacities only involve i-1, i, i+1,
  // so node i is checked once component i+1 is placed.
  std::vector<Partition> comps(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      Multipartition mu(comps);
      if (prune == Pruning::None || node_feasible(mu, lambda, n, policy))
        out.push_back(std::move(mu));
      return;
    }
    for (const auto& p : choices[i - 1]) {
      comps[i - 1] = p;
      if (prune == Pruning::Capacities && i >= 2 &&
          !node_feasible(Multipartition(comps), lambda, i - 1, policy))
        continue;
      self(self, i + 1);
    }
    comps[i - 1] = Partition();
  };
  rec(rec, 1);
  return out;
}

}  // namespace hldecomp
