#include "hldecomp/polytope_count.hpp"

#include <map>

#include "hldecomp/errors.hpp"

namespace hldecomp {

std::ptrdiff_t PolytopeSpec::find(std::int64_t d, std::int64_t r, int i) const {
  for (std::size_t v = 0; v < variables.size(); ++v)
    if (variables[v] == PolytopeVariable{d, r, i}) return static_cast<std::ptrdiff_t>(v);
  return -1;
}

PolytopeSpec build_polytope(const Multipartition& mu, const Weight& lambda,
                            const std::vector<std::pair<int, int>>& pairs,
                            EmptyGroupPolicy policy) {
  PolytopeSpec spec;
  const int n = mu.rank();
  for (int i = 1; i <= n; ++i) {
    const std::int64_t ri = mu[i].size();
    for (std::int64_t r = 1; r <= ri; ++r) {
      const std::int64_t m = row_mult(mu[i], r);
      const std::int64_t cap = compute_p(mu, lambda, r, i);
      if (m == 0) {
        if (policy == EmptyGroupPolicy::Enforce && cap < 0) spec.infeasible = true;
        continue;
      }
      if (cap < 0) spec.infeasible = true;
      CapGroup group{r, i, cap, {}};
      for (std::int64_t d = 1; d <= m; ++d) {
        group.variables.push_back(spec.variables.size());
        spec.variables.push_back({d, r, i});
      }
      spec.groups.push_back(std::move(group));
    }
  }
  for (const auto& [a, b] : pairs) {
    std::vector<std::size_t> vars;
    bool all_present = true;
    for (int i = a; i <= b; ++i) {
      const std::int64_t m1 = row_mult(mu[i], 1);
      if (m1 == 0) {
        all_present = false;
        break;
      }
      vars.push_back(static_cast<std::size_t>(spec.find(m1, 1, i)));
    }
    if (all_present) spec.pair_constraints.push_back(std::move(vars));
  }
  return spec;
}

namespace {

// Variable index -> bitmask of the pair constraints containing it.
std::vector<std::uint64_t> pair_masks(const PolytopeSpec& spec) {
  if (spec.pair_constraints.size() > 64) throw InputError("too many pair constraints");
  std::vector<std::uint64_t> masks(spec.variables.size(), 0);
  for (std::size_t c = 0; c < spec.pair_constraints.size(); ++c)
    for (auto v : spec.pair_constraints[c]) masks[v] |= std::uint64_t{1} << c;
  return masks;
}

std::uint64_t full_mask(const PolytopeSpec& spec) {
  const auto k = spec.pair_constraints.size();
  return k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

QPolynomial histogram_to_poly(const std::map<std::int64_t, mpz_class>& by_level,
                              std::int64_t top) {
  QPolynomial out;
  for (const auto& [level, c] : by_level) out.add(top - level, c);
  return out;
}

QPolynomial count_depth_first(const PolytopeSpec& spec, std::int64_t top) {
  const auto masks = pair_masks(spec);
  const auto want = full_mask(spec);
  std::vector<std::int64_t> hist(static_cast<std::size_t>(top) + 1, 0);

  // Flatten to (group, variable) order so remaining capacity is per group.
  struct Slot {
    std::size_t group;
    std::int64_t weight;
    std::uint64_t mask;
  };
  std::vector<Slot> slots;
  for (std::size_t g = 0; g < spec.groups.size(); ++g)
    for (auto v : spec.groups[g].variables)
      slots.push_back({g, spec.variables[v].d, masks[v]});
  std::vector<std::int64_t> remaining(spec.groups.size());
  for (std::size_t g = 0; g < spec.groups.size(); ++g) remaining[g] = spec.groups[g].cap;

  auto rec = [&](auto&& self, std::size_t s, std::int64_t level, std::uint64_t sat) -> void {
    if (s == slots.size()) {
      if (sat == want) ++hist[static_cast<std::size_t>(level)];
      return;
    }
    const auto& slot = slots[s];
    auto& rem = remaining[slot.group];
    const std::int64_t saved = rem;
    for (std::int64_t c = 0; c <= saved && level + c * slot.weight <= top; ++c) {
      rem = saved - c;
      self(self, s + 1, level + c * slot.weight, c > 0 ? (sat | slot.mask) : sat);
    }
    rem = saved;
  };
  rec(rec, 0, 0, 0);

  QPolynomial out;
  for (std::int64_t level = 0; level <= top; ++level)
    if (hist[level] != 0) out.add(top - level, mpz_class(static_cast<long>(hist[level])));
  return out;
}

QPolynomial count_grade_sliced(const PolytopeSpec& spec, std::int64_t top) {
  const auto masks = pair_masks(spec);
  const auto want = full_mask(spec);
  using State = std::pair<std::int64_t, std::uint64_t>;
  std::map<State, mpz_class> states{{{0, 0}, 1}};

  for (const auto& group : spec.groups) {
    // Local table: (level contribution, satisfied mask) -> ways.
    std::map<State, mpz_class> local;
    const auto& vars = group.variables;
    auto rec = [&](auto&& self, std::size_t t, std::int64_t left, std::int64_t level,
                   std::uint64_t sat) -> void {
      if (t == vars.size()) {
        local[{level, sat}] += 1;
        return;
      }
      const auto& var = spec.variables[vars[t]];
      for (std::int64_t c = 0; c <= left && level + c * var.d <= top; ++c)
        self(self, t + 1, left - c, level + c * var.d, c > 0 ? (sat | masks[vars[t]]) : sat);
    };
    rec(rec, 0, group.cap, 0, 0);

    std::map<State, mpz_class> next;
    for (const auto& [s, ways] : states)
      for (const auto& [l, lways] : local) {
        const auto level = s.first + l.first;
        if (level > top) continue;
        next[{level, s.second | l.second}] += ways * lways;
      }
    states = std::move(next);
  }

  std::map<std::int64_t, mpz_class> by_level;
  for (const auto& [s, ways] : states)
    if (s.second == want) by_level[s.first] += ways;
  return histogram_to_poly(by_level, top);
}

QPolynomial count_naive_box(const PolytopeSpec& spec, std::int64_t top) {
  const auto masks = pair_masks(spec);
  const auto want = full_mask(spec);
  std::vector<std::int64_t> box(spec.variables.size(), 0);
  for (const auto& g : spec.groups)
    for (auto v : g.variables) box[v] = g.cap;

  std::map<std::int64_t, mpz_class> by_level;
  std::vector<std::int64_t> point(spec.variables.size(), 0);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == point.size()) {
      for (const auto& g : spec.groups) {
        std::int64_t s = 0;
        for (auto u : g.variables) s += point[u];
        if (s > g.cap) return;
      }
      std::uint64_t sat = 0;
      std::int64_t level = 0;
      for (std::size_t u = 0; u < point.size(); ++u) {
        if (point[u] > 0) sat |= masks[u];
        level += spec.variables[u].d * point[u];
      }
      if (sat == want && level <= top) by_level[level] += 1;
      return;
    }
    for (std::int64_t c = 0; c <= box[v]; ++c) {
      point[v] = c;
      self(self, v + 1);
    }
    point[v] = 0;
  };
  rec(rec, 0);
  return histogram_to_poly(by_level, top);
}

}  // namespace

QPolynomial count_by_grade(const PolytopeSpec& spec, std::int64_t height, std::int64_t k,
                           CountStrategy strategy) {
  const std::int64_t top = height - k;
  if (spec.infeasible || top < 0) return {};
  switch (strategy) {
    case CountStrategy::DepthFirst:
      return count_depth_first(spec, top);
    case CountStrategy::GradeSliced:
      return count_grade_sliced(spec, top);
    case CountStrategy::NaiveBox:
      return count_naive_box(spec, top);
  }
  return {};
}

std::vector<MultipartitionTerm> multiplicity_terms(const DrinfeldWord& word,
                                                   const RootLatticeElement& gamma,
                                                   const MultiplicityOptions& options) {
  require_valid(word);
  const Weight lambda = weight_of(word);
  if (gamma.rank() != lambda.rank()) throw InputError("gamma rank does not match the word");
  const auto pairs = consecutive_pairs(word);
  std::vector<MultipartitionTerm> terms;
  for (auto& mu : enumerate_multipartitions(gamma, lambda, options.pruning, options.policy)) {
    const auto spec = build_polytope(mu, lambda, pairs, options.policy);
    const auto k = compute_k(mu, lambda);
    auto count = count_by_grade(spec, gamma.height(), k, options.strategy);
    if (!count.is_zero()) terms.push_back({std::move(mu), k, std::move(count)});
  }
  return terms;
}

QPolynomial multiplicity(const DrinfeldWord& word, const RootLatticeElement& gamma,
                         const MultiplicityOptions& options) {
  QPolynomial total;
  for (const auto& t : multiplicity_terms(word, gamma, options)) total += t.count;
  return total;
}

}  // namespace hldecomp
