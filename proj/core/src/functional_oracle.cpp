#include "hldecomp/functional_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hldecomp/errors.hpp"
#include "parallel.hpp"

namespace hldecomp {

std::string_view to_string(OracleMode mode) {
  return mode == OracleMode::Pair ? "pair" : "full";
}

OracleInput OracleInput::from_word(const DrinfeldWord& word) {
  require_valid(word);
  OracleInput in;
  in.mode = OracleMode::Pair;
  in.lambda = weight_of(word);
  in.word = word;
  return in;
}

OracleInput OracleInput::from_xi(const XiTuple& xi, const Weight& lambda) {
  if (!lambda.is_dominant())
    throw NonDominantError("lambda = " + lambda.to_string() + " is not dominant");
  if (xi.rank() != lambda.rank()) throw InputError("xi and lambda have different ranks");
  OracleInput in;
  in.mode = OracleMode::FullXi;
  in.lambda = lambda;
  in.xi = xi;
  return in;
}

std::int64_t VariableSet::total() const {
  return std::accumulate(count.begin(), count.end(), std::int64_t{0});
}

bool VariableSet::empty_box() const {
  for (std::size_t i = 0; i < count.size(); ++i)
    if (count[i] > 0 && lo[i] > hi[i]) return true;
  return false;
}

VariableSet variable_bounds(const OracleInput& input, const RootLatticeElement& gamma) {
  const int n = input.rank();
  if (gamma.rank() != n) throw InputError("gamma rank does not match lambda");
  VariableSet v;
  for (int i = 1; i <= n; ++i) {
    v.count.push_back(gamma[i]);
    v.hi.push_back(gamma[i - 1] + gamma[i + 1] - 2);
    std::int64_t pole = input.lambda[i];
    if (input.mode == OracleMode::FullXi) pole = std::min(pole, input.xi->at(i, i));
    v.lo.push_back(-pole);
  }
  return v;
}

std::int64_t orbit_degree(const RootLatticeElement& gamma, std::int64_t p) {
  return -p - gamma.height() + gamma.e_gamma();
}

GradeWindow grade_window(const VariableSet& vars, const RootLatticeElement& gamma) {
  if (vars.empty_box()) return {};
  std::int64_t dmin = 0, dmax = 0;
  for (int i = 0; i < vars.rank(); ++i) {
    dmin += vars.count[i] * vars.lo[i];
    dmax += vars.count[i] * vars.hi[i];
  }
  const std::int64_t shift = -gamma.height() + gamma.e_gamma();
  return {std::max<std::int64_t>(0, shift - dmax), shift - dmin};
}

std::vector<Orbit> orbit_basis(const VariableSet& vars, std::int64_t degree) {
  std::vector<Orbit> out;
  if (vars.empty_box()) return out;
  const int n = vars.rank();
  // Bounds on the degree carried by nodes i..n-1.
  std::vector<std::int64_t> suffix_min(n + 1, 0), suffix_max(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix_min[i] = suffix_min[i + 1] + vars.count[i] * vars.lo[i];
    suffix_max[i] = suffix_max[i + 1] + vars.count[i] * vars.hi[i];
  }
  Orbit cur;
  cur.reserve(static_cast<std::size_t>(vars.total()));
  // left = degree still to distribute over slot `slot` of node i and beyond.
  auto rec = [&](auto&& self, int i, std::int64_t slot, std::int64_t floor,
                 std::int64_t left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (slot == vars.count[i]) {
      if (i + 1 < n) self(self, i + 1, 0, vars.lo[i + 1], left);
      else self(self, n, 0, 0, left);
      return;
    }
    const std::int64_t rest = vars.count[i] - slot - 1;
    for (std::int64_t e = floor; e <= vars.hi[i]; ++e) {
      const std::int64_t after = left - e;
      if (after < rest * e + suffix_min[i + 1]) break;
      if (after > rest * vars.hi[i] + suffix_max[i + 1]) continue;
      cur.push_back(e);
      self(self, i, slot + 1, e, after);
      cur.pop_back();
    }
  };
  if (n > 0) rec(rec, 0, 0, vars.lo[0], degree);
  return out;
}

std::string ConditionTag::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::LowerBound:
      os << "deg x_" << i << " >= " << bound;
      break;
    case Kind::UpperBound:
      os << "deg x_" << i << " <= " << bound;
      break;
    case Kind::Serre:
      os << "f = 0 at x_{" << i << ",1} = x_{" << i << ",2} = x_{" << j << ",1}";
      break;
    case Kind::Collapse:
      os << "pole order <= " << bound << " at x_{" << i << ",1..." << r << "} = z";
      break;
    case Kind::Interval:
      os << "pole order <= " << bound << " at x_{" << i << ",1} = ... = x_{" << j << ",1} = z";
      break;
  }
  return os.str();
}

std::ptrdiff_t ConstraintMatrix::column(const Orbit& orbit) const {
  auto it = std::lower_bound(orbits.begin(), orbits.end(), orbit);
  if (it == orbits.end() || *it != orbit) return -1;
  return it - orbits.begin();
}

std::vector<ConditionTag> active_conditions(const OracleInput& input,
                                            const RootLatticeElement& gamma) {
  using Kind = ConditionTag::Kind;
  const int n = input.rank();
  const auto vars = variable_bounds(input, gamma);
  std::vector<ConditionTag> tags;
  for (int i = 1; i <= n; ++i) {
    if (gamma[i] == 0) continue;
    tags.push_back({Kind::LowerBound, i, i, 0, vars.lo[i - 1]});
    tags.push_back({Kind::UpperBound, i, i, 0, vars.hi[i - 1]});
  }
  for (int i = 1; i <= n; ++i) {
    if (gamma[i] < 2) continue;
    for (int j : {i - 1, i + 1})
      if (j >= 1 && j <= n && gamma[j] >= 1) tags.push_back({Kind::Serre, i, j, 0, 0});
  }
  for (int i = 1; i <= n; ++i)
    for (std::int64_t r = 2; r <= gamma[i]; ++r)
      if (r * vars.lo[i - 1] < -input.lambda[i])
        tags.push_back({Kind::Collapse, i, i, r, input.lambda[i]});

  auto add_interval = [&](int i, int j, std::int64_t xi) {
    std::int64_t floor = 0;
    for (int t = i; t <= j; ++t) {
      if (gamma[t] == 0) return;
      floor += vars.lo[t - 1];
    }
    if (floor < -xi) tags.push_back({Kind::Interval, i, j, 0, xi});
  };
  if (input.mode == OracleMode::FullXi) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) add_interval(i, j, input.xi->at(i, j));
  } else {
    const auto xi = xi_from_weight(input.lambda);
    for (auto [a, b] : consecutive_pairs(*input.word)) {
      const int i = std::min(a, b), j = std::max(a, b);
      if (i != j && xi.at(i, j) == 1) add_interval(i, j, 1);
    }
  }
  return tags;
}

namespace {

// Variables merged into z: (0-based node, how many of its variables).
using Merge = std::vector<std::pair<int, std::int64_t>>;

Merge merge_for(const ConditionTag& tag) {
  using Kind = ConditionTag::Kind;
  switch (tag.kind) {
    case Kind::Serre:
      return {{tag.i - 1, 2}, {tag.j - 1, 1}};
    case Kind::Collapse:
      return {{tag.i - 1, tag.r}};
    case Kind::Interval: {
      Merge m;
      for (int t = tag.i; t <= tag.j; ++t) m.push_back({t - 1, 1});
      return m;
    }
    default:
      return {};
  }
}

std::int64_t factorial(std::int64_t k) {
  std::int64_t f = 1;
  for (std::int64_t t = 2; t <= k; ++t) f *= t;
  return f;
}

// Calls fn(chosen, rest, multinomial) for each distinct sub-multiset of size c
// of the sorted list `values`.
template <typename Fn>
void for_each_submultiset(const std::vector<std::int64_t>& values, std::int64_t c, Fn&& fn) {
  std::vector<std::pair<std::int64_t, std::int64_t>> groups;  // value, multiplicity
  for (auto v : values) {
    if (!groups.empty() && groups.back().first == v) ++groups.back().second;
    else groups.push_back({v, 1});
  }
  std::vector<std::int64_t> take(groups.size(), 0);
  auto rec = [&](auto&& self, std::size_t g, std::int64_t left) -> void {
    if (g == groups.size()) {
      if (left != 0) return;
      std::vector<std::int64_t> chosen, rest;
      std::int64_t denom = 1;
      for (std::size_t u = 0; u < groups.size(); ++u) {
        chosen.insert(chosen.end(), take[u], groups[u].first);
        rest.insert(rest.end(), groups[u].second - take[u], groups[u].first);
        denom *= factorial(take[u]);
      }
      fn(chosen, rest, factorial(c) / denom);
      return;
    }
    for (std::int64_t t = 0; t <= std::min(left, groups[g].second); ++t) {
      take[g] = t;
      self(self, g + 1, left - t);
    }
    take[g] = 0;
  };
  rec(rec, 0, c);
}

using RowKey = std::pair<std::int64_t, Orbit>;  // z exponent, remainder

// Rows of one substitution condition. Only coefficients of z^k with k below
// `-pole` are constrained; a Serre condition constrains every k.
std::map<RowKey, std::map<std::size_t, mpz_class>> substitution_rows(
    const std::vector<Orbit>& orbits, const VariableSet& vars, const ConditionTag& tag) {
  const Merge merge = merge_for(tag);
  const bool all = tag.kind == ConditionTag::Kind::Serre;
  const int n = vars.rank();
  std::vector<std::size_t> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(vars.count[i]);
  std::vector<std::int64_t> merged_count(n, 0);
  for (auto [node, c] : merge) merged_count[node] = c;

  std::map<RowKey, std::map<std::size_t, mpz_class>> rows;
  for (std::size_t col = 0; col < orbits.size(); ++col) {
    const Orbit& o = orbits[col];
    std::vector<std::vector<std::int64_t>> rest(n);
    auto rec = [&](auto&& self, int i, std::int64_t k, std::int64_t weight) -> void {
      if (i == n) {
        if (!all && k >= -tag.bound) return;
        Orbit remainder;
        for (const auto& r : rest) remainder.insert(remainder.end(), r.begin(), r.end());
        rows[{k, std::move(remainder)}][col] += weight;
        return;
      }
      std::vector<std::int64_t> node(o.begin() + offset[i], o.begin() + offset[i + 1]);
      if (merged_count[i] == 0) {
        rest[i] = std::move(node);
        self(self, i + 1, k, weight);
        return;
      }
      for_each_submultiset(node, merged_count[i],
                           [&](const auto& chosen, const auto& remaining, std::int64_t mult) {
                             rest[i] = remaining;
                             const auto s =
                                 std::accumulate(chosen.begin(), chosen.end(), std::int64_t{0});
                             self(self, i + 1, k + s, weight * mult);
                           });
    };
    rec(rec, 0, 0, 1);
  }
  return rows;
}

}  // namespace

ConstraintMatrix build_constraints(const OracleInput& input, const RootLatticeElement& gamma,
                                   std::int64_t p) {
  const auto vars = variable_bounds(input, gamma);
  ConstraintMatrix cm;
  cm.conditions = active_conditions(input, gamma);
  cm.orbits = orbit_basis(vars, orbit_degree(gamma, p));
  cm.matrix = SparseMatrix(cm.orbits.size());
  for (const auto& tag : cm.conditions) {
    if (tag.kind == ConditionTag::Kind::LowerBound || tag.kind == ConditionTag::Kind::UpperBound)
      continue;
    for (const auto& [key, row] : substitution_rows(cm.orbits, vars, tag))
      if (cm.matrix.add_row(row)) cm.row_tags.push_back(tag);
  }
  return cm;
}

std::size_t dim_v(const OracleInput& input, const RootLatticeElement& gamma, std::int64_t p) {
  const auto cm = build_constraints(input, gamma, p);
  if (cm.orbits.empty()) return 0;
  return nullity(cm.matrix);
}

QPolynomial oracle_multiplicity(const OracleInput& input, const RootLatticeElement& gamma) {
  const auto window = grade_window(variable_bounds(input, gamma), gamma);
  QPolynomial poly;
  for (std::int64_t p = window.min; p <= window.max; ++p)
    poly.add(p, static_cast<unsigned long>(dim_v(input, gamma, p)));
  return poly;
}

GradedDecomposition oracle_decomposition(const OracleInput& input,
                                         const std::optional<RootLatticeElement>& only_gamma) {
  GradedDecomposition dec;
  dec.n = input.rank();
  dec.weight = input.lambda;
  dec.word = input.word;
  dec.xi = input.xi;
  dec.source =
      input.mode == OracleMode::Pair ? DecompositionSource::OraclePair : DecompositionSource::OracleFull;
  if (only_gamma) {
    if (only_gamma->rank() != dec.n) throw InputError("gamma rank does not match lambda");
    const auto mu = weight_minus_gamma(dec.weight, *only_gamma);
    if (!mu.is_dominant())
      throw NonDominantError("lambda - gamma = " + mu.to_string() + " is not dominant");
    dec.domain = {*only_gamma};
  } else {
    dec.domain = enumerate_dominant_gammas(dec.weight);
  }
  std::vector<std::pair<RootLatticeElement, QPolynomial>> polys(dec.domain.size());
  detail::parallel_for(dec.domain.size(), [&](std::size_t g) {
    polys[g] = {dec.domain[g], oracle_multiplicity(input, dec.domain[g])};
  });
  dec.entries = make_entries(dec.weight, polys);
  return dec;
}

}  // namespace hldecomp
