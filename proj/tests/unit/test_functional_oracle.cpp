#include <gtest/gtest.h>

#include <array>
#include <functional>
#include <map>
#include <numeric>

#include "hldecomp/errors.hpp"
#include "hldecomp/functional_oracle.hpp"
#include "hldecomp/polytope_count.hpp"
#include "test_support.hpp"

using namespace hldecomp;
using Kind = ConditionTag::Kind;

namespace {

OracleInput example_input() { return OracleInput::from_xi(constant_xi(2, 2), Weight{7, 5}); }
const RootLatticeElement kGamma{2, 1};

// A Laurent polynomial in x_{1,1}, x_{1,2}, x_{2,1}.
using Poly3 = std::map<std::array<std::int64_t, 3>, long>;

Poly3 times(const Poly3& f, std::array<std::int64_t, 3> shift) {
  Poly3 out;
  for (const auto& [e, c] : f) out[{e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]}] += c;
  return out;
}

// The two basis functions printed for this example.
Poly3 f1() {
  return times({{{0, 0, 2}, 1}, {{1, 1, 0}, 1}, {{0, 1, 1}, -1}, {{1, 0, 1}, -1}}, {-2, -2, -2});
}
Poly3 f2() {
  return times({{{0, 1, 2}, 1}, {{1, 0, 2}, 1}, {{1, 1, 1}, -2}}, {-2, -2, -2});
}

std::vector<mpz_class> orbit_vector(const ConstraintMatrix& cm, const Poly3& f) {
  std::vector<mpz_class> v(cm.orbits.size(), 0);
  for (const auto& [e, c] : f) {
    Orbit o{std::min(e[0], e[1]), std::max(e[0], e[1]), e[2]};
    const auto col = cm.column(o);
    EXPECT_GE(col, 0);
    // Coefficient of the orbit sum = coefficient of any of its monomials.
    if (col >= 0) v[col] = c;
  }
  return v;
}

bool satisfies_all_rows(const ConstraintMatrix& cm, const std::vector<mpz_class>& v) {
  for (const auto& row : cm.matrix.row_data()) {
    mpz_class s = 0;
    for (const auto& [c, a] : row) s += a * v[c];
    if (s != 0) return false;
  }
  return true;
}

// Dimension computed over the monomial basis: symmetry imposed by explicit
// rows, conditions by direct substitution, rank by dense rational elimination.
std::size_t monomial_basis_dim(const OracleInput& in, const RootLatticeElement& gamma,
                               std::int64_t p) {
  const int n = in.rank();
  const auto vars = variable_bounds(in, gamma);
  std::vector<int> node_of;
  for (int i = 0; i < n; ++i)
    for (std::int64_t r = 0; r < vars.count[i]; ++r) node_of.push_back(i);
  const std::size_t V = node_of.size();
  const std::int64_t degree = -p - gamma.height() + gamma.e_gamma();
  std::vector<std::vector<std::int64_t>> monos;
  std::vector<std::int64_t> cur(V);
  std::function<void(std::size_t, std::int64_t)> gen = [&](std::size_t v, std::int64_t left) {
    if (v == V) {
      if (left == 0) monos.push_back(cur);
      return;
    }
    for (std::int64_t e = vars.lo[node_of[v]]; e <= vars.hi[node_of[v]]; ++e) {
      cur[v] = e;
      gen(v + 1, left - e);
    }
  };
  gen(0, degree);
  if (monos.empty()) return 0;
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t m = 0; m < monos.size(); ++m) index[monos[m]] = m;

  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t m = 0; m < monos.size(); ++m)
    for (std::size_t a = 0; a + 1 < V; ++a)
      if (node_of[a] == node_of[a + 1]) {
        auto swapped = monos[m];
        std::swap(swapped[a], swapped[a + 1]);
        std::vector<mpq_class> row(monos.size(), 0);
        row[m] += 1;
        row[index.at(swapped)] -= 1;
        rows.push_back(row);
      }

  auto first_var = [&](int node) {
    std::size_t v = 0;
    while (node_of[v] != node) ++v;
    return v;
  };
  // Merge the listed variable positions into z; constrain z^k for k < limit.
  auto substitute = [&](const std::vector<std::size_t>& merged, bool every_k, std::int64_t limit) {
    std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, std::vector<mpq_class>> groups;
    for (std::size_t m = 0; m < monos.size(); ++m) {
      std::int64_t k = 0;
      auto rest = monos[m];
      for (auto v : merged) {
        k += rest[v];
        rest[v] = 0;
      }
      if (!every_k && k >= limit) continue;
      auto& row = groups[{k, rest}];
      if (row.empty()) row.assign(monos.size(), 0);
      row[m] += 1;
    }
    for (auto& [key, row] : groups) rows.push_back(row);
  };
  for (const auto& tag : active_conditions(in, gamma)) {
    switch (tag.kind) {
      case Kind::Serre: {
        const auto a = first_var(tag.i - 1);
        substitute({a, a + 1, first_var(tag.j - 1)}, true, 0);
        break;
      }
      case Kind::Collapse: {
        std::vector<std::size_t> merged;
        for (std::int64_t r = 0; r < tag.r; ++r) merged.push_back(first_var(tag.i - 1) + r);
        substitute(merged, false, -tag.bound);
        break;
      }
      case Kind::Interval: {
        std::vector<std::size_t> merged;
        for (int t = tag.i; t <= tag.j; ++t) merged.push_back(first_var(t - 1));
        substitute(merged, false, -tag.bound);
        break;
      }
      default:
        break;
    }
  }
  return monos.size() - reference::dense_rational_rank(rows);
}

}  // namespace

TEST(Oracle, ExampleVariableBounds) {
  const auto v = variable_bounds(example_input(), kGamma);
  EXPECT_EQ(v.count, (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(v.lo, (std::vector<std::int64_t>{-2, -2}));
  EXPECT_EQ(v.hi, (std::vector<std::int64_t>{-1, 0}));
}

TEST(Oracle, PairModeBounds) {
  const auto in = OracleInput::from_word(DrinfeldWord(2, {{1, 0}, {2, 3}}));
  const auto v = variable_bounds(in, RootLatticeElement{1, 1});
  EXPECT_EQ(v.lo, (std::vector<std::int64_t>{-1, -1}));
  EXPECT_EQ(v.hi, (std::vector<std::int64_t>{-1, -1}));
}

TEST(Oracle, ZeroGammaHasNoVariables) {
  const auto in = example_input();
  EXPECT_EQ(variable_bounds(in, RootLatticeElement{0, 0}).total(), 0);
  EXPECT_EQ(dim_v(in, RootLatticeElement{0, 0}, 0), 1u);
  EXPECT_EQ(dim_v(in, RootLatticeElement{0, 0}, 1), 0u);
}

TEST(Oracle, ExampleConditions) {
  const auto tags = active_conditions(example_input(), kGamma);
  const std::vector<ConditionTag> expected{
      {Kind::LowerBound, 1, 1, 0, -2}, {Kind::UpperBound, 1, 1, 0, -1},
      {Kind::LowerBound, 2, 2, 0, -2}, {Kind::UpperBound, 2, 2, 0, 0},
      {Kind::Serre, 1, 2, 0, 0},       {Kind::Interval, 1, 2, 0, 2},
  };
  EXPECT_EQ(tags, expected);
}

TEST(Oracle, ExampleDimensions) {
  const auto in = example_input();
  for (std::int64_t p = 0; p <= 8; ++p)
    EXPECT_EQ(dim_v(in, kGamma, p), (p == 2 || p == 3) ? 1u : 0u) << p;
  EXPECT_EQ(oracle_multiplicity(in, kGamma).to_plain(), "q^2+q^3");
}

TEST(Oracle, ExampleBasisSatisfiesRows) {
  const auto in = example_input();
  const auto cm3 = build_constraints(in, kGamma, 3);
  const auto cm2 = build_constraints(in, kGamma, 2);
  EXPECT_TRUE(satisfies_all_rows(cm3, orbit_vector(cm3, f1())));
  EXPECT_TRUE(satisfies_all_rows(cm2, orbit_vector(cm2, f2())));
  EXPECT_GT(cm3.matrix.rows(), 0u);
  EXPECT_GT(cm2.matrix.rows(), 0u);
}

TEST(Oracle, ExampleBasisBySubstitution) {
  for (const auto& f : {f1(), f2()}) {
    std::map<std::int64_t, long> serre;
    std::map<std::pair<std::int64_t, std::int64_t>, long> interval;
    for (const auto& [e, c] : f) {
      serre[e[0] + e[1] + e[2]] += c;
      interval[{e[0] + e[2], e[1]}] += c;
      EXPECT_GE(e[0], -2);
      EXPECT_LE(e[0], -1);
      EXPECT_LE(e[2], 0);
    }
    for (const auto& [k, c] : serre) EXPECT_EQ(c, 0);
    for (const auto& [k, c] : interval)
      if (k.first < -2) EXPECT_EQ(c, 0);
  }
}

TEST(Oracle, EvaluationModuleRankTwo) {
  const auto in = OracleInput::from_xi(constant_xi(2, 1), Weight{1, 0});
  for (std::int64_t p = 0; p <= 6; ++p) EXPECT_EQ(dim_v(in, RootLatticeElement{1, 0}, p), 0u);
}

TEST(Oracle, PairModeConditionOfIrreduciblePair) {
  const auto in = OracleInput::from_word(DrinfeldWord(2, {{1, 0}, {2, 3}}));
  std::vector<ConditionTag> intervals;
  for (const auto& t : active_conditions(in, RootLatticeElement{1, 1}))
    if (t.kind == Kind::Interval) intervals.push_back(t);
  ASSERT_EQ(intervals.size(), 1u);
  EXPECT_EQ(intervals[0], (ConditionTag{Kind::Interval, 1, 2, 0, 1}));
}

TEST(Oracle, SingleNodeGammaHasNoSerreOrIntervals) {
  const auto in = OracleInput::from_xi(constant_xi(3, 1), Weight{0, 3, 0});
  for (const auto& t : active_conditions(in, RootLatticeElement{0, 3, 0})) {
    EXPECT_NE(t.kind, Kind::Serre);
    EXPECT_NE(t.kind, Kind::Interval);
  }
}

TEST(Oracle, OrbitBasisIsDisjointAndHomogeneous) {
  const auto in = OracleInput::from_xi(constant_xi(3, 2), Weight{2, 1, 2});
  const RootLatticeElement g{2, 2, 1};
  const auto vars = variable_bounds(in, g);
  for (std::int64_t d = -12; d <= 4; ++d) {
    const auto basis = orbit_basis(vars, d);
    EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
    EXPECT_EQ(std::adjacent_find(basis.begin(), basis.end()), basis.end());
    for (const auto& o : basis) {
      EXPECT_EQ(std::accumulate(o.begin(), o.end(), std::int64_t{0}), d);
      EXPECT_LE(o[0], o[1]);
      EXPECT_LE(o[2], o[3]);
    }
  }
}

TEST(Oracle, AgreesWithMonomialBasisComputation) {
  std::vector<OracleInput> inputs{
      example_input(),
      OracleInput::from_xi(constant_xi(2, 1), Weight{2, 1}),
      OracleInput::from_xi(constant_xi(2, 2), Weight{2, 2}),
      OracleInput::from_xi(normalize_xi({{{1, 1}, 3}, {{2, 2}, 2}, {{1, 2}, 1}}, 2), Weight{3, 2}),
      OracleInput::from_word(DrinfeldWord(2, {{1, 0}, {2, -3}})),
      OracleInput::from_word(DrinfeldWord(3, {{1, 0}, {2, 3}, {3, 0}})),
  };
  for (const auto& in : inputs)
    for (const auto& g : enumerate_dominant_gammas(in.lambda)) {
      if (variable_bounds(in, g).total() > 5) continue;
      const auto w = grade_window(variable_bounds(in, g), g);
      for (std::int64_t p = 0; p <= w.max + 2; ++p)
        EXPECT_EQ(dim_v(in, g, p), monomial_basis_dim(in, g, p)) << g << " p=" << p;
    }
}

TEST(Oracle, NullityIndependentOfEliminationOrder) {
  const auto in = OracleInput::from_xi(constant_xi(2, 2), Weight{3, 3});
  for (const auto& g : enumerate_dominant_gammas(in.lambda)) {
    const auto w = grade_window(variable_bounds(in, g), g);
    for (std::int64_t p = w.min; p <= w.max; ++p) {
      const auto cm = build_constraints(in, g, p);
      const auto r = exact_rank(cm.matrix);
      EXPECT_EQ(exact_rank(cm.matrix, EliminationOrder::Reversed), r);
      EXPECT_EQ(exact_rank(cm.matrix, EliminationOrder::Shuffled, 99), r);
      EXPECT_EQ(nullity(cm.matrix), cm.orbits.size() - r);
    }
  }
}

TEST(Oracle, ZeroOutsideGradeWindow) {
  const auto in = OracleInput::from_xi(constant_xi(2, 2), Weight{2, 2});
  for (const auto& g : enumerate_dominant_gammas(in.lambda)) {
    const auto w = grade_window(variable_bounds(in, g), g);
    for (std::int64_t p = 0; p <= w.max + 4; ++p)
      if (p < w.min || p > w.max) EXPECT_TRUE(build_constraints(in, g, p).orbits.empty());
  }
}

TEST(Oracle, PairModeMatchesPolytopeOnSmallWords) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& word : reference::valid_words(n, 2, {0})) {
      const auto in = OracleInput::from_word(word);
      for (const auto& g : enumerate_dominant_gammas(in.lambda))
        EXPECT_EQ(oracle_multiplicity(in, g), multiplicity(word, g)) << word.to_string() << " " << g;
    }
}

TEST(Oracle, DecompositionHeader) {
  const auto dec = oracle_decomposition(example_input(), kGamma);
  EXPECT_EQ(dec.source, DecompositionSource::OracleFull);
  ASSERT_TRUE(dec.xi.has_value());
  EXPECT_EQ(dec.at(kGamma).to_plain(), "q^2+q^3");
  EXPECT_THROW(oracle_decomposition(example_input(), RootLatticeElement{5, 0}), NonDominantError);
}
