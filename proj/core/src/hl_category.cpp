#include "hldecomp/hl_category.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hldecomp/errors.hpp"

namespace hldecomp {

HeightFunction::HeightFunction(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("height function needs at least one node");
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (std::llabs(values_[i + 1] - values_[i]) > 1)
      throw InputError("height function steps must satisfy |kappa(i+1) - kappa(i)| <= 1 (node " +
                       std::to_string(i + 1) + ")");
}

DrinfeldWord::DrinfeldWord(int n, std::vector<WordFactor> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n < 1) throw InputError("word rank must be at least 1");
}

std::string DrinfeldWord::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) os << ',';
    os << factors_[j].node << ':' << factors_[j].exponent;
  }
  return os.str();
}

namespace {

void check_interval(const HeightFunction& kappa, IntervalJ J) {
  if (J.lo < 1 || J.hi > kappa.rank() || J.lo > J.hi)
    throw InputError("interval [" + std::to_string(J.lo) + "," + std::to_string(J.hi) +
                     "] is not inside [1," + std::to_string(kappa.rank()) + "]");
  for (int i = J.lo; i < J.hi; ++i)
    if (kappa(i) == kappa(i + 1))
      throw FlatEdgeError("height function is flat between nodes " + std::to_string(i) + " and " +
                          std::to_string(i + 1) + " inside J");
}

}  // namespace

MarkedVertices marked_vertices(const HeightFunction& kappa, IntervalJ J) {
  check_interval(kappa, J);
  MarkedVertices out;
  if (J.lo == J.hi) {
    out.sinks.push_back(J.lo);
    return out;
  }
  for (int i = J.lo; i <= J.hi; ++i) {
    bool is_min = true, is_max = true;
    for (int nb : {i - 1, i + 1}) {
      if (!J.contains(nb)) continue;
      if (kappa(nb) <= kappa(i)) is_min = false;
      if (kappa(nb) >= kappa(i)) is_max = false;
    }
    if (is_min) out.sinks.push_back(i);
    if (is_max) out.sources.push_back(i);
  }
  return out;
}

DrinfeldWord pi_from_interval(const HeightFunction& kappa, IntervalJ J) {
  const auto marked = marked_vertices(kappa, J);
  std::vector<WordFactor> factors;
  for (int i : marked.sinks) factors.push_back({i, kappa(i)});
  for (int i : marked.sources) factors.push_back({i, kappa(i) + 2});
  std::sort(factors.begin(), factors.end());
  DrinfeldWord word(kappa.rank(), std::move(factors));
  if (auto issues = validate_p1(word); !issues.empty())
    throw InvalidWordError("internal consistency failure: pi_{kappa,J} = " + word.to_string() +
                           " violates P+_Z(1): " + issues.front().message);
  return word;
}

std::vector<ValidationIssue> validate_p1(const DrinfeldWord& word) {
  using Kind = ValidationIssue::Kind;
  std::vector<ValidationIssue> issues;
  const auto& f = word.factors();
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j].node < 1 || f[j].node > word.rank())
      issues.push_back({Kind::NodeOutOfRange, j,
                        "node " + std::to_string(f[j].node) + " outside [1," +
                            std::to_string(word.rank()) + "]"});

  // +1 / -1 for a valid step, 0 for a step violating spacing or strictness.
  std::vector<int> signs;
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    const auto di = static_cast<std::int64_t>(f[j + 1].node) - f[j].node;
    const auto dm = f[j + 1].exponent - f[j].exponent;
    if (di <= 0) {
      issues.push_back({Kind::NotStrictlyIncreasing, j,
                        "nodes " + std::to_string(f[j].node) + " and " +
                            std::to_string(f[j + 1].node) + " are not strictly increasing"});
      signs.push_back(0);
      continue;
    }
    if (dm == di + 2) {
      signs.push_back(+1);
    } else if (dm == -(di + 2)) {
      signs.push_back(-1);
    } else {
      issues.push_back({Kind::Spacing, j,
                        "exponent step " + std::to_string(dm) + " between factors " +
                            std::to_string(j + 1) + " and " + std::to_string(j + 2) +
                            " must be +-" + std::to_string(di + 2)});
      signs.push_back(0);
    }
  }
  for (std::size_t j = 0; j + 1 < signs.size(); ++j)
    if (signs[j] != 0 && signs[j] == signs[j + 1])
      issues.push_back({Kind::Alternation, j,
                        "exponent steps " + std::to_string(j + 1) + " and " +
                            std::to_string(j + 2) + " have the same sign"});
  return issues;
}

void require_valid(const DrinfeldWord& word) {
  auto issues = validate_p1(word);
  if (issues.empty()) return;
  std::string msg = "word [" + word.to_string() + "] is not in P+_Z(1):";
  for (const auto& is : issues) msg += " " + is.message + ";";
  msg.pop_back();
  throw InvalidWordError(msg);
}

HeightInterval pi_to_height_interval(const DrinfeldWord& word) {
  require_valid(word);
  if (word.empty()) throw InvalidWordError("the empty word has no height function");
  const auto& f = word.factors();
  const int n = word.rank();
  const std::size_t k = f.size();

  // Marked vertices alternate; i_1 is a sink iff the first step is upward.
  bool first_is_sink = k == 1 || f[1].exponent > f[0].exponent;
  std::vector<std::int64_t> kappa(n, 0);
  auto height_at = [&](std::size_t j) {
    const bool sink = (j % 2 == 0) == first_is_sink;
    return sink ? f[j].exponent : f[j].exponent - 2;
  };
  for (std::size_t j = 0; j < k; ++j) {
    kappa[f[j].node - 1] = height_at(j);
    if (j + 1 < k) {
      const auto h0 = height_at(j), h1 = height_at(j + 1);
      const int step = h1 > h0 ? 1 : -1;
      for (int i = f[j].node + 1; i < f[j + 1].node; ++i)
        kappa[i - 1] = h0 + step * (i - f[j].node);
    }
  }
  const int lo = f.front().node, hi = f.back().node;
  const int left_slope = k == 1 ? 0 : static_cast<int>(kappa[lo] - kappa[lo - 1]);
  const int right_slope = k == 1 ? 0 : static_cast<int>(kappa[hi - 1] - kappa[hi - 2]);
  for (int i = lo - 1; i >= 1; --i) kappa[i - 1] = kappa[i] - left_slope;
  for (int i = hi + 1; i <= n; ++i) kappa[i - 1] = kappa[i - 2] + right_slope;
  return {HeightFunction(std::move(kappa)), IntervalJ{lo, hi}};
}

Weight weight_of(const DrinfeldWord& word) {
  std::vector<std::int64_t> c(word.rank(), 0);
  for (const auto& fac : word.factors()) {
    if (fac.node < 1 || fac.node > word.rank()) throw InvalidWordError("node out of range");
    c[fac.node - 1] += 1;
  }
  return Weight(std::move(c));
}

std::vector<std::pair<int, int>> consecutive_pairs(const DrinfeldWord& word) {
  std::vector<std::pair<int, int>> out;
  const auto& f = word.factors();
  for (std::size_t j = 0; j + 1 < f.size(); ++j) out.emplace_back(f[j].node, f[j + 1].node);
  return out;
}

std::int64_t XiTuple::operator[](const PositiveRoot& alpha) const {
  auto it = values_.find(alpha);
  if (it == values_.end()) throw InputError("xi has no entry for this root");
  return it->second;
}

bool XiTuple::is_normalized(const RawXi& values, int n) {
  for (const auto& alpha : positive_roots(Rank(n))) {
    auto it = values.find(alpha);
    if (it == values.end()) return false;
    for (const auto& beta : positive_roots(Rank(n)))
      if (alpha.is_below(beta) && values.at(beta) < it->second) return false;
  }
  return true;
}

std::string XiTuple::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& alpha : positive_roots(Rank(n_))) {
    if (!first) os << ',';
    first = false;
    os << alpha.lo << '-' << alpha.hi << ':' << values_.at(alpha);
  }
  return os.str();
}

XiTuple normalize_xi(const RawXi& raw, int n) {
  const auto roots = positive_roots(Rank(n));
  for (const auto& [alpha, v] : raw) {
    if (alpha.lo < 1 || alpha.hi > n || alpha.lo > alpha.hi)
      throw InputError("xi entry for root outside rank " + std::to_string(n));
    if (v < 0) throw InputError("xi entries must be nonnegative");
  }
  for (const auto& alpha : roots)
    if (!raw.contains(alpha))
      throw InputError("xi is missing the root " + std::to_string(alpha.lo) + "-" +
                       std::to_string(alpha.hi));
  RawXi out;
  for (const auto& alpha : roots) {
    std::int64_t m = raw.at(alpha);
    for (const auto& beta : roots)
      if (alpha.is_below(beta)) m = std::min(m, raw.at(beta));
    out[alpha] = m;
  }
  return XiTuple(n, std::move(out));
}

XiTuple xi_from_weight(const Weight& lambda) {
  if (!lambda.is_dominant()) throw NonDominantError("xi_from_weight: weight is not dominant");
  RawXi raw;
  for (const auto& alpha : positive_roots(Rank(lambda.rank())))
    raw[alpha] = (pairing(lambda, alpha) + 1) / 2;
  return normalize_xi(raw, lambda.rank());
}

XiTuple constant_xi(int n, std::int64_t value) {
  RawXi raw;
  for (const auto& alpha : positive_roots(Rank(n))) raw[alpha] = value;
  return normalize_xi(raw, n);
}

}  // namespace hldecomp
