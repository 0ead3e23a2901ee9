#pragma once

// Characters of finite-dimensional sl_{n+1}-modules: weight multiplicities by
// Gelfand-Tsetlin patterns, tensor products by character multiplication and
// highest-weight peeling.

#include <map>

#include "hldecomp/root_system.hpp"

namespace hldecomp {

/// ch V(mu) as weight -> multiplicity; only nonzero multiplicities are stored.
struct CharacterTable {
  Weight highest;
  std::map<Weight, BigInt> weights;

  BigInt multiplicity(const Weight& w) const;
  /// Sum of all multiplicities, i.e. dim V(mu).
  BigInt total() const;
};

/// Throws NonDominantError.
CharacterTable weight_multiplicities(const Weight& mu);

/// s_i(w) = w - w_i alpha_i.
Weight simple_reflection(const Weight& w, int i);

/// Which maximal weight is peeled first when several share the top height.
enum class PeelOrder { LargestFirst, SmallestFirst };

using TensorDecomposition = std::map<Weight, BigInt>;

/// V(mu) (x) V(nu) = sum c_lambda V(lambda). Throws NonDominantError, and
/// Error if peeling meets a negative remainder.
TensorDecomposition tensor_decompose(const Weight& mu, const Weight& nu,
                                     PeelOrder order = PeelOrder::LargestFirst);

/// V(mu)^{(x) N}; N >= 1.
TensorDecomposition tensor_power_decompose(const Weight& mu, int N);

/// Multiplicity of V(nu) in V(mu)^{(x) N}.
BigInt tensor_power_multiplicity(const Weight& mu, int N, const Weight& nu);

}  // namespace hldecomp
