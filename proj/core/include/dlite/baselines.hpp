#pragma once

#include "dlite/distribution.hpp"

// Classic measures DLITE is compared against. Natural log throughout.
namespace dlite {

/// H(P) = -sum p ln p, with 0 ln 0 = 0.
double shannon_entropy(const DiscreteDistribution& p);

/// H(P) - H(Q). Signed.
double entropy_delta(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// KL(P || Q) = sum p ln(p / q). Returns +infinity when some p_i > 0 has q_i = 0.
double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// H(M) - (H(P) + H(Q)) / 2 with M = (P + Q) / 2. Symmetric, in [0, ln 2].
double js_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

}  // namespace dlite
