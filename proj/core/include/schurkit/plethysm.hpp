#pragma once

#include <map>

#include "schurkit/numeric.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/vobject.hpp"

namespace schurkit {

// Symmetric function with rational coefficients in the power-sum basis;
// the key is the index partition of p_rho (the empty key is the constant).
// Mixed degrees are allowed.
using PowerSumFunc = std::map<Partition, Rational, ByDegreeRevLex>;

// s_lambda = sum_rho chi_lambda(rho)/z_rho * p_rho.
PowerSumFunc schur_to_power_sums(const Partition& lambda);
// Linear extension over the terms of a graded object.
PowerSumFunc vobject_to_power_sums(const VObject& v);

// p_k applied plethystically: every p_i becomes p_{k i}, coefficients fixed.
PowerSumFunc power_substitute(const PowerSumFunc& f, int k);
// Product, dropping terms above max_degree (pass a negative value for "keep all").
PowerSumFunc power_multiply(const PowerSumFunc& a, const PowerSumFunc& b,
                            int max_degree);

// Back-conversion of the degree <= max_degree part to multiplicities of
// simples; throws IntegrityError if any multiplicity fails to be a
// non-negative integer.
VObject power_sums_to_vobject(const PowerSumFunc& f, int max_degree);

// Composition (plethysm) W o V, truncated at max_degree.  V may carry a
// degree-0 term only when allow_degree_zero is set.
VObject compose(const VObject& outer, const VObject& inner, int max_degree,
                bool allow_degree_zero = false);

// (W o V)^t for V concentrated in degrees of one parity: computed as
// W o (V^t) for even V and (W^t) o (V^t) for odd V.
VObject compose_transpose(const VObject& outer, const VObject& inner,
                          int max_degree);

// Permutation object of perfect matchings on 2n points: sum of S_{2 lambda}
// over lambda of size n.
VObject matchings(int n);

}  // namespace schurkit
