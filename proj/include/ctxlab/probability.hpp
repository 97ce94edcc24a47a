#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctxlab/logic.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/states.hpp"

namespace ctxlab {

// Aligns a named atom->value map with the logic's canonical atom order.
// Throws Error(missing_atom) when some atom has no entry and
// Error(unknown_atom) for entries naming no atom of the logic.
RationalVector dense_assignment(const Logic& logic,
                                const std::map<std::string, Rational>& named);

// Throws Error(length_mismatch) when |lambda| != |states| and
// Error(invalid_weights) unless lambda >= 0 and sums to exactly 1.
void validate_mixing_weights(const StateSet& states, const RationalVector& lambda);

// p(a) = sum_i lambda_i * s_i(a). Context sums come out exactly 1.
RationalVector classical_mixture(const StateSet& states, const RationalVector& lambda);

struct GeneralizedStateReport {
  bool valid = false;
  // One sum per context, exact.
  RationalVector context_sums;
  // Contexts whose sum differs from 1.
  std::vector<int> bad_contexts;
  // Atoms with weights outside [0,1].
  std::vector<int> out_of_range_atoms;
};

// Dispersion-free generalized-state check: every context must sum to exactly
// 1 and every weight lie in [0,1]. Throws Error(length_mismatch) when the
// weight vector does not cover the atoms.
GeneralizedStateReport validate_generalized_state(const Logic& logic,
                                                  const RationalVector& weights);
// Floating-point variant: context sums within tol of 1.
GeneralizedStateReport validate_generalized_state(const Logic& logic,
                                                  const std::vector<double>& weights,
                                                  double tol);

// max over states of sum_a coeffs(a) * s(a); the classical hull maximum,
// since vertices maximize linear functionals. Throws Error(empty_state_set).
Rational linear_functional_max_classical(const StateSet& states,
                                         const RationalVector& coeffs);

// Support map: atom -> 1 iff p(atom) > 0. Idempotent.
std::vector<std::uint8_t> possibilistic_support(const RationalVector& p);

struct HullResult {
  bool inside = false;
  // Mixing weights witnessing membership, aligned with the state order;
  // empty when outside.
  RationalVector weights;
};

// Decides, by exact phase-1 simplex with Bland's anti-cycling rule, whether
// p is a convex combination of the two-valued states. Exact: no tolerances.
// Throws Error(empty_state_set) and Error(length_mismatch).
HullResult in_classical_hull(const StateSet& states, const RationalVector& p);

// The dispersion-free distribution that is 1/2 on every intertwine atom and
// 0 elsewhere (Wright's exotic pentagon state when applied to the pentagon).
RationalVector wright_half_state(const Logic& logic);

}  // namespace ctxlab
