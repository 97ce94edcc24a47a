#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "ctxlab/logic.hpp"

namespace ctxlab {

// Faithful orthogonal representation candidate: one unit column per atom,
// columns aligned with the logic's canonical atom order.
struct OrthoRep {
  int dim = 0;
  Eigen::MatrixXd vectors;  // dim x atom_count

  Eigen::VectorXd vector_of(int atom) const { return vectors.col(atom); }
};

// Builds an OrthoRep from named vectors. Throws Error(missing_vector) when an
// atom of the logic has no vector and Error(dimension_mismatch) when lengths
// differ. Vectors for unknown atoms throw Error(unknown_atom).
OrthoRep make_ortho_rep(const Logic& logic,
                        const std::map<std::string, std::vector<double>>& vectors);

struct PairCheck {
  int atom_a = -1;
  int atom_b = -1;
  double inner = 0.0;
};

struct OrthogonalityReport {
  // Within-context pairs with |<v_a, v_b>| > tol.
  std::vector<PairCheck> nonorthogonal_pairs;
  // Atoms whose vector norm differs from 1 by more than tol, with the norm.
  std::vector<std::pair<int, double>> nonunit_atoms;

  bool valid() const { return nonorthogonal_pairs.empty() && nonunit_atoms.empty(); }
};

OrthogonalityReport validate_orthogonality(const Logic& logic, const OrthoRep& rep,
                                           double tol = 1e-9);

struct FaithfulnessReport {
  // Pairs sharing no context whose vectors are orthogonal within tol.
  std::vector<PairCheck> orthogonal_apart;
  // Distinct atoms mapped to collinear vectors (|<v_a, v_b>| within tol of 1).
  std::vector<PairCheck> collinear_pairs;

  bool faithful() const { return orthogonal_apart.empty() && collinear_pairs.empty(); }
};

FaithfulnessReport validate_faithfulness(const Logic& logic, const OrthoRep& rep,
                                         double tol = 1e-9);

struct BornResult {
  // q(a) = <psi, v_a>^2 per atom.
  Eigen::VectorXd q;
  // One sum per context; exactly 1 whenever the context vectors form an
  // orthonormal basis of the space.
  Eigen::VectorXd context_sums;
};

// Throws Error(not_unit_vector) when psi is not unit within tol and
// Error(dimension_mismatch) when psi does not match rep.dim.
BornResult born_probabilities(const Logic& logic, const OrthoRep& rep,
                              const Eigen::VectorXd& psi, double tol = 1e-9);

struct MaxQuantum {
  double value = 0.0;        // largest eigenvalue of sum of v_a v_a^T
  Eigen::VectorXd argmax;    // unit eigenvector attaining it
  int iterations = 0;
};

// Power iteration on the Gram accumulation M = sum_{a in targets} v_a v_a^T,
// converging to relative tolerance rel_tol. The returned value equals
// max over unit psi of sum_{a in targets} <psi, v_a>^2.
// Throws Error(empty_targets).
MaxQuantum max_quantum_value(const OrthoRep& rep, const std::vector<int>& targets,
                             double rel_tol = 1e-9);

// The two-context representation in R^3 for atoms (a,b,c,d,e):
//   a=(0,0,1), b=(0,1,0), c=(1,0,0), d=(cos phi, sin phi, 0),
//   e=(-sin phi, cos phi, 0).
// Faithful exactly for phi in the open interval (0, pi/2); outside it the
// construction is still returned for boundary study (check the range with
// two_context_phi_in_range and run the validators).
OrthoRep two_context_rep(double phi);
bool two_context_phi_in_range(double phi);

// Constraint-solving helper for cyclically pasted size-3 contexts (the
// pentagon and larger odd cycles): places the shared atoms on a cone about
// the z-axis, solves the adjacent-orthogonality constraint for the opening
// angle by bisection, and fills each context's private atom with the
// normalized cross product of its shared pair. Odd cycle length >= 5
// required; throws Error(bad_params) when the logic does not have that
// structure. Validate the result with the validators above.
OrthoRep cyclic_triad_rep(const Logic& logic);

}  // namespace ctxlab
