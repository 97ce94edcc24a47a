#include "ctxlab/forep.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ctxlab/error.hpp"

namespace ctxlab {

OrthoRep make_ortho_rep(const Logic& logic,
                        const std::map<std::string, std::vector<double>>& vectors) {
  for (const auto& [id, v] : vectors) {
    (void)v;
    if (!logic.has_atom(id))
      throw Error(Errc::unknown_atom, "vector for unknown atom '" + id + "'");
  }

  OrthoRep rep;
  for (int a = 0; a < logic.atom_count(); ++a) {
    auto it = vectors.find(logic.atom_id(a));
    if (it == vectors.end())
      throw Error(Errc::missing_vector, "no vector for atom '" + logic.atom_id(a) + "'");
    int dim = static_cast<int>(it->second.size());
    if (rep.dim == 0) {
      rep.dim = dim;
      rep.vectors.resize(rep.dim, logic.atom_count());
    } else if (dim != rep.dim) {
      throw Error(Errc::dimension_mismatch,
                  "vector for atom '" + logic.atom_id(a) + "' has length " +
                      std::to_string(dim) + ", expected " + std::to_string(rep.dim));
    }
    for (int i = 0; i < dim; ++i) rep.vectors(i, a) = it->second[i];
  }
  return rep;
}

namespace {

void require_coverage(const Logic& logic, const OrthoRep& rep) {
  if (rep.vectors.cols() != logic.atom_count())
    throw Error(Errc::missing_vector, "representation does not cover all atoms");
}

bool share_context(const Logic& logic, int a, int b) {
  for (int ca : logic.memberships(a))
    for (int cb : logic.memberships(b))
      if (ca == cb) return true;
  return false;
}

}  // namespace

OrthogonalityReport validate_orthogonality(const Logic& logic, const OrthoRep& rep,
                                           double tol) {
  require_coverage(logic, rep);
  OrthogonalityReport report;

  for (int a = 0; a < logic.atom_count(); ++a) {
    double norm = rep.vectors.col(a).norm();
    if (std::abs(norm - 1.0) > tol) report.nonunit_atoms.emplace_back(a, norm);
  }

  for (const auto& ctx : logic.contexts()) {
    for (size_t i = 0; i < ctx.size(); ++i) {
      for (size_t j = i + 1; j < ctx.size(); ++j) {
        double inner = rep.vectors.col(ctx[i]).dot(rep.vectors.col(ctx[j]));
        if (std::abs(inner) > tol)
          report.nonorthogonal_pairs.push_back({ctx[i], ctx[j], inner});
      }
    }
  }
  return report;
}

FaithfulnessReport validate_faithfulness(const Logic& logic, const OrthoRep& rep,
                                         double tol) {
  require_coverage(logic, rep);
  FaithfulnessReport report;

  for (int a = 0; a < logic.atom_count(); ++a) {
    for (int b = a + 1; b < logic.atom_count(); ++b) {
      double inner = rep.vectors.col(a).dot(rep.vectors.col(b));
      if (!share_context(logic, a, b) && std::abs(inner) <= tol)
        report.orthogonal_apart.push_back({a, b, inner});
      double norms = rep.vectors.col(a).norm() * rep.vectors.col(b).norm();
      if (std::abs(std::abs(inner) - norms) <= tol)
        report.collinear_pairs.push_back({a, b, inner});
    }
  }
  return report;
}

BornResult born_probabilities(const Logic& logic, const OrthoRep& rep,
                              const Eigen::VectorXd& psi, double tol) {
  require_coverage(logic, rep);
  if (psi.size() != rep.dim)
    throw Error(Errc::dimension_mismatch, "state vector length does not match dim");
  if (std::abs(psi.norm() - 1.0) > tol)
    throw Error(Errc::not_unit_vector, "state vector is not unit length");

  BornResult result;
  Eigen::VectorXd overlaps = rep.vectors.transpose() * psi;
  result.q = overlaps.array().square().matrix();

  result.context_sums.resize(logic.context_count());
  for (int c = 0; c < logic.context_count(); ++c) {
    double sum = 0;
    for (int atom : logic.context(c)) sum += result.q(atom);
    result.context_sums(c) = sum;
  }
  return result;
}

MaxQuantum max_quantum_value(const OrthoRep& rep, const std::vector<int>& targets,
                             double rel_tol) {
  if (targets.empty()) throw Error(Errc::empty_targets, "no target atoms");
  for (int atom : targets)
    if (atom < 0 || atom >= rep.vectors.cols())
      throw Error(Errc::missing_vector, "target atom has no vector");

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
  for (int atom : targets) {
    Eigen::VectorXd v = rep.vectors.col(atom);
    gram.noalias() += v * v.transpose();
  }

  // Deterministic pseudo-random start; reproducible across runs.
  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::VectorXd v(rep.dim);
  for (int i = 0; i < rep.dim; ++i) v(i) = uni(rng);
  v.normalize();

  MaxQuantum result;
  constexpr int kMaxIterations = 200000;
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    Eigen::VectorXd w = gram * v;
    double lambda = v.dot(w);
    result.iterations = iter;
    if ((w - lambda * v).norm() <= rel_tol * std::max(std::abs(lambda), 1e-300)) {
      result.value = lambda;
      result.argmax = v;
      return result;
    }
    double norm = w.norm();
    if (norm == 0.0) {
      // v sits in the kernel; restart along a basis direction not yet tried.
      v.setZero();
      v(iter % rep.dim) = 1.0;
      continue;
    }
    v = w / norm;
  }

  result.value = v.dot(gram * v);
  result.argmax = v;
  return result;
}

OrthoRep two_context_rep(double phi) {
  OrthoRep rep;
  rep.dim = 3;
  rep.vectors.resize(3, 5);
  rep.vectors.col(0) << 0, 0, 1;                            // a
  rep.vectors.col(1) << 0, 1, 0;                            // b
  rep.vectors.col(2) << 1, 0, 0;                            // c
  rep.vectors.col(3) << std::cos(phi), std::sin(phi), 0;    // d
  rep.vectors.col(4) << -std::sin(phi), std::cos(phi), 0;   // e
  return rep;
}

bool two_context_phi_in_range(double phi) {
  return phi > 0.0 && phi < std::numbers::pi / 2;
}

OrthoRep cyclic_triad_rep(const Logic& logic) {
  int n = logic.context_count();
  if (n < 5 || n % 2 == 0)
    throw Error(Errc::bad_params, "cyclic representation needs an odd cycle of >= 5 contexts");
  for (const auto& ctx : logic.contexts())
    if (ctx.size() != 3)
      throw Error(Errc::bad_params, "cyclic representation needs size-3 contexts");
  if (logic.atom_count() != 2 * n)
    throw Error(Errc::bad_params, "cyclic representation needs 2n atoms");

  // Walk the cycle: each context holds two shared atoms and one private one;
  // adjacent contexts meet in exactly one shared atom.
  std::vector<int> shared_of(n, -1);   // shared atom entering context k
  std::vector<int> private_of(n, -1);  // the context's private atom
  std::vector<bool> context_used(n, false);

  auto classify_context = [&](int c, int entry_atom, int& exit_atom, int& priv) {
    exit_atom = -1;
    priv = -1;
    for (int atom : logic.context(c)) {
      size_t degree = logic.memberships(atom).size();
      if (degree == 1) {
        if (priv >= 0) return false;
        priv = atom;
      } else if (degree == 2) {
        if (atom == entry_atom) continue;
        if (exit_atom >= 0) return false;
        exit_atom = atom;
      } else {
        return false;
      }
    }
    return exit_atom >= 0 && priv >= 0;
  };

  int first_entry = -1;
  for (int atom : logic.context(0))
    if (logic.memberships(atom).size() == 2) { first_entry = atom; break; }
  if (first_entry < 0) throw Error(Errc::bad_params, "no intertwine atom in first context");

  int current = 0, entry = first_entry;
  for (int k = 0; k < n; ++k) {
    int exit_atom = -1, priv = -1;
    if (context_used[current] || !classify_context(current, entry, exit_atom, priv))
      throw Error(Errc::bad_params, "contexts are not pasted in a single cycle");
    context_used[current] = true;
    shared_of[k] = entry;
    private_of[k] = priv;

    int next = -1;
    for (int c : logic.memberships(exit_atom))
      if (c != current) next = c;
    if (next < 0) throw Error(Errc::bad_params, "cycle walk left the pasting");
    current = next;
    entry = exit_atom;
  }
  if (current != 0 || entry != first_entry)
    throw Error(Errc::bad_params, "contexts are not pasted in a single cycle");

  // Shared atoms go on a cone about the z-axis at azimuth steps of
  // 2*pi*(n-1)/2 / n, so consecutive atoms sit maximally apart. The opening
  // angle theta solves sin^2(theta) cos(step) + cos^2(theta) = 0, found by
  // bisection (the lhs is strictly decreasing in theta on (0, pi/2)).
  double step = 2.0 * std::numbers::pi * ((n - 1) / 2) / n;
  double lo = 0.0, hi = std::numbers::pi / 2;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    double s = std::sin(mid), c = std::cos(mid);
    double value = s * s * std::cos(step) + c * c;
    (value > 0 ? lo : hi) = mid;
  }
  double theta = 0.5 * (lo + hi);

  OrthoRep rep;
  rep.dim = 3;
  rep.vectors.resize(3, logic.atom_count());
  std::vector<Eigen::Vector3d> cone(n);
  for (int k = 0; k < n; ++k) {
    double azimuth = step * k;
    cone[k] = Eigen::Vector3d(std::sin(theta) * std::cos(azimuth),
                              std::sin(theta) * std::sin(azimuth), std::cos(theta));
    rep.vectors.col(shared_of[k]) = cone[k];
  }
  for (int k = 0; k < n; ++k) {
    Eigen::Vector3d cross = cone[k].cross(cone[(k + 1) % n]);
    rep.vectors.col(private_of[k]) = cross.normalized();
  }
  return rep;
}

}  // namespace ctxlab
