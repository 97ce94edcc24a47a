#include "ctxlab/probability.hpp"

#include <algorithm>

#include "ctxlab/error.hpp"

namespace ctxlab {

RationalVector dense_assignment(const Logic& logic,
                                const std::map<std::string, Rational>& named) {
  for (const auto& [id, value] : named) {
    (void)value;
    if (!logic.has_atom(id))
      throw Error(Errc::unknown_atom, "assignment names unknown atom '" + id + "'");
  }
  RationalVector dense(logic.atom_count());
  for (int a = 0; a < logic.atom_count(); ++a) {
    auto it = named.find(logic.atom_id(a));
    if (it == named.end())
      throw Error(Errc::missing_atom,
                  "assignment missing atom '" + logic.atom_id(a) + "'");
    dense[a] = it->second;
  }
  return dense;
}

void validate_mixing_weights(const StateSet& states, const RationalVector& lambda) {
  if (static_cast<int>(lambda.size()) != states.size())
    throw Error(Errc::length_mismatch,
                "expected " + std::to_string(states.size()) + " weights, got " +
                    std::to_string(lambda.size()));
  Rational sum = 0;
  for (const auto& l : lambda) {
    if (l < 0) throw Error(Errc::invalid_weights, "negative mixing weight");
    sum += l;
  }
  if (sum != 1) throw Error(Errc::invalid_weights, "mixing weights must sum to 1");
}

RationalVector classical_mixture(const StateSet& states, const RationalVector& lambda) {
  validate_mixing_weights(states, lambda);
  RationalVector p(states.atom_count(), Rational(0));
  for (int s = 0; s < states.size(); ++s) {
    if (lambda[s] == 0) continue;
    for (int a = 0; a < states.atom_count(); ++a)
      if (states.value(s, a)) p[a] += lambda[s];
  }
  return p;
}

GeneralizedStateReport validate_generalized_state(const Logic& logic,
                                                  const RationalVector& weights) {
  if (static_cast<int>(weights.size()) != logic.atom_count())
    throw Error(Errc::length_mismatch, "weight vector does not cover the atoms");

  GeneralizedStateReport report;
  for (int a = 0; a < logic.atom_count(); ++a)
    if (weights[a] < 0 || weights[a] > 1) report.out_of_range_atoms.push_back(a);

  report.context_sums.reserve(logic.context_count());
  for (int c = 0; c < logic.context_count(); ++c) {
    Rational sum = 0;
    for (int atom : logic.context(c)) sum += weights[atom];
    if (sum != 1) report.bad_contexts.push_back(c);
    report.context_sums.push_back(std::move(sum));
  }
  report.valid = report.bad_contexts.empty() && report.out_of_range_atoms.empty();
  return report;
}

GeneralizedStateReport validate_generalized_state(const Logic& logic,
                                                  const std::vector<double>& weights,
                                                  double tol) {
  if (static_cast<int>(weights.size()) != logic.atom_count())
    throw Error(Errc::length_mismatch, "weight vector does not cover the atoms");

  GeneralizedStateReport report;
  for (int a = 0; a < logic.atom_count(); ++a)
    if (weights[a] < -tol || weights[a] > 1 + tol) report.out_of_range_atoms.push_back(a);

  for (int c = 0; c < logic.context_count(); ++c) {
    double sum = 0;
    for (int atom : logic.context(c)) sum += weights[atom];
    if (std::abs(sum - 1.0) > tol) report.bad_contexts.push_back(c);
    // Exact field reused for reporting; nearest rational is fine here since
    // the verdict was already taken on the double.
    report.context_sums.push_back(Rational(sum));
  }
  report.valid = report.bad_contexts.empty() && report.out_of_range_atoms.empty();
  return report;
}

Rational linear_functional_max_classical(const StateSet& states,
                                         const RationalVector& coeffs) {
  if (states.empty())
    throw Error(Errc::empty_state_set, "no states: classical maximum undefined");
  if (static_cast<int>(coeffs.size()) != states.atom_count())
    throw Error(Errc::length_mismatch, "coefficient vector does not cover the atoms");

  Rational best;
  for (int s = 0; s < states.size(); ++s) {
    Rational value = 0;
    for (int a = 0; a < states.atom_count(); ++a)
      if (states.value(s, a)) value += coeffs[a];
    if (s == 0 || value > best) best = std::move(value);
  }
  return best;
}

std::vector<std::uint8_t> possibilistic_support(const RationalVector& p) {
  std::vector<std::uint8_t> support(p.size());
  for (size_t a = 0; a < p.size(); ++a) support[a] = p[a] > 0 ? 1 : 0;
  return support;
}

namespace {

// Phase-1 simplex in exact rationals with Bland's rule: feasibility of
//   sum_i lambda_i s_i(a) = p(a) for all atoms,  sum_i lambda_i = 1,
//   lambda >= 0,
// by minimizing the sum of one artificial variable per constraint row.
class FeasibilitySimplex {
 public:
  FeasibilitySimplex(const StateSet& states, const RationalVector& p)
      : n_(states.size()), m_(states.atom_count() + 1) {
    // Right-hand side is nonnegative (p in [0,1]); rows need no flipping.
    tableau_.assign(m_, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
    for (int i = 0; i < m_ - 1; ++i) {
      for (int j = 0; j < n_; ++j)
        if (states.value(j, i)) tableau_[i][j] = 1;
      tableau_[i][n_ + i] = 1;
      tableau_[i].back() = p[i];
    }
    for (int j = 0; j < n_; ++j) tableau_[m_ - 1][j] = 1;
    tableau_[m_ - 1][n_ + m_ - 1] = 1;
    tableau_[m_ - 1].back() = 1;

    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;

    // Reduced costs for min sum of artificials, priced out over the
    // artificial basis: structural j gets -(column sum), objective the rhs sum.
    reduced_.assign(n_ + m_ + 1, Rational(0));
    for (int j = 0; j <= n_ + m_; ++j) {
      Rational sum = 0;
      for (int i = 0; i < m_; ++i) sum += tableau_[i][j];
      if (j < n_) reduced_[j] = -sum;
      if (j == n_ + m_) reduced_[j] = sum;
    }
  }

  HullResult solve() {
    while (true) {
      int entering = -1;
      for (int j = 0; j < n_ + m_; ++j)
        if (reduced_[j] < 0) { entering = j; break; }  // Bland: lowest index
      if (entering < 0) break;

      int leaving_row = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (tableau_[i][entering] <= 0) continue;
        Rational ratio = tableau_[i].back() / tableau_[i][entering];
        bool better = leaving_row < 0 || ratio < best_ratio ||
                      (ratio == best_ratio && basis_[i] < basis_[leaving_row]);
        if (better) {
          leaving_row = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving_row < 0) break;  // unbounded cannot happen in phase 1
      pivot(leaving_row, entering);
    }

    HullResult result;
    if (reduced_.back() != 0) return result;  // residual infeasibility

    result.inside = true;
    result.weights.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) result.weights[basis_[i]] = tableau_[i].back();
    return result;
  }

 private:
  void pivot(int row, int col) {
    Rational inv = tableau_[row][col];
    for (auto& v : tableau_[row]) v /= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tableau_[i][col] == 0) continue;
      Rational factor = tableau_[i][col];
      for (int j = 0; j <= n_ + m_; ++j)
        tableau_[i][j] -= factor * tableau_[row][j];
    }
    if (reduced_[col] != 0) {
      Rational factor = reduced_[col];
      for (int j = 0; j < n_ + m_; ++j) reduced_[j] -= factor * tableau_[row][j];
      // Objective cell carries +rhs, so it moves the other way.
      reduced_.back() += factor * tableau_[row].back();
    }
    basis_[row] = col;
  }

  int n_;  // structural variables (states)
  int m_;  // constraint rows (atoms + normalization)
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> reduced_;
  std::vector<int> basis_;
};

}  // namespace

HullResult in_classical_hull(const StateSet& states, const RationalVector& p) {
  if (states.empty())
    throw Error(Errc::empty_state_set, "no states: classical hull is empty");
  if (static_cast<int>(p.size()) != states.atom_count())
    throw Error(Errc::length_mismatch, "assignment does not cover the atoms");
  for (const auto& v : p)
    if (v < 0 || v > 1) return HullResult{};  // hull lives inside [0,1]^atoms

  return FeasibilitySimplex(states, p).solve();
}

RationalVector wright_half_state(const Logic& logic) {
  RationalVector weights(logic.atom_count(), Rational(0));
  for (int atom : intertwine_atoms(logic)) weights[atom] = Rational(1, 2);
  return weights;
}

}  // namespace ctxlab
