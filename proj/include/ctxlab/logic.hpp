#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctxlab {

// A pasting of measurement contexts: atoms in first-appearance order,
// contexts as lists of atom indices. Immutable after construction and safe
// to share across threads. All downstream enumeration/partition output is a
// deterministic function of this canonical order.
class Logic {
 public:
  Logic() = default;

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int context_count() const { return static_cast<int>(contexts_.size()); }

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom_id(int atom) const { return atoms_[atom]; }

  // Index of an atom id, or -1 when absent.
  int find_atom(std::string_view id) const;
  // Index of an atom id; throws Error(unknown_atom) when absent.
  int atom_index(std::string_view id) const;
  bool has_atom(std::string_view id) const { return find_atom(id) >= 0; }

  const std::vector<std::vector<int>>& contexts() const { return contexts_; }
  const std::vector<int>& context(int c) const { return contexts_[c]; }
  // Contexts the atom belongs to.
  const std::vector<int>& memberships(int atom) const { return memberships_[atom]; }

  // Contexts spelled out with atom ids (context order, atom order preserved).
  std::vector<std::vector<std::string>> context_ids() const;

  // Set when one context's atom set contains another's.
  bool subset_context_warning() const { return subset_warning_; }
  // Set when two contexts share two or more atoms.
  bool overlap_warning() const { return overlap_warning_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool operator==(const Logic& other) const {
    return atoms_ == other.atoms_ && contexts_ == other.contexts_;
  }

 private:
  friend Logic build_logic(const std::vector<std::vector<std::string>>& contexts);

  std::vector<std::string> atoms_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> contexts_;
  std::vector<std::vector<int>> memberships_;
  bool subset_warning_ = false;
  bool overlap_warning_ = false;
  std::vector<std::string> warnings_;
};

// Builds a Logic from contexts given as atom-id lists. Atoms are numbered in
// first-appearance order. Throws Error(empty_context) when no contexts are
// given or one has fewer than two atoms, Error(duplicate_atom_in_context),
// Error(duplicate_context) when two contexts coincide as sets.
Logic build_logic(const std::vector<std::vector<std::string>>& contexts);

// Named example logics:
//   two-intertwined  {a,b,c},{a,d,e}
//   three-chain      {a,b,c},{a,d,e},{e,f,g}
//   pentagon         five size-3 contexts cyclically pasted, atoms a1..a5 (shared)
//                    and b1..b5 (private); equals cycle(5,3) naming
//   cycle(n,k)       n contexts of size k pasted in a cycle, adjacent contexts
//                    sharing one atom: context i = {a_i, b_i_1..b_i_{k-2}, a_{i+1}}
// Throws Error(unknown_catalog_name) / Error(bad_params). cycle requires
// n >= 2, k >= 2 and rejects (2,2), whose two contexts coincide as sets.
Logic catalog(const std::string& name, const std::vector<int>& params = {});

// Names acceptable to catalog(); "cycle(n,k)" stands for the parametric family.
std::vector<std::string> catalog_names();

// Atoms belonging to two or more contexts, as sorted atom indices.
std::vector<int> intertwine_atoms(const Logic& logic);

}  // namespace ctxlab
