#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxlab/logic.hpp"

namespace ctxlab {

// All two-valued states of a logic, one row per state, columns aligned with
// the logic's canonical atom order. Rows are sorted lexicographically with
// 1 ordered before 0 (true-first), so the state truthing the first atom
// comes first. State indices reported outside this class (partition blocks,
// CLI tables) are 1-based.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::vector<std::vector<std::uint8_t>> rows)
      : rows_(std::move(rows)) {}

  int size() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  int atom_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

  // 0-based state index, atom index in canonical order.
  std::uint8_t value(int state, int atom) const { return rows_[state][atom]; }
  const std::vector<std::uint8_t>& row(int state) const { return rows_[state]; }
  const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<std::uint8_t>> rows_;
};

// Backtracking over contexts (pick the true atom, propagate zeros and forced
// units) producing every admissible two-valued state in canonical order.
// The search may be split across threads; the merged result is sorted, so the
// output is identical for any worker count. The one-argument form caps the
// worker count with the CONTEXTUALITY_LAB_THREADS environment variable
// (0 or unset = auto) and stays serial on small pastings; the two-argument
// form uses exactly the requested count.
StateSet enumerate_states(const Logic& logic);
StateSet enumerate_states(const Logic& logic, unsigned threads);

// True iff every context sums to exactly 1 under the assignment.
bool is_admissible(const Logic& logic, std::span<const std::uint8_t> values);
// Named variant; throws Error(missing_atom) when the map does not cover
// every atom of the logic.
bool is_admissible(const Logic& logic, const std::map<std::string, int>& assignment);

// Contextuality ladder, highest rung first.
enum class Level { separating, unital_inseparable, nonunital, stateless };

std::string_view level_name(Level level);

struct Classification {
  bool nonempty = false;
  bool unital = false;
  bool separating = false;
  Level level = Level::stateless;
  // Atoms no state assigns 1 to.
  std::vector<int> nonunital_atoms;
  // Pairs (i < j) no state tells apart.
  std::vector<std::pair<int, int>> inseparable_pairs;
};

Classification classify(const Logic& logic, const StateSet& states);
Classification classify(const Logic& logic);

// Partition-logic representation: each atom maps to the 1-based indices of
// the states assigning it 1; each context's blocks partition {1..|states|}.
struct PartitionLogic {
  std::vector<std::vector<int>> atom_blocks;
  // Per context, the atom blocks in context atom order.
  std::vector<std::vector<std::vector<int>>> context_partitions;
};

// Throws Error(empty_state_set) when no states exist.
PartitionLogic partition_logic(const Logic& logic, const StateSet& states);

enum class GadgetKind { tits, tifs, mixed, vacuous };

std::string_view gadget_kind_name(GadgetKind kind);

struct GadgetRelation {
  int premise = -1;
  int conclusion = -1;
  GadgetKind kind = GadgetKind::vacuous;
};

// Over all states with s(premise)=1: TITS when the conclusion is always 1,
// TIFS when always 0, MIXED otherwise, VACUOUS when no such state exists.
GadgetRelation gadget_relation(const Logic& logic, const StateSet& states,
                               std::string_view premise, std::string_view conclusion);

struct ImplicationResult {
  bool holds = false;
  // True when no state satisfies all premises (the implication then holds
  // vacuously).
  bool vacuous = false;
  // 1-based index of a state with all premises true and conclusion false.
  std::optional<int> counterexample;
  // 1-based index of a state with all premises and the conclusion true.
  std::optional<int> witness;
};

ImplicationResult check_implication(const Logic& logic, const StateSet& states,
                                    const std::vector<std::string>& premises,
                                    std::string_view conclusion);

}  // namespace ctxlab
