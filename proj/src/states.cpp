#include "ctxlab/states.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "ctxlab/error.hpp"

namespace ctxlab {

namespace {

constexpr std::int8_t kUnknown = -1;

// Depth-first search over contexts: pick the true atom of the first context
// that has none yet, propagate, recurse. Propagation closes under two rules:
// a true atom zeroes its context mates, and a context whose candidates shrink
// to one forces that candidate true.
class Searcher {
 public:
  explicit Searcher(const Logic& logic)
      : logic_(logic), assign_(logic.atom_count(), kUnknown) {}

  // Explores the subtree where `first_choice` is the true atom of the first
  // context. Used to split work across threads; -1 explores everything.
  std::vector<std::vector<std::uint8_t>> run(int first_choice) {
    out_.clear();
    if (first_choice >= 0) {
      size_t mark = trail_.size();
      if (choose_true(first_choice)) dfs(0);
      undo(mark);
    } else {
      dfs(0);
    }
    return std::move(out_);
  }

 private:
  void dfs(int from_context) {
    int target = -1;
    for (int c = from_context; c < logic_.context_count(); ++c) {
      bool satisfied = false;
      for (int atom : logic_.context(c))
        if (assign_[atom] == 1) { satisfied = true; break; }
      if (!satisfied) { target = c; break; }
    }
    if (target < 0) {
      record();
      return;
    }
    for (int candidate : logic_.context(target)) {
      if (assign_[candidate] != kUnknown) continue;
      size_t mark = trail_.size();
      if (choose_true(candidate)) dfs(target);
      undo(mark);
    }
  }

  bool choose_true(int atom) {
    std::vector<int> true_queue, zero_queue;
    auto set1 = [&](int a) {
      if (assign_[a] == 1) return true;
      if (assign_[a] == 0) return false;
      assign_[a] = 1;
      trail_.push_back(a);
      true_queue.push_back(a);
      return true;
    };
    auto set0 = [&](int a) {
      if (assign_[a] == 0) return true;
      if (assign_[a] == 1) return false;
      assign_[a] = 0;
      trail_.push_back(a);
      zero_queue.push_back(a);
      return true;
    };

    if (!set1(atom)) return false;
    while (!true_queue.empty() || !zero_queue.empty()) {
      if (!true_queue.empty()) {
        int t = true_queue.back();
        true_queue.pop_back();
        for (int c : logic_.memberships(t))
          for (int other : logic_.context(c))
            if (other != t && !set0(other)) return false;
      } else {
        int z = zero_queue.back();
        zero_queue.pop_back();
        for (int c : logic_.memberships(z)) {
          bool satisfied = false;
          int unknowns = 0, last = -1;
          for (int other : logic_.context(c)) {
            if (assign_[other] == 1) { satisfied = true; break; }
            if (assign_[other] == kUnknown) { ++unknowns; last = other; }
          }
          if (satisfied) continue;
          if (unknowns == 0) return false;
          if (unknowns == 1 && !set1(last)) return false;
        }
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      assign_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
  }

  void record() {
    std::vector<std::uint8_t> row(assign_.size());
    for (size_t a = 0; a < assign_.size(); ++a)
      row[a] = assign_[a] == 1 ? 1 : 0;
    out_.push_back(std::move(row));
  }

  const Logic& logic_;
  std::vector<std::int8_t> assign_;
  std::vector<int> trail_;
  std::vector<std::vector<std::uint8_t>> out_;
};

unsigned threads_from_env() {
  if (const char* env = std::getenv("CONTEXTUALITY_LAB_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

}  // namespace

StateSet enumerate_states(const Logic& logic) {
  unsigned threads = threads_from_env();
  // Thread spawn dwarfs the search on small pastings; stay serial there.
  if (logic.atom_count() < 24) threads = 1;
  return enumerate_states(logic, threads);
}

StateSet enumerate_states(const Logic& logic, unsigned threads) {
  const auto& first = logic.context(0);
  unsigned workers = std::min<unsigned>(std::max(threads, 1u),
                                        static_cast<unsigned>(first.size()));

  std::vector<std::vector<std::uint8_t>> rows;
  if (workers <= 1) {
    rows = Searcher(logic).run(-1);
  } else {
    // Branch on the first context's true atom; branches are disjoint, so the
    // merge cannot produce duplicates.
    std::vector<std::vector<std::vector<std::uint8_t>>> parts(first.size());
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (size_t i = next.fetch_add(1); i < first.size(); i = next.fetch_add(1))
          parts[i] = Searcher(logic).run(first[i]);
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts)
      for (auto& row : part) rows.push_back(std::move(row));
  }

  // Canonical order: lexicographic over the atom order with 1 before 0
  // (the state truthing the first atom comes first).
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return StateSet(std::move(rows));
}

bool is_admissible(const Logic& logic, std::span<const std::uint8_t> values) {
  if (static_cast<int>(values.size()) != logic.atom_count())
    throw Error(Errc::missing_atom, "assignment does not cover all atoms");
  for (const auto& ctx : logic.contexts()) {
    int sum = 0;
    for (int atom : ctx) sum += values[atom];
    if (sum != 1) return false;
  }
  return true;
}

bool is_admissible(const Logic& logic, const std::map<std::string, int>& assignment) {
  std::vector<std::uint8_t> values(logic.atom_count());
  for (int a = 0; a < logic.atom_count(); ++a) {
    auto it = assignment.find(logic.atom_id(a));
    if (it == assignment.end())
      throw Error(Errc::missing_atom,
                  "assignment missing atom '" + logic.atom_id(a) + "'");
    if (it->second != 0 && it->second != 1)
      throw Error(Errc::invalid_weights, "assignment values must be 0 or 1");
    values[a] = static_cast<std::uint8_t>(it->second);
  }
  return is_admissible(logic, values);
}

std::string_view level_name(Level level) {
  switch (level) {
    case Level::separating: return "SEPARATING";
    case Level::unital_inseparable: return "UNITAL_INSEPARABLE";
    case Level::nonunital: return "NONUNITAL";
    case Level::stateless: return "STATELESS";
  }
  return "UNKNOWN";
}

Classification classify(const Logic& logic, const StateSet& states) {
  Classification result;
  result.nonempty = !states.empty();

  for (int a = 0; a < logic.atom_count(); ++a) {
    bool ever_true = false;
    for (int s = 0; s < states.size(); ++s)
      if (states.value(s, a)) { ever_true = true; break; }
    if (!ever_true) result.nonunital_atoms.push_back(a);
  }
  result.unital = result.nonempty && result.nonunital_atoms.empty();

  for (int a = 0; a < logic.atom_count(); ++a) {
    for (int b = a + 1; b < logic.atom_count(); ++b) {
      bool separated = false;
      for (int s = 0; s < states.size(); ++s)
        if (states.value(s, a) != states.value(s, b)) { separated = true; break; }
      if (!separated) result.inseparable_pairs.emplace_back(a, b);
    }
  }
  result.separating = result.unital && result.inseparable_pairs.empty();

  if (!result.nonempty)
    result.level = Level::stateless;
  else if (!result.unital)
    result.level = Level::nonunital;
  else if (!result.separating)
    result.level = Level::unital_inseparable;
  else
    result.level = Level::separating;
  return result;
}

Classification classify(const Logic& logic) {
  return classify(logic, enumerate_states(logic));
}

PartitionLogic partition_logic(const Logic& logic, const StateSet& states) {
  if (states.empty())
    throw Error(Errc::empty_state_set, "no two-valued states: partition logic undefined");

  PartitionLogic partition;
  partition.atom_blocks.resize(logic.atom_count());
  for (int s = 0; s < states.size(); ++s)
    for (int a = 0; a < logic.atom_count(); ++a)
      if (states.value(s, a)) partition.atom_blocks[a].push_back(s + 1);

  partition.context_partitions.reserve(logic.context_count());
  for (const auto& ctx : logic.contexts()) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(ctx.size());
    for (int atom : ctx) blocks.push_back(partition.atom_blocks[atom]);
    partition.context_partitions.push_back(std::move(blocks));
  }
  return partition;
}

std::string_view gadget_kind_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::tits: return "TITS";
    case GadgetKind::tifs: return "TIFS";
    case GadgetKind::mixed: return "MIXED";
    case GadgetKind::vacuous: return "VACUOUS";
  }
  return "UNKNOWN";
}

GadgetRelation gadget_relation(const Logic& logic, const StateSet& states,
                               std::string_view premise, std::string_view conclusion) {
  GadgetRelation relation;
  relation.premise = logic.atom_index(premise);
  relation.conclusion = logic.atom_index(conclusion);

  bool seen = false, always_true = true, always_false = true;
  for (int s = 0; s < states.size(); ++s) {
    if (!states.value(s, relation.premise)) continue;
    seen = true;
    if (states.value(s, relation.conclusion))
      always_false = false;
    else
      always_true = false;
  }

  if (!seen)
    relation.kind = GadgetKind::vacuous;
  else if (always_true)
    relation.kind = GadgetKind::tits;
  else if (always_false)
    relation.kind = GadgetKind::tifs;
  else
    relation.kind = GadgetKind::mixed;
  return relation;
}

ImplicationResult check_implication(const Logic& logic, const StateSet& states,
                                    const std::vector<std::string>& premises,
                                    std::string_view conclusion) {
  std::vector<int> premise_atoms;
  premise_atoms.reserve(premises.size());
  for (const auto& id : premises) premise_atoms.push_back(logic.atom_index(id));
  int conclusion_atom = logic.atom_index(conclusion);

  ImplicationResult result;
  result.vacuous = true;
  result.holds = true;
  for (int s = 0; s < states.size(); ++s) {
    bool all = true;
    for (int p : premise_atoms)
      if (!states.value(s, p)) { all = false; break; }
    if (!all) continue;
    result.vacuous = false;
    if (states.value(s, conclusion_atom)) {
      if (!result.witness) result.witness = s + 1;
    } else {
      result.holds = false;
      if (!result.counterexample) result.counterexample = s + 1;
    }
  }
  return result;
}

}  // namespace ctxlab
