#include "ctxlab/logic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ctxlab/error.hpp"

namespace ctxlab {

int Logic::find_atom(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

int Logic::atom_index(std::string_view id) const {
  int idx = find_atom(id);
  if (idx < 0) throw Error(Errc::unknown_atom, "unknown atom '" + std::string(id) + "'");
  return idx;
}

std::vector<std::vector<std::string>> Logic::context_ids() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(contexts_.size());
  for (const auto& ctx : contexts_) {
    std::vector<std::string> ids;
    ids.reserve(ctx.size());
    for (int a : ctx) ids.push_back(atoms_[a]);
    out.push_back(std::move(ids));
  }
  return out;
}

Logic build_logic(const std::vector<std::vector<std::string>>& contexts) {
  if (contexts.empty())
    throw Error(Errc::empty_context, "a logic needs at least one context");

  Logic logic;
  std::vector<std::set<int>> context_sets;

  for (size_t c = 0; c < contexts.size(); ++c) {
    const auto& ids = contexts[c];
    if (ids.size() < 2)
      throw Error(Errc::empty_context,
                  "context " + std::to_string(c + 1) + " has fewer than two atoms");

    std::vector<int> ctx;
    std::set<int> ctx_set;
    for (const auto& id : ids) {
      if (id.empty()) throw Error(Errc::empty_context, "empty atom id");
      auto [it, inserted] = logic.index_.try_emplace(id, logic.atom_count());
      if (inserted) {
        logic.atoms_.push_back(id);
        logic.memberships_.emplace_back();
      }
      int atom = it->second;
      if (!ctx_set.insert(atom).second)
        throw Error(Errc::duplicate_atom_in_context,
                    "atom '" + id + "' repeated in context " + std::to_string(c + 1));
      ctx.push_back(atom);
    }

    for (size_t prev = 0; prev < context_sets.size(); ++prev)
      if (context_sets[prev] == ctx_set)
        throw Error(Errc::duplicate_context,
                    "context " + std::to_string(c + 1) + " duplicates context " +
                        std::to_string(prev + 1));

    for (int atom : ctx)
      logic.memberships_[atom].push_back(static_cast<int>(c));
    logic.contexts_.push_back(std::move(ctx));
    context_sets.push_back(std::move(ctx_set));
  }

  for (size_t i = 0; i < context_sets.size(); ++i) {
    for (size_t j = i + 1; j < context_sets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(context_sets[i].begin(), context_sets[i].end(),
                            context_sets[j].begin(), context_sets[j].end(),
                            std::back_inserter(common));
      if (common.size() >= 2 && !logic.overlap_warning_) {
        logic.overlap_warning_ = true;
        logic.warnings_.push_back("contexts " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " share " +
                                  std::to_string(common.size()) + " atoms");
      }
      bool i_in_j = common.size() == context_sets[i].size();
      bool j_in_i = common.size() == context_sets[j].size();
      if ((i_in_j || j_in_i) && !logic.subset_warning_) {
        logic.subset_warning_ = true;
        logic.warnings_.push_back("context " + std::to_string(i_in_j ? i + 1 : j + 1) +
                                  " is a subset of context " +
                                  std::to_string(i_in_j ? j + 1 : i + 1));
      }
    }
  }

  return logic;
}

namespace {

Logic make_cycle(int n, int k) {
  if (n < 2 || k < 2)
    throw Error(Errc::bad_params, "cycle needs n >= 2 and k >= 2");
  if (n == 2 && k == 2)
    throw Error(Errc::bad_params, "cycle(2,2) is degenerate: both contexts are {a1,a2}");

  std::vector<std::vector<std::string>> contexts;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> ctx;
    ctx.push_back("a" + std::to_string(i));
    for (int j = 1; j <= k - 2; ++j) {
      std::string id = "b" + std::to_string(i);
      if (k > 3) id += "_" + std::to_string(j);
      ctx.push_back(id);
    }
    ctx.push_back("a" + std::to_string(i % n + 1));
    contexts.push_back(std::move(ctx));
  }
  return build_logic(contexts);
}

}  // namespace

Logic catalog(const std::string& name, const std::vector<int>& params) {
  std::string base = name;
  std::vector<int> args = params;

  // Accept "cycle(5,3)" style inline parameters.
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')')
      throw Error(Errc::bad_params, "malformed catalog name '" + name + "'");
    base = name.substr(0, open);
    args.clear();
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    std::istringstream in(inner);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        args.push_back(v);
      } catch (const std::exception&) {
        throw Error(Errc::bad_params, "bad catalog parameter '" + tok + "'");
      }
    }
  }

  if (base == "two-intertwined") {
    if (!args.empty()) throw Error(Errc::bad_params, "two-intertwined takes no parameters");
    return build_logic({{"a", "b", "c"}, {"a", "d", "e"}});
  }
  if (base == "three-chain") {
    if (!args.empty()) throw Error(Errc::bad_params, "three-chain takes no parameters");
    return build_logic({{"a", "b", "c"}, {"a", "d", "e"}, {"e", "f", "g"}});
  }
  if (base == "pentagon") {
    if (!args.empty()) throw Error(Errc::bad_params, "pentagon takes no parameters");
    return make_cycle(5, 3);
  }
  if (base == "cycle") {
    if (args.size() != 2)
      throw Error(Errc::bad_params, "cycle needs two parameters, e.g. cycle(5,3)");
    return make_cycle(args[0], args[1]);
  }
  throw Error(Errc::unknown_catalog_name, "unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"two-intertwined", "three-chain", "pentagon", "cycle(n,k)"};
}

std::vector<int> intertwine_atoms(const Logic& logic) {
  std::vector<int> shared;
  for (int a = 0; a < logic.atom_count(); ++a)
    if (logic.memberships(a).size() >= 2) shared.push_back(a);
  return shared;
}

}  // namespace ctxlab
