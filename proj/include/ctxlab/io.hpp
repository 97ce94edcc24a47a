#pragma once

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctxlab/logic.hpp"
#include "ctxlab/rational.hpp"

namespace ctxlab {

// A parsed .ctx document: the logic plus optional per-atom vector and
// probability sections.
struct LogicDocument {
  Logic logic;
  std::map<std::string, std::vector<double>> vectors;
  std::map<std::string, Rational> probabilities;

  bool operator==(const LogicDocument& other) const {
    return logic == other.logic && vectors == other.vectors &&
           probabilities == other.probabilities;
  }
};

// Text DSL, one directive per line:
//   context <id> <id> ...      at least two distinct atoms
//   vec <id> <num> <num> ...   real components, one consistent length
//   prob <id> <rational|decimal>   value in [0,1]
// '#' starts a comment; blank lines are ignored. Section lines may reference
// only atoms that appear in some context. Throws ParseError with 1-based
// line/column, Error(unknown_atom), Error(dimension_mismatch).
LogicDocument parse_dsl(std::string_view text);

// Canonical text: context lines in context order, then vec lines, then prob
// lines, section atoms in canonical atom order, LF endings. Round trip:
// parse_dsl(serialize_dsl(d)) == d.
std::string serialize_dsl(const LogicDocument& doc);

// JSON mirror of the DSL: {"contexts": [[...]], "vectors": {...},
// "probabilities": {...}} with probabilities as exact-rational strings.
nlohmann::ordered_json document_to_json(const LogicDocument& doc);
LogicDocument document_from_json(const nlohmann::ordered_json& json);
std::string serialize_json(const LogicDocument& doc);
LogicDocument parse_json(std::string_view text);

// Parses a standalone probability file: prob lines, comments and blanks only.
// Atom references are resolved against the given logic.
std::map<std::string, Rational> parse_prob_lines(std::string_view text, const Logic& logic);

// Bipartite DOT export: one node per atom, one per context, an edge per
// membership. Deterministic node and edge order.
std::string export_dot(const Logic& logic);

}  // namespace ctxlab
