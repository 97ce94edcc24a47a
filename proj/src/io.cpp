#include "ctxlab/io.hpp"

#include <nlohmann/json.hpp>

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "ctxlab/error.hpp"

namespace ctxlab {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
  }
  return tokens;
}

bool valid_atom_id(std::string_view id) {
  if (id.empty()) return false;
  unsigned char first = static_cast<unsigned char>(id[0]);
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : id.substr(1)) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_' && u != '-') return false;
  }
  return true;
}

double parse_component(const Token& token, int line) {
  double value = 0.0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw ParseError(line, token.column,
                     "bad vector component '" + std::string(token.text) + "'");
  return value;
}

std::string format_component(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  assert(ec == std::errc());
  return std::string(buf, ptr);
}

struct SectionEntry {
  int line;
  int column;
};

}  // namespace

LogicDocument parse_dsl(std::string_view text) {
  LogicDocument doc;
  std::vector<std::vector<std::string>> contexts;
  std::vector<std::set<std::string>> context_sets;
  std::map<std::string, SectionEntry> vec_positions;
  std::map<std::string, SectionEntry> prob_positions;
  int vec_dim = -1;
  int vec_dim_line = 0;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const Token& directive = tokens[0];
    if (directive.text == "context") {
      if (tokens.size() < 3)
        throw ParseError(line_no, directive.column, "context needs at least two atoms");
      std::vector<std::string> ids;
      std::set<std::string> id_set;
      for (size_t t = 1; t < tokens.size(); ++t) {
        std::string id(tokens[t].text);
        if (!valid_atom_id(id))
          throw ParseError(line_no, tokens[t].column, "bad atom id '" + id + "'");
        if (!id_set.insert(id).second)
          throw ParseError(Errc::duplicate_atom_in_context, line_no, tokens[t].column,
                           "atom '" + id + "' repeated in context");
        ids.push_back(std::move(id));
      }
      for (const auto& seen : context_sets)
        if (seen == id_set)
          throw ParseError(Errc::duplicate_context, line_no, directive.column,
                           "duplicate context");
      contexts.push_back(std::move(ids));
      context_sets.push_back(std::move(id_set));
    } else if (directive.text == "vec") {
      if (tokens.size() < 3)
        throw ParseError(line_no, directive.column, "vec needs an atom id and components");
      std::string id(tokens[1].text);
      if (!valid_atom_id(id))
        throw ParseError(line_no, tokens[1].column, "bad atom id '" + id + "'");
      if (doc.vectors.count(id))
        throw ParseError(line_no, tokens[1].column, "duplicate vec for atom '" + id + "'");
      std::vector<double> components;
      for (size_t t = 2; t < tokens.size(); ++t)
        components.push_back(parse_component(tokens[t], line_no));
      if (vec_dim < 0) {
        vec_dim = static_cast<int>(components.size());
        vec_dim_line = line_no;
      } else if (static_cast<int>(components.size()) != vec_dim) {
        throw ParseError(Errc::dimension_mismatch, line_no, directive.column,
                         "vec has " + std::to_string(components.size()) +
                             " components; line " + std::to_string(vec_dim_line) +
                             " set the dimension to " + std::to_string(vec_dim));
      }
      vec_positions[id] = {line_no, tokens[1].column};
      doc.vectors.emplace(std::move(id), std::move(components));
    } else if (directive.text == "prob") {
      if (tokens.size() != 3)
        throw ParseError(line_no, directive.column, "prob needs an atom id and one value");
      std::string id(tokens[1].text);
      if (!valid_atom_id(id))
        throw ParseError(line_no, tokens[1].column, "bad atom id '" + id + "'");
      if (doc.probabilities.count(id))
        throw ParseError(line_no, tokens[1].column, "duplicate prob for atom '" + id + "'");
      auto value = parse_rational(tokens[2].text);
      if (!value)
        throw ParseError(line_no, tokens[2].column,
                         "bad probability '" + std::string(tokens[2].text) + "'");
      if (*value < 0 || *value > 1)
        throw ParseError(line_no, tokens[2].column, "probability out of [0,1]");
      prob_positions[id] = {line_no, tokens[1].column};
      doc.probabilities.emplace(std::move(id), std::move(*value));
    } else {
      throw ParseError(line_no, directive.column,
                       "unknown directive '" + std::string(directive.text) + "'");
    }
  }

  if (contexts.empty())
    throw Error(Errc::empty_context, "document has no context lines");
  doc.logic = build_logic(contexts);

  for (const auto& [id, entry] : vec_positions)
    if (!doc.logic.has_atom(id))
      throw ParseError(Errc::unknown_atom, entry.line, entry.column,
                       "vec references unknown atom '" + id + "'");
  for (const auto& [id, entry] : prob_positions)
    if (!doc.logic.has_atom(id))
      throw ParseError(Errc::unknown_atom, entry.line, entry.column,
                       "prob references unknown atom '" + id + "'");
  return doc;
}

std::string serialize_dsl(const LogicDocument& doc) {
  std::ostringstream out;
  for (const auto& ctx : doc.logic.context_ids()) {
    out << "context";
    for (const auto& id : ctx) out << ' ' << id;
    out << '\n';
  }
  for (const auto& id : doc.logic.atoms()) {
    auto it = doc.vectors.find(id);
    if (it == doc.vectors.end()) continue;
    out << "vec " << id;
    for (double v : it->second) out << ' ' << format_component(v);
    out << '\n';
  }
  for (const auto& id : doc.logic.atoms()) {
    auto it = doc.probabilities.find(id);
    if (it == doc.probabilities.end()) continue;
    out << "prob " << id << ' ' << format_rational(it->second) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json document_to_json(const LogicDocument& doc) {
  nlohmann::ordered_json json;
  json["contexts"] = doc.logic.context_ids();
  auto& vectors = json["vectors"] = nlohmann::ordered_json::object();
  for (const auto& id : doc.logic.atoms())
    if (auto it = doc.vectors.find(id); it != doc.vectors.end()) vectors[id] = it->second;
  auto& probs = json["probabilities"] = nlohmann::ordered_json::object();
  for (const auto& id : doc.logic.atoms())
    if (auto it = doc.probabilities.find(id); it != doc.probabilities.end())
      probs[id] = format_rational(it->second);
  return json;
}

LogicDocument document_from_json(const nlohmann::ordered_json& json) {
  if (!json.is_object() || !json.contains("contexts") || !json["contexts"].is_array())
    throw Error(Errc::syntax_error, "JSON document needs a 'contexts' array");

  LogicDocument doc;
  std::vector<std::vector<std::string>> contexts;
  for (const auto& ctx : json["contexts"]) {
    if (!ctx.is_array())
      throw Error(Errc::syntax_error, "each context must be an array of atom ids");
    std::vector<std::string> ids;
    for (const auto& id : ctx) {
      if (!id.is_string() || !valid_atom_id(id.get<std::string>()))
        throw Error(Errc::syntax_error, "bad atom id in context");
      ids.push_back(id.get<std::string>());
    }
    contexts.push_back(std::move(ids));
  }
  doc.logic = build_logic(contexts);

  if (json.contains("vectors")) {
    if (!json["vectors"].is_object())
      throw Error(Errc::syntax_error, "'vectors' must map atom ids to number arrays");
    int dim = -1;
    for (const auto& [id, array] : json["vectors"].items()) {
      if (!doc.logic.has_atom(id))
        throw Error(Errc::unknown_atom, "vec references unknown atom '" + id + "'");
      if (!array.is_array())
        throw Error(Errc::syntax_error, "vector for '" + id + "' must be an array");
      std::vector<double> components;
      for (const auto& v : array) {
        if (!v.is_number())
          throw Error(Errc::syntax_error, "vector for '" + id + "' has a non-number");
        components.push_back(v.get<double>());
      }
      if (dim < 0)
        dim = static_cast<int>(components.size());
      else if (static_cast<int>(components.size()) != dim)
        throw Error(Errc::dimension_mismatch, "vector lengths differ");
      doc.vectors.emplace(id, std::move(components));
    }
  }

  if (json.contains("probabilities")) {
    if (!json["probabilities"].is_object())
      throw Error(Errc::syntax_error, "'probabilities' must map atom ids to rationals");
    for (const auto& [id, value] : json["probabilities"].items()) {
      if (!doc.logic.has_atom(id))
        throw Error(Errc::unknown_atom, "prob references unknown atom '" + id + "'");
      Rational r;
      if (value.is_string()) {
        auto parsed = parse_rational(value.get<std::string>());
        if (!parsed)
          throw Error(Errc::syntax_error,
                      "bad probability '" + value.get<std::string>() + "'");
        r = std::move(*parsed);
      } else if (value.is_number_integer()) {
        r = Rational(value.get<long long>());
      } else {
        throw Error(Errc::syntax_error,
                    "probability for '" + id +
                        "' must be a string rational (exactness) or integer");
      }
      if (r < 0 || r > 1)
        throw Error(Errc::syntax_error, "probability out of [0,1]");
      doc.probabilities.emplace(id, std::move(r));
    }
  }
  return doc;
}

std::string serialize_json(const LogicDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

LogicDocument parse_json(std::string_view text) {
  nlohmann::ordered_json json;
  try {
    json = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::syntax_error, e.what());
  }
  return document_from_json(json);
}

std::map<std::string, Rational> parse_prob_lines(std::string_view text, const Logic& logic) {
  std::map<std::string, Rational> probs;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0].text != "prob")
      throw ParseError(line_no, tokens[0].column, "probability files allow only prob lines");
    if (tokens.size() != 3)
      throw ParseError(line_no, tokens[0].column, "prob needs an atom id and one value");
    std::string id(tokens[1].text);
    if (!logic.has_atom(id))
      throw ParseError(Errc::unknown_atom, line_no, tokens[1].column,
                       "prob references unknown atom '" + id + "'");
    if (probs.count(id))
      throw ParseError(line_no, tokens[1].column, "duplicate prob for atom '" + id + "'");
    auto value = parse_rational(tokens[2].text);
    if (!value)
      throw ParseError(line_no, tokens[2].column,
                       "bad probability '" + std::string(tokens[2].text) + "'");
    if (*value < 0 || *value > 1)
      throw ParseError(line_no, tokens[2].column, "probability out of [0,1]");
    probs.emplace(std::move(id), std::move(*value));
  }
  return probs;
}

std::string export_dot(const Logic& logic) {
  std::ostringstream out;
  out << "graph logic {\n";
  for (const auto& id : logic.atoms())
    out << "  \"atom:" << id << "\" [label=\"" << id << "\", shape=circle];\n";
  for (int c = 0; c < logic.context_count(); ++c)
    out << "  \"ctx:" << c + 1 << "\" [label=\"C" << c + 1 << "\", shape=box];\n";
  for (int c = 0; c < logic.context_count(); ++c)
    for (int atom : logic.context(c))
      out << "  \"atom:" << logic.atom_id(atom) << "\" -- \"ctx:" << c + 1 << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ctxlab
