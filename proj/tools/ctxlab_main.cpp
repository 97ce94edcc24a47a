// ctxlab: analysis of context pastings (orthogonality hypergraphs) —
// two-valued states, contextuality classification, partition logics,
// classical hulls and Born-rule probabilities.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "ctxlab/error.hpp"
#include "ctxlab/forep.hpp"
#include "ctxlab/io.hpp"
#include "ctxlab/logic.hpp"
#include "ctxlab/probability.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/states.hpp"

using json = nlohmann::ordered_json;
using namespace ctxlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Inputs are file paths ('-' for stdin) or catalog names; an existing file
// wins over a name clash.
LogicDocument load_document(const std::string& path) {
  std::string text;
  try {
    text = read_input(path);
  } catch (const Error& io_error) {
    try {
      LogicDocument doc;
      doc.logic = catalog(path);
      return doc;
    } catch (const Error&) {
      throw io_error;
    }
  }
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_dsl(text);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  return parts;
}

RationalVector parse_rational_csv(const std::string& text) {
  RationalVector values;
  for (const auto& part : split_csv(text)) {
    auto value = parse_rational(part);
    if (!value) throw Error(Errc::invalid_weights, "bad rational '" + part + "'");
    values.push_back(std::move(*value));
  }
  return values;
}

Eigen::VectorXd parse_double_csv(const std::string& text) {
  auto parts = split_csv(text);
  Eigen::VectorXd values(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    try {
      size_t pos = 0;
      values(i) = std::stod(parts[i], &pos);
      if (pos != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw Error(Errc::syntax_error, "bad number '" + parts[i] + "'");
    }
  }
  return values;
}

json logic_summary(const Logic& logic) {
  json summary;
  summary["atoms"] = logic.atom_count();
  summary["contexts"] = logic.context_count();
  summary["warnings"] = logic.warnings();
  return summary;
}

json envelope(const std::string& command, const std::string& input, const Logic& logic) {
  json report;
  report["command"] = command;
  report["input"] = input;
  report["logic"] = logic_summary(logic);
  return report;
}

void emit_json(const json& report) { std::cout << report.dump(2) << "\n"; }

void print_warnings(const Logic& logic) {
  for (const auto& warning : logic.warnings())
    std::cerr << "warning: " << warning << "\n";
}

json state_table(const Logic& logic, const StateSet& states) {
  json rows = json::array();
  for (int s = 0; s < states.size(); ++s) {
    json row = json::array();
    for (int a = 0; a < logic.atom_count(); ++a) row.push_back(states.value(s, a));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Shared options for the subcommands.
struct Options {
  std::string input;
  bool json_output = false;
  double tol = 1e-9;
  std::optional<double> phi;
  bool cyclic_rep = false;
  std::string psi;
  std::string premises;
  std::string conclusion;
  std::string prob_path;
  std::string lambda;
  std::string coeffs;
  std::string targets;
  std::string output_path;
  std::string catalog_name;
  bool list = false;
  bool emit = false;
};

OrthoRep representation_for(const Options& opt, const LogicDocument& doc) {
  if (opt.phi) {
    if (!(doc.logic == catalog("two-intertwined")))
      throw Error(Errc::bad_params,
                  "--phi builds the two-context representation; the input must be "
                  "the two-intertwined pasting with atoms a..e");
    if (!two_context_phi_in_range(*opt.phi))
      std::cerr << "warning: phi outside (0, pi/2); representation is not faithful\n";
    return two_context_rep(*opt.phi);
  }
  if (opt.cyclic_rep) return cyclic_triad_rep(doc.logic);
  if (doc.vectors.empty())
    throw Error(Errc::missing_vector,
                "input has no vec section; pass --phi or --cyclic-rep or add vectors");
  return make_ortho_rep(doc.logic, doc.vectors);
}

int cmd_states(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  StateSet states = enumerate_states(doc.logic);

  if (opt.json_output) {
    json report = envelope("states", opt.input, doc.logic);
    report["result"]["count"] = states.size();
    report["result"]["atom_order"] = doc.logic.atoms();
    report["result"]["states"] = state_table(doc.logic, states);
    emit_json(report);
    return kExitOk;
  }

  print_warnings(doc.logic);
  std::cout << states.size() << " state" << (states.size() == 1 ? "" : "s") << "\n";
  if (!states.empty()) {
    std::cout << "atoms:";
    for (const auto& id : doc.logic.atoms()) std::cout << ' ' << id;
    std::cout << "\n";
    for (int s = 0; s < states.size(); ++s) {
      std::cout << "#" << s + 1 << " ";
      for (int a = 0; a < doc.logic.atom_count(); ++a)
        std::cout << ' ' << int(states.value(s, a));
      std::cout << "  {";
      bool first = true;
      for (int a = 0; a < doc.logic.atom_count(); ++a) {
        if (!states.value(s, a)) continue;
        if (!first) std::cout << ',';
        std::cout << doc.logic.atom_id(a);
        first = false;
      }
      std::cout << "}\n";
    }
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  StateSet states = enumerate_states(doc.logic);
  Classification cls = classify(doc.logic, states);

  json nonunital = json::array();
  for (int atom : cls.nonunital_atoms) nonunital.push_back(doc.logic.atom_id(atom));
  json pairs = json::array();
  for (const auto& [a, b] : cls.inseparable_pairs)
    pairs.push_back({doc.logic.atom_id(a), doc.logic.atom_id(b)});

  if (opt.json_output) {
    json report = envelope("classify", opt.input, doc.logic);
    report["result"]["level"] = std::string(level_name(cls.level));
    report["result"]["state_count"] = states.size();
    report["result"]["nonempty"] = cls.nonempty;
    report["result"]["unital"] = cls.unital;
    report["result"]["separating"] = cls.separating;
    report["result"]["nonunital_atoms"] = nonunital;
    report["result"]["inseparable_pairs"] = pairs;
    emit_json(report);
    return kExitOk;
  }

  print_warnings(doc.logic);
  std::cout << "level: " << level_name(cls.level) << "\n"
            << "states: " << states.size() << "\n"
            << "unital: " << (cls.unital ? "yes" : "no") << "\n"
            << "separating: " << (cls.separating ? "yes" : "no") << "\n";
  if (!cls.nonunital_atoms.empty()) {
    std::cout << "non-unital atoms:";
    for (int atom : cls.nonunital_atoms) std::cout << ' ' << doc.logic.atom_id(atom);
    std::cout << "\n";
  }
  if (!cls.inseparable_pairs.empty()) {
    std::cout << "inseparable pairs:";
    for (const auto& [a, b] : cls.inseparable_pairs)
      std::cout << " (" << doc.logic.atom_id(a) << "," << doc.logic.atom_id(b) << ")";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_partition(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  StateSet states = enumerate_states(doc.logic);
  PartitionLogic partition = partition_logic(doc.logic, states);

  if (opt.json_output) {
    json report = envelope("partition", opt.input, doc.logic);
    report["result"]["state_count"] = states.size();
    json blocks = json::object();
    for (int a = 0; a < doc.logic.atom_count(); ++a)
      blocks[doc.logic.atom_id(a)] = partition.atom_blocks[a];
    report["result"]["atom_blocks"] = blocks;
    report["result"]["context_partitions"] = partition.context_partitions;
    emit_json(report);
    return kExitOk;
  }

  print_warnings(doc.logic);
  std::cout << states.size() << " states\n";
  for (int a = 0; a < doc.logic.atom_count(); ++a) {
    std::cout << doc.logic.atom_id(a) << " -> {";
    const auto& block = partition.atom_blocks[a];
    for (size_t i = 0; i < block.size(); ++i)
      std::cout << (i ? "," : "") << block[i];
    std::cout << "}\n";
  }
  for (int c = 0; c < doc.logic.context_count(); ++c) {
    std::cout << "C" << c + 1 << ":";
    for (const auto& block : partition.context_partitions[c]) {
      std::cout << " {";
      for (size_t i = 0; i < block.size(); ++i)
        std::cout << (i ? "," : "") << block[i];
      std::cout << "}";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

json rational_map(const Logic& logic, const RationalVector& values) {
  json out = json::object();
  for (int a = 0; a < logic.atom_count(); ++a)
    out[logic.atom_id(a)] = format_rational(values[a]);
  return out;
}

int cmd_probs(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  const Logic& logic = doc.logic;
  json report = envelope("probs", opt.input, logic);
  print_warnings(logic);

  if (!opt.lambda.empty()) {
    StateSet states = enumerate_states(logic);
    RationalVector lambda = parse_rational_csv(opt.lambda);
    RationalVector p = classical_mixture(states, lambda);
    auto support = possibilistic_support(p);

    if (opt.json_output) {
      report["result"]["mode"] = "mixture";
      report["result"]["state_count"] = states.size();
      report["result"]["p"] = rational_map(logic, p);
      json sup = json::object();
      for (int a = 0; a < logic.atom_count(); ++a) sup[logic.atom_id(a)] = support[a];
      report["result"]["support"] = sup;
      emit_json(report);
      return kExitOk;
    }
    for (int a = 0; a < logic.atom_count(); ++a)
      std::cout << "p(" << logic.atom_id(a) << ") = " << format_rational(p[a]) << "\n";
    return kExitOk;
  }

  if (!opt.coeffs.empty()) {
    StateSet states = enumerate_states(logic);
    std::map<std::string, Rational> named;
    for (const auto& part : split_csv(opt.coeffs)) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw Error(Errc::syntax_error, "coefficients use id=value, got '" + part + "'");
      auto value = parse_rational(part.substr(eq + 1));
      if (!value) throw Error(Errc::syntax_error, "bad rational in '" + part + "'");
      named[part.substr(0, eq)] = std::move(*value);
    }
    RationalVector coeffs(logic.atom_count(), Rational(0));
    for (const auto& [id, value] : named) coeffs[logic.atom_index(id)] = value;
    Rational best = linear_functional_max_classical(states, coeffs);

    if (opt.json_output) {
      report["result"]["mode"] = "classical-max";
      report["result"]["value"] = format_rational(best);
      emit_json(report);
      return kExitOk;
    }
    std::cout << "classical maximum: " << format_rational(best) << "\n";
    return kExitOk;
  }

  if (doc.probabilities.empty())
    throw Error(Errc::missing_atom,
                "input has no prob section; pass --lambda or --coeffs or add one");
  RationalVector p = dense_assignment(logic, doc.probabilities);
  GeneralizedStateReport validation = validate_generalized_state(logic, p);
  auto support = possibilistic_support(p);

  if (opt.json_output) {
    report["result"]["mode"] = "validate";
    report["result"]["valid_generalized_state"] = validation.valid;
    json sums = json::array();
    for (const auto& sum : validation.context_sums) sums.push_back(format_rational(sum));
    report["result"]["context_sums"] = sums;
    report["result"]["bad_contexts"] = validation.bad_contexts;
    json out_of_range = json::array();
    for (int atom : validation.out_of_range_atoms) out_of_range.push_back(logic.atom_id(atom));
    report["result"]["out_of_range_atoms"] = out_of_range;
    json sup = json::object();
    for (int a = 0; a < logic.atom_count(); ++a) sup[logic.atom_id(a)] = support[a];
    report["result"]["support"] = sup;
    emit_json(report);
    return kExitOk;
  }

  std::cout << "generalized state: " << (validation.valid ? "valid" : "invalid") << "\n";
  for (int c = 0; c < logic.context_count(); ++c)
    std::cout << "C" << c + 1 << " sum = " << format_rational(validation.context_sums[c])
              << "\n";
  std::cout << "support:";
  for (int a = 0; a < logic.atom_count(); ++a)
    if (support[a]) std::cout << ' ' << logic.atom_id(a);
  std::cout << "\n";
  return kExitOk;
}

int cmd_hull(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  const Logic& logic = doc.logic;

  std::map<std::string, Rational> named;
  if (!opt.prob_path.empty())
    named = parse_prob_lines(read_input(opt.prob_path), logic);
  else if (!doc.probabilities.empty())
    named = doc.probabilities;
  else
    throw Error(Errc::missing_atom, "no probabilities: add a prob section or pass --prob");

  RationalVector p = dense_assignment(logic, named);
  StateSet states = enumerate_states(logic);
  HullResult result = in_classical_hull(states, p);

  if (opt.json_output) {
    json report = envelope("hull", opt.input, logic);
    report["result"]["inside"] = result.inside;
    if (result.inside) {
      json weights = json::array();
      for (const auto& w : result.weights) weights.push_back(format_rational(w));
      report["result"]["weights"] = weights;
    } else {
      report["result"]["weights"] = nullptr;
    }
    emit_json(report);
    return kExitOk;
  }

  print_warnings(logic);
  if (result.inside) {
    std::cout << "inside classical hull\n";
    for (int s = 0; s < states.size(); ++s)
      if (result.weights[s] != 0)
        std::cout << "lambda_" << s + 1 << " = " << format_rational(result.weights[s])
                  << "\n";
  } else {
    std::cout << "outside classical hull\n";
  }
  return kExitOk;
}

int cmd_gadget(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  if (opt.conclusion.empty())
    throw Error(Errc::missing_atom, "--conclusion is required");
  std::vector<std::string> premises = split_csv(opt.premises);
  StateSet states = enumerate_states(doc.logic);
  ImplicationResult implication =
      check_implication(doc.logic, states, premises, opt.conclusion);

  std::optional<GadgetRelation> relation;
  if (premises.size() == 1)
    relation = gadget_relation(doc.logic, states, premises[0], opt.conclusion);

  if (opt.json_output) {
    json report = envelope("gadget", opt.input, doc.logic);
    report["result"]["premises"] = premises;
    report["result"]["conclusion"] = opt.conclusion;
    report["result"]["holds"] = implication.holds;
    report["result"]["vacuous"] = implication.vacuous;
    report["result"]["witness"] =
        implication.witness ? json(*implication.witness) : json(nullptr);
    report["result"]["counterexample"] =
        implication.counterexample ? json(*implication.counterexample) : json(nullptr);
    report["result"]["relation"] =
        relation ? json(std::string(gadget_kind_name(relation->kind))) : json(nullptr);
    emit_json(report);
    return kExitOk;
  }

  print_warnings(doc.logic);
  if (implication.vacuous)
    std::cout << "implication holds vacuously (no state satisfies the premises)\n";
  else if (implication.holds)
    std::cout << "implication holds\n";
  else
    std::cout << "implication does not hold (counterexample: state "
              << *implication.counterexample << ")\n";
  if (relation)
    std::cout << "gadget relation: " << gadget_kind_name(relation->kind) << "\n";
  return kExitOk;
}

json pair_list(const Logic& logic, const std::vector<PairCheck>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) {
    json item;
    item["a"] = logic.atom_id(p.atom_a);
    item["b"] = logic.atom_id(p.atom_b);
    item["inner"] = p.inner;
    out.push_back(std::move(item));
  }
  return out;
}

int cmd_forep(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  OrthoRep rep = representation_for(opt, doc);
  OrthogonalityReport ortho = validate_orthogonality(doc.logic, rep, opt.tol);
  std::optional<FaithfulnessReport> faithful;
  if (ortho.valid()) faithful = validate_faithfulness(doc.logic, rep, opt.tol);

  if (opt.json_output) {
    json report = envelope("forep", opt.input, doc.logic);
    report["result"]["dim"] = rep.dim;
    report["result"]["orthogonality"]["valid"] = ortho.valid();
    report["result"]["orthogonality"]["nonorthogonal_pairs"] =
        pair_list(doc.logic, ortho.nonorthogonal_pairs);
    json nonunit = json::array();
    for (const auto& [atom, norm] : ortho.nonunit_atoms) {
      json item;
      item["atom"] = doc.logic.atom_id(atom);
      item["norm"] = norm;
      nonunit.push_back(std::move(item));
    }
    report["result"]["orthogonality"]["nonunit_atoms"] = nonunit;
    if (faithful) {
      report["result"]["faithfulness"]["faithful"] = faithful->faithful();
      report["result"]["faithfulness"]["orthogonal_apart"] =
          pair_list(doc.logic, faithful->orthogonal_apart);
      report["result"]["faithfulness"]["collinear_pairs"] =
          pair_list(doc.logic, faithful->collinear_pairs);
    } else {
      report["result"]["faithfulness"] = nullptr;
    }
    emit_json(report);
    return kExitOk;
  }

  print_warnings(doc.logic);
  std::cout << "orthogonality: " << (ortho.valid() ? "valid" : "invalid") << "\n";
  for (const auto& p : ortho.nonorthogonal_pairs)
    std::cout << "  <" << doc.logic.atom_id(p.atom_a) << "," << doc.logic.atom_id(p.atom_b)
              << "> = " << p.inner << "\n";
  for (const auto& [atom, norm] : ortho.nonunit_atoms)
    std::cout << "  |" << doc.logic.atom_id(atom) << "| = " << norm << "\n";
  if (faithful) {
    std::cout << "faithfulness: " << (faithful->faithful() ? "faithful" : "unfaithful")
              << "\n";
    for (const auto& p : faithful->orthogonal_apart)
      std::cout << "  orthogonal without shared context: " << doc.logic.atom_id(p.atom_a)
                << "," << doc.logic.atom_id(p.atom_b) << "\n";
    for (const auto& p : faithful->collinear_pairs)
      std::cout << "  collinear: " << doc.logic.atom_id(p.atom_a) << ","
                << doc.logic.atom_id(p.atom_b) << "\n";
  }
  return kExitOk;
}

int cmd_born(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  if (opt.psi.empty()) throw Error(Errc::missing_vector, "--psi is required");
  OrthoRep rep = representation_for(opt, doc);
  Eigen::VectorXd psi = parse_double_csv(opt.psi);
  BornResult result = born_probabilities(doc.logic, rep, psi, opt.tol);

  if (opt.json_output) {
    json report = envelope("born", opt.input, doc.logic);
    json q = json::object();
    for (int a = 0; a < doc.logic.atom_count(); ++a)
      q[doc.logic.atom_id(a)] = result.q(a);
    report["result"]["q"] = q;
    json sums = json::array();
    for (int c = 0; c < doc.logic.context_count(); ++c)
      sums.push_back(result.context_sums(c));
    report["result"]["context_sums"] = sums;
    emit_json(report);
    return kExitOk;
  }

  print_warnings(doc.logic);
  for (int a = 0; a < doc.logic.atom_count(); ++a)
    std::cout << "q(" << doc.logic.atom_id(a) << ") = " << result.q(a) << "\n";
  for (int c = 0; c < doc.logic.context_count(); ++c)
    std::cout << "C" << c + 1 << " sum = " << result.context_sums(c) << "\n";
  return kExitOk;
}

int cmd_maxq(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  if (opt.targets.empty()) throw Error(Errc::empty_targets, "--targets is required");
  OrthoRep rep = representation_for(opt, doc);
  std::vector<int> targets;
  for (const auto& id : split_csv(opt.targets))
    targets.push_back(doc.logic.atom_index(id));
  MaxQuantum result = max_quantum_value(rep, targets, opt.tol);

  if (opt.json_output) {
    json report = envelope("maxq", opt.input, doc.logic);
    report["result"]["targets"] = split_csv(opt.targets);
    report["result"]["value"] = result.value;
    json argmax = json::array();
    for (int i = 0; i < result.argmax.size(); ++i) argmax.push_back(result.argmax(i));
    report["result"]["argmax"] = argmax;
    report["result"]["iterations"] = result.iterations;
    emit_json(report);
    return kExitOk;
  }

  print_warnings(doc.logic);
  std::cout << "max quantum value: " << result.value << "\n";
  std::cout << "argmax:";
  for (int i = 0; i < result.argmax.size(); ++i) std::cout << ' ' << result.argmax(i);
  std::cout << "\n";
  return kExitOk;
}

int cmd_export_dot(const Options& opt) {
  LogicDocument doc = load_document(opt.input);
  std::string dot = export_dot(doc.logic);

  if (opt.json_output) {
    json report = envelope("export-dot", opt.input, doc.logic);
    report["result"]["dot"] = dot;
    emit_json(report);
    return kExitOk;
  }

  if (!opt.output_path.empty()) {
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot write '" + opt.output_path + "'");
    out << dot;
  } else {
    std::cout << dot;
  }
  return kExitOk;
}

int cmd_catalog(const Options& opt) {
  if (opt.list) {
    if (opt.json_output) {
      json report;
      report["command"] = "catalog";
      report["result"]["names"] = catalog_names();
      emit_json(report);
    } else {
      for (const auto& name : catalog_names()) std::cout << name << "\n";
    }
    return kExitOk;
  }

  if (opt.catalog_name.empty())
    throw Error(Errc::unknown_catalog_name, "catalog needs a name or --list");
  Logic logic = catalog(opt.catalog_name);
  LogicDocument doc;
  doc.logic = logic;

  if (opt.json_output) {
    json report = envelope("catalog", opt.catalog_name, logic);
    if (opt.emit) report["result"]["dsl"] = serialize_dsl(doc);
    report["result"]["contexts"] = logic.context_ids();
    emit_json(report);
    return kExitOk;
  }

  if (opt.emit) {
    std::cout << serialize_dsl(doc);
    return kExitOk;
  }

  print_warnings(logic);
  std::cout << opt.catalog_name << ": " << logic.atom_count() << " atoms, "
            << logic.context_count() << " contexts\n";
  for (const auto& ctx : logic.context_ids()) {
    std::cout << "context";
    for (const auto& id : ctx) std::cout << ' ' << id;
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();

  CLI::App app{"context pasting analysis: two-valued states, contextuality "
               "classification, partition logics, classical hulls, Born probabilities"};
  app.require_subcommand(1);

  Options opt;
  std::function<int(const Options&)> action;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input,
                    "input .ctx/.json file, '-' for stdin, or a catalog name")
        ->required();
    sub->add_flag("--json", opt.json_output, "machine-readable output");
  };
  auto add_rep_flags = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "numeric tolerance (default 1e-9)");
    auto* phi = sub->add_option("--phi", opt.phi,
                                "build the two-context representation with this angle");
    sub->add_flag("--cyclic-rep", opt.cyclic_rep,
                  "build the cyclic representation for odd cycles of triads")
        ->excludes(phi);
  };

  auto* states_cmd = app.add_subcommand("states", "enumerate two-valued states");
  add_input(states_cmd);
  states_cmd->callback([&] { action = cmd_states; });

  auto* classify_cmd = app.add_subcommand("classify", "place the logic on the ladder");
  add_input(classify_cmd);
  classify_cmd->callback([&] { action = cmd_classify; });

  auto* partition_cmd = app.add_subcommand("partition", "derive the partition logic");
  add_input(partition_cmd);
  partition_cmd->callback([&] { action = cmd_partition; });

  auto* probs_cmd =
      app.add_subcommand("probs", "mixtures, generalized states, classical maxima");
  add_input(probs_cmd);
  auto* lambda_opt = probs_cmd->add_option("--lambda", opt.lambda,
                                           "mixing weights, e.g. 1/5,1/5,1/5,1/5,1/5");
  probs_cmd->add_option("--coeffs", opt.coeffs, "linear functional, e.g. a1=1,a2=1")
      ->excludes(lambda_opt);
  probs_cmd->callback([&] { action = cmd_probs; });

  auto* hull_cmd = app.add_subcommand("hull", "exact classical-hull membership");
  add_input(hull_cmd);
  hull_cmd->add_option("--prob", opt.prob_path, "probability file (prob lines)");
  hull_cmd->callback([&] { action = cmd_hull; });

  auto* gadget_cmd = app.add_subcommand("gadget", "implication and gadget analysis");
  add_input(gadget_cmd);
  gadget_cmd->add_option("--premises", opt.premises, "comma-separated premise atoms");
  gadget_cmd->add_option("--conclusion", opt.conclusion, "conclusion atom")->required();
  gadget_cmd->callback([&] { action = cmd_gadget; });

  auto* forep_cmd =
      app.add_subcommand("forep", "validate orthogonality and faithfulness");
  add_input(forep_cmd);
  add_rep_flags(forep_cmd);
  forep_cmd->callback([&] { action = cmd_forep; });

  auto* born_cmd = app.add_subcommand("born", "Born-rule probabilities for a state vector");
  add_input(born_cmd);
  add_rep_flags(born_cmd);
  born_cmd->add_option("--psi", opt.psi, "state vector components, e.g. 0,0,1");
  born_cmd->callback([&] { action = cmd_born; });

  auto* maxq_cmd = app.add_subcommand("maxq", "maximum quantum value over target atoms");
  add_input(maxq_cmd);
  add_rep_flags(maxq_cmd);
  maxq_cmd->add_option("--targets", opt.targets, "comma-separated target atoms");
  maxq_cmd->callback([&] { action = cmd_maxq; });

  auto* dot_cmd = app.add_subcommand("export-dot", "bipartite DOT diagram");
  add_input(dot_cmd);
  dot_cmd->add_option("-o,--output", opt.output_path, "write DOT here instead of stdout");
  dot_cmd->callback([&] { action = cmd_export_dot; });

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in example logics");
  catalog_cmd->add_option("name", opt.catalog_name, "catalog name, e.g. pentagon");
  catalog_cmd->add_flag("--list", opt.list, "list available names");
  catalog_cmd->add_flag("--emit", opt.emit, "print canonical DSL");
  catalog_cmd->add_flag("--json", opt.json_output, "machine-readable output");
  catalog_cmd->callback([&] { action = cmd_catalog; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  int code = kExitOk;
  try {
    code = action(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    code = kExitInternal;
  }

  auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "# elapsed: " << elapsed.count() << " ms\n";
  return code;
}
