#include "markov/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace markov {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& require_key(const json& obj, const std::string& key,
                        const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path, "missing required key \"" + key + "\"");
  }
  return *it;
}

void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool found = false;
    for (const auto& key : allowed) {
      if (it.key() == key) {
        found = true;
        break;
      }
    }
    if (!found) throw SchemaError(path, "unknown key \"" + it.key() + "\"");
  }
}

std::vector<std::string> parse_labels(const json& value,
                                      const std::string& path) {
  if (!value.is_array()) throw SchemaError(path, "expected an array of strings");
  std::vector<std::string> labels;
  labels.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      throw SchemaError(path + "[" + std::to_string(i) + "]",
                        "expected a string");
    }
    labels.push_back(value[i].get<std::string>());
  }
  return labels;
}

std::vector<double> parse_numbers(const json& value, const std::string& path) {
  if (!value.is_array()) throw SchemaError(path, "expected an array of numbers");
  std::vector<double> numbers;
  numbers.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      throw SchemaError(path + "[" + std::to_string(i) + "]",
                        "expected a number");
    }
    numbers.push_back(value[i].get<double>());
  }
  return numbers;
}

std::vector<std::vector<double>> parse_matrix(const json& value,
                                              const std::string& path) {
  if (!value.is_array()) throw SchemaError(path, "expected an array of rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    rows.push_back(parse_numbers(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return rows;
}

// Wraps validation failures with the document location they came from.
template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const RowSumNotOne& e) {
    throw SchemaError(path + "[" + std::to_string(e.row) + "]", e.what());
  } catch (const NegativeEntry& e) {
    std::string where = path + "[" + std::to_string(e.row) + "]";
    if (e.col >= 0) where += "[" + std::to_string(e.col) + "]";
    throw SchemaError(where, e.what());
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

LabelSpace parse_space(const json& obj, const std::string& key,
                       const std::string& path) {
  auto labels = parse_labels(require_key(obj, key, path), path + "." + key);
  return at_path(path + "." + key,
                 [&] { return LabelSpace(std::move(labels)); });
}

MarkovChainModel parse_chain_fields(const json& obj, const std::string& path) {
  LabelSpace states = parse_space(obj, "states", path);
  auto initial_entries =
      parse_numbers(require_key(obj, "initial", path), path + ".initial");
  ProbVector initial = at_path(path + ".initial", [&] {
    return ProbVector(states, std::move(initial_entries));
  });
  auto transition_entries =
      parse_matrix(require_key(obj, "transition", path), path + ".transition");
  StochasticMatrix transition = at_path(path + ".transition", [&] {
    return StochasticMatrix(states, states, std::move(transition_entries));
  });
  return MarkovChainModel(std::move(states), std::move(transition),
                          std::move(initial));
}

StochasticMatrix parse_emission(const json& obj, const LabelSpace& states,
                                const LabelSpace& observations,
                                const std::string& path) {
  auto entries =
      parse_matrix(require_key(obj, "emission", path), path + ".emission");
  return at_path(path + ".emission", [&] {
    return StochasticMatrix(states, observations, std::move(entries));
  });
}

void append_chain_fields(ordered_json& j, const MarkovChainModel& model) {
  j["states"] = model.states().labels();
  j["initial"] = model.initial().entries();
  j["transition"] = model.transition().entries();
}

}  // namespace

Model parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string reason = e.what();
    // Strip nlohmann's "[json.exception...] " prefix, keep the diagnosis.
    if (auto pos = reason.find("] "); pos != std::string::npos) {
      reason = reason.substr(pos + 2);
    }
    throw ParseError(line, column, reason);
  }

  if (!doc.is_object()) throw SchemaError("$", "expected a JSON object");
  const json& kind_value = require_key(doc, "kind", "$");
  if (!kind_value.is_string()) throw SchemaError("$.kind", "expected a string");
  const std::string kind = kind_value.get<std::string>();

  if (kind == "markov") {
    check_keys(doc, {"kind", "name", "description", "states", "initial",
                     "transition"},
               "$");
    return parse_chain_fields(doc, "$");
  }
  if (kind == "hmm") {
    check_keys(doc, {"kind", "name", "description", "states", "initial",
                     "transition", "observations", "emission"},
               "$");
    MarkovChainModel chain = parse_chain_fields(doc, "$");
    LabelSpace observations = parse_space(doc, "observations", "$");
    StochasticMatrix emission =
        parse_emission(doc, chain.states(), observations, "$");
    return HmmModel(std::move(chain), std::move(observations),
                    std::move(emission));
  }
  if (kind == "fhmm") {
    check_keys(doc, {"kind", "name", "description", "observations",
                     "components"},
               "$");
    LabelSpace observations = parse_space(doc, "observations", "$");
    const json& comps = require_key(doc, "components", "$");
    if (!comps.is_array() || comps.empty()) {
      throw SchemaError("$.components", "expected a non-empty array");
    }
    std::vector<MarkovChainModel> components;
    std::vector<StochasticMatrix> emissions;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string path = "$.components[" + std::to_string(i) + "]";
      if (!comps[i].is_object()) throw SchemaError(path, "expected an object");
      check_keys(comps[i], {"states", "initial", "transition", "emission"},
                 path);
      MarkovChainModel chain = parse_chain_fields(comps[i], path);
      emissions.push_back(
          parse_emission(comps[i], chain.states(), observations, path));
      components.push_back(std::move(chain));
    }
    return at_path("$", [&] {
      return FactorialHmmModel(std::move(components), std::move(observations),
                               std::move(emissions));
    });
  }
  throw SchemaError("$.kind",
                    "expected \"markov\", \"hmm\" or \"fhmm\", got \"" + kind +
                        "\"");
}

std::string serialize_model(const Model& model) {
  ordered_json j;
  if (const auto* chain = std::get_if<MarkovChainModel>(&model)) {
    j["kind"] = "markov";
    append_chain_fields(j, *chain);
  } else if (const auto* hmm = std::get_if<HmmModel>(&model)) {
    j["kind"] = "hmm";
    append_chain_fields(j, hmm->chain());
    j["observations"] = hmm->observations().labels();
    j["emission"] = hmm->emission().entries();
  } else {
    const auto& fhmm = std::get<FactorialHmmModel>(model);
    j["kind"] = "fhmm";
    j["observations"] = fhmm.observations().labels();
    j["components"] = ordered_json::array();
    for (int i = 0; i < fhmm.component_count(); ++i) {
      ordered_json comp;
      append_chain_fields(comp, fhmm.components()[i]);
      comp["emission"] = fhmm.emissions()[i].entries();
      j["components"].push_back(std::move(comp));
    }
  }
  return j.dump(2) + "\n";
}

namespace {

std::string dot_header(const std::string& graph_name) {
  return "digraph " + graph_name + " {\n  rankdir=LR;\n";
}

void append_state_nodes(std::string& out, int horizon_t) {
  for (int t = 1; t <= horizon_t; ++t) {
    out += "  q_" + std::to_string(t) + " [shape=circle];\n";
  }
}

void append_state_edges(std::string& out, int horizon_t) {
  for (int t = 1; t < horizon_t; ++t) {
    out += "  q_" + std::to_string(t) + " -> q_" + std::to_string(t + 1) +
           ";\n";
  }
}

}  // namespace

std::string export_dot(const MarkovChainModel& model, int horizon_t) {
  (void)model;
  if (horizon_t < 1) throw Error("horizon must be at least 1");
  std::string out = dot_header("markov_chain");
  append_state_nodes(out, horizon_t);
  append_state_edges(out, horizon_t);
  out += "}\n";
  return out;
}

std::string export_dot(const HmmModel& model, int horizon_t) {
  (void)model;
  if (horizon_t < 1) throw Error("horizon must be at least 1");
  std::string out = dot_header("hmm");
  append_state_nodes(out, horizon_t);
  for (int t = 1; t <= horizon_t; ++t) {
    out += "  x_" + std::to_string(t) + " [shape=box];\n";
  }
  append_state_edges(out, horizon_t);
  for (int t = 1; t <= horizon_t; ++t) {
    out += "  q_" + std::to_string(t) + " -> x_" + std::to_string(t) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string dump_trellis(const ViterbiTrellis& trellis) {
  const LabelSpace& states = trellis.best_path.space();
  std::string out;
  for (std::size_t t = 0; t < trellis.delta.size(); ++t) {
    out += std::to_string(t + 1) + " |";
    for (double v : trellis.delta[t]) out += " " + format_entry(v);
    out += " |";
    for (int p : trellis.psi[t]) {
      out += " ";
      out += (p == kNoPredecessor) ? "-" : states.label(p);
    }
    out += "\n";
  }
  return out;
}

std::string format_probability(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", value);
  std::string s = buf;
  const auto e = s.find('e');
  const std::string mantissa = s.substr(0, e);
  const int exponent = std::atoi(s.c_str() + e + 1);
  return mantissa + "e" + std::to_string(exponent);
}

std::string format_entry(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  if (value != 0.0 && std::fabs(value) < 1e-4) {
    return format_probability(value);
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

}  // namespace markov
