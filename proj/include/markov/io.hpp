#pragma once

#include <string>
#include <variant>

#include "markov/fhmm.hpp"
#include "markov/model.hpp"
#include "markov/viterbi.hpp"

namespace markov {

using Model = std::variant<MarkovChainModel, HmmModel, FactorialHmmModel>;

// Parses a strict-schema JSON model document ("kind": markov | hmm | fhmm).
// Unknown keys are errors; every validation failure carries the JSON path of
// the offending value.
Model parse_model(const std::string& text);

// Canonical serialization: stable key order, shortest round-trip decimals.
// parse -> serialize -> parse is the identity on the validated model.
std::string serialize_model(const Model& model);

// Unrolled chain as a DOT digraph: nodes q_1..q_T, edges q_t -> q_{t+1}.
std::string export_dot(const MarkovChainModel& model, int horizon_t);

// Unrolled HMM: additionally x_1..x_T with edges q_t -> x_t.
std::string export_dot(const HmmModel& model, int horizon_t);

// One line per time step: `t | delta per state | psi per state` with labels
// for backpointers and "-" for the t=1 sentinel.
std::string dump_trellis(const ViterbiTrellis& trellis);

// Scalar probabilities print in scientific notation with nine digits after
// the point and an unpadded exponent, e.g. 4.500000000e-2.
std::string format_probability(double value);

// Distribution and trellis entries print fixed with nine digits after the
// point, switching to scientific below 1e-4 in magnitude.
std::string format_entry(double value);

}  // namespace markov
