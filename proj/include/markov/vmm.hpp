#pragma once

#include "markov/evolution.hpp"
#include "markov/model.hpp"

namespace markov {

// Joint probability of a fully observed state sequence. Same number as
// chain_weight; any valid initial distribution is accepted, a point mass is
// just the special case.
double chain_probability(const MarkovChainModel& model,
                         const StateSequence& q);

// Probability of `future` given the chain currently sits in `given_state`:
// the product of transition factors only, no initial weight.
double conditional_chain_probability(const MarkovChainModel& model,
                                     int given_state,
                                     const StateSequence& future);

}  // namespace markov
