#pragma once

#include <utility>

#include "markov/model.hpp"

namespace markov {

// Probability of one fixed state path: the initial weight of its first state
// times the transition weight of every step.
struct ChainWeight {
  double value = 0.0;
};

// Pushes the initial distribution forward `steps` transitions. `steps` is the
// number of applications of the transition matrix, so the distribution on day
// t is evolve(model, t - 1).
ProbVector evolve(const MarkovChainModel& model, int steps);

// pi[q_1] * a[q_1,q_2] * ... * a[q_{T-1},q_T]; for a single-state sequence
// just pi[q_1].
ChainWeight chain_weight(const MarkovChainModel& model,
                         const StateSequence& q);

// Splits the chain weight at 1-based position split_t (exclusive ends):
// returns (weight of q[1..split_t], product of the remaining transitions).
// The two factors multiply back to chain_weight(model, q).
std::pair<double, double> chain_weight_compose(const MarkovChainModel& model,
                                               const StateSequence& q,
                                               int split_t);

// Distribution of the state at day `horizon_t`, computed the slow way: sum of
// chain weights over every path of length horizon_t, bucketed by final state.
// Agrees with evolve(model, horizon_t - 1); kept as the enumeration cross
// check. Refuses when N^(horizon_t-1) exceeds kEnumerationCap.
ProbVector evolve_enumerated(const MarkovChainModel& model, int horizon_t);

}  // namespace markov
