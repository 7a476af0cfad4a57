#include "markov/vmm.hpp"

namespace markov {

double chain_probability(const MarkovChainModel& model,
                         const StateSequence& q) {
  return chain_weight(model, q).value;
}

double conditional_chain_probability(const MarkovChainModel& model,
                                     int given_state,
                                     const StateSequence& future) {
  if (given_state < 0 || given_state >= model.states().size()) {
    throw IndexOutOfRange(given_state, model.states().size());
  }
  if (future.space() != model.states()) {
    throw ShapeMismatch("sequence space does not match the model states");
  }
  double w = model.transition().at(given_state, future[0]);
  for (int t = 1; t < future.size(); ++t) {
    w *= model.transition().at(future[t - 1], future[t]);
  }
  return w;
}

}  // namespace markov
