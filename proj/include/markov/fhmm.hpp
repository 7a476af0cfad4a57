#pragma once

#include <vector>

#include "markov/model.hpp"

namespace markov {

// Several independent component chains observed through one shared
// observation stream; each component has its own emission matrix and the
// joint emission is the bare product of the per-component factors (no
// renormalization over observations).
class FactorialHmmModel {
 public:
  FactorialHmmModel(std::vector<MarkovChainModel> components,
                    LabelSpace observations,
                    std::vector<StochasticMatrix> emissions);

  const std::vector<MarkovChainModel>& components() const {
    return components_;
  }
  const LabelSpace& observations() const { return observations_; }
  const std::vector<StochasticMatrix>& emissions() const { return emissions_; }
  int component_count() const { return static_cast<int>(components_.size()); }

  // Product of the component state-space sizes: the size of one time slice
  // of the joint hidden state.
  std::uint64_t joint_state_count() const;

  bool operator==(const FactorialHmmModel&) const = default;

 private:
  std::vector<MarkovChainModel> components_;
  LabelSpace observations_;
  std::vector<StochasticMatrix> emissions_;
};

// One state path per component, all of the same length.
class VectorStateSequence {
 public:
  explicit VectorStateSequence(std::vector<StateSequence> per_component);

  const std::vector<StateSequence>& per_component() const {
    return per_component_;
  }
  int component_count() const {
    return static_cast<int>(per_component_.size());
  }
  int length() const { return per_component_.front().size(); }

 private:
  std::vector<StateSequence> per_component_;
};

// Product over components of the chain weight of that component's path.
double fhmm_state_jpd(const FactorialHmmModel& model,
                      const VectorStateSequence& q);

// Product over components and time of the emission factors b^i[q^i_t, y_t].
double fhmm_emission_likelihood(const FactorialHmmModel& model,
                                const ObsSequence& y,
                                const VectorStateSequence& q);

// Sum of emission * state weight over the full product state space, in fixed
// lexicographic order. Refuses when (prod_i N_i)^T exceeds kEnumerationCap.
double fhmm_sequence_likelihood(const FactorialHmmModel& model,
                                const ObsSequence& y);

}  // namespace markov
