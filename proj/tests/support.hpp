// Shared test fixtures: the weather models from the bundled data, seeded
// random model generators, and the factorial-to-flat model construction used
// as the cross-check oracle.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "markov/fhmm.hpp"
#include "markov/model.hpp"

namespace testutil {

using markov::FactorialHmmModel;
using markov::HmmModel;
using markov::LabelSpace;
using markov::MarkovChainModel;
using markov::ObsSequence;
using markov::ProbVector;
using markov::StateSequence;
using markov::StochasticMatrix;

inline LabelSpace weather_states() {
  return LabelSpace({"sunny", "rainy", "foggy"});
}

inline LabelSpace stone_values() { return LabelSpace({"dry", "wet"}); }

inline StochasticMatrix weather_transition() {
  return StochasticMatrix(weather_states(), weather_states(),
                          {{0.8, 0.05, 0.15}, {0.2, 0.6, 0.2}, {0.2, 0.3, 0.5}});
}

inline StochasticMatrix stone_emission() {
  return StochasticMatrix(weather_states(), stone_values(),
                          {{0.9, 0.1}, {0.2, 0.8}, {0.7, 0.3}});
}

inline MarkovChainModel weather_chain(std::vector<double> initial) {
  return MarkovChainModel(weather_states(), weather_transition(),
                          ProbVector(weather_states(), std::move(initial)));
}

// The worked three-day example model: uniform prior over the weather.
inline HmmModel weather_stone_hmm() {
  const double third = 1.0 / 3.0;
  return HmmModel(weather_chain({third, third, third}), stone_values(),
                  stone_emission());
}

inline LabelSpace make_space(const std::string& prefix, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return LabelSpace(std::move(labels));
}

// Random distribution; with probability zero_prob each entry is zeroed (at
// least one survives) so zero transitions and emissions get exercised.
inline std::vector<double> random_distribution(std::mt19937& rng, int n,
                                               double zero_prob = 0.0) {
  std::uniform_real_distribution<double> uniform(0.01, 1.0);
  std::bernoulli_distribution zero(zero_prob);
  std::vector<double> row(n, 0.0);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    if (n > 1 && zero(rng)) continue;
    row[i] = uniform(rng);
    sum += row[i];
  }
  if (sum == 0.0) {
    row[0] = 1.0;
    sum = 1.0;
  }
  for (double& v : row) v /= sum;
  return row;
}

inline StochasticMatrix random_stochastic(std::mt19937& rng,
                                          const LabelSpace& rows,
                                          const LabelSpace& cols,
                                          double zero_prob = 0.0) {
  std::vector<std::vector<double>> entries;
  for (int i = 0; i < rows.size(); ++i) {
    entries.push_back(random_distribution(rng, cols.size(), zero_prob));
  }
  return StochasticMatrix(rows, cols, std::move(entries));
}

inline MarkovChainModel random_chain(std::mt19937& rng, int n,
                                     double zero_prob = 0.0,
                                     const std::string& prefix = "s") {
  LabelSpace states = make_space(prefix, n);
  StochasticMatrix transition =
      random_stochastic(rng, states, states, zero_prob);
  ProbVector initial(states, random_distribution(rng, n, zero_prob));
  return MarkovChainModel(std::move(states), std::move(transition),
                          std::move(initial));
}

inline HmmModel random_hmm(std::mt19937& rng, int n, int k,
                           double zero_prob = 0.0) {
  MarkovChainModel chain = random_chain(rng, n, zero_prob);
  LabelSpace observations = make_space("o", k);
  StochasticMatrix emission =
      random_stochastic(rng, chain.states(), observations, zero_prob);
  return HmmModel(std::move(chain), std::move(observations),
                  std::move(emission));
}

inline ObsSequence random_obs(std::mt19937& rng, const LabelSpace& space,
                              int len) {
  std::uniform_int_distribution<int> pick(0, space.size() - 1);
  std::vector<int> indices(len);
  for (int& v : indices) v = pick(rng);
  return ObsSequence(space, std::move(indices));
}

inline StateSequence random_states(std::mt19937& rng, const LabelSpace& space,
                                   int len) {
  std::uniform_int_distribution<int> pick(0, space.size() - 1);
  std::vector<int> indices(len);
  for (int& v : indices) v = pick(rng);
  return StateSequence(space, std::move(indices));
}

// Builds the single-chain equivalent of a factorial model: joint states are
// the Cartesian product of component states (component 1 most significant),
// transition and initial weights are products, and the emission rows are the
// bare per-component products. Those rows generally do not sum to one, which
// is the one place the stochasticity check is deliberately bypassed.
inline HmmModel flatten(const FactorialHmmModel& model) {
  const int m = model.component_count();
  const int joint = static_cast<int>(model.joint_state_count());

  std::vector<std::vector<int>> digits(joint, std::vector<int>(m));
  for (int f = 0; f < joint; ++f) {
    int v = f;
    for (int i = m - 1; i >= 0; --i) {
      const int n_i = model.components()[i].states().size();
      digits[f][i] = v % n_i;
      v /= n_i;
    }
  }

  std::vector<std::string> labels(joint);
  for (int f = 0; f < joint; ++f) {
    for (int i = 0; i < m; ++i) {
      if (i > 0) labels[f] += "+";
      labels[f] += model.components()[i].states().label(digits[f][i]);
    }
  }
  LabelSpace states(labels);

  std::vector<double> initial(joint, 1.0);
  for (int f = 0; f < joint; ++f) {
    for (int i = 0; i < m; ++i) {
      initial[f] *= model.components()[i].initial()[digits[f][i]];
    }
  }

  std::vector<std::vector<double>> transition(joint,
                                              std::vector<double>(joint, 1.0));
  for (int f = 0; f < joint; ++f) {
    for (int g = 0; g < joint; ++g) {
      for (int i = 0; i < m; ++i) {
        transition[f][g] *=
            model.components()[i].transition().at(digits[f][i], digits[g][i]);
      }
    }
  }

  const int k = model.observations().size();
  std::vector<std::vector<double>> emission(joint, std::vector<double>(k, 1.0));
  for (int f = 0; f < joint; ++f) {
    for (int mu = 0; mu < k; ++mu) {
      for (int i = 0; i < m; ++i) {
        emission[f][mu] *= model.emissions()[i].at(digits[f][i], mu);
      }
    }
  }

  MarkovChainModel chain(states,
                         StochasticMatrix(states, states, std::move(transition)),
                         ProbVector(states, std::move(initial)));
  return HmmModel(std::move(chain), model.observations(),
                  StochasticMatrix::unchecked(states, model.observations(),
                                              std::move(emission)));
}

inline FactorialHmmModel random_fhmm(std::mt19937& rng, int components,
                                     int states_per_component, int k,
                                     double zero_prob = 0.0) {
  std::vector<MarkovChainModel> chains;
  std::vector<StochasticMatrix> emissions;
  LabelSpace observations = make_space("o", k);
  for (int i = 0; i < components; ++i) {
    chains.push_back(random_chain(rng, states_per_component, zero_prob,
                                  "c" + std::to_string(i + 1) + "_"));
    emissions.push_back(
        random_stochastic(rng, chains.back().states(), observations,
                          zero_prob));
  }
  return FactorialHmmModel(std::move(chains), std::move(observations),
                           std::move(emissions));
}

}  // namespace testutil
