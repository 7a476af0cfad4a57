#pragma once

#include <utility>
#include <vector>

#include "markov/model.hpp"

namespace markov {

// Per-time posteriors over the hidden states given a full observation
// sequence: per_time[t] is the distribution of q_{t+1} (0-based t).
struct PosteriorMarginals {
  std::vector<ProbVector> per_time;
};

// Product of emission factors b[q_t, x_t] along the sequences.
double emission_likelihood(const HmmModel& model, const ObsSequence& x,
                           const StateSequence& q);

// emission_likelihood(x, q) times the chain weight of q.
double joint_likelihood(const HmmModel& model, const ObsSequence& x,
                        const StateSequence& q);

// Likelihood of the observations alone, by summing joint_likelihood over
// every state sequence in lexicographic order. Refuses above kEnumerationCap.
double sequence_likelihood(const HmmModel& model, const ObsSequence& x);

// Distribution of the observation emitted on day t (t >= 1): the state
// distribution on day t pushed through the emission matrix.
ProbVector observation_distribution(const HmmModel& model, int t);

// Posterior over states after seeing a single observation, from an arbitrary
// prior: entry i proportional to b[i, observed] * prior[i]. Throws
// ZeroEvidence when the observation has probability zero under the prior.
ProbVector bayes_posterior(const HmmModel& model, int observed,
                           const ProbVector& state_prior);

// Exact per-time posteriors by full enumeration. Throws ZeroEvidence when
// sequence_likelihood(x) is zero.
PosteriorMarginals posterior_marginals(const HmmModel& model,
                                       const ObsSequence& x);

// Highest-joint-likelihood state path by exhaustive search, with its value.
// Ties resolve to the lexicographically smallest index sequence. This is the
// decoding oracle the Viterbi recursion is checked against.
std::pair<StateSequence, double> map_path_bruteforce(const HmmModel& model,
                                                     const ObsSequence& x);

}  // namespace markov
