#pragma once

#include <utility>

#include "markov/fhmm.hpp"
#include "markov/hmm.hpp"
#include "markov/model.hpp"

// OpenMP kernels for the enumeration-heavy operations. Each kernel splits the
// rank space into fixed-size chunks, reduces every chunk serially in rank
// order, and combines the chunk results in chunk order, so the output is
// deterministic and independent of the thread count. The serial operations in
// markov:: remain the reference; tests pin the two engines against each
// other and the benchmark tool compares their speed.
namespace markov::par {

double sequence_likelihood(const HmmModel& model, const ObsSequence& x);

PosteriorMarginals posterior_marginals(const HmmModel& model,
                                       const ObsSequence& x);

std::pair<StateSequence, double> map_path_bruteforce(const HmmModel& model,
                                                     const ObsSequence& x);

ProbVector evolve_enumerated(const MarkovChainModel& model, int horizon_t);

double fhmm_sequence_likelihood(const FactorialHmmModel& model,
                                const ObsSequence& y);

}  // namespace markov::par
