// Times the serial enumeration operations against their OpenMP kernels on
// models sized near the enumeration cap and reports the agreement between
// the two engines.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "markov/evolution.hpp"
#include "markov/fhmm.hpp"
#include "markov/hmm.hpp"
#include "markov/parallel.hpp"

namespace {

using markov::HmmModel;
using markov::LabelSpace;
using markov::MarkovChainModel;
using markov::ObsSequence;
using markov::ProbVector;
using markov::StochasticMatrix;

LabelSpace make_space(const std::string& prefix, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return LabelSpace(std::move(labels));
}

std::vector<double> random_row(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  std::vector<double> row(n);
  double sum = 0.0;
  for (double& v : row) {
    v = uniform(rng);
    sum += v;
  }
  for (double& v : row) v /= sum;
  return row;
}

StochasticMatrix random_matrix(std::mt19937& rng, const LabelSpace& rows,
                               const LabelSpace& cols) {
  std::vector<std::vector<double>> entries;
  for (int i = 0; i < rows.size(); ++i) {
    entries.push_back(random_row(rng, cols.size()));
  }
  return StochasticMatrix(rows, cols, std::move(entries));
}

MarkovChainModel random_chain(std::mt19937& rng, int n,
                              const std::string& prefix) {
  LabelSpace states = make_space(prefix, n);
  StochasticMatrix transition = random_matrix(rng, states, states);
  ProbVector initial(states, random_row(rng, n));
  return MarkovChainModel(std::move(states), std::move(transition),
                          std::move(initial));
}

HmmModel random_hmm(std::mt19937& rng, int n, int k) {
  MarkovChainModel chain = random_chain(rng, n, "s");
  LabelSpace observations = make_space("o", k);
  StochasticMatrix emission = random_matrix(rng, chain.states(), observations);
  return HmmModel(std::move(chain), std::move(observations),
                  std::move(emission));
}

ObsSequence random_obs(std::mt19937& rng, const LabelSpace& space, int len) {
  std::uniform_int_distribution<int> pick(0, space.size() - 1);
  std::vector<int> indices(len);
  for (int& v : indices) v = pick(rng);
  return ObsSequence(space, std::move(indices));
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double time_op(Fn&& fn) {
  const double start = now_seconds();
  fn();
  return now_seconds() - start;
}

void report(const char* name, double serial_s, double parallel_s,
            double difference) {
  std::printf("%-22s %9.1f ms %9.1f ms %6.2fx   max |diff| %.3e\n", name,
              serial_s * 1e3, parallel_s * 1e3,
              parallel_s > 0 ? serial_s / parallel_s : 0.0, difference);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both engines run on one thread\n");
#endif
  std::printf("%-22s %12s %12s %8s\n", "operation", "serial", "parallel",
              "speedup");

  std::mt19937 rng(7);
  const HmmModel hmm = random_hmm(rng, 10, 4);
  const ObsSequence x = random_obs(rng, hmm.observations(), 6);  // 10^6 paths

  {
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double ts =
        time_op([&] { serial_value = markov::sequence_likelihood(hmm, x); });
    const double tp = time_op(
        [&] { parallel_value = markov::par::sequence_likelihood(hmm, x); });
    report("sequence_likelihood", ts, tp,
           std::fabs(serial_value - parallel_value));
  }

  {
    markov::PosteriorMarginals serial_m;
    markov::PosteriorMarginals parallel_m;
    const double ts =
        time_op([&] { serial_m = markov::posterior_marginals(hmm, x); });
    const double tp =
        time_op([&] { parallel_m = markov::par::posterior_marginals(hmm, x); });
    double diff = 0.0;
    for (std::size_t t = 0; t < serial_m.per_time.size(); ++t) {
      for (int i = 0; i < serial_m.per_time[t].size(); ++i) {
        diff = std::max(diff, std::fabs(serial_m.per_time[t][i] -
                                        parallel_m.per_time[t][i]));
      }
    }
    report("posterior_marginals", ts, tp, diff);
  }

  {
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double ts = time_op(
        [&] { serial_value = markov::map_path_bruteforce(hmm, x).second; });
    const double tp = time_op([&] {
      parallel_value = markov::par::map_path_bruteforce(hmm, x).second;
    });
    report("map_path_bruteforce", ts, tp,
           std::fabs(serial_value - parallel_value));
  }

  {
    const MarkovChainModel chain = random_chain(rng, 10, "s");
    ProbVector serial_dist = chain.initial();
    ProbVector parallel_dist = chain.initial();
    const double ts =
        time_op([&] { serial_dist = markov::evolve_enumerated(chain, 7); });
    const double tp = time_op(
        [&] { parallel_dist = markov::par::evolve_enumerated(chain, 7); });
    double diff = 0.0;
    for (int i = 0; i < serial_dist.size(); ++i) {
      diff = std::max(diff, std::fabs(serial_dist[i] - parallel_dist[i]));
    }
    report("evolve_enumerated", ts, tp, diff);
  }

  {
    std::vector<MarkovChainModel> components;
    std::vector<StochasticMatrix> emissions;
    LabelSpace observations = make_space("o", 3);
    for (int i = 0; i < 2; ++i) {
      components.push_back(random_chain(rng, 5, "c" + std::to_string(i) + "_"));
      emissions.push_back(
          random_matrix(rng, components.back().states(), observations));
    }
    const markov::FactorialHmmModel fhmm(std::move(components), observations,
                                         std::move(emissions));
    const ObsSequence y = random_obs(rng, observations, 4);  // 25^4 paths
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double ts = time_op(
        [&] { serial_value = markov::fhmm_sequence_likelihood(fhmm, y); });
    const double tp = time_op([&] {
      parallel_value = markov::par::fhmm_sequence_likelihood(fhmm, y);
    });
    report("fhmm_sequence_lik.", ts, tp,
           std::fabs(serial_value - parallel_value));
  }

  return 0;
}
