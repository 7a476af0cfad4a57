#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "markov/evolution.hpp"
#include "markov/hmm.hpp"
#include "markov/parallel.hpp"
#include "support.hpp"

using namespace markov;

// The OpenMP kernels use a fixed chunked summation order, so they agree with
// the serial reference to reassociation rounding; the argmax kernels agree
// exactly because comparing doubles is exact.

TEST_CASE("parallel likelihood matches the serial reference") {
  std::mt19937 rng(131);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + round % 4;
    const int len = 2 + round % 6;
    const HmmModel m = testutil::random_hmm(rng, n, 3, 0.15);
    const ObsSequence x = testutil::random_obs(rng, m.observations(), len);

    const double serial = sequence_likelihood(m, x);
    const double parallel = par::sequence_likelihood(m, x);
    CHECK(std::fabs(serial - parallel) <=
          1e-13 * std::max({serial, parallel, 1e-300}));
  }
}

TEST_CASE("single-chunk inputs reduce bit-identically") {
  std::mt19937 rng(137);
  const HmmModel m = testutil::random_hmm(rng, 3, 2, 0.1);
  const ObsSequence x = testutil::random_obs(rng, m.observations(), 5);
  // 3^5 = 243 ranks fit in one chunk, so the sums are the same doubles.
  CHECK(sequence_likelihood(m, x) == par::sequence_likelihood(m, x));
}

TEST_CASE("parallel MAP decoding is exactly the serial answer") {
  std::mt19937 rng(139);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + round % 3;
    const int len = 3 + round % 6;
    const HmmModel m = testutil::random_hmm(rng, n, 2, 0.2);
    const ObsSequence x = testutil::random_obs(rng, m.observations(), len);

    const auto [serial_path, serial_value] = map_path_bruteforce(m, x);
    const auto [parallel_path, parallel_value] =
        par::map_path_bruteforce(m, x);
    CHECK(parallel_path == serial_path);
    CHECK(parallel_value == serial_value);
  }
}

TEST_CASE("parallel posteriors match the serial reference") {
  std::mt19937 rng(149);
  for (int round = 0; round < 12; ++round) {
    const HmmModel m = testutil::random_hmm(rng, 2 + round % 3, 2, 0.1);
    const ObsSequence x =
        testutil::random_obs(rng, m.observations(), 3 + round % 5);
    const double evidence = sequence_likelihood(m, x);
    if (evidence == 0.0) continue;

    const PosteriorMarginals serial = posterior_marginals(m, x);
    const PosteriorMarginals parallel = par::posterior_marginals(m, x);
    REQUIRE(serial.per_time.size() == parallel.per_time.size());
    for (std::size_t t = 0; t < serial.per_time.size(); ++t) {
      for (int i = 0; i < serial.per_time[t].size(); ++i) {
        CHECK(std::fabs(serial.per_time[t][i] - parallel.per_time[t][i]) <=
              1e-13);
      }
    }
  }
}

TEST_CASE("parallel enumerated evolution matches the serial reference") {
  std::mt19937 rng(151);
  for (int round = 0; round < 12; ++round) {
    const int n = 2 + round % 4;
    const int horizon = 2 + round % 7;
    const MarkovChainModel m = testutil::random_chain(rng, n, 0.15);
    const ProbVector serial = evolve_enumerated(m, horizon);
    const ProbVector parallel = par::evolve_enumerated(m, horizon);
    for (int j = 0; j < n; ++j) {
      CHECK(std::fabs(serial[j] - parallel[j]) <= 1e-13);
    }
  }
}

TEST_CASE("parallel factorial likelihood matches the serial reference") {
  std::mt19937 rng(157);
  for (int round = 0; round < 12; ++round) {
    const FactorialHmmModel model = testutil::random_fhmm(rng, 2, 2, 2, 0.1);
    const ObsSequence y =
        testutil::random_obs(rng, model.observations(), 1 + round % 5);
    const double serial = fhmm_sequence_likelihood(model, y);
    const double parallel = par::fhmm_sequence_likelihood(model, y);
    CHECK(std::fabs(serial - parallel) <=
          1e-13 * std::max({serial, parallel, 1e-300}));
  }
}

TEST_CASE("parallel kernels enforce the same enumeration cap") {
  std::mt19937 rng(163);
  const HmmModel big = testutil::random_hmm(rng, 10, 2);
  CHECK_THROWS_AS(par::sequence_likelihood(
                      big, testutil::random_obs(rng, big.observations(), 7)),
                  EnumerationTooLarge);
}

TEST_CASE("a cap-sized workload agrees across engines") {
  // 10^6 ranks, the largest permitted enumeration.
  std::mt19937 rng(167);
  const HmmModel m = testutil::random_hmm(rng, 10, 3, 0.0);
  const ObsSequence x = testutil::random_obs(rng, m.observations(), 6);
  const double serial = sequence_likelihood(m, x);
  const double parallel = par::sequence_likelihood(m, x);
  CHECK(std::fabs(serial - parallel) <= 1e-13 * serial);
}
