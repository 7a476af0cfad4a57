#include "markov/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "markov/enumeration.hpp"
#include "term_eval.hpp"

namespace markov::par {

namespace {

// Fixed chunk size: chunk boundaries depend only on the problem, never on
// the thread count, so every run sums the same doubles in the same order.
constexpr std::uint64_t kChunkRanks = 1 << 13;

std::uint64_t chunk_count(std::uint64_t ranks) {
  return (ranks + kChunkRanks - 1) / kChunkRanks;
}

struct RankRange {
  std::uint64_t begin;
  std::uint64_t end;
};

RankRange chunk_range(std::uint64_t chunk, std::uint64_t ranks) {
  const std::uint64_t begin = chunk * kChunkRanks;
  return {begin, std::min(ranks, begin + kChunkRanks)};
}

}  // namespace

double sequence_likelihood(const HmmModel& model, const ObsSequence& x) {
  if (x.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }
  const int n = model.states().size();
  const std::uint64_t count =
      detail::checked_sequence_count(n, x.size(), kEnumerationCap);
  const std::int64_t chunks = static_cast<std::int64_t>(chunk_count(count));

  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto [begin, end] = chunk_range(c, count);
    std::vector<int> q(x.size());
    double local = 0.0;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      detail::sequence_from_rank(rank, n, q);
      local += detail::hmm_joint_raw(model, x.indices(), q);
    }
    partial[c] = local;
  }

  double total = 0.0;
  for (std::int64_t c = 0; c < chunks; ++c) total += partial[c];
  return total;
}

PosteriorMarginals posterior_marginals(const HmmModel& model,
                                       const ObsSequence& x) {
  if (x.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }
  const int n = model.states().size();
  const int len = x.size();
  const std::uint64_t count =
      detail::checked_sequence_count(n, len, kEnumerationCap);
  const std::int64_t chunks = static_cast<std::int64_t>(chunk_count(count));

  std::vector<std::vector<double>> partial_acc(
      chunks, std::vector<double>(static_cast<std::size_t>(len) * n, 0.0));
  std::vector<double> partial_total(chunks, 0.0);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto [begin, end] = chunk_range(c, count);
    std::vector<int> q(len);
    auto& acc = partial_acc[c];
    double local = 0.0;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      detail::sequence_from_rank(rank, n, q);
      const double term = detail::hmm_joint_raw(model, x.indices(), q);
      for (int t = 0; t < len; ++t) acc[static_cast<std::size_t>(t) * n + q[t]] += term;
      local += term;
    }
    partial_total[c] = local;
  }

  std::vector<std::vector<double>> acc(len, std::vector<double>(n, 0.0));
  double total = 0.0;
  for (std::int64_t c = 0; c < chunks; ++c) {
    for (int t = 0; t < len; ++t) {
      for (int i = 0; i < n; ++i) {
        acc[t][i] += partial_acc[c][static_cast<std::size_t>(t) * n + i];
      }
    }
    total += partial_total[c];
  }
  if (total == 0.0) throw ZeroEvidence();

  PosteriorMarginals result;
  result.per_time.reserve(len);
  for (int t = 0; t < len; ++t) {
    for (int i = 0; i < n; ++i) acc[t][i] /= total;
    result.per_time.emplace_back(model.states(), std::move(acc[t]));
  }
  return result;
}

std::pair<StateSequence, double> map_path_bruteforce(const HmmModel& model,
                                                     const ObsSequence& x) {
  if (x.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }
  const int n = model.states().size();
  const std::uint64_t count =
      detail::checked_sequence_count(n, x.size(), kEnumerationCap);
  const std::int64_t chunks = static_cast<std::int64_t>(chunk_count(count));

  std::vector<double> best(chunks, -1.0);
  std::vector<std::uint64_t> best_rank(chunks, 0);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto [begin, end] = chunk_range(c, count);
    std::vector<int> q(x.size());
    double local_best = -1.0;
    std::uint64_t local_rank = begin;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      detail::sequence_from_rank(rank, n, q);
      const double term = detail::hmm_joint_raw(model, x.indices(), q);
      if (term > local_best) {
        local_best = term;
        local_rank = rank;
      }
    }
    best[c] = local_best;
    best_rank[c] = local_rank;
  }

  double overall = -1.0;
  std::uint64_t overall_rank = 0;
  for (std::int64_t c = 0; c < chunks; ++c) {
    if (best[c] > overall ||
        (best[c] == overall && best_rank[c] < overall_rank)) {
      overall = best[c];
      overall_rank = best_rank[c];
    }
  }

  std::vector<int> q(x.size());
  detail::sequence_from_rank(overall_rank, n, q);
  return {StateSequence(model.states(), std::move(q)), overall};
}

ProbVector evolve_enumerated(const MarkovChainModel& model, int horizon_t) {
  if (horizon_t < 1) throw Error("horizon must be at least 1");
  if (horizon_t == 1) return model.initial();

  const int n = model.states().size();
  const int prefix_len = horizon_t - 1;
  const std::uint64_t prefix_count =
      detail::checked_sequence_count(n, prefix_len, kEnumerationCap);
  const std::int64_t chunks =
      static_cast<std::int64_t>(chunk_count(prefix_count));

  std::vector<std::vector<double>> partial(chunks,
                                           std::vector<double>(n, 0.0));
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto [begin, end] = chunk_range(c, prefix_count);
    std::vector<int> prefix(prefix_len);
    auto& local = partial[c];
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      detail::sequence_from_rank(rank, n, prefix);
      const double w = detail::chain_weight_raw(model, prefix);
      const int last = prefix[prefix_len - 1];
      for (int j = 0; j < n; ++j) {
        local[j] += w * model.transition().at(last, j);
      }
    }
  }

  std::vector<double> out(n, 0.0);
  for (std::int64_t c = 0; c < chunks; ++c) {
    for (int j = 0; j < n; ++j) out[j] += partial[c][j];
  }
  return ProbVector(model.states(), std::move(out));
}

double fhmm_sequence_likelihood(const FactorialHmmModel& model,
                                const ObsSequence& y) {
  if (y.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }
  const std::uint64_t joint_states = model.joint_state_count();
  if (joint_states > kEnumerationCap) {
    throw EnumerationTooLarge(joint_states, kEnumerationCap);
  }
  const std::uint64_t count = detail::checked_sequence_count(
      static_cast<int>(joint_states), y.size(), kEnumerationCap);
  const std::int64_t chunks = static_cast<std::int64_t>(chunk_count(count));

  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto [begin, end] = chunk_range(c, count);
    detail::FhmmScratch scratch(model.component_count(), y.size());
    double local = 0.0;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      local += detail::fhmm_joint_at_rank(model, y.indices(), rank,
                                          static_cast<int>(joint_states),
                                          scratch);
    }
    partial[c] = local;
  }

  double total = 0.0;
  for (std::int64_t c = 0; c < chunks; ++c) total += partial[c];
  return total;
}

}  // namespace markov::par
