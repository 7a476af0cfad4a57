#include "markov/evolution.hpp"

#include <vector>

#include "markov/enumeration.hpp"

namespace markov {

namespace {

void require_state_space(const MarkovChainModel& model,
                         const StateSequence& q) {
  if (q.space() != model.states()) {
    throw ShapeMismatch("sequence space does not match the model states");
  }
}

}  // namespace

ProbVector evolve(const MarkovChainModel& model, int steps) {
  if (steps < 0) throw Error("steps must be non-negative");
  const int n = model.states().size();
  std::vector<double> p = model.initial().entries();
  std::vector<double> next(n);
  for (int s = 0; s < steps; ++s) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += p[i] * model.transition().at(i, j);
      next[j] = acc;
    }
    p.swap(next);
  }
  return ProbVector(model.states(), std::move(p));
}

ChainWeight chain_weight(const MarkovChainModel& model,
                         const StateSequence& q) {
  require_state_space(model, q);
  double w = model.initial()[q[0]];
  for (int t = 1; t < q.size(); ++t) {
    w *= model.transition().at(q[t - 1], q[t]);
  }
  return ChainWeight{w};
}

std::pair<double, double> chain_weight_compose(const MarkovChainModel& model,
                                               const StateSequence& q,
                                               int split_t) {
  require_state_space(model, q);
  const int len = q.size();
  if (split_t <= 1 || split_t >= len) throw SplitOutOfRange(split_t, len);
  double head = model.initial()[q[0]];
  for (int t = 1; t < split_t; ++t) {
    head *= model.transition().at(q[t - 1], q[t]);
  }
  double tail = 1.0;
  for (int t = split_t; t < len; ++t) {
    tail *= model.transition().at(q[t - 1], q[t]);
  }
  return {head, tail};
}

ProbVector evolve_enumerated(const MarkovChainModel& model, int horizon_t) {
  if (horizon_t < 1) throw Error("horizon must be at least 1");
  if (horizon_t == 1) return model.initial();

  const int n = model.states().size();
  const int prefix_len = horizon_t - 1;
  const std::uint64_t prefix_count =
      detail::checked_sequence_count(n, prefix_len, kEnumerationCap);

  std::vector<double> out(n, 0.0);
  std::vector<int> prefix(prefix_len);
  for (std::uint64_t rank = 0; rank < prefix_count; ++rank) {
    detail::sequence_from_rank(rank, n, prefix);
    double w = model.initial()[prefix[0]];
    for (int t = 1; t < prefix_len; ++t) {
      w *= model.transition().at(prefix[t - 1], prefix[t]);
    }
    const int last = prefix[prefix_len - 1];
    for (int j = 0; j < n; ++j) {
      out[j] += w * model.transition().at(last, j);
    }
  }
  return ProbVector(model.states(), std::move(out));
}

}  // namespace markov
