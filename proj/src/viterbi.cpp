#include "markov/viterbi.hpp"

#include <cmath>
#include <vector>

namespace markov {

ViterbiTrellis viterbi_decode(const HmmModel& model, const ObsSequence& x,
                              bool log_space) {
  if (x.size() == 0) {
    throw EmptySequence("observation sequence must contain at least one element");
  }
  if (x.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }

  const int n = model.states().size();
  const int len = x.size();
  const auto& a = model.chain().transition();
  const auto& b = model.emission();
  const auto& pi = model.chain().initial();

  std::vector<std::vector<double>> delta(len, std::vector<double>(n));
  std::vector<std::vector<int>> psi(len, std::vector<int>(n, kNoPredecessor));

  for (int i = 0; i < n; ++i) {
    delta[0][i] = log_space ? std::log(pi[i]) + std::log(b.at(i, x[0]))
                            : pi[i] * b.at(i, x[0]);
  }

  for (int t = 1; t < len; ++t) {
    for (int j = 0; j < n; ++j) {
      // Seed with i = 0 so an all-zero (or all -inf) column still picks the
      // smallest predecessor index.
      double best = log_space ? delta[t - 1][0] + std::log(a.at(0, j))
                              : delta[t - 1][0] * a.at(0, j);
      int arg = 0;
      for (int i = 1; i < n; ++i) {
        const double cand = log_space
                                ? delta[t - 1][i] + std::log(a.at(i, j))
                                : delta[t - 1][i] * a.at(i, j);
        if (cand > best) {
          best = cand;
          arg = i;
        }
      }
      delta[t][j] = log_space ? best + std::log(b.at(j, x[t]))
                              : best * b.at(j, x[t]);
      psi[t][j] = arg;
    }
  }

  double best_value = delta[len - 1][0];
  int last = 0;
  for (int j = 1; j < n; ++j) {
    if (delta[len - 1][j] > best_value) {
      best_value = delta[len - 1][j];
      last = j;
    }
  }

  std::vector<int> path(len);
  path[len - 1] = last;
  for (int t = len - 2; t >= 0; --t) {
    path[t] = psi[t + 1][path[t + 1]];
  }

  return ViterbiTrellis{std::move(delta), std::move(psi), best_value,
                        StateSequence(model.states(), std::move(path)),
                        log_space};
}

}  // namespace markov
