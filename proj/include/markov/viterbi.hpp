#pragma once

#include <vector>

#include "markov/model.hpp"

namespace markov {

// Backpointer value for the first time step, where no predecessor exists.
// Rendered as "-" in the trellis dump.
inline constexpr int kNoPredecessor = -1;

// The full decoding table: delta[t][j] is the best joint likelihood of any
// state path ending in j at time t together with the observations so far
// (its natural log when decoded in log space); psi[t][j] is the predecessor
// achieving it.
struct ViterbiTrellis {
  std::vector<std::vector<double>> delta;  // T x N
  std::vector<std::vector<int>> psi;       // T x N, psi[0][*] == kNoPredecessor
  double best_value = 0.0;
  StateSequence best_path;
  bool log_space = false;
};

// Dynamic-programming decoder. Every argmax breaks ties toward the smallest
// state index, including the final one, so the decoded path is deterministic.
// In log space zero probabilities become -infinity and the recursion runs on
// sums; the argmax structure is unchanged.
ViterbiTrellis viterbi_decode(const HmmModel& model, const ObsSequence& x,
                              bool log_space = false);

}  // namespace markov
