// Internal per-sequence term evaluation shared by the serial operations and
// the OpenMP kernels. Both engines enumerate ranks in the same lexicographic
// order and evaluate each term with the exact same factor order, so a chunked
// parallel reduction sums the same doubles as the serial reference.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "markov/enumeration.hpp"
#include "markov/fhmm.hpp"
#include "markov/model.hpp"

namespace markov::detail {

// pi[q_0] * prod a[q_{t-1}, q_t]; mirrors chain_weight.
inline double chain_weight_raw(const MarkovChainModel& model,
                               std::span<const int> q) {
  double w = model.initial()[q[0]];
  for (std::size_t t = 1; t < q.size(); ++t) {
    w *= model.transition().at(q[t - 1], q[t]);
  }
  return w;
}

// Emission product times chain weight, multiplied last; mirrors
// joint_likelihood so enumeration sums and the public operation agree
// bit-exactly term by term.
inline double hmm_joint_raw(const HmmModel& model, std::span<const int> x,
                            std::span<const int> q) {
  double em = 1.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    em *= model.emission().at(q[t], x[t]);
  }
  return em * chain_weight_raw(model.chain(), q);
}

struct FhmmScratch {
  std::vector<int> flat;                  // T joint-state indices
  std::vector<std::vector<int>> comp;     // M x T per-component indices

  FhmmScratch(int component_count, int length)
      : flat(length),
        comp(component_count, std::vector<int>(length)) {}
};

// Splits each joint-state index into per-component indices (component 0 most
// significant), then evaluates emission product times state weight in the
// same order as fhmm_emission_likelihood * fhmm_state_jpd.
inline double fhmm_joint_at_rank(const FactorialHmmModel& model,
                                 std::span<const int> y, std::uint64_t rank,
                                 int joint_base, FhmmScratch& scratch) {
  const int len = static_cast<int>(y.size());
  const int m = model.component_count();
  sequence_from_rank(rank, joint_base, scratch.flat);
  for (int t = 0; t < len; ++t) {
    int f = scratch.flat[t];
    for (int i = m - 1; i >= 0; --i) {
      const int n_i = model.components()[i].states().size();
      scratch.comp[i][t] = f % n_i;
      f /= n_i;
    }
  }
  double em = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < len; ++t) {
      em *= model.emissions()[i].at(scratch.comp[i][t], y[t]);
    }
  }
  double jpd = 1.0;
  for (int i = 0; i < m; ++i) {
    jpd *= chain_weight_raw(model.components()[i], scratch.comp[i]);
  }
  return em * jpd;
}

}  // namespace markov::detail
