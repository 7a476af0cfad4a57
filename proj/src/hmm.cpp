#include "markov/hmm.hpp"

#include <vector>

#include "markov/enumeration.hpp"
#include "markov/evolution.hpp"
#include "markov/vmm.hpp"
#include "term_eval.hpp"

namespace markov {

namespace {

void require_spaces(const HmmModel& model, const ObsSequence& x,
                    const StateSequence& q) {
  if (x.size() != q.size()) throw LengthMismatch(x.size(), q.size());
  if (q.space() != model.states()) {
    throw ShapeMismatch("state sequence space does not match the model");
  }
  if (x.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }
}

void require_obs_space(const HmmModel& model, const ObsSequence& x) {
  if (x.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }
}

}  // namespace

double emission_likelihood(const HmmModel& model, const ObsSequence& x,
                           const StateSequence& q) {
  require_spaces(model, x, q);
  double em = 1.0;
  for (int t = 0; t < x.size(); ++t) {
    em *= model.emission().at(q[t], x[t]);
  }
  return em;
}

double joint_likelihood(const HmmModel& model, const ObsSequence& x,
                        const StateSequence& q) {
  require_spaces(model, x, q);
  return detail::hmm_joint_raw(model, x.indices(), q.indices());
}

double sequence_likelihood(const HmmModel& model, const ObsSequence& x) {
  require_obs_space(model, x);
  const int n = model.states().size();
  const std::uint64_t count =
      detail::checked_sequence_count(n, x.size(), kEnumerationCap);
  std::vector<int> q(x.size());
  double total = 0.0;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    detail::sequence_from_rank(rank, n, q);
    total += detail::hmm_joint_raw(model, x.indices(), q);
  }
  return total;
}

ProbVector observation_distribution(const HmmModel& model, int t) {
  if (t < 1) throw Error("time index must be at least 1");
  const ProbVector state_dist = evolve(model.chain(), t - 1);
  const int k = model.observations().size();
  std::vector<double> out(k, 0.0);
  for (int mu = 0; mu < k; ++mu) {
    for (int i = 0; i < model.states().size(); ++i) {
      out[mu] += model.emission().at(i, mu) * state_dist[i];
    }
  }
  return ProbVector(model.observations(), std::move(out));
}

ProbVector bayes_posterior(const HmmModel& model, int observed,
                           const ProbVector& state_prior) {
  if (observed < 0 || observed >= model.observations().size()) {
    throw IndexOutOfRange(observed, model.observations().size());
  }
  if (state_prior.space() != model.states()) {
    throw ShapeMismatch("prior space does not match the model states");
  }
  const int n = model.states().size();
  std::vector<double> numer(n);
  double evidence = 0.0;
  for (int i = 0; i < n; ++i) {
    numer[i] = model.emission().at(i, observed) * state_prior[i];
    evidence += numer[i];
  }
  if (evidence == 0.0) throw ZeroEvidence();
  for (int i = 0; i < n; ++i) numer[i] /= evidence;
  return ProbVector(model.states(), std::move(numer));
}

PosteriorMarginals posterior_marginals(const HmmModel& model,
                                       const ObsSequence& x) {
  require_obs_space(model, x);
  const int n = model.states().size();
  const int len = x.size();
  const std::uint64_t count =
      detail::checked_sequence_count(n, len, kEnumerationCap);

  std::vector<std::vector<double>> acc(len, std::vector<double>(n, 0.0));
  double total = 0.0;
  std::vector<int> q(len);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    detail::sequence_from_rank(rank, n, q);
    const double term = detail::hmm_joint_raw(model, x.indices(), q);
    for (int t = 0; t < len; ++t) acc[t][q[t]] += term;
    total += term;
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
  require_obs_space(model, x);
  const int n = model.states().size();
  const std::uint64_t count =
      detail::checked_sequence_count(n, x.size(), kEnumerationCap);

  // Lexicographic scan with a strict comparison keeps the smallest argmax.
  std::vector<int> q(x.size());
  double best = -1.0;
  std::uint64_t best_rank = 0;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    detail::sequence_from_rank(rank, n, q);
    const double term = detail::hmm_joint_raw(model, x.indices(), q);
    if (term > best) {
      best = term;
      best_rank = rank;
    }
  }
  detail::sequence_from_rank(best_rank, n, q);
  return {StateSequence(model.states(), std::move(q)), best};
}

}  // namespace markov
