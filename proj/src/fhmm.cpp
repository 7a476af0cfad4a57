#include "markov/fhmm.hpp"

#include <vector>

#include "markov/enumeration.hpp"
#include "markov/evolution.hpp"
#include "term_eval.hpp"

namespace markov {

FactorialHmmModel::FactorialHmmModel(std::vector<MarkovChainModel> components,
                                     LabelSpace observations,
                                     std::vector<StochasticMatrix> emissions)
    : components_(std::move(components)),
      observations_(std::move(observations)),
      emissions_(std::move(emissions)) {
  if (components_.empty()) {
    throw ShapeMismatch("factorial model needs at least one component");
  }
  if (emissions_.size() != components_.size()) {
    throw ShapeMismatch("one emission matrix per component required");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (emissions_[i].rows() != components_[i].states()) {
      throw ShapeMismatch("emission rows of component " + std::to_string(i + 1) +
                          " must match its state space");
    }
    if (emissions_[i].cols() != observations_) {
      throw ShapeMismatch("emission columns of component " +
                          std::to_string(i + 1) +
                          " must match the shared observation space");
    }
  }
}

std::uint64_t FactorialHmmModel::joint_state_count() const {
  std::uint64_t count = 1;
  for (const auto& component : components_) {
    const auto n = static_cast<std::uint64_t>(component.states().size());
    if (count > UINT64_MAX / n) return UINT64_MAX;
    count *= n;
  }
  return count;
}

VectorStateSequence::VectorStateSequence(
    std::vector<StateSequence> per_component)
    : per_component_(std::move(per_component)) {
  if (per_component_.empty()) {
    throw ShapeMismatch("vector state sequence needs at least one component");
  }
  const int len = per_component_.front().size();
  for (const auto& seq : per_component_) {
    if (seq.size() != len) {
      throw LengthMismatch(len, seq.size());
    }
  }
}

namespace {

void require_components(const FactorialHmmModel& model,
                        const VectorStateSequence& q) {
  if (q.component_count() != model.component_count()) {
    throw ShapeMismatch("expected " +
                        std::to_string(model.component_count()) +
                        " component sequences, got " +
                        std::to_string(q.component_count()));
  }
  for (int i = 0; i < model.component_count(); ++i) {
    if (q.per_component()[i].space() != model.components()[i].states()) {
      throw ShapeMismatch("component " + std::to_string(i + 1) +
                          " sequence space does not match its chain");
    }
  }
}

void require_obs(const FactorialHmmModel& model, const ObsSequence& y) {
  if (y.space() != model.observations()) {
    throw ShapeMismatch("observation sequence space does not match the model");
  }
}

}  // namespace

double fhmm_state_jpd(const FactorialHmmModel& model,
                      const VectorStateSequence& q) {
  require_components(model, q);
  double jpd = 1.0;
  for (int i = 0; i < model.component_count(); ++i) {
    jpd *= detail::chain_weight_raw(model.components()[i],
                                    q.per_component()[i].indices());
  }
  return jpd;
}

double fhmm_emission_likelihood(const FactorialHmmModel& model,
                                const ObsSequence& y,
                                const VectorStateSequence& q) {
  require_components(model, q);
  require_obs(model, y);
  if (y.size() != q.length()) throw LengthMismatch(q.length(), y.size());
  double em = 1.0;
  for (int i = 0; i < model.component_count(); ++i) {
    const auto& seq = q.per_component()[i];
    for (int t = 0; t < y.size(); ++t) {
      em *= model.emissions()[i].at(seq[t], y[t]);
    }
  }
  return em;
}

double fhmm_sequence_likelihood(const FactorialHmmModel& model,
                                const ObsSequence& y) {
  require_obs(model, y);
  const std::uint64_t joint_states = model.joint_state_count();
  if (joint_states > kEnumerationCap) {
    throw EnumerationTooLarge(joint_states, kEnumerationCap);
  }
  const std::uint64_t count = detail::checked_sequence_count(
      static_cast<int>(joint_states), y.size(), kEnumerationCap);

  detail::FhmmScratch scratch(model.component_count(), y.size());
  double total = 0.0;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    total += detail::fhmm_joint_at_rank(model, y.indices(), rank,
                                        static_cast<int>(joint_states),
                                        scratch);
  }
  return total;
}

}  // namespace markov
