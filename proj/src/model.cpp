#include "markov/model.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_set>
#include <utility>

namespace markov {

namespace detail {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

namespace {

void check_distribution(const std::vector<double>& entries) {
  double sum = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0.0) {
      throw NegativeEntry(static_cast<int>(i), entries[i]);
    }
    sum += entries[i];
  }
  if (std::fabs(sum - 1.0) > kStochasticTolerance) throw SumNotOne(sum);
}

std::vector<int> checked_indices(const LabelSpace& space,
                                 std::vector<int> indices,
                                 const char* sequence_kind) {
  if (indices.empty()) {
    throw EmptySequence(std::string(sequence_kind) +
                        " sequence must contain at least one element");
  }
  for (int idx : indices) {
    if (idx < 0 || idx >= space.size()) {
      throw IndexOutOfRange(idx, space.size());
    }
  }
  return indices;
}

std::vector<int> indices_from_labels(const LabelSpace& space,
                                     const std::vector<std::string>& labels) {
  std::vector<int> indices;
  indices.reserve(labels.size());
  for (const auto& label : labels) indices.push_back(space.index_of(label));
  return indices;
}

}  // namespace

LabelSpace::LabelSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidLabel("label space must not be empty");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InvalidLabel("labels must be non-empty");
    if (!seen.insert(label).second) {
      throw InvalidLabel("duplicate label \"" + label + "\"");
    }
  }
}

int LabelSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  throw UnknownLabel(label);
}

ProbVector::ProbVector(LabelSpace space, std::vector<double> entries)
    : ProbVector(Raw{}, std::move(space), std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(space_.size())) {
    throw LengthMismatch(space_.size(), entries_.size());
  }
  check_distribution(entries_);
}

ProbVector ProbVector::unchecked(LabelSpace space,
                                 std::vector<double> entries) {
  if (entries.size() != static_cast<std::size_t>(space.size())) {
    throw LengthMismatch(space.size(), entries.size());
  }
  return ProbVector(Raw{}, std::move(space), std::move(entries));
}

void StochasticMatrix::check_shape(
    const LabelSpace& rows, const LabelSpace& cols,
    const std::vector<std::vector<double>>& entries) {
  if (entries.size() != static_cast<std::size_t>(rows.size())) {
    throw ShapeMismatch("expected " + std::to_string(rows.size()) +
                        " rows, got " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != static_cast<std::size_t>(cols.size())) {
      throw ShapeMismatch("row " + std::to_string(i + 1) + " has " +
                          std::to_string(entries[i].size()) +
                          " entries, expected " + std::to_string(cols.size()));
    }
  }
}

StochasticMatrix::StochasticMatrix(LabelSpace rows, LabelSpace cols,
                                   std::vector<std::vector<double>> entries)
    : StochasticMatrix(Raw{}, std::move(rows), std::move(cols),
                       std::move(entries)) {
  check_shape(rows_, cols_, entries_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      if (entries_[i][j] < 0.0) {
        throw NegativeEntry(static_cast<int>(i), static_cast<int>(j),
                            entries_[i][j]);
      }
      sum += entries_[i][j];
    }
    if (std::fabs(sum - 1.0) > kStochasticTolerance) {
      throw RowSumNotOne(static_cast<int>(i), sum);
    }
  }
}

StochasticMatrix StochasticMatrix::unchecked(
    LabelSpace rows, LabelSpace cols,
    std::vector<std::vector<double>> entries) {
  check_shape(rows, cols, entries);
  return StochasticMatrix(Raw{}, std::move(rows), std::move(cols),
                          std::move(entries));
}

MarkovChainModel::MarkovChainModel(LabelSpace states,
                                   StochasticMatrix transition,
                                   ProbVector initial)
    : states_(std::move(states)),
      transition_(std::move(transition)),
      initial_(std::move(initial)) {
  if (transition_.rows() != states_ || transition_.cols() != states_) {
    throw ShapeMismatch("transition matrix must map states to states");
  }
  if (initial_.space() != states_) {
    throw ShapeMismatch("initial distribution must live on the state space");
  }
}

HmmModel::HmmModel(MarkovChainModel chain, LabelSpace observations,
                   StochasticMatrix emission)
    : chain_(std::move(chain)),
      observations_(std::move(observations)),
      emission_(std::move(emission)) {
  if (emission_.rows() != chain_.states()) {
    throw ShapeMismatch("emission rows must match the state space");
  }
  if (emission_.cols() != observations_) {
    throw ShapeMismatch("emission columns must match the observation space");
  }
}

StateSequence::StateSequence(LabelSpace space, std::vector<int> indices)
    : space_(std::move(space)),
      indices_(checked_indices(space_, std::move(indices), "state")) {}

StateSequence StateSequence::from_labels(
    const LabelSpace& space, const std::vector<std::string>& labels) {
  return StateSequence(space, indices_from_labels(space, labels));
}

ObsSequence::ObsSequence(LabelSpace space, std::vector<int> indices)
    : space_(std::move(space)),
      indices_(checked_indices(space_, std::move(indices), "observation")) {}

ObsSequence ObsSequence::from_labels(const LabelSpace& space,
                                     const std::vector<std::string>& labels) {
  return ObsSequence(space, indices_from_labels(space, labels));
}

MarkovChainModel with_initial(const MarkovChainModel& model,
                              ProbVector initial) {
  return MarkovChainModel(model.states(), model.transition(),
                          std::move(initial));
}

HmmModel with_initial(const HmmModel& model, ProbVector initial) {
  return HmmModel(with_initial(model.chain(), std::move(initial)),
                  model.observations(), model.emission());
}

}  // namespace markov
