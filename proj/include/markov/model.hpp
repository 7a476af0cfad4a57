#pragma once

#include <string>
#include <vector>

#include "markov/errors.hpp"

namespace markov {

// Stochasticity checks admit binary-float representation error only.
inline constexpr double kStochasticTolerance = 1e-9;

// An ordered set of distinct, non-empty labels. Indices are 0-based in code
// and 1-based in every file format and message.
class LabelSpace {
 public:
  explicit LabelSpace(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Throws UnknownLabel if absent.
  int index_of(const std::string& label) const;

  bool operator==(const LabelSpace&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A probability distribution over a label space. Entries are kept bit-exact;
// near-misses are rejected, never renormalized.
class ProbVector {
 public:
  ProbVector(LabelSpace space, std::vector<double> entries);

  // Skips the non-negativity and sum checks. Reserved for the sanctioned
  // cases: scaled-prior decoding tests and product-form flattening.
  static ProbVector unchecked(LabelSpace space, std::vector<double> entries);

  const LabelSpace& space() const { return space_; }
  const std::vector<double>& entries() const { return entries_; }
  double operator[](int index) const { return entries_.at(index); }
  int size() const { return static_cast<int>(entries_.size()); }

  bool operator==(const ProbVector&) const = default;

 private:
  struct Raw {};
  ProbVector(Raw, LabelSpace space, std::vector<double> entries)
      : space_(std::move(space)), entries_(std::move(entries)) {}

  LabelSpace space_;
  std::vector<double> entries_;
};

// A row-stochastic matrix from a source space to a target space: each row is
// a distribution over the columns.
class StochasticMatrix {
 public:
  StochasticMatrix(LabelSpace rows, LabelSpace cols,
                   std::vector<std::vector<double>> entries);

  // Skips per-row stochasticity checks; see ProbVector::unchecked.
  static StochasticMatrix unchecked(LabelSpace rows, LabelSpace cols,
                                    std::vector<std::vector<double>> entries);

  const LabelSpace& rows() const { return rows_; }
  const LabelSpace& cols() const { return cols_; }
  const std::vector<std::vector<double>>& entries() const { return entries_; }
  double at(int row, int col) const { return entries_.at(row).at(col); }

  bool operator==(const StochasticMatrix&) const = default;

 private:
  struct Raw {};
  StochasticMatrix(Raw, LabelSpace rows, LabelSpace cols,
                   std::vector<std::vector<double>> entries)
      : rows_(std::move(rows)),
        cols_(std::move(cols)),
        entries_(std::move(entries)) {}

  static void check_shape(const LabelSpace& rows, const LabelSpace& cols,
                          const std::vector<std::vector<double>>& entries);

  LabelSpace rows_;
  LabelSpace cols_;
  std::vector<std::vector<double>> entries_;
};

// A time-homogeneous Markov chain: state space, transition matrix, initial
// distribution.
class MarkovChainModel {
 public:
  MarkovChainModel(LabelSpace states, StochasticMatrix transition,
                   ProbVector initial);

  const LabelSpace& states() const { return states_; }
  const StochasticMatrix& transition() const { return transition_; }
  const ProbVector& initial() const { return initial_; }

  bool operator==(const MarkovChainModel&) const = default;

 private:
  LabelSpace states_;
  StochasticMatrix transition_;
  ProbVector initial_;
};

// A hidden Markov model: a chain plus an emission matrix into an observation
// space.
class HmmModel {
 public:
  HmmModel(MarkovChainModel chain, LabelSpace observations,
           StochasticMatrix emission);

  const MarkovChainModel& chain() const { return chain_; }
  const LabelSpace& states() const { return chain_.states(); }
  const LabelSpace& observations() const { return observations_; }
  const StochasticMatrix& emission() const { return emission_; }

  bool operator==(const HmmModel&) const = default;

 private:
  MarkovChainModel chain_;
  LabelSpace observations_;
  StochasticMatrix emission_;
};

// A non-empty sequence of state indices over a space.
class StateSequence {
 public:
  StateSequence(LabelSpace space, std::vector<int> indices);
  static StateSequence from_labels(const LabelSpace& space,
                                   const std::vector<std::string>& labels);

  const LabelSpace& space() const { return space_; }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](int t) const { return indices_.at(t); }
  int size() const { return static_cast<int>(indices_.size()); }

  bool operator==(const StateSequence&) const = default;

 private:
  LabelSpace space_;
  std::vector<int> indices_;
};

// A non-empty sequence of observation indices over a space.
class ObsSequence {
 public:
  ObsSequence(LabelSpace space, std::vector<int> indices);
  static ObsSequence from_labels(const LabelSpace& space,
                                 const std::vector<std::string>& labels);

  const LabelSpace& space() const { return space_; }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](int t) const { return indices_.at(t); }
  int size() const { return static_cast<int>(indices_.size()); }

  bool operator==(const ObsSequence&) const = default;

 private:
  LabelSpace space_;
  std::vector<int> indices_;
};

// Copy of `model` with its initial distribution replaced.
MarkovChainModel with_initial(const MarkovChainModel& model,
                              ProbVector initial);
HmmModel with_initial(const HmmModel& model, ProbVector initial);

}  // namespace markov
