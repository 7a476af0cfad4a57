#include "markov/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "markov/evolution.hpp"
#include "markov/fhmm.hpp"
#include "markov/hmm.hpp"
#include "markov/io.hpp"
#include "markov/viterbi.hpp"
#include "markov/vmm.hpp"

namespace markov {

namespace {

// Bad input on the command line itself; exits with code 2 like file errors.
class CliUsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  std::stringstream stream(text);
  while (std::getline(stream, current, ',')) {
    const auto first = current.find_first_not_of(" \t");
    const auto last = current.find_last_not_of(" \t");
    items.push_back(first == std::string::npos
                        ? std::string()
                        : current.substr(first, last - first + 1));
  }
  return items;
}

Model load_model(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw CliUsageError("cannot open model file: " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_model(buffer.str());
}

ProbVector parse_init(const LabelSpace& states, const std::string& csv) {
  try {
    std::vector<double> entries;
    for (const auto& item : split_csv(csv)) {
      std::size_t used = 0;
      const double value = std::stod(item, &used);
      if (used != item.size()) throw Error("not a number: \"" + item + "\"");
      entries.push_back(value);
    }
    return ProbVector(states, std::move(entries));
  } catch (const std::exception& e) {
    throw CliUsageError("invalid --init: " + std::string(e.what()));
  }
}

MarkovChainModel chain_of(const Model& model, const std::string& init) {
  MarkovChainModel chain = std::visit(
      [](const auto& m) -> MarkovChainModel {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MarkovChainModel>) return m;
        if constexpr (std::is_same_v<T, HmmModel>) return m.chain();
        throw CliUsageError("this command needs a markov or hmm model");
      },
      model);
  if (init.empty()) return chain;
  return with_initial(chain, parse_init(chain.states(), init));
}

HmmModel hmm_of(const Model& model, const std::string& init) {
  const auto* hmm = std::get_if<HmmModel>(&model);
  if (hmm == nullptr) throw CliUsageError("this command needs an hmm model");
  if (init.empty()) return *hmm;
  return with_initial(*hmm, parse_init(hmm->states(), init));
}

const FactorialHmmModel& fhmm_of(const Model& model) {
  const auto* fhmm = std::get_if<FactorialHmmModel>(&model);
  if (fhmm == nullptr) throw CliUsageError("this command needs an fhmm model");
  return *fhmm;
}

StateSequence state_seq(const LabelSpace& states, const std::string& csv) {
  try {
    return StateSequence::from_labels(states, split_csv(csv));
  } catch (const Error& e) {
    throw CliUsageError("invalid --seq: " + std::string(e.what()));
  }
}

ObsSequence obs_seq(const LabelSpace& observations, const std::string& csv) {
  try {
    return ObsSequence::from_labels(observations, split_csv(csv));
  } catch (const Error& e) {
    throw CliUsageError("invalid --obs: " + std::string(e.what()));
  }
}

std::string join_labels(const StateSequence& seq) {
  std::string out;
  for (int t = 0; t < seq.size(); ++t) {
    if (t > 0) out += ",";
    out += seq.space().label(seq[t]);
  }
  return out;
}

void print_distribution(std::ostream& out, const ProbVector& dist) {
  for (int i = 0; i < dist.size(); ++i) {
    out << dist.space().label(i) << " " << format_entry(dist[i]) << "\n";
  }
}

std::string describe(const Model& model) {
  if (const auto* chain = std::get_if<MarkovChainModel>(&model)) {
    return "markov model (" + std::to_string(chain->states().size()) +
           " states)";
  }
  if (const auto* hmm = std::get_if<HmmModel>(&model)) {
    return "hmm model (" + std::to_string(hmm->states().size()) +
           " states, " + std::to_string(hmm->observations().size()) +
           " observations)";
  }
  const auto& fhmm = std::get<FactorialHmmModel>(model);
  return "fhmm model (" + std::to_string(fhmm.component_count()) +
         " components, " + std::to_string(fhmm.observations().size()) +
         " observations)";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact inference on discrete Markov chains and hidden Markov "
               "models"};
  app.name("markov");
  app.require_subcommand(1);

  std::string model_path;
  std::string init;
  std::string seq;
  std::string obs;
  std::string given;
  int steps = 0;
  int horizon = 1;
  bool log_space = false;
  bool dump = false;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_path, "model file (JSON)")->required();
  };
  auto add_init = [&](CLI::App* sub) {
    sub->add_option("--init", init,
                    "override the initial distribution, e.g. \"1,0,0\"");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a model file");
  add_model(validate);

  CLI::App* evolve_cmd = app.add_subcommand(
      "evolve", "distribution after a number of transitions");
  add_model(evolve_cmd);
  add_init(evolve_cmd);
  evolve_cmd->add_option("--steps", steps, "number of transitions")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* chain_prob = app.add_subcommand(
      "chain-prob", "probability of a fully observed state sequence");
  add_model(chain_prob);
  add_init(chain_prob);
  chain_prob->add_option("--seq", seq, "state labels, e.g. \"sunny,foggy\"")
      ->required();
  chain_prob->add_option(
      "--given", given,
      "condition on this current state instead of the initial distribution");

  CLI::App* joint = app.add_subcommand(
      "joint", "joint probability of observations and a state sequence");
  add_model(joint);
  add_init(joint);
  joint->add_option("--obs", obs, "observation labels")->required();
  joint->add_option("--seq", seq, "state labels")->required();

  CLI::App* likelihood =
      app.add_subcommand("likelihood", "observation likelihood by enumeration");
  add_model(likelihood);
  add_init(likelihood);
  likelihood->add_option("--obs", obs, "observation labels")->required();

  CLI::App* viterbi_cmd =
      app.add_subcommand("viterbi", "most likely state path");
  add_model(viterbi_cmd);
  add_init(viterbi_cmd);
  viterbi_cmd->add_option("--obs", obs, "observation labels")->required();
  viterbi_cmd->add_flag("--log-space", log_space, "decode with log sums");
  viterbi_cmd->add_flag("--dump-trellis", dump, "print the delta/psi table");

  CLI::App* posterior = app.add_subcommand(
      "posterior", "per-time state posteriors given the observations");
  add_model(posterior);
  add_init(posterior);
  posterior->add_option("--obs", obs, "observation labels")->required();

  CLI::App* map_brute = app.add_subcommand(
      "map-brute", "most likely state path by exhaustive search");
  add_model(map_brute);
  add_init(map_brute);
  map_brute->add_option("--obs", obs, "observation labels")->required();

  CLI::App* fhmm_likelihood = app.add_subcommand(
      "fhmm-likelihood", "observation likelihood of a factorial model");
  add_model(fhmm_likelihood);
  fhmm_likelihood->add_option("--obs", obs, "observation labels")->required();

  CLI::App* export_dot_cmd = app.add_subcommand(
      "export-dot", "unrolled model graph in DOT format");
  add_model(export_dot_cmd);
  export_dot_cmd
      ->add_option("--horizon", horizon, "number of unrolled time steps")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Model model = load_model(model_path);

    if (*validate) {
      out << "ok: " << describe(model) << "\n";
    } else if (*evolve_cmd) {
      const MarkovChainModel chain = chain_of(model, init);
      print_distribution(out, evolve(chain, steps));
    } else if (*chain_prob) {
      const MarkovChainModel chain = chain_of(model, init);
      const StateSequence q = state_seq(chain.states(), seq);
      double value = 0.0;
      if (given.empty()) {
        value = chain_probability(chain, q);
      } else {
        int given_state = 0;
        try {
          given_state = chain.states().index_of(given);
        } catch (const Error& e) {
          throw CliUsageError("invalid --given: " + std::string(e.what()));
        }
        value = conditional_chain_probability(chain, given_state, q);
      }
      out << format_probability(value) << "\n";
    } else if (*joint) {
      const HmmModel hmm = hmm_of(model, init);
      const ObsSequence x = obs_seq(hmm.observations(), obs);
      const StateSequence q = state_seq(hmm.states(), seq);
      out << format_probability(joint_likelihood(hmm, x, q)) << "\n";
    } else if (*likelihood) {
      const HmmModel hmm = hmm_of(model, init);
      const ObsSequence x = obs_seq(hmm.observations(), obs);
      out << format_probability(sequence_likelihood(hmm, x)) << "\n";
    } else if (*viterbi_cmd) {
      const HmmModel hmm = hmm_of(model, init);
      const ObsSequence x = obs_seq(hmm.observations(), obs);
      const ViterbiTrellis trellis = viterbi_decode(hmm, x, log_space);
      out << "path: " << join_labels(trellis.best_path) << "\n";
      if (log_space) {
        out << "log-value: " << format_entry(trellis.best_value) << "\n";
      } else {
        out << "value: " << format_probability(trellis.best_value) << "\n";
      }
      if (dump) out << dump_trellis(trellis);
    } else if (*posterior) {
      const HmmModel hmm = hmm_of(model, init);
      const ObsSequence x = obs_seq(hmm.observations(), obs);
      const PosteriorMarginals marginals = posterior_marginals(hmm, x);
      for (std::size_t t = 0; t < marginals.per_time.size(); ++t) {
        const ProbVector& dist = marginals.per_time[t];
        out << "t=" << (t + 1);
        for (int i = 0; i < dist.size(); ++i) {
          out << " " << dist.space().label(i) << " " << format_entry(dist[i]);
        }
        out << "\n";
      }
    } else if (*map_brute) {
      const HmmModel hmm = hmm_of(model, init);
      const ObsSequence x = obs_seq(hmm.observations(), obs);
      const auto [path, value] = map_path_bruteforce(hmm, x);
      out << "path: " << join_labels(path) << "\n";
      out << "value: " << format_probability(value) << "\n";
    } else if (*fhmm_likelihood) {
      const FactorialHmmModel& fhmm = fhmm_of(model);
      const ObsSequence y = obs_seq(fhmm.observations(), obs);
      out << format_probability(fhmm_sequence_likelihood(fhmm, y)) << "\n";
    } else if (*export_dot_cmd) {
      if (const auto* chain = std::get_if<MarkovChainModel>(&model)) {
        out << export_dot(*chain, horizon);
      } else if (const auto* hmm = std::get_if<HmmModel>(&model)) {
        out << export_dot(*hmm, horizon);
      } else {
        throw CliUsageError("this command needs a markov or hmm model");
      }
    }
  } catch (const CliUsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace markov
