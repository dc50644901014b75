#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hsg/classifiers.hpp"
#include "hsg/enumeration.hpp"
#include "hsg/errors.hpp"
#include "hsg/fuzzy.hpp"
#include "hsg/ideals.hpp"
#include "hsg/io.hpp"

namespace hsg::cli {

namespace {

// Non-associative tables get their own exit status; everything else that
// goes wrong with the input is kInputError.
struct NotAssociative {};

HyperOp load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_table(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

HyperOp load_hypersemigroup(const std::string& path) {
  HyperOp h = load_table(path);
  if (!is_hypersemigroup(h)) throw NotAssociative{};
  return h;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite hypersemigroups: regularity classes and fuzzy subsets",
               "hsg"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  auto* classify_cmd =
      app.add_subcommand("classify", "Decide the five regularity classes");
  classify_cmd->add_option("file", file, "Table file")->required();
  classify_cmd->add_flag("--json", json, "Machine-readable report");

  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check route agreement and sample the fuzzy inequalities");
  verify_cmd->add_option("file", file, "Table file")->required();
  verify_cmd->add_option("--trials", trials,
                         "Random fuzzy subsets per class");
  verify_cmd->add_option("--seed", seed, "Sampler seed");
  verify_cmd->add_flag("--json", json, "Machine-readable report");

  std::size_t order = 0;
  std::uint64_t sample = 0;
  bool exhaustive = false;
  unsigned jobs = 1;
  bool progress = false;
  auto* census_cmd =
      app.add_subcommand("census", "Classify a population of tables");
  census_cmd->add_option("--order", order, "Carrier order")->required();
  auto* sample_opt =
      census_cmd->add_option("--sample", sample, "Number of random tables");
  census_cmd->add_option("--seed", seed, "Sampling seed");
  census_cmd->add_flag("--exhaustive", exhaustive,
                       "Allow exhaustive enumeration of order 3");
  census_cmd->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1U, 1024U));
  census_cmd->add_flag("--progress", progress, "Report progress on stderr");
  census_cmd->add_flag("--json", json, "Machine-readable report");

  std::string f_text;
  std::string g_text;
  auto* compose_cmd =
      app.add_subcommand("compose", "Sup-min composition of two fuzzy subsets");
  compose_cmd->add_option("file", file, "Table file")->required();
  compose_cmd->add_option("--f", f_text, "Left factor, e.g. 1/2,1")->required();
  compose_cmd->add_option("--g", g_text, "Right factor")->required();

  auto* ideals_cmd = app.add_subcommand(
      "ideals", "Fuzzy ideal predicates and ideal closures of f");
  ideals_cmd->add_option("file", file, "Table file")->required();
  ideals_cmd->add_option("--f", f_text, "Fuzzy subset")->required();

  std::uint64_t budget = 0;
  bool walk_all = false;
  auto* search_cmd = app.add_subcommand(
      "search-nonassoc",
      "Look for a non-associative table separating definition and fuzzy "
      "inequality");
  search_cmd->add_option("--order", order, "Carrier order")->required();
  search_cmd->add_option("--budget", budget, "Random tables to draw");
  search_cmd->add_option("--seed", seed, "Sampling seed");
  search_cmd->add_flag("--all", walk_all,
                       "Walk every table in enumeration order instead");
  search_cmd->add_flag("--json", json, "Machine-readable report");

  bool want_semigroup = false;
  auto* random_cmd =
      app.add_subcommand("random", "Print a random table (seeded)");
  random_cmd->add_option("--order", order, "Carrier order")->required();
  random_cmd->add_option("--seed", seed, "Seed");
  random_cmd->add_flag("--hypersemigroup", want_semigroup,
                       "Redraw until the table is associative");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (classify_cmd->parsed()) {
      const ClassificationReport report = classify(load_hypersemigroup(file));
      out << (json ? classification_json(report)
                   : format_classification(report));
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const TheoremReport report =
          verify_theorems(load_hypersemigroup(file), trials, seed);
      out << (json ? theorem_report_json(report)
                   : format_theorem_report(report));
      return report.passed() ? kOk : kCheckFailed;
    }

    if (census_cmd->parsed()) {
      CensusOptions options;
      if (sample_opt->count() > 0) {
        options.mode = PopulationMode::Sampled;
        options.sample_count = sample;
      }
      options.seed = seed;
      options.allow_large = exhaustive;
      options.jobs = jobs;
      if (progress) {
        options.progress = [&err](std::uint64_t done, std::uint64_t total) {
          err << "census: " << done << "/" << total << " partitions\n";
        };
      }
      const CensusReport report = census(order, options);
      out << (json ? census_json(report) : format_census(report));
      return report.passed() ? kOk : kCheckFailed;
    }

    if (compose_cmd->parsed()) {
      const HyperOp h = load_table(file);
      const FuzzySubset f = parse_fuzzy_subset(f_text, h.order());
      const FuzzySubset g = parse_fuzzy_subset(g_text, h.order());
      out << compose(h, f, g).to_string() << '\n';
      return kOk;
    }

    if (ideals_cmd->parsed()) {
      const HyperOp h = load_table(file);
      const FuzzySubset f = parse_fuzzy_subset(f_text, h.order());
      const FuzzySubset right = right_ideal_closure(h, f);
      const FuzzySubset left = left_ideal_closure(h, f);
      out << "fuzzy right ideal: " << yes_no(is_fuzzy_right_ideal(h, f))
          << '\n'
          << "fuzzy left ideal: " << yes_no(is_fuzzy_left_ideal(h, f)) << '\n'
          << "right ideal closure: " << right.to_string() << '\n'
          << "left ideal closure: " << left.to_string() << '\n';
      if (is_hypersemigroup(h) &&
          is_class_elementwise(h, RegularityClass::Regular).holds) {
        out << "meet equals composition on the closures: "
            << yes_no(check_meet_identity(h, right, left)) << '\n';
      }
      return kOk;
    }

    if (search_cmd->parsed()) {
      const DivergenceSearch search =
          walk_all ? search_nonassociative_divergence_exhaustive(order)
                   : search_nonassociative_divergence(order, budget, seed);
      out << (json ? divergence_json(search) : format_divergence(search));
      return kOk;
    }

    if (random_cmd->parsed()) {
      constexpr std::uint64_t kMaxDraws = 1'000'000;
      HyperOp h = random_hypergroupoid(order, seed);
      for (std::uint64_t i = 0; want_semigroup && !is_hypersemigroup(h); ++i) {
        if (i == kMaxDraws) {
          throw BudgetError("no hypersemigroup found in " +
                            std::to_string(kMaxDraws) + " draws");
        }
        h = random_hypergroupoid(order, sample_seed(seed, i));
      }
      out << serialize_table(h);
      return kOk;
    }
  } catch (const NotAssociative&) {
    err << "hsg: " << file << ": hyperoperation is not associative\n";
    return kNotAssociative;
  } catch (const InputError& e) {
    err << "hsg: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetError& e) {
    err << "hsg: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "hsg: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hsg::cli
