// Command-line front end for the pminet library.
#include "pminet/pipeline.hpp"
#include "pminet/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using pminet::PipelineConfig;

struct CliOptions {
  PipelineConfig config;
  std::string topology = "mst";
  std::string estimator = "sg";
  std::string sg_prior = "joint";
};

void add_common_options(CLI::App* cmd, CliOptions* opt, bool needs_measure) {
  cmd->add_option("--prices", opt->config.prices_path, "Price table (CSV)")
      ->required();
  cmd->add_option("--sectors", opt->config.sectors_path,
                  "Ticker-to-sector table (CSV)");
  cmd->add_option("--out", opt->config.out_dir, "Output directory");
  if (needs_measure) {
    cmd->add_option("--measure", opt->config.measure,
                    "Measure index (1-6)")
        ->check(CLI::Range(1, 6));
    cmd->add_option("--topology", opt->topology, "Network topology")
        ->check(CLI::IsMember({"mst", "pmfg"}));
  }
  cmd->add_option("--estimator", opt->estimator, "Entropy estimator")
      ->check(CLI::IsMember({"ml", "sg"}));
  cmd->add_option("--sg-prior", opt->sg_prior,
                  "Pseudocount convention for the sg estimator")
      ->check(CLI::IsMember({"joint", "per-axis"}));
  cmd->add_option("--bins", opt->config.bins, "Discretization bins")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--alpha", opt->config.alpha, "Significance level")
      ->check(CLI::Range(1e-9, 0.999999999));
  cmd->add_option("--seed", opt->config.seed, "Random seed");
  cmd->set_config("--config", "", "Read options from an INI file");
}

PipelineConfig resolve(const CliOptions& opt) {
  PipelineConfig config = opt.config;
  config.topology =
      opt.topology == "mst" ? pminet::Topology::Tree : pminet::Topology::Planar;
  config.estimator =
      opt.estimator == "ml" ? pminet::Estimator::Ml : pminet::Estimator::Sg;
  config.sg_prior = opt.sg_prior == "joint" ? pminet::SgPrior::JointAlphabet
                                            : pminet::SgPrior::PerAxis;
  return config;
}

std::vector<int> parse_int_list(const std::string& text, char delimiter) {
  std::vector<int> values;
  std::string item;
  for (size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos == text.size() || text[pos] == delimiter) {
      if (!item.empty()) values.push_back(std::stoi(item));
      item.clear();
    } else {
      item += text[pos];
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency networks from price series"};
  app.set_version_flag("--version", std::string("pminet ") + pminet::kVersion);
  app.require_subcommand(1);

  struct StageCommand {
    const char* name;
    const char* help;
    pminet::Stage through;
    bool needs_measure;
  };
  const StageCommand stage_commands[] = {
      {"returns", "Load prices and emit log returns", pminet::Stage::Returns, false},
      {"discretize", "Emit discretized return states", pminet::Stage::Discretize,
       false},
      {"matrix", "Compute the pairwise measure matrix", pminet::Stage::Matrix, true},
      {"network", "Build the filtered network", pminet::Stage::Network, true},
      {"metrics", "Build the network and compute its metrics",
       pminet::Stage::Metrics, true},
  };
  for (const auto& sc : stage_commands) {
    CLI::App* cmd = app.add_subcommand(sc.name, sc.help);
    auto opt = std::make_shared<CliOptions>();
    add_common_options(cmd, opt.get(), sc.needs_measure);
    const pminet::Stage through = sc.through;
    cmd->callback([opt, through] { pminet::run_pipeline(resolve(*opt), through); });
  }

  {
    CLI::App* cmd = app.add_subcommand(
        "compare", "Build all twelve networks and compare their centralities");
    auto opt = std::make_shared<CliOptions>();
    add_common_options(cmd, opt.get(), false);
    cmd->callback([opt] {
      const auto result = pminet::run_compare(resolve(*opt));
      std::fputs(result.summary.c_str(), stdout);
    });
  }

  {
    CLI::App* cmd = app.add_subcommand(
        "significance", "Gamma significance test for conditioned information");
    auto opt = std::make_shared<CliOptions>();
    // The Gamma null describes the plug-in estimator, so that is the default
    // here; --estimator still overrides.
    opt->estimator = "ml";
    add_common_options(cmd, opt.get(), false);
    cmd->callback([opt] { pminet::run_significance(resolve(*opt)); });
  }

  {
    CLI::App* cmd =
        app.add_subcommand("synth", "Generate a synthetic market with known structure");
    auto spec = std::make_shared<pminet::SynthSpec>();
    auto blocks = std::make_shared<std::string>();
    auto chains = std::make_shared<std::vector<std::string>>();
    auto nonlinear = std::make_shared<std::vector<std::string>>();
    auto out_dir = std::make_shared<std::string>("out");
    cmd->add_option("--tickers", spec->tickers, "Number of series")->required();
    cmd->add_option("--samples", spec->samples, "Number of return observations")
        ->required();
    cmd->add_option("--blocks", *blocks,
                    "Sector block sizes, e.g. 10,10,10 (default: one block)");
    cmd->add_option("--coupling", spec->block_coupling,
                    "Common-factor coupling within a block")
        ->check(CLI::Range(0.0, 0.999999));
    cmd->add_option("--chain", *chains,
                    "Mediation chain src,med,tgt by ticker index (repeatable)");
    cmd->add_option("--chain-coupling", spec->chain_coupling,
                    "Coupling along mediation chains");
    cmd->add_option("--nonlinear", *nonlinear,
                    "Nonlinear pair x,y,square|abs by ticker index (repeatable)");
    cmd->add_option("--seed", spec->seed, "Random seed");
    cmd->add_option("--out", *out_dir, "Output directory");
    cmd->callback([spec, blocks, chains, nonlinear, out_dir] {
      if (!blocks->empty()) spec->sector_blocks = parse_int_list(*blocks, ',');
      for (const auto& text : *chains) {
        const auto parts = parse_int_list(text, ',');
        if (parts.size() != 3) {
          throw std::invalid_argument("--chain expects src,med,tgt");
        }
        spec->chains.push_back({parts[0], parts[1], parts[2]});
      }
      for (const auto& text : *nonlinear) {
        const auto comma = text.rfind(',');
        const auto parts =
            comma == std::string::npos
                ? std::vector<int>{}
                : parse_int_list(text.substr(0, comma), ',');
        const std::string tag =
            comma == std::string::npos ? "" : text.substr(comma + 1);
        if (parts.size() != 2 || (tag != "square" && tag != "abs")) {
          throw std::invalid_argument("--nonlinear expects x,y,square|abs");
        }
        spec->nonlinear.push_back({parts[0], parts[1],
                                   tag == "square"
                                       ? pminet::NonlinearTransform::Square
                                       : pminet::NonlinearTransform::Abs});
      }
      pminet::run_synth(*spec, *out_dir);
    });
  }

  {
    CLI::App* cmd = app.add_subcommand("export", "Convert a saved edge list");
    auto edges = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("graphml");
    auto out = std::make_shared<std::string>();
    auto sectors = std::make_shared<std::string>();
    cmd->add_option("--edges", *edges, "Edge list CSV produced by a network run")
        ->required();
    cmd->add_option("--format", *format, "Output format")
        ->check(CLI::IsMember({"edgelist", "graphml", "dot"}));
    cmd->add_option("--to", *out, "Output file")->required();
    cmd->add_option("--sectors", *sectors, "Ticker-to-sector table (CSV)");
    cmd->callback([edges, format, out, sectors] {
      pminet::export_graph(*edges, *format, *out, *sectors);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
