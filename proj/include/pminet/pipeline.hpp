#pragma once

#include "pminet/infotheory.hpp"
#include "pminet/netbuild.hpp"
#include "pminet/similarity.hpp"
#include "pminet/synth.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pminet {

struct PipelineConfig {
  std::string prices_path;
  std::string sectors_path;       // empty = no sector metadata
  std::string out_dir = "out";
  int measure = 4;                // 1..6
  Topology topology = Topology::Tree;
  Estimator estimator = Estimator::Sg;
  SgPrior sg_prior = SgPrior::JointAlphabet;
  int bins = 4;
  double alpha = 0.05;
  std::uint64_t seed = 1;
};

/// How far run_pipeline goes.  Each stage appends its artifacts; the
/// manifest is always written last.
enum class Stage { Returns, Discretize, Matrix, Network, Metrics };

struct StageRecord {
  std::string name;
  double millis = 0.0;
  bool cache_hit = false;
};

struct PipelineResult {
  std::vector<std::string> artifacts;   // file names relative to out_dir
  std::vector<StageRecord> stages;
  std::vector<std::string> warnings;
  std::string manifest_path;
  std::string summary;                  // human-readable table, when the command has one
};

/// Runs ingest through `through`, writing artifacts and manifest.json into
/// config.out_dir.  Identical config and inputs produce byte-identical
/// artifacts; wall-clock data is confined to the manifest's stage records
/// and timestamp.  Similarity matrices and the partial-information block
/// are cached under out_dir/cache keyed by input digest, measure,
/// estimator, and bins.
PipelineResult run_pipeline(const PipelineConfig& config, Stage through = Stage::Metrics);

/// Builds all twelve networks (six measures, tree and planar each), writes
/// the two 6x6 centrality-correlation matrices and a per-network metrics
/// table with the complete-graph sector baseline.
PipelineResult run_compare(const PipelineConfig& config);

/// Measure-4 minimum conditional information with its significance mask at
/// config.alpha: matrix, mask, and threshold report.
PipelineResult run_significance(const PipelineConfig& config);

/// Writes the generated market (prices, sectors, ground truth) into
/// out_dir in the same formats the ingest stage reads.
PipelineResult run_synth(const SynthSpec& spec, const std::string& out_dir);

/// Re-serializes an edge-list CSV as edgelist, graphml, or dot.
void export_graph(const std::string& edges_path, const std::string& format,
                  const std::string& out_path, const std::string& sectors_path = "");

const char* stage_name(Stage stage);
const char* topology_tag(Topology topology);
const char* estimator_tag(Estimator estimator);

}  // namespace pminet
