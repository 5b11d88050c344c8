#include "pminet/pipeline.hpp"

#include "pminet/ingest.hpp"
#include "pminet/io.hpp"
#include "pminet/netmetrics.hpp"
#include "pminet/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <stdexcept>

namespace pminet {

namespace fs = std::filesystem;
using nlohmann::json;

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::Returns: return "returns";
    case Stage::Discretize: return "discretize";
    case Stage::Matrix: return "matrix";
    case Stage::Network: return "network";
    case Stage::Metrics: return "metrics";
  }
  throw std::invalid_argument("stage_name: unknown stage");
}

const char* topology_tag(Topology topology) {
  switch (topology) {
    case Topology::Tree: return "mst";
    case Topology::Planar: return "pmfg";
    case Topology::Unrestricted: return "graph";
  }
  throw std::invalid_argument("topology_tag: unknown topology");
}

const char* estimator_tag(Estimator estimator) {
  return estimator == Estimator::Ml ? "ml" : "sg";
}

namespace {

const char* prior_tag(SgPrior prior) {
  return prior == SgPrior::JointAlphabet ? "joint" : "per-axis";
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

void validate_config(const PipelineConfig& config) {
  if (config.prices_path.empty()) {
    throw std::invalid_argument("config: prices path is required");
  }
  if (config.out_dir.empty()) {
    throw std::invalid_argument("config: output directory is required");
  }
  measure_from_int(config.measure);
  if (config.topology == Topology::Unrestricted) {
    throw std::invalid_argument("config: topology must be mst or pmfg");
  }
  if (config.bins < 2) throw std::invalid_argument("config: bins must be >= 2");
  if (!(config.alpha > 0.0) || !(config.alpha < 1.0)) {
    throw std::invalid_argument("config: alpha must lie in (0, 1)");
  }
}

// Canonical key=value rendering; the digest identifies the resolved
// configuration independently of where the artifacts land.
std::string config_canonical(const PipelineConfig& config) {
  std::string s;
  s += "alpha=" + format_double(config.alpha) + "\n";
  s += std::string("bins=") + std::to_string(config.bins) + "\n";
  s += std::string("estimator=") + estimator_tag(config.estimator) + "\n";
  s += "measure=" + std::to_string(config.measure) + "\n";
  s += "prices=" + config.prices_path + "\n";
  s += "sectors=" + config.sectors_path + "\n";
  s += "seed=" + std::to_string(config.seed) + "\n";
  s += std::string("sg_prior=") + prior_tag(config.sg_prior) + "\n";
  s += std::string("topology=") + topology_tag(config.topology) + "\n";
  return s;
}

json config_json(const PipelineConfig& config) {
  return json{{"prices", config.prices_path},
              {"sectors", config.sectors_path},
              {"measure", config.measure},
              {"topology", topology_tag(config.topology)},
              {"estimator", estimator_tag(config.estimator)},
              {"sg_prior", prior_tag(config.sg_prior)},
              {"bins", config.bins},
              {"alpha", config.alpha},
              {"seed", config.seed}};
}

struct Dataset {
  std::vector<std::string> dates;  // dates of the return rows
  std::vector<ReturnSeries> returns;
  std::vector<DiscreteSeries> states;
  std::vector<std::string> tickers;
  std::vector<ExclusionRecord> excluded;
  SectorMap sectors;
  bool have_sectors = false;
  std::string prices_digest;
  std::string sectors_digest;
};

Dataset load_dataset(const PipelineConfig& config) {
  Dataset data;
  data.prices_digest = file_digest(config.prices_path);
  auto report = load_prices(config.prices_path);
  if (report.series.empty()) {
    throw std::runtime_error("ingest: no ticker survived loading '" +
                             config.prices_path + "'");
  }
  data.excluded = std::move(report.excluded);
  data.dates.assign(report.dates.begin() + 1, report.dates.end());
  for (const auto& series : report.series) {
    data.returns.push_back(log_returns(series));
    data.tickers.push_back(series.ticker);
  }
  if (!config.sectors_path.empty()) {
    data.sectors_digest = file_digest(config.sectors_path);
    data.sectors = load_sectors(config.sectors_path);
    data.have_sectors = true;
  }
  return data;
}

void discretize_dataset(Dataset& data, int bins) {
  data.states.clear();
  data.states.reserve(data.returns.size());
  for (const auto& series : data.returns) {
    data.states.push_back(discretize_quartiles(series, bins));
  }
}

// Collects stage records, artifacts, and warnings, then renders the
// manifest.  Wall-clock data lives only in the stage records and the
// timestamp.
class ManifestBuilder {
 public:
  ManifestBuilder(std::string out_dir, std::string command)
      : out_dir_(std::move(out_dir)), command_(std::move(command)) {}

  void set_config(json config, const std::string& digest) {
    config_ = std::move(config);
    config_digest_ = digest;
  }
  void add_input(const std::string& role, const std::string& path,
                 const std::string& digest) {
    inputs_[role] = json{{"path", path}, {"digest", digest}};
  }
  void add_stage(const std::string& name, double millis, bool cache_hit) {
    stages_.push_back(json{
        {"name", name}, {"millis", std::round(millis * 1000.0) / 1000.0},
        {"cache_hit", cache_hit}});
  }
  void add_artifact(const std::string& name) {
    json entry{{"file", name},
               {"digest", file_digest((fs::path(out_dir_) / name).string())}};
    for (auto& existing : artifacts_) {
      if (existing["file"] == name) {
        existing = std::move(entry);
        return;
      }
    }
    artifacts_.push_back(std::move(entry));
  }
  void add_exclusions(const std::vector<ExclusionRecord>& excluded) {
    for (const auto& record : excluded) {
      excluded_.push_back(json{{"ticker", record.ticker}, {"reason", record.reason}});
    }
  }
  void add_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) warnings_.push_back(w);
  }

  std::string write() {
    json manifest{{"tool", "pminet"},
                  {"version", kVersion},
                  {"command", command_},
                  {"config", config_},
                  {"config_digest", config_digest_},
                  {"inputs", inputs_},
                  {"excluded", excluded_},
                  {"warnings", warnings_},
                  {"stages", stages_},
                  {"artifacts", artifacts_},
                  {"timestamp", iso_timestamp()}};
    const auto path = (fs::path(out_dir_) / "manifest.json").string();
    write_file(path, manifest.dump(2) + "\n");
    return path;
  }

 private:
  std::string out_dir_;
  std::string command_;
  json config_;
  std::string config_digest_;
  json inputs_ = json::object();
  json excluded_ = json::array();
  json warnings_ = json::array();
  json stages_ = json::array();
  json artifacts_ = json::array();
};

// Shared context for the staged runners.
struct Run {
  const PipelineConfig& config;
  ManifestBuilder manifest;
  PipelineResult result;
  Dataset data;
  std::string config_digest;
  std::string comment;  // "pminet <version> config <digest>", stamped on artifacts

  Run(const PipelineConfig& cfg, const std::string& command)
      : config(cfg), manifest(cfg.out_dir, command) {
    validate_config(cfg);
    fs::create_directories(cfg.out_dir);
    config_digest = digest_hex(config_canonical(cfg));
    comment = std::string("pminet ") + kVersion + " config " + config_digest;
    manifest.set_config(config_json(cfg), config_digest);
  }

  std::string path_of(const std::string& name) const {
    return (fs::path(config.out_dir) / name).string();
  }

  void emit(const std::string& name) {
    manifest.add_artifact(name);
    if (std::find(result.artifacts.begin(), result.artifacts.end(), name) ==
        result.artifacts.end()) {
      result.artifacts.push_back(name);
    }
  }

  template <typename Body>
  void stage(const std::string& name, Body body) {
    Timer timer;
    bool cache_hit = false;
    try {
      body(&cache_hit);
    } catch (const std::exception& e) {
      throw std::runtime_error(name + ": " + e.what());
    }
    manifest.add_stage(name, timer.millis(), cache_hit);
    result.stages.push_back({name, timer.millis(), cache_hit});
  }

  void finish() {
    manifest.add_exclusions(data.excluded);
    manifest.add_warnings(result.warnings);
    result.manifest_path = manifest.write();
  }
};

void stage_returns(Run& run) {
  run.stage("returns", [&](bool*) {
    run.data = load_dataset(run.config);
    run.manifest.add_input("prices", run.config.prices_path, run.data.prices_digest);
    if (run.data.have_sectors) {
      run.manifest.add_input("sectors", run.config.sectors_path,
                             run.data.sectors_digest);
    }
    write_returns_csv(run.path_of("returns.csv"), run.data.dates, run.data.returns,
                      run.comment);
    run.emit("returns.csv");
  });
}

void stage_discretize(Run& run) {
  run.stage("discretize", [&](bool*) {
    discretize_dataset(run.data, run.config.bins);
    write_states_csv(run.path_of("states.csv"), run.data.dates, run.data.states,
                     run.comment);
    run.emit("states.csv");
  });
}

std::string input_cache_key(const Run& run) {
  return run.data.prices_digest + "|measure=" + std::to_string(run.config.measure) +
         "|estimator=" + estimator_tag(run.config.estimator) +
         "|prior=" + prior_tag(run.config.sg_prior) +
         "|bins=" + std::to_string(run.config.bins);
}

std::string block_cache_key(const Run& run) {
  return run.data.prices_digest +
         "|estimator=" + estimator_tag(run.config.estimator) +
         "|prior=" + prior_tag(run.config.sg_prior) +
         "|bins=" + std::to_string(run.config.bins) + "|pmi-block";
}

std::string cache_file(const Run& run, const std::string& prefix,
                       const std::string& key) {
  return run.path_of("cache/" + prefix + "_" + digest_hex(key) + ".bin");
}

// Loads the tensor block from cache or computes and caches it.
PmiBlock obtain_block(Run& run, bool* cache_hit) {
  const std::string key = block_cache_key(run);
  const std::string file = cache_file(run, "pmiblock", key);
  if (auto cached = load_pmi_block(file, key)) {
    *cache_hit = true;
    return std::move(*cached);
  }
  PmiBlock block =
      compute_pmi_block(run.data.states, run.config.estimator, run.config.sg_prior);
  save_pmi_block(file, key, block);
  return block;
}

struct MatrixOutcome {
  Eigen::MatrixXd values;
  bool influence = false;
};

MatrixOutcome compute_matrix(Run& run, bool* cache_hit) {
  const Measure measure = measure_from_int(run.config.measure);
  MatrixOutcome outcome;
  outcome.influence = is_influence(measure);

  const std::string key = input_cache_key(run);
  const std::string file = cache_file(run, "matrix", key);
  if (auto cached = load_matrix_cache(file, key, nullptr)) {
    *cache_hit = true;
    outcome.values = std::move(*cached);
    return outcome;
  }

  switch (measure) {
    case Measure::CorrDistance:
      outcome.values = corr_distance(run.data.returns).values;
      break;
    case Measure::MiDistance:
      outcome.values =
          mi_distance(run.data.states, run.config.estimator, run.config.sg_prior)
              .values;
      break;
    case Measure::PcorrMinDistance:
      outcome.values = pcorr_min_distance(run.data.returns, &run.result.warnings).values;
      break;
    case Measure::PmiMinDistance:
      outcome.values = pmi_min_distance(obtain_block(run, cache_hit)).values;
      break;
    case Measure::CorrInfluence:
      outcome.values = avg_corr_influence(run.data.returns).values;
      break;
    case Measure::MiInfluence:
      outcome.values = avg_mi_influence(obtain_block(run, cache_hit)).values;
      break;
  }
  save_matrix_cache(file, key, run.data.tickers, outcome.values);
  return outcome;
}

std::string matrix_artifact(const PipelineConfig& config) {
  return "matrix_m" + std::to_string(config.measure) + ".csv";
}

std::string network_basename(const PipelineConfig& config) {
  return "network_m" + std::to_string(config.measure) + "_" +
         topology_tag(config.topology);
}

Network build_network(const Run& run, const MatrixOutcome& matrix) {
  const Measure measure = measure_from_int(run.config.measure);
  if (matrix.influence) {
    InfluenceMatrix influence{run.data.tickers, measure, matrix.values};
    return build_influence_graph(influence, run.config.topology);
  }
  SimilarityMatrix similarity{run.data.tickers, measure, matrix.values};
  return run.config.topology == Topology::Tree ? build_mst(similarity)
                                               : build_pmfg(similarity);
}

json network_report(const Run& run, const Network& network) {
  json report{{"config_digest", run.config_digest},
              {"measure", run.config.measure},
              {"measure_tag", measure_tag(measure_from_int(run.config.measure))},
              {"topology", topology_tag(run.config.topology)},
              {"directed", network.directed},
              {"nodes", network.node_count()},
              {"edges", network.edge_count()},
              {"skeleton_edges", static_cast<int>(skeleton_pairs(network).size())}};
  if (run.data.have_sectors) {
    report["sector_ratio"] = sector_ratio(network, run.data.sectors);
    report["sector_baseline"] = complete_graph_sector_ratio(run.data.sectors);
  }
  if (network.node_count() >= 3) {
    report["clustering"] = clustering_coefficient(network);
  }
  return report;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config, Stage through) {
  Run run(config, "run");

  stage_returns(run);
  if (through >= Stage::Discretize) stage_discretize(run);

  MatrixOutcome matrix;
  if (through >= Stage::Matrix) {
    run.stage("matrix", [&](bool* cache_hit) {
      matrix = compute_matrix(run, cache_hit);
      write_matrix_csv(run.path_of(matrix_artifact(config)), run.data.tickers,
                       matrix.values, run.comment);
      run.emit(matrix_artifact(config));
    });
  }

  Network network;
  if (through >= Stage::Network) {
    run.stage("network", [&](bool*) {
      network = build_network(run, matrix);
      if (run.data.have_sectors) apply_sectors(network, run.data.sectors);
      const std::string base = network_basename(config);
      write_edge_list(run.path_of(base + ".csv"), network, run.comment);
      write_file(run.path_of(base + ".graphml"),
                 to_graphml(network, nullptr, run.comment));
      write_file(run.path_of(base + ".dot"), to_dot(network, run.comment));
      run.emit(base + ".csv");
      run.emit(base + ".graphml");
      run.emit(base + ".dot");
    });
  }

  if (through >= Stage::Metrics) {
    run.stage("metrics", [&](bool*) {
      const std::string base = network_basename(config);
      const CentralityVector centrality = markov_centrality(network);
      write_centrality_csv(run.path_of("centrality_" + base + ".csv"), centrality,
                           run.comment);
      run.emit("centrality_" + base + ".csv");
      // The GraphML gains the centrality attribute once it is known; the
      // manifest digest must describe the rewritten bytes.
      write_file(run.path_of(base + ".graphml"),
                 to_graphml(network, &centrality, run.comment));
      run.emit(base + ".graphml");
      write_file(run.path_of("report_" + base + ".json"),
                 network_report(run, network).dump(2) + "\n");
      run.emit("report_" + base + ".json");
    });
  }

  run.finish();
  return run.result;
}

PipelineResult run_compare(const PipelineConfig& config) {
  Run run(config, "compare");

  stage_returns(run);
  stage_discretize(run);

  Eigen::MatrixXd matrices[6];
  bool influence_flags[6] = {false, false, false, false, true, true};
  run.stage("matrix", [&](bool* cache_hit) {
    PmiBlock block = obtain_block(run, cache_hit);
    matrices[0] = corr_distance(run.data.returns).values;
    matrices[1] =
        mi_distance(run.data.states, config.estimator, config.sg_prior).values;
    matrices[2] = pcorr_min_distance(run.data.returns, &run.result.warnings).values;
    matrices[3] = pmi_min_distance(block).values;
    matrices[4] = avg_corr_influence(run.data.returns).values;
    matrices[5] = avg_mi_influence(block).values;
  });

  std::vector<Network> networks;
  run.stage("network", [&](bool*) {
    networks.reserve(12);
    for (const Topology topology : {Topology::Tree, Topology::Planar}) {
      for (int k = 0; k < 6; ++k) {
        const Measure measure = measure_from_int(k + 1);
        Network net;
        if (influence_flags[k]) {
          net = build_influence_graph(
              InfluenceMatrix{run.data.tickers, measure, matrices[k]}, topology);
        } else {
          SimilarityMatrix similarity{run.data.tickers, measure, matrices[k]};
          net = topology == Topology::Tree ? build_mst(similarity)
                                           : build_pmfg(similarity);
        }
        if (run.data.have_sectors) apply_sectors(net, run.data.sectors);
        networks.push_back(std::move(net));
      }
    }
  });

  run.stage("metrics", [&](bool*) {
    const CentralityComparison comparison = compare_all(networks);
    std::vector<std::string> labels;
    for (int k = 1; k <= 6; ++k) labels.push_back(measure_tag(measure_from_int(k)));
    write_matrix_csv(run.path_of("mc_corr_trees.csv"), labels, comparison.trees,
                     run.comment);
    write_matrix_csv(run.path_of("mc_corr_planar.csv"), labels, comparison.planar,
                     run.comment);
    run.emit("mc_corr_trees.csv");
    run.emit("mc_corr_planar.csv");

    // One row per measure: sector ratio of its tree, of its planar graph,
    // and the planar graph's clustering; the complete graph closes the
    // table as the unfiltered reference.
    const auto percent = [](double value) {
      char buffer[16];
      std::snprintf(buffer, sizeof(buffer), "%.2f%%", 100.0 * value);
      return std::string(buffer);
    };
    const bool sectored = run.data.have_sectors;
    std::string csv = "network,tree_ratio,graph_ratio,clustering\n";
    std::string text = run.comment + "\n\n";
    text += "network            tree_ratio  graph_ratio  clustering\n";
    const auto text_row = [&text](const std::string& name, const std::string& a,
                                  const std::string& b, const std::string& c) {
      char buffer[96];
      std::snprintf(buffer, sizeof(buffer), "%-18s %10s %12s %11s\n", name.c_str(),
                    a.c_str(), b.c_str(), c.c_str());
      text += buffer;
    };
    for (int k = 0; k < 6; ++k) {
      const Network& tree = networks[static_cast<size_t>(k)];
      const Network& planar = networks[static_cast<size_t>(6 + k)];
      const double tree_ratio = sectored ? sector_ratio(tree, run.data.sectors) : 0.0;
      const double graph_ratio = sectored ? sector_ratio(planar, run.data.sectors) : 0.0;
      const double clustering = clustering_coefficient(planar);
      const std::string name = measure_tag(measure_from_int(k + 1));
      csv += name + ",";
      csv += (sectored ? format_double(tree_ratio) : std::string()) + ",";
      csv += (sectored ? format_double(graph_ratio) : std::string()) + ",";
      csv += format_double(clustering) + "\n";
      text_row(name, sectored ? percent(tree_ratio) : "-",
               sectored ? percent(graph_ratio) : "-", percent(clustering));
    }
    const double baseline =
        sectored ? complete_graph_sector_ratio(run.data.sectors) : 0.0;
    csv += "complete-graph,,";
    csv += (sectored ? format_double(baseline) : std::string()) + ",";
    csv += format_double(1.0) + "\n";
    text_row("complete-graph", "-", sectored ? percent(baseline) : "-",
             percent(1.0));
    write_file(run.path_of("metrics_table.csv"),
               "# " + run.comment + "\n" + csv);
    write_file(run.path_of("metrics_table.txt"), text);
    run.emit("metrics_table.csv");
    run.emit("metrics_table.txt");
    run.result.summary = text;
  });

  run.finish();
  return run.result;
}

PipelineResult run_significance(const PipelineConfig& config) {
  Run run(config, "significance");

  stage_returns(run);
  stage_discretize(run);

  run.stage("significance", [&](bool* cache_hit) {
    const PmiBlock block = obtain_block(run, cache_hit);
    const int n = block.size();
    Eigen::MatrixXd min_pmi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (int z = 0; z < n; ++z) {
          if (z == i || z == j) continue;
          best = std::min(best, block.pmi_at(i, j, z));
        }
        min_pmi(i, j) = best;
        min_pmi(j, i) = best;
      }
    }
    const auto params = GammaParams::for_bins(config.bins, config.bins, config.bins,
                                              block.sample_size);
    const double threshold = gamma_threshold(params, config.alpha);
    const auto mask = significance_mask(min_pmi, params, config.alpha);

    write_matrix_csv(run.path_of("pmi_min.csv"), run.data.tickers, min_pmi,
                     run.comment);
    write_mask_csv(run.path_of("significance_mask.csv"), run.data.tickers, mask,
                   run.comment);
    int significant = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (mask(i, j)) ++significant;
      }
    }
    json report{{"config_digest", run.config_digest},
                {"alpha", config.alpha},
                {"estimator", estimator_tag(config.estimator)},
                {"bins", config.bins},
                {"sample_size", block.sample_size},
                {"shape", params.shape},
                {"scale", params.scale},
                {"threshold", threshold},
                {"pairs", n * (n - 1) / 2},
                {"significant_pairs", significant}};
    write_file(run.path_of("significance.json"), report.dump(2) + "\n");
    run.emit("pmi_min.csv");
    run.emit("significance_mask.csv");
    run.emit("significance.json");
  });

  run.finish();
  return run.result;
}

namespace {

// Proleptic Gregorian day count (days since 1970-01-01).
long long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long long>(doe) - 719468;
}

void civil_from_days(long long z, int* y, unsigned* m, unsigned* d) {
  z += 719468;
  const long long era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const long long year = static_cast<long long>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  *d = doy - (153 * mp + 2) / 5 + 1;
  *m = mp + (mp < 10 ? 3 : -9);
  *y = static_cast<int>(year + (*m <= 2));
}

// Consecutive weekday dates starting 2015-01-05 (a Monday).
std::vector<std::string> trading_dates(int count) {
  std::vector<std::string> dates;
  dates.reserve(count);
  long long day = days_from_civil(2015, 1, 5);
  while (static_cast<int>(dates.size()) < count) {
    const int dow = static_cast<int>(((day % 7) + 11) % 7);  // 0 = Sunday
    if (dow != 0 && dow != 6) {
      int y;
      unsigned m, d;
      civil_from_days(day, &y, &m, &d);
      char buffer[16];
      std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02u", y, m, d);
      dates.emplace_back(buffer);
    }
    ++day;
  }
  return dates;
}

const char* transform_tag(NonlinearTransform transform) {
  return transform == NonlinearTransform::Square ? "square" : "abs";
}

std::string synth_canonical(const SynthSpec& spec) {
  std::string s;
  s += "tickers=" + std::to_string(spec.tickers) + "\n";
  s += "samples=" + std::to_string(spec.samples) + "\n";
  s += "blocks=";
  for (size_t i = 0; i < spec.sector_blocks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.sector_blocks[i]);
  }
  s += "\n";
  s += "block_coupling=" + format_double(spec.block_coupling) + "\n";
  s += "chain_coupling=" + format_double(spec.chain_coupling) + "\n";
  s += "chains=";
  for (size_t i = 0; i < spec.chains.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(spec.chains[i].source) + ">" +
         std::to_string(spec.chains[i].mediator) + ">" +
         std::to_string(spec.chains[i].target);
  }
  s += "\n";
  s += "nonlinear=";
  for (size_t i = 0; i < spec.nonlinear.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(spec.nonlinear[i].x) + ">" +
         std::to_string(spec.nonlinear[i].y) + ":" +
         transform_tag(spec.nonlinear[i].transform);
  }
  s += "\n";
  s += "seed=" + std::to_string(spec.seed) + "\n";
  return s;
}

}  // namespace

PipelineResult run_synth(const SynthSpec& spec, const std::string& out_dir) {
  if (out_dir.empty()) throw std::invalid_argument("synth: output directory required");
  fs::create_directories(out_dir);
  ManifestBuilder manifest(out_dir, "synth");
  PipelineResult result;

  json config{{"tickers", spec.tickers},
              {"samples", spec.samples},
              {"blocks", spec.sector_blocks},
              {"block_coupling", spec.block_coupling},
              {"chain_coupling", spec.chain_coupling},
              {"seed", spec.seed}};
  const std::string config_digest = digest_hex(synth_canonical(spec));
  const std::string comment =
      std::string("pminet ") + kVersion + " config " + config_digest;
  manifest.set_config(config, config_digest);

  Timer timer;
  const SynthResult market = generate(spec);

  // Prices integrate the returns from a base of 100.
  std::vector<PriceSeries> prices;
  const auto dates = trading_dates(spec.samples + 1);
  for (const auto& series : market.series) {
    PriceSeries p;
    p.ticker = series.ticker;
    p.timestamps = dates;
    p.prices.resize(spec.samples + 1);
    p.prices(0) = 100.0;
    for (int t = 0; t < spec.samples; ++t) {
      p.prices(t + 1) = p.prices(t) * std::exp(series.returns(t));
    }
    prices.push_back(std::move(p));
  }

  const auto path_of = [&](const std::string& name) {
    return (fs::path(out_dir) / name).string();
  };
  write_prices_csv(path_of("prices.csv"), dates, prices, comment);
  write_sectors_csv(path_of("sectors.csv"), market.sectors, comment);

  json truth{{"config_digest", config_digest},
             {"tickers", json::array()},
             {"blocks", spec.sector_blocks},
             {"block_coupling", spec.block_coupling},
             {"chain_coupling", spec.chain_coupling},
             {"samples", spec.samples},
             {"seed", spec.seed},
             {"chains", json::array()},
             {"nonlinear", json::array()}};
  for (const auto& series : market.series) {
    truth["tickers"].push_back(
        json{{"ticker", series.ticker},
             {"sector", market.sectors.at(series.ticker)}});
  }
  for (const auto& chain : spec.chains) {
    truth["chains"].push_back(json{{"source", synth_ticker(chain.source)},
                                   {"mediator", synth_ticker(chain.mediator)},
                                   {"target", synth_ticker(chain.target)}});
  }
  for (const auto& pair : spec.nonlinear) {
    truth["nonlinear"].push_back(json{{"x", synth_ticker(pair.x)},
                                      {"y", synth_ticker(pair.y)},
                                      {"transform", transform_tag(pair.transform)}});
  }
  write_file(path_of("truth.json"), truth.dump(2) + "\n");

  manifest.add_stage("synth", timer.millis(), false);
  result.stages.push_back({"synth", timer.millis(), false});
  for (const char* name : {"prices.csv", "sectors.csv", "truth.json"}) {
    manifest.add_artifact(name);
    result.artifacts.push_back(name);
  }
  result.manifest_path = manifest.write();
  return result;
}

void export_graph(const std::string& edges_path, const std::string& format,
                  const std::string& out_path, const std::string& sectors_path) {
  Network network = read_edge_list(edges_path);
  if (!sectors_path.empty()) apply_sectors(network, load_sectors(sectors_path));
  if (format == "edgelist") {
    write_edge_list(out_path, network);
  } else if (format == "graphml") {
    write_file(out_path, to_graphml(network));
  } else if (format == "dot") {
    write_file(out_path, to_dot(network));
  } else {
    throw std::invalid_argument("export: unknown format '" + format +
                                "' (expected edgelist, graphml, or dot)");
  }
}

}  // namespace pminet
