// Acceptance gate.  Each criterion prints one PASS/FAIL line with its
// measured values and pinned tolerances; criterion 11 is informational and
// never gates.  Exit status is 0 iff every gating criterion passed.

#include "pminet/infotheory.hpp"
#include "pminet/ingest.hpp"
#include "pminet/netbuild.hpp"
#include "pminet/netmetrics.hpp"
#include "pminet/similarity.hpp"
#include "pminet/synth.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace pminet;

namespace {

bool g_all_pass = true;

std::string strprintf(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

void report(int id, bool pass, const std::string& text) {
  std::printf("[%2d] %s  %s\n", id, pass ? "PASS" : "FAIL", text.c_str());
  if (!pass) g_all_pass = false;
}

void report_info(int id, const std::string& text) {
  std::printf("[%2d] INFO  %s\n", id, text.c_str());
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

ContingencyTable table_of(std::vector<int> dims, const std::vector<int>& counts) {
  Eigen::ArrayXi array(static_cast<Eigen::Index>(counts.size()));
  for (size_t i = 0; i < counts.size(); ++i) {
    array(static_cast<Eigen::Index>(i)) = counts[i];
  }
  return make_table(std::move(dims), std::move(array));
}

DiscreteSeries series_of(const Eigen::VectorXi& states, int bins,
                         const std::string& ticker) {
  DiscreteSeries s;
  s.ticker = ticker;
  s.states = states;
  s.bins = bins;
  return s;
}

std::vector<std::string> index_tickers(int n) {
  std::vector<std::string> tickers;
  tickers.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) tickers.push_back(strprintf("N%02d", i));
  return tickers;
}

std::set<std::pair<int, int>> pair_set(const Network& network) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : network.edges) {
    pairs.emplace(std::min(e.source, e.target), std::max(e.source, e.target));
  }
  return pairs;
}

Network graph_of(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<std::string>& sectors = {}) {
  Network net;
  net.directed = false;
  net.topology = Topology::Unrestricted;
  for (int i = 0; i < n; ++i) {
    NetworkNode node;
    node.ticker = strprintf("N%02d", i);
    if (!sectors.empty()) node.sector = sectors[static_cast<size_t>(i)];
    net.nodes.push_back(std::move(node));
  }
  for (const auto& [u, v] : edges) net.edges.push_back({u, v, 1.0});
  return net;
}

// 1. ml mutual information vs the Kullback-Leibler double sum.
void criterion_1() {
  constexpr double kTol = 1e-10;
  constexpr double kLimitSeconds = 5.0;
  constexpr int kTables = 1000;
  Timer timer;
  std::mt19937 rng(101);
  double worst = 0.0;
  for (int t = 0; t < kTables; ++t) {
    auto counts = oracle::random_counts(rng, 16, 31);  // m <= 496
    counts[0] = std::max(counts[0], 1);
    const auto table = table_of({4, 4}, counts);
    worst = std::max(worst, std::abs(mutual_info(table, Estimator::Ml) -
                                     oracle::mi_kl(table)));
  }
  const double elapsed = timer.seconds();
  report(1, worst < kTol && elapsed < kLimitSeconds,
         strprintf("ml mutual information equals the KL double sum on %d random "
                   "4x4 tables (m <= 496): max diff %.2e (tol %.0e) in %.2f s "
                   "(limit %.0f s)",
                   kTables, worst, kTol, elapsed, kLimitSeconds));
}

// 2. Four-entropy conditional information vs the conditional double sum.
void criterion_2() {
  constexpr double kTol = 1e-10;
  constexpr int kTables = 500;
  std::mt19937 rng(202);
  double worst = 0.0;
  for (int t = 0; t < kTables; ++t) {
    auto counts = oracle::random_counts(rng, 64, 15);
    counts[0] = std::max(counts[0], 1);
    const auto table = table_of({4, 4, 4}, counts);
    worst = std::max(worst, std::abs(partial_mutual_info(table, Estimator::Ml) -
                                     oracle::pmi_conditional(table)));
  }
  report(2, worst < kTol,
         strprintf("ml conditional information equals the conditional double sum "
                   "on %d random 4x4x4 tables: max diff %.2e (tol %.0e)",
                   kTables, worst, kTol));
}

// 3. Schurmann-Grassberger estimator: convergence and digamma oracle.
void criterion_3() {
  constexpr double kConvergenceTol = 0.01;
  constexpr double kOracleTol = 1e-12;
  constexpr int kSamples = 100000;
  constexpr int kTables = 100;

  std::mt19937 rng(303);
  std::uniform_int_distribution<int> symbol(0, 3);
  std::vector<int> uniform_counts(4, 0);
  for (int t = 0; t < kSamples; ++t) ++uniform_counts[static_cast<size_t>(symbol(rng))];
  const double h_uniform = entropy_sg(table_of({4}, uniform_counts)).value;
  const double convergence = std::abs(h_uniform - std::log(4.0));

  double worst = 0.0;
  for (int t = 0; t < kTables; ++t) {
    const bool pair = t % 2 == 0;
    auto counts = oracle::random_counts(rng, pair ? 16 : 4, 9);
    counts[0] = std::max(counts[0], 1);
    int m = 0;
    for (int c : counts) m += c;
    const auto table = pair ? table_of({4, 4}, counts) : table_of({4}, counts);
    const double direct =
        oracle::entropy_sg_direct(counts, static_cast<long>(counts.size()), m);
    worst = std::max(worst, std::abs(entropy_sg(table).value - direct));
  }
  report(3, convergence < kConvergenceTol && worst < kOracleTol,
         strprintf("sg entropy: |H - ln 4| = %.2e at m=%d (tol %.2f); digamma "
                   "oracle max diff %.2e over %d random tables (tol %.0e)",
                   convergence, kSamples, kConvergenceTol, worst, kTables,
                   kOracleTol));
}

// 4. Synergistic mod-4 triple: zero pairwise information, ln 4 conditioned.
void criterion_4() {
  constexpr double kTol = 1e-12;
  Eigen::VectorXi xs(16), ys(16), zs(16);
  for (int t = 0; t < 16; ++t) {
    xs(t) = t / 4;
    ys(t) = t % 4;
    zs(t) = (t / 4 + t % 4) % 4;
  }
  const auto x = series_of(xs, 4, "X");
  const auto y = series_of(ys, 4, "Y");
  const auto z = series_of(zs, 4, "Z");
  const double mi = mutual_info(make_table(x, y), Estimator::Ml);
  const double pmi = partial_mutual_info(make_table(x, y, z), Estimator::Ml);
  report(4, std::abs(mi) < kTol && std::abs(pmi - std::log(4.0)) < kTol && pmi > mi,
         strprintf("mod-4 synergy: I(X;Y) = %.2e, I(X;Y|Z) - ln 4 = %.2e (tol "
                   "%.0e), conditioned value exceeds the marginal",
                   mi, pmi - std::log(4.0), kTol));
}

// 5. MST against a Prim oracle, with deterministic reruns.
void criterion_5() {
  constexpr int kMatrices = 200;
  constexpr int kNodes = 20;
  std::mt19937 rng(505);
  const auto tickers = index_tickers(kNodes);
  int matched = 0;
  bool reruns_identical = true;
  double worst_total_diff = 0.0;
  for (int t = 0; t < kMatrices; ++t) {
    const auto weights = oracle::random_distance_matrix(rng, kNodes);
    const SimilarityMatrix matrix{tickers, Measure::CorrDistance, weights};
    const Network tree = build_mst(matrix);
    const auto want = oracle::prim_mst(weights);
    const bool same_edges =
        tree.edge_count() == kNodes - 1 && pair_set(tree) == want;
    if (same_edges) ++matched;

    // Both totals accumulate in ascending pair order, so equal trees with
    // weights faithful to the matrix sum to bitwise-equal doubles.
    std::vector<std::pair<std::pair<int, int>, double>> lib_edges;
    for (const auto& e : tree.edges) {
      lib_edges.push_back({{std::min(e.source, e.target),
                            std::max(e.source, e.target)},
                           e.weight});
    }
    std::sort(lib_edges.begin(), lib_edges.end());
    double lib_total = 0.0, oracle_total = 0.0;
    for (const auto& [nodes, weight] : lib_edges) lib_total += weight;
    for (const auto& [a, b] : want) oracle_total += weights(a, b);
    worst_total_diff = std::max(worst_total_diff,
                                std::abs(lib_total - oracle_total));

    const Network again = build_mst(matrix);
    for (int e = 0; e < tree.edge_count(); ++e) {
      const auto& p = tree.edges[static_cast<size_t>(e)];
      const auto& q = again.edges[static_cast<size_t>(e)];
      if (p.source != q.source || p.target != q.target || p.weight != q.weight) {
        reruns_identical = false;
      }
    }
  }
  report(5, matched == kMatrices && reruns_identical && worst_total_diff == 0.0,
         strprintf("mst equals the prim oracle on %d/%d random N=%d matrices "
                   "(edge sets equal, max total-weight diff %.1e), reruns "
                   "bit-identical",
                   matched, kMatrices, kNodes, worst_total_diff));
}

// 6. PMFG edge count, certified planarity, MST containment, K5 case.
void criterion_6() {
  constexpr double kLimitSeconds = 60.0;
  constexpr int kMatrices = 100;
  constexpr int kFiveCases = 20;
  Timer timer;
  std::mt19937 rng(606);
  int good = 0;
  for (int t = 0; t < kMatrices; ++t) {
    const int n = t < 34 ? 10 : (t < 67 ? 20 : 30);
    const auto weights = oracle::random_distance_matrix(rng, n);
    const SimilarityMatrix matrix{index_tickers(n), Measure::CorrDistance, weights};
    const Network graph = build_pmfg(matrix);
    const auto pairs = pair_set(graph);
    const auto mst_pairs = pair_set(build_mst(matrix));
    const bool contains_mst =
        std::includes(pairs.begin(), pairs.end(), mst_pairs.begin(), mst_pairs.end());
    const std::vector<std::pair<int, int>> edges(pairs.begin(), pairs.end());
    if (graph.edge_count() == 3 * n - 6 && contains_mst &&
        oracle::verify_planar_embedding(n, edges)) {
      ++good;
    }
  }

  int five_good = 0;
  for (int t = 0; t < kFiveCases; ++t) {
    const auto weights = oracle::random_distance_matrix(rng, 5);
    const SimilarityMatrix matrix{index_tickers(5), Measure::CorrDistance, weights};
    const auto pairs = pair_set(build_pmfg(matrix));
    std::pair<int, int> heaviest{0, 1};
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        if (weights(i, j) > weights(heaviest.first, heaviest.second)) {
          heaviest = {i, j};
        }
      }
    std::set<std::pair<int, int>> want;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        if (std::pair<int, int>{i, j} != heaviest) want.emplace(i, j);
      }
    if (pairs == want) ++five_good;
  }
  const double elapsed = timer.seconds();
  report(6,
         good == kMatrices && five_good == kFiveCases && elapsed < kLimitSeconds,
         strprintf("pmfg: %d/%d graphs (N in {10,20,30}) at 3N-6 edges with a "
                   "certified embedding containing the mst; %d/%d N=5 cases equal "
                   "K5 minus the heaviest edge; %.1f s (limit %.0f s)",
                   good, kMatrices, five_good, kFiveCases, elapsed, kLimitSeconds));
}

// 7. Gamma null calibration at alpha = 0.05.
void criterion_7() {
  constexpr int kTrials = 500;
  constexpr int kSamples = 2000;
  constexpr double kAlpha = 0.05;
  constexpr double kRateLow = 0.02;
  constexpr double kRateHigh = 0.10;
  const auto params = GammaParams::for_bins(4, 4, 4, kSamples);
  const double threshold = gamma_threshold(params, kAlpha);

  std::mt19937 rng(707);
  int fired = 0;
  for (int t = 0; t < kTrials; ++t) {
    DiscreteSeries s[3];
    for (int k = 0; k < 3; ++k) {
      ReturnSeries r;
      r.ticker = "X";
      r.returns = oracle::gaussian_vector(rng, kSamples);
      s[k] = discretize_quartiles(r, 4);
    }
    if (partial_mutual_info(make_table(s[0], s[1], s[2]), Estimator::Ml) >
        threshold) {
      ++fired;
    }
  }
  const double rate = static_cast<double>(fired) / kTrials;
  report(7, rate >= kRateLow && rate <= kRateHigh,
         strprintf("gamma null (shape %.0f, scale 1/%d): alpha=%.2f mask fires on "
                   "%d/%d independent triples, rate %.3f (accept [%.2f, %.2f])",
                   params.shape, kSamples, kAlpha, fired, kTrials, rate, kRateLow,
                   kRateHigh));
}

// 8. Conditioning on the mediator empties the X-Y dependency.
void criterion_8() {
  constexpr int kSeeds = 100;
  constexpr int kNeeded = 90;
  constexpr int kSamples = 10000;
  constexpr double kResidualTol = 0.05;
  constexpr double kGapTol = 0.2;
  int good = 0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    SynthSpec spec;
    spec.tickers = 3;
    spec.samples = kSamples;
    spec.chain_coupling = 0.9;
    spec.chains.push_back({0, 1, 2});
    spec.seed = 8000 + static_cast<std::uint64_t>(seed);
    const auto market = generate(spec);
    DiscreteSeries states[3];
    for (int k = 0; k < 3; ++k) states[k] = discretize_quartiles(market.series[static_cast<size_t>(k)], 4);

    // X = source, Z = mediator, Y = target.
    const auto pair_xy = make_table(states[0], states[2]);
    const double h_xy = entropy_ml(pair_xy).value;
    const double mi = mutual_info(pair_xy, Estimator::Ml);
    const double pmi = partial_mutual_info(
        make_table(states[0], states[2], states[1]), Estimator::Ml);
    const double d2 = h_xy - mi;
    const double d4 = h_xy - pmi;
    if (h_xy - d4 < kResidualTol && d4 - d2 > kGapTol) ++good;
  }
  report(8, good >= kNeeded,
         strprintf("mediated chains (m=%d): conditioned distance within %.2f nats "
                   "of H(X,Y) and more than %.1f nats above the measure-2 "
                   "distance in %d/%d seeds (need >= %d)",
                   kSamples, kResidualTol, kGapTol, good, kSeeds, kNeeded));
}

// 9. Nonlinear pairs: no linear signal, information above the null.
void criterion_9() {
  constexpr int kNullSeeds = 200;
  constexpr int kSeeds = 100;
  constexpr int kNeeded = 90;
  constexpr int kSamples = 10000;
  constexpr double kRhoTol = 0.05;

  std::mt19937 rng(909);
  std::vector<double> null_mi;
  for (int t = 0; t < kNullSeeds; ++t) {
    ReturnSeries a, b;
    a.ticker = "A";
    b.ticker = "B";
    a.returns = oracle::gaussian_vector(rng, kSamples);
    b.returns = oracle::gaussian_vector(rng, kSamples);
    null_mi.push_back(mutual_info(
        make_table(discretize_quartiles(a, 4), discretize_quartiles(b, 4)),
        Estimator::Ml));
  }
  std::sort(null_mi.begin(), null_mi.end());
  const double q95 = null_mi[static_cast<size_t>(kNullSeeds * 95 / 100 - 1)];

  int good = 0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    SynthSpec spec;
    spec.tickers = 2;
    spec.samples = kSamples;
    spec.nonlinear.push_back(
        {0, 1, seed % 2 == 0 ? NonlinearTransform::Square : NonlinearTransform::Abs});
    spec.seed = 9000 + static_cast<std::uint64_t>(seed);
    const auto market = generate(spec);
    const double rho =
        pearson(market.series[0].returns, market.series[1].returns);
    const double mi = mutual_info(
        make_table(discretize_quartiles(market.series[0], 4),
                   discretize_quartiles(market.series[1], 4)),
        Estimator::Ml);
    if (std::abs(rho) < kRhoTol && mi > q95) ++good;
  }
  report(9, good >= kNeeded,
         strprintf("nonlinear pairs (m=%d): |rho| < %.2f and MI above the "
                   "independent 95th percentile (%.1e) in %d/%d seeds (need >= %d)",
                   kSamples, kRhoTol, q95, good, kSeeds, kNeeded));
}

// 10. Metrics oracles: exhaustive Markov centrality, fixture metrics.
void criterion_10() {
  constexpr double kTol = 1e-9;
  constexpr int kMaxNodes = 7;
  double worst = 0.0;
  long graphs = 0;
  for (int n = 2; n <= kMaxNodes; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int bits = static_cast<int>(pairs.size());
    Eigen::MatrixXd adjacency(n, n);
    std::vector<int> parent(static_cast<size_t>(n));
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      if (__builtin_popcount(mask) < n - 1) continue;
      for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
      auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
          x = parent[static_cast<size_t>(x)] =
              parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        }
        return x;
      };
      adjacency.setZero();
      int components = n;
      for (int b = 0; b < bits; ++b) {
        if (!(mask & (1u << b))) continue;
        const auto& [u, v] = pairs[static_cast<size_t>(b)];
        adjacency(u, v) = adjacency(v, u) = 1.0;
        const int ru = find(u), rv = find(v);
        if (ru != rv) {
          parent[static_cast<size_t>(ru)] = rv;
          --components;
        }
      }
      if (components != 1) continue;
      ++graphs;
      const Eigen::VectorXd lib = markov_centrality_adjacency(adjacency);
      const Eigen::VectorXd want = oracle::markov_centrality_absorbing(adjacency);
      worst = std::max(worst, (lib - want).cwiseAbs().maxCoeff());
    }
  }

  // Fixture graphs: clustering on K3, the 5-node star, K4 minus an edge;
  // sector ratio on the mixed 4-node fixture and complete graphs.
  const double k3 = clustering_coefficient(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}));
  const double star =
      clustering_coefficient(graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  const double k4_minus = clustering_coefficient(
      graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  const Network mixed = graph_of(4, {{0, 1}, {2, 3}, {0, 2}}, {"A", "A", "B", "B"});
  SectorMap mixed_sectors;
  for (const auto& node : mixed.nodes) mixed_sectors[node.ticker] = node.sector;
  const double mixed_ratio = sector_ratio(mixed, mixed_sectors);

  std::vector<std::pair<int, int>> complete9;
  std::vector<std::string> sectors9;
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) complete9.emplace_back(i, j);
    sectors9.push_back(i < 2 ? "SA" : (i < 5 ? "SB" : "SC"));
  }
  const Network complete = graph_of(9, complete9, sectors9);
  SectorMap complete_sectors;
  for (const auto& node : complete.nodes) complete_sectors[node.ticker] = node.sector;
  const double complete_ratio = sector_ratio(complete, complete_sectors);
  const double baseline = complete_graph_sector_ratio(complete_sectors);

  std::vector<std::pair<int, int>> complete4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) complete4.emplace_back(i, j);
  const Network one_sector = graph_of(4, complete4, {"X", "X", "X", "X"});
  SectorMap one;
  for (const auto& node : one_sector.nodes) one[node.ticker] = "X";

  const bool fixtures_ok = k3 == 1.0 && star == 0.0 && k4_minus == 0.75 &&
                           mixed_ratio == 2.0 / 3.0 && sector_ratio(one_sector, one) == 1.0 &&
                           complete_ratio == 10.0 / 36.0 && baseline == complete_ratio;
  report(10, worst < kTol && fixtures_ok,
         strprintf("markov centrality matches the absorbing-chain oracle on all "
                   "%ld connected graphs with N <= %d: max diff %.2e (tol %.0e); "
                   "clustering and sector fixtures exact",
                   graphs, kMaxNodes, worst, kTol));
}

// Shared 91-ticker synthetic market for criteria 11 and 12.
struct MarketData {
  std::vector<ReturnSeries> returns;
  std::vector<DiscreteSeries> states;
  std::vector<std::string> tickers;
  SectorMap sectors;
};

MarketData build_market() {
  SynthSpec spec;
  spec.tickers = 91;
  spec.samples = 2500;
  spec.sector_blocks = std::vector<int>(7, 13);
  spec.block_coupling = 0.4;
  spec.seed = 1112;
  MarketData data;
  auto market = generate(spec);
  data.sectors = std::move(market.sectors);
  for (auto& series : market.series) {
    data.tickers.push_back(series.ticker);
    data.returns.push_back(std::move(series));
  }
  return data;
}

// 11 (non-gating) and 12: the sector-recovery report and the performance
// envelope share one markets-scale computation.
void criteria_11_and_12() {
  constexpr double kLimitSeconds = 600.0;
  MarketData data = build_market();
  const int n = static_cast<int>(data.tickers.size());

  // Criterion 12 measurement: discretization plus the full measure-4
  // matrix (tensor block and minimum scan) at the pipeline's default
  // sg estimator.
  Timer timer;
  data.states.clear();
  for (const auto& series : data.returns) {
    data.states.push_back(discretize_quartiles(series, 4));
  }
  const PmiBlock block = compute_pmi_block(data.states, Estimator::Sg);
  const SimilarityMatrix measure4 = pmi_min_distance(block);
  const double elapsed = timer.seconds();
  const long evaluations = static_cast<long>(n) * (n - 1) / 2 * (n - 2);

  // Criterion 11: all six trees against the complete-graph baseline.
  std::vector<std::string> warnings;
  const SimilarityMatrix m1 = corr_distance(data.returns);
  const SimilarityMatrix m2 = mi_distance(data.states, Estimator::Sg);
  const SimilarityMatrix m3 = pcorr_min_distance(data.returns, &warnings);
  const InfluenceMatrix m5 = avg_corr_influence(data.returns);
  const InfluenceMatrix m6 = avg_mi_influence(block);

  std::vector<Network> trees;
  trees.push_back(build_mst(m1));
  trees.push_back(build_mst(m2));
  trees.push_back(build_mst(m3));
  trees.push_back(build_mst(measure4));
  trees.push_back(build_influence_graph(m5, Topology::Tree));
  trees.push_back(build_influence_graph(m6, Topology::Tree));

  double low = 1.0, high = 0.0;
  for (auto& tree : trees) {
    apply_sectors(tree, data.sectors);
    const double ratio = sector_ratio(tree, data.sectors);
    low = std::min(low, ratio);
    high = std::max(high, ratio);
  }
  const double baseline = complete_graph_sector_ratio(data.sectors);
  report_info(
      11, strprintf("planted-sector recovery (synthetic stand-in, non-gating): "
                    "six tree sector ratios %.1f%%..%.1f%% vs complete-graph "
                    "baseline %.1f%% on a %d-ticker, 7-sector market; no user "
                    "dataset supplied",
                    100.0 * low, 100.0 * high, 100.0 * baseline, n));

  report(12, elapsed < kLimitSeconds,
         strprintf("measure-4 matrix at N=%d, m=2500 (sg estimator): %ld "
                   "conditioned-information evaluations in %.1f s (limit %.0f s)",
                   n, evaluations, elapsed, kLimitSeconds));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criteria_11_and_12();
  std::printf("acceptance: %s\n",
              g_all_pass ? "all gating criteria passed" : "GATING FAILURES");
  return g_all_pass ? 0 : 1;
}
