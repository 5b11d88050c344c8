#include "pminet/netmetrics.hpp"

#include "pminet/infotheory.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace pminet {

namespace {

Eigen::MatrixXd skeleton_adjacency(const Network& network) {
  const int n = network.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : skeleton_pairs(network)) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

std::vector<std::vector<int>> components_of(const Eigen::MatrixXd& adjacency) {
  const int n = static_cast<int>(adjacency.rows());
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    std::deque<int> queue{start};
    label[start] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      components[id].push_back(v);
      for (int w = 0; w < n; ++w) {
        if (adjacency(v, w) > 0.0 && label[w] < 0) {
          label[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return components;
}

}  // namespace

Eigen::VectorXd markov_centrality_adjacency(const Eigen::MatrixXd& adjacency) {
  const int n = static_cast<int>(adjacency.rows());
  if (adjacency.cols() != n) {
    throw std::invalid_argument("markov_centrality: adjacency matrix must be square");
  }
  if (n < 2) {
    throw std::invalid_argument("markov_centrality: need at least 2 nodes");
  }
  const auto components = components_of(adjacency);
  if (components.size() > 1) {
    throw std::runtime_error("markov_centrality: graph is disconnected (" +
                             std::to_string(components.size()) + " components)");
  }

  const Eigen::VectorXd degree = adjacency.rowwise().sum();
  const double two_e = degree.sum();
  const Eigen::VectorXd pi = degree / two_e;

  // Fundamental matrix Z = (I - P + 1 pi')^-1; mean first passage time
  // MFPT(s -> v) = (Z_vv - Z_sv) / pi_v.
  Eigen::MatrixXd transition = adjacency.array().colwise() / degree.array();
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - transition +
                           Eigen::VectorXd::Ones(n) * pi.transpose();
  const Eigen::MatrixXd fundamental =
      system.partialPivLu().solve(Eigen::MatrixXd::Identity(n, n));

  Eigen::VectorXd centrality(n);
  for (int v = 0; v < n; ++v) {
    const double col_sum = fundamental.col(v).sum();
    const double total_mfpt = (n * fundamental(v, v) - col_sum) / pi(v);
    centrality(v) = static_cast<double>(n) / total_mfpt;
  }
  return centrality;
}

CentralityVector markov_centrality(const Network& network) {
  const Eigen::MatrixXd adjacency = skeleton_adjacency(network);
  const auto components = components_of(adjacency);
  if (components.size() > 1) {
    std::string detail;
    for (const auto& component : components) {
      detail += " [";
      for (size_t i = 0; i < component.size(); ++i) {
        if (i) detail += ", ";
        detail += network.nodes[component[i]].ticker;
      }
      detail += "]";
    }
    throw std::runtime_error("markov_centrality: graph is disconnected;"
                             " components:" + detail);
  }
  CentralityVector out;
  out.values = markov_centrality_adjacency(adjacency);
  out.tickers.reserve(network.nodes.size());
  for (const auto& node : network.nodes) out.tickers.push_back(node.ticker);
  return out;
}

double sector_ratio(const Network& network, const SectorMap& sectors) {
  const auto pairs = skeleton_pairs(network);
  if (pairs.empty()) {
    throw std::invalid_argument("sector_ratio: network has no edges");
  }
  int same = 0;
  for (const auto& [u, v] : pairs) {
    const auto su = sectors.find(network.nodes[u].ticker);
    const auto sv = sectors.find(network.nodes[v].ticker);
    if (su == sectors.end()) {
      throw std::runtime_error("sector_ratio: no sector for ticker '" +
                               network.nodes[u].ticker + "'");
    }
    if (sv == sectors.end()) {
      throw std::runtime_error("sector_ratio: no sector for ticker '" +
                               network.nodes[v].ticker + "'");
    }
    if (su->second == sv->second) ++same;
  }
  return static_cast<double>(same) / static_cast<double>(pairs.size());
}

double complete_graph_sector_ratio(const SectorMap& sectors) {
  const auto n = static_cast<double>(sectors.size());
  if (n < 2) {
    throw std::invalid_argument("complete_graph_sector_ratio: need at least 2 tickers");
  }
  std::map<std::string, double> sizes;
  for (const auto& [ticker, sector] : sectors) {
    (void)ticker;
    sizes[sector] += 1.0;
  }
  double within = 0.0;
  for (const auto& [sector, size] : sizes) {
    (void)sector;
    within += size * (size - 1.0) / 2.0;
  }
  return within / (n * (n - 1.0) / 2.0);
}

double clustering_coefficient(const Network& network) {
  const int n = network.node_count();
  if (n < 3) {
    throw std::invalid_argument("clustering_coefficient: need at least 3 nodes");
  }
  const Eigen::MatrixXd a = skeleton_adjacency(network);
  std::vector<std::vector<int>> neighbors(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (a(u, v) > 0.0) neighbors[u].push_back(v);
    }
  }
  long long closed = 0;
  long long triples = 0;
  for (int v = 0; v < n; ++v) {
    const auto& nb = neighbors[v];
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        ++triples;
        if (a(nb[i], nb[j]) > 0.0) ++closed;
      }
    }
  }
  if (triples == 0) {
    throw std::runtime_error("clustering_coefficient: network has no connected triple");
  }
  return static_cast<double>(closed) / static_cast<double>(triples);
}

double centrality_correlation(const CentralityVector& a, const CentralityVector& b) {
  if (a.tickers != b.tickers) {
    throw std::invalid_argument(
        "centrality_correlation: ticker universes differ or are ordered differently");
  }
  return pearson(a.values, b.values);
}

CentralityComparison compare_all(const std::vector<Network>& networks) {
  if (networks.size() != 12) {
    throw std::invalid_argument("compare_all: expected 12 networks (6 tree, 6 planar)");
  }
  std::vector<CentralityVector> centralities;
  centralities.reserve(12);
  for (const auto& net : networks) {
    centralities.push_back(markov_centrality(net));
    if (centralities.back().tickers != centralities.front().tickers) {
      throw std::invalid_argument("compare_all: networks span different universes");
    }
  }
  CentralityComparison out;
  out.trees = Eigen::MatrixXd::Identity(6, 6);
  out.planar = Eigen::MatrixXd::Identity(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      const double t = centrality_correlation(centralities[i], centralities[j]);
      out.trees(i, j) = t;
      out.trees(j, i) = t;
      const double p = centrality_correlation(centralities[6 + i], centralities[6 + j]);
      out.planar(i, j) = p;
      out.planar(j, i) = p;
    }
  }
  return out;
}

}  // namespace pminet
