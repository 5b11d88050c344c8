#include "pminet/netbuild.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace pminet {

int Network::index_of(const std::string& ticker) const {
  for (int i = 0; i < node_count(); ++i) {
    if (nodes[i].ticker == ticker) return i;
  }
  throw std::invalid_argument("network has no node '" + ticker + "'");
}

std::vector<std::pair<int, int>> skeleton_pairs(const Network& network) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : network.edges) {
    pairs.emplace(std::min(e.source, e.target), std::max(e.source, e.target));
  }
  return {pairs.begin(), pairs.end()};
}

void apply_sectors(Network& network, const SectorMap& sectors) {
  for (auto& node : network.nodes) {
    const auto it = sectors.find(node.ticker);
    if (it == sectors.end()) {
      throw std::runtime_error("no sector for ticker '" + node.ticker + "'");
    }
    node.sector = it->second;
  }
}

bool is_planar(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("is_planar: negative vertex count");
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> graph(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("is_planar: edge endpoint out of range");
    }
    boost::add_edge(static_cast<size_t>(u), static_cast<size_t>(v), graph);
  }
  return boost::boyer_myrvold_planarity_test(graph);
}

bool planarity_check(const Network& network, int u, int v) {
  const int n = network.node_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw std::invalid_argument("planarity_check: endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("planarity_check: self-loop");
  auto pairs = skeleton_pairs(network);
  const std::pair<int, int> extra{std::min(u, v), std::max(u, v)};
  if (std::find(pairs.begin(), pairs.end(), extra) == pairs.end()) {
    pairs.push_back(extra);
  }
  return is_planar(n, pairs);
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

struct Candidate {
  double weight;
  int source;  // index whose ticker is lexicographically smaller
  int target;
};

// Candidate edges sorted by (weight, source ticker, target ticker); the
// ticker tie-break makes the scan order independent of input ordering.
std::vector<Candidate> sorted_candidates(const SimilarityMatrix& matrix) {
  const int n = static_cast<int>(matrix.tickers.size());
  if (matrix.values.rows() != n || matrix.values.cols() != n) {
    throw std::invalid_argument("similarity matrix shape does not match tickers");
  }
  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = matrix.values(i, j);
      if (!std::isfinite(w)) {
        throw std::invalid_argument("similarity matrix entry (" + matrix.tickers[i] +
                                    ", " + matrix.tickers[j] + ") is not finite");
      }
      if (std::abs(w - matrix.values(j, i)) > 1e-12) {
        throw std::invalid_argument("similarity matrix is not symmetric at (" +
                                    matrix.tickers[i] + ", " + matrix.tickers[j] + ")");
      }
      const bool ordered = matrix.tickers[i] < matrix.tickers[j];
      candidates.push_back({w, ordered ? i : j, ordered ? j : i});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const Candidate& a, const Candidate& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              const auto& ta = matrix.tickers;
              if (ta[a.source] != ta[b.source]) return ta[a.source] < ta[b.source];
              return ta[a.target] < ta[b.target];
            });
  return candidates;
}

std::vector<NetworkNode> make_nodes(const std::vector<std::string>& tickers) {
  std::vector<NetworkNode> nodes;
  nodes.reserve(tickers.size());
  for (const auto& t : tickers) nodes.push_back({t, ""});
  return nodes;
}

}  // namespace

Network build_mst(const SimilarityMatrix& matrix) {
  const int n = static_cast<int>(matrix.tickers.size());
  if (n < 2) throw std::invalid_argument("build_mst: need at least 2 tickers");

  Network net;
  net.nodes = make_nodes(matrix.tickers);
  net.directed = false;
  net.topology = Topology::Tree;

  UnionFind uf(n);
  for (const auto& c : sorted_candidates(matrix)) {
    if (uf.unite(c.source, c.target)) {
      net.edges.push_back({c.source, c.target, c.weight});
      if (net.edge_count() == n - 1) break;
    }
  }
  return net;
}

Network build_pmfg(const SimilarityMatrix& matrix) {
  const int n = static_cast<int>(matrix.tickers.size());
  if (n < 3) throw std::invalid_argument("build_pmfg: need at least 3 tickers");

  Network net;
  net.nodes = make_nodes(matrix.tickers);
  net.directed = false;
  net.topology = Topology::Planar;

  const int target_edges = 3 * n - 6;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : sorted_candidates(matrix)) {
    pairs.emplace_back(c.source, c.target);
    if (is_planar(n, pairs)) {
      net.edges.push_back({c.source, c.target, c.weight});
      if (net.edge_count() == target_edges) break;
    } else {
      pairs.pop_back();
    }
  }
  return net;
}

Network build_influence_graph(const InfluenceMatrix& influence, Topology topology) {
  const int n = static_cast<int>(influence.tickers.size());
  if (n < 3) throw std::invalid_argument("build_influence_graph: need at least 3 tickers");
  if (influence.values.rows() != n || influence.values.cols() != n) {
    throw std::invalid_argument("influence matrix shape does not match tickers");
  }

  struct Arc {
    double value;
    int source;  // influencer z
    int target;  // influenced x
  };
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(n) * (n - 1));
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (z == x) continue;
      const double v = influence.values(x, z);
      if (!std::isfinite(v)) {
        throw std::invalid_argument("influence entry (" + influence.tickers[x] + ", " +
                                    influence.tickers[z] + ") is not finite");
      }
      arcs.push_back({v, z, x});
    }
  }
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    if (a.value != b.value) return a.value > b.value;
    const auto& t = influence.tickers;
    if (t[a.source] != t[b.source]) return t[a.source] < t[b.source];
    return t[a.target] < t[b.target];
  });

  Network net;
  net.nodes = make_nodes(influence.tickers);
  net.directed = true;
  net.topology = topology;

  std::set<std::pair<int, int>> adjacency;
  std::vector<std::pair<int, int>> pairs;
  UnionFind uf(n);
  for (const auto& arc : arcs) {
    const std::pair<int, int> key{std::min(arc.source, arc.target),
                                  std::max(arc.source, arc.target)};
    if (adjacency.count(key)) {
      // Reverse orientation of an accepted arc merges onto the adjacency.
      net.edges.push_back({arc.source, arc.target, arc.value});
      continue;
    }
    bool accept = false;
    if (topology == Topology::Tree) {
      accept = uf.find(arc.source) != uf.find(arc.target);
      if (accept) uf.unite(arc.source, arc.target);
    } else {
      pairs.push_back(key);
      accept = is_planar(n, pairs);
      if (!accept) pairs.pop_back();
    }
    if (accept) {
      adjacency.insert(key);
      net.edges.push_back({arc.source, arc.target, arc.value});
      if (topology == Topology::Tree &&
          static_cast<int>(adjacency.size()) == n - 1) {
        break;
      }
    }
  }
  return net;
}

}  // namespace pminet
