#pragma once

#include "pminet/network.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace pminet {

struct CentralityVector {
  std::vector<std::string> tickers;
  Eigen::VectorXd values;
};

/// Markov centrality C(v) = n / sum_s MFPT(s -> v) of the random walk on
/// the unweighted skeleton, with MFPT(v -> v) = 0.  Mean first passage
/// times come from the fundamental matrix Z = (I - P + 1 pi')^-1 via
/// MFPT(s -> v) = (Z_vv - Z_sv) / pi_v.  Throws on a disconnected
/// skeleton, listing the components.
CentralityVector markov_centrality(const Network& network);

/// Same computation on a bare adjacency matrix (entries 0/1, symmetric).
Eigen::VectorXd markov_centrality_adjacency(const Eigen::MatrixXd& adjacency);

/// Fraction of skeleton edges whose endpoints share a sector.  Every node
/// ticker must appear in the map.
double sector_ratio(const Network& network, const SectorMap& sectors);

/// Same-sector edge fraction of the complete graph on the given universe:
/// sum_i C(n_i, 2) / C(n, 2) over sector sizes n_i.  The natural baseline
/// to quote next to sector_ratio.
double complete_graph_sector_ratio(const SectorMap& sectors);

/// Global clustering coefficient (transitivity): 3 * triangles / connected
/// triples on the skeleton.  Throws when the skeleton has no connected
/// triple.
double clustering_coefficient(const Network& network);

/// Pearson correlation between two centrality vectors over the same
/// tickers in the same order.
double centrality_correlation(const CentralityVector& a, const CentralityVector& b);

/// Pairwise centrality correlations across the six measures, trees and
/// planar graphs separately.  `networks` holds the six tree networks
/// (measures 1..6) followed by the six planar ones; all twelve share one
/// ticker universe.
struct CentralityComparison {
  Eigen::MatrixXd trees;
  Eigen::MatrixXd planar;
};

CentralityComparison compare_all(const std::vector<Network>& networks);

}  // namespace pminet
