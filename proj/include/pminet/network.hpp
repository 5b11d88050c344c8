#pragma once

#include "pminet/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pminet {

/// Tree and Planar are the filter targets; Unrestricted marks graphs with
/// no structural guarantee (e.g. loaded edge lists).
enum class Topology { Tree, Planar, Unrestricted };

struct NetworkNode {
  std::string ticker;
  std::string sector;
};

/// Edge between node indices.  For undirected networks the orientation is
/// canonical (source ticker precedes target ticker lexicographically); for
/// directed networks the edge points source -> target (influencer ->
/// influenced).
struct NetworkEdge {
  int source = 0;
  int target = 0;
  double weight = 0.0;
};

struct Network {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge> edges;
  bool directed = false;
  Topology topology = Topology::Tree;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int index_of(const std::string& ticker) const;
};

/// Unique undirected node pairs covered by the edge list (the skeleton):
/// reverse orientations of a directed pair collapse to one entry, each
/// pair ordered (min, max) by node index.
std::vector<std::pair<int, int>> skeleton_pairs(const Network& network);

/// Fills every node's sector from the map; throws naming the first ticker
/// that has no sector.
void apply_sectors(Network& network, const SectorMap& sectors);

}  // namespace pminet
