#pragma once

#include "pminet/network.hpp"
#include "pminet/similarity.hpp"

#include <utility>
#include <vector>

namespace pminet {

/// True when the undirected simple graph on n vertices with the given
/// edges admits a planar embedding.
bool is_planar(int n, const std::vector<std::pair<int, int>>& edges);

/// True when the network's skeleton stays planar after adding the
/// undirected edge (u, v).
bool planarity_check(const Network& network, int u, int v);

/// Minimum spanning tree by Kruskal's scan of the candidate list sorted by
/// (weight, ticker pair); ties are broken lexicographically, so the result
/// is deterministic for any input.  N-1 edges, connected.
Network build_mst(const SimilarityMatrix& matrix);

/// Planar filter of the same candidate list: each edge is kept iff the
/// graph stays planar, stopping at 3N-6 edges.  The MST edge set is always
/// contained in the result.
Network build_pmfg(const SimilarityMatrix& matrix);

/// Directed influence network.  Candidate arcs z -> x are scanned in
/// decreasing influence order (ties broken by source then target ticker).
/// An arc between already-adjacent nodes merges onto the existing
/// adjacency and is always kept; otherwise the new adjacency must keep the
/// skeleton a forest (Topology::Tree, stopping once N-1 adjacencies are
/// reached) or planar (Topology::Planar, scanning the whole list).
Network build_influence_graph(const InfluenceMatrix& influence, Topology topology);

}  // namespace pminet
