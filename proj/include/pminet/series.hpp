#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace pminet {

/// Daily closing prices for one ticker.  Prices are strictly positive and
/// aligned with `timestamps`, which hold strictly increasing ISO-8601 dates.
struct PriceSeries {
  std::string ticker;
  std::vector<std::string> timestamps;
  Eigen::VectorXd prices;
};

/// Log returns r[t] = ln(p[t+1] / p[t]); one entry shorter than the prices
/// it came from.
struct ReturnSeries {
  std::string ticker;
  Eigen::VectorXd returns;
};

/// Rank-discretized returns.  Every state lies in [0, bins) and the state
/// occupancies differ by at most one.
struct DiscreteSeries {
  std::string ticker;
  Eigen::VectorXi states;
  int bins = 4;
};

/// Ticker -> sector label.  std::map keeps iteration deterministic.
using SectorMap = std::map<std::string, std::string>;

/// Throws std::runtime_error if the series violates its invariants
/// (empty, non-positive prices, misaligned or unordered timestamps).
void validate(const PriceSeries& series);

}  // namespace pminet
