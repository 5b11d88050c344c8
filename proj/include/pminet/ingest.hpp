#pragma once

#include "pminet/series.hpp"

#include <string>
#include <vector>

namespace pminet {

/// A ticker dropped while loading, with a human-readable reason.
struct ExclusionRecord {
  std::string ticker;
  std::string reason;
};

/// Result of loading a price table: the tickers that survived with full
/// histories, plus a record for every ticker that was rejected.
struct LoadReport {
  std::vector<std::string> dates;
  std::vector<PriceSeries> series;
  std::vector<ExclusionRecord> excluded;
};

/// Loads a price CSV with header `date,<TICKER>,...` and one ISO-8601 date
/// per row.  Tickers with any blank, unparseable, or non-positive cell are
/// excluded and reported rather than patched.  Structural problems (missing
/// header, ragged rows, duplicate tickers, dates out of order) throw
/// std::runtime_error naming the offending row or column.
LoadReport load_prices(const std::string& path, char delimiter = ',');

/// Loads a `ticker,sector` CSV (header required).
SectorMap load_sectors(const std::string& path, char delimiter = ',');

/// r[t] = ln(p[t+1] / p[t]).  Requires at least two prices, all positive.
ReturnSeries log_returns(const PriceSeries& series);

/// Equal-occupancy discretization into `bins` states.  Entry t gets state
/// floor(rank(t) * bins / len) where rank is the position in the sorted
/// sample; tied values are ranked by time index.  The result depends only
/// on the ordering of the returns, so any strictly increasing transform of
/// the input leaves it unchanged.  A constant series carries no rank
/// information and is rejected.
DiscreteSeries discretize_quartiles(const ReturnSeries& series, int bins = 4);

}  // namespace pminet
