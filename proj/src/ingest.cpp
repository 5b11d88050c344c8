#include "pminet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pminet {

namespace {

// Leading '#' lines are tool-stamped comments, not data; row numbers in
// error messages count from the first non-comment line.
std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lines.empty() && !line.empty() && line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, delimiter)) cells.push_back(cell);
  if (!line.empty() && line.back() == delimiter) cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool iso_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool parse_cell(const std::string& raw, double* out) {
  const std::string s = trim(raw);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last && std::isfinite(*out);
}

}  // namespace

void validate(const PriceSeries& series) {
  const auto n = static_cast<size_t>(series.prices.size());
  if (n < 2) {
    throw std::runtime_error("price series '" + series.ticker +
                             "' needs at least 2 observations");
  }
  if (series.timestamps.size() != n) {
    throw std::runtime_error("price series '" + series.ticker +
                             "' has misaligned timestamps");
  }
  for (size_t t = 0; t < n; ++t) {
    if (!(series.prices(static_cast<Eigen::Index>(t)) > 0.0)) {
      throw std::runtime_error("price series '" + series.ticker +
                               "' has a non-positive price at " + series.timestamps[t]);
    }
    if (t > 0 && !(series.timestamps[t - 1] < series.timestamps[t])) {
      throw std::runtime_error("price series '" + series.ticker +
                               "' timestamps not strictly increasing at " +
                               series.timestamps[t]);
    }
  }
}

LoadReport load_prices(const std::string& path, char delimiter) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw std::runtime_error("'" + path + "' is empty");

  const auto header = split(lines[0], delimiter);
  if (header.size() < 2) {
    throw std::runtime_error("'" + path + "': header needs a date column and at "
                             "least one ticker");
  }
  std::string date_label = trim(header[0]);
  std::transform(date_label.begin(), date_label.end(), date_label.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (date_label != "date") {
    throw std::runtime_error("'" + path + "': first header column must be 'date'");
  }

  std::vector<std::string> tickers;
  std::set<std::string> seen;
  for (size_t c = 1; c < header.size(); ++c) {
    const std::string t = trim(header[c]);
    if (t.empty()) {
      throw std::runtime_error("'" + path + "': blank ticker in header column " +
                               std::to_string(c + 1));
    }
    if (!seen.insert(t).second) {
      throw std::runtime_error("'" + path + "': duplicate ticker '" + t + "'");
    }
    tickers.push_back(t);
  }

  const size_t n_rows = lines.size() - 1;
  if (n_rows < 2) {
    throw std::runtime_error("'" + path + "': need at least two price rows");
  }

  LoadReport report;
  report.dates.reserve(n_rows);
  std::vector<std::vector<double>> columns(tickers.size(),
                                           std::vector<double>(n_rows, 0.0));
  // First problem per ticker wins; later cells of a doomed ticker are
  // still parsed so structural errors are not masked.
  std::vector<std::string> reject(tickers.size());

  for (size_t r = 0; r < n_rows; ++r) {
    const size_t row_no = r + 2;  // 1-based, counting the header
    const auto cells = split(lines[r + 1], delimiter);
    if (cells.size() != header.size()) {
      throw std::runtime_error("'" + path + "': row " + std::to_string(row_no) +
                               " has " + std::to_string(cells.size()) +
                               " columns, expected " + std::to_string(header.size()));
    }
    const std::string date = trim(cells[0]);
    if (!iso_date(date)) {
      throw std::runtime_error("'" + path + "': row " + std::to_string(row_no) +
                               " has a malformed date '" + date + "'");
    }
    if (!report.dates.empty() && !(report.dates.back() < date)) {
      throw std::runtime_error("'" + path + "': dates not strictly increasing at row " +
                               std::to_string(row_no));
    }
    report.dates.push_back(date);

    for (size_t c = 0; c < tickers.size(); ++c) {
      if (!reject[c].empty()) continue;
      double value = 0.0;
      if (trim(cells[c + 1]).empty()) {
        reject[c] = "missing price at row " + std::to_string(row_no);
      } else if (!parse_cell(cells[c + 1], &value)) {
        reject[c] = "unparseable price '" + trim(cells[c + 1]) + "' at row " +
                    std::to_string(row_no);
      } else if (value <= 0.0) {
        reject[c] = "non-positive price at row " + std::to_string(row_no);
      } else {
        columns[c][r] = value;
      }
    }
  }

  for (size_t c = 0; c < tickers.size(); ++c) {
    if (!reject[c].empty()) {
      report.excluded.push_back({tickers[c], reject[c]});
      continue;
    }
    PriceSeries series;
    series.ticker = tickers[c];
    series.timestamps = report.dates;
    series.prices = Eigen::Map<const Eigen::VectorXd>(
        columns[c].data(), static_cast<Eigen::Index>(n_rows));
    report.series.push_back(std::move(series));
  }
  return report;
}

SectorMap load_sectors(const std::string& path, char delimiter) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw std::runtime_error("'" + path + "' is empty");
  SectorMap sectors;
  for (size_t r = 1; r < lines.size(); ++r) {
    if (trim(lines[r]).empty()) continue;
    const auto cells = split(lines[r], delimiter);
    if (cells.size() != 2) {
      throw std::runtime_error("'" + path + "': row " + std::to_string(r + 1) +
                               " must be ticker,sector");
    }
    const std::string ticker = trim(cells[0]);
    const std::string sector = trim(cells[1]);
    if (ticker.empty() || sector.empty()) {
      throw std::runtime_error("'" + path + "': blank ticker or sector at row " +
                               std::to_string(r + 1));
    }
    if (!sectors.emplace(ticker, sector).second) {
      throw std::runtime_error("'" + path + "': duplicate ticker '" + ticker + "'");
    }
  }
  if (sectors.empty()) throw std::runtime_error("'" + path + "' holds no rows");
  return sectors;
}

ReturnSeries log_returns(const PriceSeries& series) {
  validate(series);
  const Eigen::Index n = series.prices.size();
  ReturnSeries out;
  out.ticker = series.ticker;
  out.returns = (series.prices.tail(n - 1).array() / series.prices.head(n - 1).array())
                    .log()
                    .matrix();
  return out;
}

DiscreteSeries discretize_quartiles(const ReturnSeries& series, int bins) {
  if (bins < 2) {
    throw std::invalid_argument("discretize_quartiles: need at least 2 bins");
  }
  const Eigen::Index n = series.returns.size();
  if (n < bins) {
    throw std::runtime_error("discretize_quartiles: series '" + series.ticker +
                             "' has " + std::to_string(n) + " returns, fewer than " +
                             std::to_string(bins) + " bins");
  }
  if (series.returns.maxCoeff() == series.returns.minCoeff()) {
    throw std::runtime_error("discretize_quartiles: series '" + series.ticker +
                             "' is constant and carries zero information");
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double va = series.returns(a);
    const double vb = series.returns(b);
    return va < vb || (va == vb && a < b);
  });

  DiscreteSeries out;
  out.ticker = series.ticker;
  out.bins = bins;
  out.states.resize(n);
  for (Eigen::Index rank = 0; rank < n; ++rank) {
    out.states(order[static_cast<size_t>(rank)]) =
        static_cast<int>(rank * bins / n);
  }
  return out;
}

}  // namespace pminet
