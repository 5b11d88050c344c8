#include "pminet/contingency.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace pminet {

namespace {

void check_series(const DiscreteSeries& s) {
  if (s.bins < 2) {
    throw std::invalid_argument("make_table: series '" + s.ticker +
                                "' has fewer than 2 bins");
  }
  for (Eigen::Index t = 0; t < s.states.size(); ++t) {
    const int v = s.states(t);
    if (v < 0 || v >= s.bins) {
      throw std::invalid_argument("make_table: series '" + s.ticker + "' state " +
                                  std::to_string(v) + " at position " +
                                  std::to_string(t) + " is outside [0, " +
                                  std::to_string(s.bins) + ")");
    }
  }
}

void check_aligned(const DiscreteSeries& a, const DiscreteSeries& b) {
  if (a.states.size() != b.states.size()) {
    throw std::invalid_argument("make_table: series '" + a.ticker + "' and '" +
                                b.ticker + "' have different lengths");
  }
}

}  // namespace

ContingencyTable make_table(std::vector<int> dims, Eigen::ArrayXi counts) {
  if (dims.empty() || dims.size() > 3) {
    throw std::invalid_argument("make_table: arity must be 1, 2, or 3");
  }
  long long cells = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("make_table: dimensions must be positive");
    cells *= d;
  }
  if (counts.size() != cells) {
    throw std::invalid_argument("make_table: count vector size does not match dims");
  }
  long long total = 0;
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    if (counts(i) < 0) throw std::invalid_argument("make_table: negative count");
    total += counts(i);
  }
  ContingencyTable table;
  table.dims = std::move(dims);
  table.counts = std::move(counts);
  table.sample_size = static_cast<int>(total);
  return table;
}

ContingencyTable make_table(const DiscreteSeries& x) {
  check_series(x);
  ContingencyTable table;
  table.dims = {x.bins};
  table.counts = Eigen::ArrayXi::Zero(x.bins);
  for (Eigen::Index t = 0; t < x.states.size(); ++t) ++table.counts(x.states(t));
  table.sample_size = static_cast<int>(x.states.size());
  return table;
}

ContingencyTable make_table(const DiscreteSeries& x, const DiscreteSeries& y) {
  check_series(x);
  check_series(y);
  check_aligned(x, y);
  ContingencyTable table;
  table.dims = {x.bins, y.bins};
  table.counts = Eigen::ArrayXi::Zero(x.bins * y.bins);
  for (Eigen::Index t = 0; t < x.states.size(); ++t) {
    ++table.counts(x.states(t) * y.bins + y.states(t));
  }
  table.sample_size = static_cast<int>(x.states.size());
  return table;
}

ContingencyTable make_table(const DiscreteSeries& x, const DiscreteSeries& y,
                            const DiscreteSeries& z) {
  check_series(x);
  check_series(y);
  check_series(z);
  check_aligned(x, y);
  check_aligned(x, z);
  ContingencyTable table;
  table.dims = {x.bins, y.bins, z.bins};
  table.counts = Eigen::ArrayXi::Zero(x.bins * y.bins * z.bins);
  for (Eigen::Index t = 0; t < x.states.size(); ++t) {
    ++table.counts((x.states(t) * y.bins + y.states(t)) * z.bins + z.states(t));
  }
  table.sample_size = static_cast<int>(x.states.size());
  return table;
}

ContingencyTable marginal(const ContingencyTable& table, const std::vector<int>& axes) {
  const int arity = table.arity();
  if (axes.empty() || axes.size() > static_cast<size_t>(arity)) {
    throw std::invalid_argument("marginal: must keep between 1 and arity axes");
  }
  std::vector<bool> seen(arity, false);
  for (int a : axes) {
    if (a < 0 || a >= arity) {
      throw std::invalid_argument("marginal: axis " + std::to_string(a) +
                                  " out of range for arity " + std::to_string(arity));
    }
    if (seen[a]) throw std::invalid_argument("marginal: repeated axis");
    seen[a] = true;
  }

  std::vector<int> in_strides(arity, 1);
  for (int a = arity - 2; a >= 0; --a) {
    in_strides[a] = in_strides[a + 1] * table.dims[a + 1];
  }

  ContingencyTable out;
  out.dims.reserve(axes.size());
  for (int a : axes) out.dims.push_back(table.dims[a]);
  int out_cells = 1;
  for (int d : out.dims) out_cells *= d;
  out.counts = Eigen::ArrayXi::Zero(out_cells);
  out.sample_size = table.sample_size;

  std::vector<int> index(arity, 0);
  for (int cell = 0; cell < table.cells(); ++cell) {
    int rest = cell;
    for (int a = 0; a < arity; ++a) {
      index[a] = rest / in_strides[a];
      rest %= in_strides[a];
    }
    int out_cell = 0;
    for (int a : axes) out_cell = out_cell * table.dims[a] + index[a];
    out.counts(out_cell) += table.counts(cell);
  }
  return out;
}

}  // namespace pminet
