#pragma once

#include "pminet/series.hpp"

#include <Eigen/Dense>

#include <vector>

namespace pminet {

/// Dense joint count table over one to three discrete variables.  Counts
/// are stored row-major over `dims`: for arity 3 the cell (x, y, z) lives
/// at index (x * dims[1] + y) * dims[2] + z.
struct ContingencyTable {
  std::vector<int> dims;
  Eigen::ArrayXi counts;
  int sample_size = 0;

  int arity() const { return static_cast<int>(dims.size()); }
  int cells() const { return static_cast<int>(counts.size()); }
  int& at(int x) { return counts(x); }
  int& at(int x, int y) { return counts(x * dims[1] + y); }
  int& at(int x, int y, int z) { return counts((x * dims[1] + y) * dims[2] + z); }
  int at(int x) const { return counts(x); }
  int at(int x, int y) const { return counts(x * dims[1] + y); }
  int at(int x, int y, int z) const { return counts((x * dims[1] + y) * dims[2] + z); }
};

/// Builds a table directly from dims and counts; validates shape,
/// non-negativity, and that sample_size matches the count total.
ContingencyTable make_table(std::vector<int> dims, Eigen::ArrayXi counts);

ContingencyTable make_table(const DiscreteSeries& x);
ContingencyTable make_table(const DiscreteSeries& x, const DiscreteSeries& y);
ContingencyTable make_table(const DiscreteSeries& x, const DiscreteSeries& y,
                            const DiscreteSeries& z);

/// Sums out every axis not listed in `axes`; kept axes appear in the given
/// order, so marginal(t, {1, 0}) transposes a pair table.
ContingencyTable marginal(const ContingencyTable& table, const std::vector<int>& axes);

}  // namespace pminet
