#include "pminet/infotheory.hpp"

#include "pminet/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pminet {

namespace detail {

double entropy_ml_counts(int* counts, int cells, int sample_size) {
  std::sort(counts, counts + cells);
  const double m = sample_size;
  double acc = 0.0;
  int i = 0;
  while (i < cells && counts[i] == 0) ++i;
  while (i < cells) {
    int j = i;
    while (j < cells && counts[j] == counts[i]) ++j;
    const double c = counts[i];
    acc += static_cast<double>(j - i) * c * std::log(c);
    i = j;
  }
  return std::log(m) - acc / m;
}

double entropy_sg_counts(int* counts, int cells, int sample_size, double prior_n) {
  std::sort(counts, counts + cells);
  const double total = sample_size + cells * prior_n;
  const double psi_total = digamma(total + 1.0);
  double acc = 0.0;
  int i = 0;
  while (i < cells) {
    int j = i;
    while (j < cells && counts[j] == counts[i]) ++j;
    const double c = counts[i];
    const double term = (c + prior_n) * (psi_total - digamma(c + prior_n + 1.0));
    acc += static_cast<double>(j - i) * term;
    i = j;
  }
  return acc / total;
}

double sg_prior_mass(const ContingencyTable& table, SgPrior prior) {
  if (prior == SgPrior::JointAlphabet) {
    return 1.0 / static_cast<double>(table.cells());
  }
  for (int d : table.dims) {
    if (d != table.dims[0]) {
      throw std::invalid_argument(
          "entropy_sg: per-axis prior requires equal alphabet sizes");
    }
  }
  return 1.0 / static_cast<double>(table.dims[0]);
}

namespace {

double entropy_value(const ContingencyTable& table, Estimator estimator,
                     SgPrior prior) {
  if (table.sample_size < 1) {
    throw std::invalid_argument("entropy: table holds no samples");
  }
  std::vector<int> scratch(table.counts.data(), table.counts.data() + table.cells());
  if (estimator == Estimator::Ml) {
    return entropy_ml_counts(scratch.data(), table.cells(), table.sample_size);
  }
  return entropy_sg_counts(scratch.data(), table.cells(), table.sample_size,
                           sg_prior_mass(table, prior));
}

}  // namespace

}  // namespace detail

EntropyEstimate entropy_ml(const ContingencyTable& table) {
  return {detail::entropy_value(table, Estimator::Ml, SgPrior::JointAlphabet),
          Estimator::Ml};
}

EntropyEstimate entropy_sg(const ContingencyTable& table, SgPrior prior) {
  return {detail::entropy_value(table, Estimator::Sg, prior), Estimator::Sg};
}

EntropyEstimate entropy(const ContingencyTable& table, Estimator estimator,
                        SgPrior prior) {
  return {detail::entropy_value(table, estimator, prior), estimator};
}

double mutual_info(const ContingencyTable& xy, Estimator estimator, SgPrior prior) {
  if (xy.arity() != 2) {
    throw std::invalid_argument("mutual_info: table arity must be 2");
  }
  const double hx = entropy(marginal(xy, {0}), estimator, prior).value;
  const double hy = entropy(marginal(xy, {1}), estimator, prior).value;
  const double hxy = entropy(xy, estimator, prior).value;
  return hx + hy - hxy;
}

double partial_mutual_info(const ContingencyTable& xyz, Estimator estimator,
                           SgPrior prior) {
  if (xyz.arity() != 3) {
    throw std::invalid_argument("partial_mutual_info: table arity must be 3");
  }
  const double hxz = entropy(marginal(xyz, {0, 2}), estimator, prior).value;
  const double hyz = entropy(marginal(xyz, {1, 2}), estimator, prior).value;
  const double hz = entropy(marginal(xyz, {2}), estimator, prior).value;
  const double hxyz = entropy(xyz, estimator, prior).value;
  return hxz + hyz - hz - hxyz;
}

double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("pearson: series lengths differ");
  }
  if (x.size() < 2) {
    throw std::invalid_argument("pearson: need at least 2 observations");
  }
  const Eigen::ArrayXd dx = x.array() - x.mean();
  const Eigen::ArrayXd dy = y.array() - y.mean();
  const double sxx = (dx * dx).sum();
  const double syy = (dy * dy).sum();
  if (sxx <= 0.0 || syy <= 0.0) {
    throw std::runtime_error("pearson: zero-variance series");
  }
  return (dx * dy).sum() / std::sqrt(sxx * syy);
}

double partial_corr(double rho_xy, double rho_xz, double rho_yz) {
  constexpr double kDegenerate = 1e-12;
  const double vx = 1.0 - rho_xz * rho_xz;
  const double vy = 1.0 - rho_yz * rho_yz;
  if (vx <= kDegenerate || vy <= kDegenerate) {
    throw std::runtime_error(
        "partial_corr: conditioning variable is collinear with an endpoint");
  }
  return (rho_xy - rho_xz * rho_yz) / std::sqrt(vx * vy);
}

double partial_corr(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                    const Eigen::VectorXd& z) {
  return partial_corr(pearson(x, y), pearson(x, z), pearson(y, z));
}

}  // namespace pminet
