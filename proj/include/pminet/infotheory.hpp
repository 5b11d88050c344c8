#pragma once

#include "pminet/contingency.hpp"

#include <Eigen/Dense>

namespace pminet {

enum class Estimator { Ml, Sg };

/// Alphabet convention for the Schurmann-Grassberger prior N = 1/|chi|:
/// JointAlphabet takes |chi| = number of cells of the table at hand,
/// PerAxis takes |chi| = per-variable alphabet size (requires equal dims).
enum class SgPrior { JointAlphabet, PerAxis };

struct EntropyEstimate {
  double value = 0.0;
  Estimator estimator = Estimator::Ml;
};

/// Plug-in (maximum likelihood) entropy in nats:
/// H = ln m - (1/m) sum_c c ln c over occupied cells.
EntropyEstimate entropy_ml(const ContingencyTable& table);

/// Schurmann-Grassberger entropy in nats.  With prior mass N per cell and
/// M = m + cells * N,
///   H = (1/M) sum_c (c + N) * (psi(M + 1) - psi(c + N + 1)),
/// summed over all cells including empty ones.
EntropyEstimate entropy_sg(const ContingencyTable& table,
                           SgPrior prior = SgPrior::JointAlphabet);

EntropyEstimate entropy(const ContingencyTable& table, Estimator estimator,
                        SgPrior prior = SgPrior::JointAlphabet);

/// I(X;Y) = H(X) + H(Y) - H(X,Y) from a pair table.  May be a hair
/// negative (>= -1e-12) for the plug-in estimator due to rounding; values
/// are reported as computed, never clipped.
double mutual_info(const ContingencyTable& xy, Estimator estimator,
                   SgPrior prior = SgPrior::JointAlphabet);

/// I(X;Y|Z) = H(X,Z) + H(Y,Z) - H(Z) - H(X,Y,Z) from a triple table.
double partial_mutual_info(const ContingencyTable& xyz, Estimator estimator,
                           SgPrior prior = SgPrior::JointAlphabet);

/// Sample Pearson correlation.  Throws on length mismatch, length < 2, or
/// zero variance.
double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// First-order partial correlation from the three pairwise correlations:
/// rho(X,Y|Z) = (r_xy - r_xz r_yz) / sqrt((1 - r_xz^2)(1 - r_yz^2)).
/// Throws when a conditioning correlation is so close to +-1 that the
/// denominator degenerates.
double partial_corr(double rho_xy, double rho_xz, double rho_yz);

double partial_corr(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                    const Eigen::VectorXd& z);

namespace detail {

/// Entropy kernels shared by the table front-ends and the similarity
/// pipeline.  Both group the counts by value and accumulate in ascending
/// count order, which makes the result invariant under any permutation of
/// table axes (the sum is over the same multiset in the same order).
/// `counts` is clobbered (sorted in place).
double entropy_ml_counts(int* counts, int cells, int sample_size);
double entropy_sg_counts(int* counts, int cells, int sample_size, double prior_n);

/// Prior mass per cell for the given convention; PerAxis requires all dims
/// equal and uses 1/dims[0].
double sg_prior_mass(const ContingencyTable& table, SgPrior prior);

}  // namespace detail

}  // namespace pminet
