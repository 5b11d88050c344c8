#pragma once

#include "pminet/infotheory.hpp"
#include "pminet/series.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace pminet {

/// The six pairwise measures, numbered as on the command line.
enum class Measure {
  CorrDistance = 1,     // sqrt(2 (1 - rho))
  MiDistance = 2,       // H(X,Y) - I(X;Y)
  PcorrMinDistance = 3, // sqrt(2 (1 - min_Z rho(X,Y|Z)))
  PmiMinDistance = 4,   // H(X,Y) - min_Z I(X;Y|Z)
  CorrInfluence = 5,    // < rho(X,Y) - rho(X,Y|Z) >_Y
  MiInfluence = 6,      // < I(X;Y) - I(X;Y|Z) >_Y
};

const char* measure_tag(Measure measure);
Measure measure_from_int(int number);
bool is_influence(Measure measure);

/// Symmetric pairwise distance matrix.  values(i,i) is 0 and carries no
/// meaning; values(i,j) == values(j,i) bit for bit because each unordered
/// pair is computed once and mirrored.
struct SimilarityMatrix {
  std::vector<std::string> tickers;
  Measure measure = Measure::CorrDistance;
  Eigen::MatrixXd values;
};

/// Directed influence scores: values(x, z) is the average influence of
/// ticker z on ticker x.  The diagonal is 0 and carries no meaning.
/// Negative entries (synergy) are retained as computed.
struct InfluenceMatrix {
  std::vector<std::string> tickers;
  Measure measure = Measure::MiInfluence;
  Eigen::MatrixXd values;
};

SimilarityMatrix corr_distance(const std::vector<ReturnSeries>& returns);

SimilarityMatrix mi_distance(const std::vector<DiscreteSeries>& states,
                             Estimator estimator,
                             SgPrior prior = SgPrior::JointAlphabet);

/// Measure 3.  Conditioning variables whose correlation with either
/// endpoint is numerically +-1 are skipped and reported in `warnings`; a
/// pair with no valid conditioning variable at all is an error.
SimilarityMatrix pcorr_min_distance(const std::vector<ReturnSeries>& returns,
                                    std::vector<std::string>* warnings = nullptr);

/// Precomputed entropies shared by the partial-information measures: the
/// per-ticker and pairwise joint entropies, the mutual-information matrix,
/// and the full I(X;Y|Z) tensor (row-major over (x, y, z), NaN where two
/// indices coincide).
struct PmiBlock {
  std::vector<std::string> tickers;
  int bins = 4;
  int sample_size = 0;
  Estimator estimator = Estimator::Sg;
  SgPrior prior = SgPrior::JointAlphabet;
  Eigen::VectorXd entropy1;       // H(X_i)
  Eigen::MatrixXd entropy2;       // H(X_i, X_j); diagonal = H(X_i)
  Eigen::MatrixXd mi;             // I(X_i; X_j); diagonal 0
  std::vector<double> pmi;        // I(X_i; X_j | X_z)

  double pmi_at(int i, int j, int z) const;
  int size() const { return static_cast<int>(tickers.size()); }
};

PmiBlock compute_pmi_block(const std::vector<DiscreteSeries>& states,
                           Estimator estimator,
                           SgPrior prior = SgPrior::JointAlphabet);

/// Measure 4 from a precomputed block: d(X,Y) = H(X,Y) - min_Z I(X;Y|Z).
SimilarityMatrix pmi_min_distance(const PmiBlock& block);
SimilarityMatrix pmi_min_distance(const std::vector<DiscreteSeries>& states,
                                  Estimator estimator,
                                  SgPrior prior = SgPrior::JointAlphabet);

/// Single influence term d(X,Y|Z) = I(X;Y) - I(X;Y|Z) for distinct
/// indices x, y, z.
double mi_influence(const std::vector<DiscreteSeries>& states, Estimator estimator,
                    int x, int y, int z,
                    SgPrior prior = SgPrior::JointAlphabet);

/// Measure 5: entry (x, z) averages rho(X,Y) - rho(X,Y|Z) over Y != X, Z.
InfluenceMatrix avg_corr_influence(const std::vector<ReturnSeries>& returns);

/// Measure 6: entry (x, z) averages I(X;Y) - I(X;Y|Z) over Y != X, Z.
InfluenceMatrix avg_mi_influence(const PmiBlock& block);
InfluenceMatrix avg_mi_influence(const std::vector<DiscreteSeries>& states,
                                 Estimator estimator,
                                 SgPrior prior = SgPrior::JointAlphabet);

/// Null distribution of the plug-in conditional mutual information under
/// conditional independence: Gamma with shape |Z|(|X|-1)(|Y|-1)/2 and
/// scale 1/m.
struct GammaParams {
  double shape = 0.0;
  double scale = 0.0;

  static GammaParams for_bins(int bins_x, int bins_y, int bins_z, int sample_size);
};

/// (1 - alpha) quantile of the null distribution.
double gamma_threshold(const GammaParams& params, double alpha);

/// mask(i, j) is true when values(i, j) exceeds the threshold strictly;
/// a value exactly at the threshold stays insignificant.
Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> significance_mask(
    const Eigen::MatrixXd& values, const GammaParams& params, double alpha);

}  // namespace pminet
