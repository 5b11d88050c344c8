#include "pminet/similarity.hpp"

#include "pminet/contingency.hpp"
#include "pminet/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pminet {

const char* measure_tag(Measure measure) {
  switch (measure) {
    case Measure::CorrDistance: return "corr-dist";
    case Measure::MiDistance: return "mi-dist";
    case Measure::PcorrMinDistance: return "pcorr-min-dist";
    case Measure::PmiMinDistance: return "pmi-min-dist";
    case Measure::CorrInfluence: return "corr-influence";
    case Measure::MiInfluence: return "mi-influence";
  }
  throw std::invalid_argument("measure_tag: unknown measure");
}

Measure measure_from_int(int number) {
  if (number < 1 || number > 6) {
    throw std::invalid_argument("measure must lie in 1..6, got " +
                                std::to_string(number));
  }
  return static_cast<Measure>(number);
}

bool is_influence(Measure measure) {
  return measure == Measure::CorrInfluence || measure == Measure::MiInfluence;
}

namespace {

template <typename Series>
std::vector<std::string> collect_tickers(const std::vector<Series>& series,
                                         size_t minimum, const char* who) {
  if (series.size() < minimum) {
    throw std::invalid_argument(std::string(who) + ": need at least " +
                                std::to_string(minimum) + " tickers, got " +
                                std::to_string(series.size()));
  }
  std::vector<std::string> tickers;
  std::set<std::string> seen;
  for (const auto& s : series) {
    if (!seen.insert(s.ticker).second) {
      throw std::invalid_argument(std::string(who) + ": duplicate ticker '" +
                                  s.ticker + "'");
    }
    tickers.push_back(s.ticker);
  }
  return tickers;
}

void check_return_lengths(const std::vector<ReturnSeries>& returns, const char* who) {
  for (const auto& s : returns) {
    if (s.returns.size() != returns.front().returns.size()) {
      throw std::invalid_argument(std::string(who) + ": series '" + s.ticker +
                                  "' length differs from '" +
                                  returns.front().ticker + "'");
    }
  }
}

void check_state_alignment(const std::vector<DiscreteSeries>& states, const char* who) {
  for (const auto& s : states) {
    if (s.states.size() != states.front().states.size()) {
      throw std::invalid_argument(std::string(who) + ": series '" + s.ticker +
                                  "' length differs from '" +
                                  states.front().ticker + "'");
    }
    if (s.bins != states.front().bins) {
      throw std::invalid_argument(std::string(who) + ": series '" + s.ticker +
                                  "' bin count differs from '" +
                                  states.front().ticker + "'");
    }
  }
}

// Pairwise Pearson correlations; each pair computed once and mirrored so
// the matrix is exactly symmetric.
Eigen::MatrixXd corr_matrix(const std::vector<ReturnSeries>& returns) {
  const int n = static_cast<int>(returns.size());
  Eigen::MatrixXd rho = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r = pearson(returns[i].returns, returns[j].returns);
      rho(i, j) = r;
      rho(j, i) = r;
    }
  }
  return rho;
}

// sqrt(2 (1 - rho)) with the radicand clamped at zero: rho can land a few
// ulps above 1 when two series are numerically identical.
double corr_to_distance(double rho) {
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - rho)));
}

double prior_mass(int cells, int bins, SgPrior prior) {
  return prior == SgPrior::JointAlphabet ? 1.0 / static_cast<double>(cells)
                                         : 1.0 / static_cast<double>(bins);
}

// Count-and-entropy workspace over packed state vectors.  All entropies
// funnel through the same kernels as the table front-ends, so block values
// agree bit for bit with make_table + entropy.
class EntropyWorkspace {
 public:
  EntropyWorkspace(const std::vector<DiscreteSeries>& states, Estimator estimator,
                   SgPrior prior)
      : states_(states),
        estimator_(estimator),
        prior_(prior),
        bins_(states.front().bins),
        len_(static_cast<int>(states.front().states.size())),
        buffer_(static_cast<size_t>(bins_) * bins_ * bins_) {}

  double single(int i) { return entropy_of(count_single(i), bins_); }
  double pair(int i, int j) { return entropy_of(count_pair(i, j), bins_ * bins_); }
  double triple(int i, int j, int k) {
    return entropy_of(count_triple(i, j, k), bins_ * bins_ * bins_);
  }

 private:
  int* count_single(int i) {
    std::fill(buffer_.begin(), buffer_.begin() + bins_, 0);
    const int* x = states_[i].states.data();
    for (int t = 0; t < len_; ++t) ++buffer_[x[t]];
    return buffer_.data();
  }

  int* count_pair(int i, int j) {
    const int cells = bins_ * bins_;
    std::fill(buffer_.begin(), buffer_.begin() + cells, 0);
    const int* x = states_[i].states.data();
    const int* y = states_[j].states.data();
    for (int t = 0; t < len_; ++t) ++buffer_[x[t] * bins_ + y[t]];
    return buffer_.data();
  }

  int* count_triple(int i, int j, int k) {
    const int cells = bins_ * bins_ * bins_;
    std::fill(buffer_.begin(), buffer_.begin() + cells, 0);
    const int* x = states_[i].states.data();
    const int* y = states_[j].states.data();
    const int* z = states_[k].states.data();
    for (int t = 0; t < len_; ++t) {
      ++buffer_[(x[t] * bins_ + y[t]) * bins_ + z[t]];
    }
    return buffer_.data();
  }

  double entropy_of(int* counts, int cells) {
    if (estimator_ == Estimator::Ml) {
      return detail::entropy_ml_counts(counts, cells, len_);
    }
    return detail::entropy_sg_counts(counts, cells, len_,
                                     prior_mass(cells, bins_, prior_));
  }

  const std::vector<DiscreteSeries>& states_;
  Estimator estimator_;
  SgPrior prior_;
  int bins_;
  int len_;
  std::vector<int> buffer_;
};

}  // namespace

SimilarityMatrix corr_distance(const std::vector<ReturnSeries>& returns) {
  const auto tickers = collect_tickers(returns, 2, "corr_distance");
  check_return_lengths(returns, "corr_distance");
  const int n = static_cast<int>(returns.size());
  SimilarityMatrix out{tickers, Measure::CorrDistance, Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = corr_to_distance(pearson(returns[i].returns, returns[j].returns));
      out.values(i, j) = d;
      out.values(j, i) = d;
    }
  }
  return out;
}

SimilarityMatrix mi_distance(const std::vector<DiscreteSeries>& states,
                             Estimator estimator, SgPrior prior) {
  const auto tickers = collect_tickers(states, 2, "mi_distance");
  check_state_alignment(states, "mi_distance");
  const int n = static_cast<int>(states.size());
  EntropyWorkspace ws(states, estimator, prior);

  Eigen::VectorXd h1(n);
  for (int i = 0; i < n; ++i) h1(i) = ws.single(i);

  SimilarityMatrix out{tickers, Measure::MiDistance, Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // H(X,Y) - I(X;Y) = 2 H(X,Y) - H(X) - H(Y)
      const double hxy = ws.pair(i, j);
      const double d = 2.0 * hxy - h1(i) - h1(j);
      out.values(i, j) = d;
      out.values(j, i) = d;
    }
  }
  return out;
}

SimilarityMatrix pcorr_min_distance(const std::vector<ReturnSeries>& returns,
                                    std::vector<std::string>* warnings) {
  const auto tickers = collect_tickers(returns, 3, "pcorr_min_distance");
  check_return_lengths(returns, "pcorr_min_distance");
  const int n = static_cast<int>(returns.size());
  const Eigen::MatrixXd rho = corr_matrix(returns);
  constexpr double kDegenerate = 1e-12;

  SimilarityMatrix out{tickers, Measure::PcorrMinDistance, Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double best = std::numeric_limits<double>::infinity();
      bool found = false;
      for (int z = 0; z < n; ++z) {
        if (z == i || z == j) continue;
        if (1.0 - rho(i, z) * rho(i, z) <= kDegenerate ||
            1.0 - rho(j, z) * rho(j, z) <= kDegenerate) {
          if (warnings) {
            warnings->push_back("pair (" + tickers[i] + ", " + tickers[j] +
                                "): conditioning on " + tickers[z] +
                                " skipped, collinear with an endpoint");
          }
          continue;
        }
        const double pc = partial_corr(rho(i, j), rho(i, z), rho(j, z));
        if (!found || pc < best) {
          best = pc;
          found = true;
        }
      }
      if (!found) {
        throw std::runtime_error("pcorr_min_distance: pair (" + tickers[i] + ", " +
                                 tickers[j] + ") has no valid conditioning ticker");
      }
      const double d = corr_to_distance(best);
      out.values(i, j) = d;
      out.values(j, i) = d;
    }
  }
  return out;
}

double PmiBlock::pmi_at(int i, int j, int z) const {
  const int n = size();
  return pmi[(static_cast<size_t>(i) * n + j) * n + z];
}

PmiBlock compute_pmi_block(const std::vector<DiscreteSeries>& states,
                           Estimator estimator, SgPrior prior) {
  const auto tickers = collect_tickers(states, 3, "compute_pmi_block");
  check_state_alignment(states, "compute_pmi_block");
  const int n = static_cast<int>(states.size());

  PmiBlock block;
  block.tickers = tickers;
  block.bins = states.front().bins;
  block.sample_size = static_cast<int>(states.front().states.size());
  block.estimator = estimator;
  block.prior = prior;

  EntropyWorkspace ws(states, estimator, prior);

  block.entropy1.resize(n);
  for (int i = 0; i < n; ++i) block.entropy1(i) = ws.single(i);

  block.entropy2.resize(n, n);
  block.mi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) block.entropy2(i, i) = block.entropy1(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double hxy = ws.pair(i, j);
      block.entropy2(i, j) = hxy;
      block.entropy2(j, i) = hxy;
      const double mi = block.entropy1(i) + block.entropy1(j) - hxy;
      block.mi(i, j) = mi;
      block.mi(j, i) = mi;
    }
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  block.pmi.assign(static_cast<size_t>(n) * n * n, nan);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int z = 0; z < n; ++z) {
        if (z == i || z == j) continue;
        // I(X;Y|Z) = H(X,Z) + H(Y,Z) - H(Z) - H(X,Y,Z)
        const double hxyz = ws.triple(i, j, z);
        const double value = block.entropy2(i, z) + block.entropy2(j, z) -
                             block.entropy1(z) - hxyz;
        block.pmi[(static_cast<size_t>(i) * n + j) * n + z] = value;
        block.pmi[(static_cast<size_t>(j) * n + i) * n + z] = value;
      }
    }
  }
  return block;
}

SimilarityMatrix pmi_min_distance(const PmiBlock& block) {
  const int n = block.size();
  if (n < 3) {
    throw std::invalid_argument("pmi_min_distance: need at least 3 tickers");
  }
  SimilarityMatrix out{block.tickers, Measure::PmiMinDistance,
                       Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double best = std::numeric_limits<double>::infinity();
      for (int z = 0; z < n; ++z) {
        if (z == i || z == j) continue;
        best = std::min(best, block.pmi_at(i, j, z));
      }
      const double d = block.entropy2(i, j) - best;
      out.values(i, j) = d;
      out.values(j, i) = d;
    }
  }
  return out;
}

SimilarityMatrix pmi_min_distance(const std::vector<DiscreteSeries>& states,
                                  Estimator estimator, SgPrior prior) {
  return pmi_min_distance(compute_pmi_block(states, estimator, prior));
}

double mi_influence(const std::vector<DiscreteSeries>& states, Estimator estimator,
                    int x, int y, int z, SgPrior prior) {
  const int n = static_cast<int>(states.size());
  if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) {
    throw std::invalid_argument("mi_influence: index out of range");
  }
  if (x == y || x == z || y == z) {
    throw std::invalid_argument("mi_influence: indices must be distinct");
  }
  const double mi = mutual_info(make_table(states[x], states[y]), estimator, prior);
  const double pmi =
      partial_mutual_info(make_table(states[x], states[y], states[z]), estimator, prior);
  return mi - pmi;
}

InfluenceMatrix avg_corr_influence(const std::vector<ReturnSeries>& returns) {
  const auto tickers = collect_tickers(returns, 3, "avg_corr_influence");
  check_return_lengths(returns, "avg_corr_influence");
  const int n = static_cast<int>(returns.size());
  const Eigen::MatrixXd rho = corr_matrix(returns);

  InfluenceMatrix out{tickers, Measure::CorrInfluence, Eigen::MatrixXd::Zero(n, n)};
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (z == x) continue;
      double acc = 0.0;
      for (int y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        acc += rho(x, y) - partial_corr(rho(x, y), rho(x, z), rho(y, z));
      }
      out.values(x, z) = acc / static_cast<double>(n - 2);
    }
  }
  return out;
}

InfluenceMatrix avg_mi_influence(const PmiBlock& block) {
  const int n = block.size();
  if (n < 3) {
    throw std::invalid_argument("avg_mi_influence: need at least 3 tickers");
  }
  InfluenceMatrix out{block.tickers, Measure::MiInfluence, Eigen::MatrixXd::Zero(n, n)};
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (z == x) continue;
      double acc = 0.0;
      for (int y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        acc += block.mi(x, y) - block.pmi_at(x, y, z);
      }
      out.values(x, z) = acc / static_cast<double>(n - 2);
    }
  }
  return out;
}

InfluenceMatrix avg_mi_influence(const std::vector<DiscreteSeries>& states,
                                 Estimator estimator, SgPrior prior) {
  return avg_mi_influence(compute_pmi_block(states, estimator, prior));
}

GammaParams GammaParams::for_bins(int bins_x, int bins_y, int bins_z, int sample_size) {
  if (bins_x < 2 || bins_y < 2 || bins_z < 1) {
    throw std::invalid_argument("GammaParams: endpoint alphabets need >= 2 states "
                                "and the conditioning alphabet >= 1");
  }
  if (sample_size < 1) {
    throw std::invalid_argument("GammaParams: sample size must be positive");
  }
  GammaParams params;
  params.shape = static_cast<double>(bins_z) * (bins_x - 1) * (bins_y - 1) / 2.0;
  params.scale = 1.0 / static_cast<double>(sample_size);
  return params;
}

double gamma_threshold(const GammaParams& params, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("gamma_threshold: alpha must lie in (0, 1)");
  }
  return gamma_quantile(params.shape, params.scale, 1.0 - alpha);
}

Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> significance_mask(
    const Eigen::MatrixXd& values, const GammaParams& params, double alpha) {
  const double threshold = gamma_threshold(params, alpha);
  return values.array() > threshold;
}

}  // namespace pminet
