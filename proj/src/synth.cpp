#include "pminet/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace pminet {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substream seed for (purpose, index); the double mix keeps
// streams decorrelated for any base seed.
std::uint64_t substream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ (purpose * 0x9e3779b97f4a7c15ULL)) ^ index);
}

enum Purpose : std::uint64_t { kFactor = 1, kNoise = 2, kChain = 3, kNonlinear = 4 };

// Standard normals via an explicit Box-Muller transform on top of
// mt19937_64, so the stream is identical across standard libraries
// (std::normal_distribution is implementation-defined).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  // 53-bit mantissa mapped to (0, 1]; never 0, so the log is finite.
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

void validate(const SynthSpec& spec) {
  if (spec.tickers < 1) throw std::invalid_argument("synth: need at least 1 ticker");
  if (spec.samples < 2) throw std::invalid_argument("synth: need at least 2 samples");
  if (!(spec.block_coupling >= 0.0) || spec.block_coupling >= 1.0) {
    throw std::invalid_argument("synth: block coupling must lie in [0, 1)");
  }
  if (!(std::abs(spec.chain_coupling) < 1.0)) {
    throw std::invalid_argument("synth: chain coupling must lie in (-1, 1)");
  }
  if (!spec.sector_blocks.empty()) {
    int total = 0;
    for (int size : spec.sector_blocks) {
      if (size < 1) throw std::invalid_argument("synth: block sizes must be positive");
      total += size;
    }
    if (total != spec.tickers) {
      throw std::invalid_argument("synth: block sizes sum to " + std::to_string(total) +
                                  ", expected " + std::to_string(spec.tickers));
    }
  }
  auto check_index = [&](int index, const char* role) {
    if (index < 0 || index >= spec.tickers) {
      throw std::invalid_argument(std::string("synth: ") + role + " index " +
                                  std::to_string(index) + " out of range");
    }
  };
  for (const auto& chain : spec.chains) {
    check_index(chain.source, "chain source");
    check_index(chain.mediator, "chain mediator");
    check_index(chain.target, "chain target");
    if (chain.source == chain.mediator || chain.source == chain.target ||
        chain.mediator == chain.target) {
      throw std::invalid_argument("synth: chain roles must be distinct tickers");
    }
  }
  for (const auto& pair : spec.nonlinear) {
    check_index(pair.x, "nonlinear x");
    check_index(pair.y, "nonlinear y");
    if (pair.x == pair.y) {
      throw std::invalid_argument("synth: nonlinear pair must use distinct tickers");
    }
  }
}

}  // namespace

std::string synth_ticker(int index) {
  std::string digits = std::to_string(index + 1);
  while (digits.size() < 3) digits.insert(digits.begin(), '0');
  return "T" + digits;
}

SynthResult generate(const SynthSpec& spec) {
  validate(spec);
  const int n = spec.tickers;
  const int m = spec.samples;

  // Every ticker belongs to a block; an empty block list means singletons.
  std::vector<int> block_of(n);
  std::vector<int> block_sizes = spec.sector_blocks;
  if (block_sizes.empty()) block_sizes.assign(n, 1);
  {
    int ticker = 0;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
      for (int k = 0; k < block_sizes[b]; ++k) block_of[ticker++] = static_cast<int>(b);
    }
  }

  std::vector<std::vector<double>> factors(block_sizes.size(),
                                           std::vector<double>(m));
  for (size_t b = 0; b < block_sizes.size(); ++b) {
    GaussianStream stream(substream(spec.seed, kFactor, b));
    for (int t = 0; t < m; ++t) factors[b][t] = stream.next();
  }

  const double on_factor = std::sqrt(spec.block_coupling);
  const double on_noise = std::sqrt(1.0 - spec.block_coupling);
  std::vector<Eigen::VectorXd> returns(n, Eigen::VectorXd(m));
  for (int i = 0; i < n; ++i) {
    GaussianStream stream(substream(spec.seed, kNoise, i));
    const auto& factor = factors[block_of[i]];
    for (int t = 0; t < m; ++t) {
      returns[i](t) = on_factor * factor[t] + on_noise * stream.next();
    }
  }

  // Chains overwrite mediator and target in listed order: each link mixes
  // the upstream series with fresh noise, so source and target decouple
  // once the mediator is known.
  const double cc = spec.chain_coupling;
  const double cn = std::sqrt(1.0 - cc * cc);
  for (size_t k = 0; k < spec.chains.size(); ++k) {
    const auto& chain = spec.chains[k];
    GaussianStream med_stream(substream(spec.seed, kChain, 2 * k));
    GaussianStream tgt_stream(substream(spec.seed, kChain, 2 * k + 1));
    for (int t = 0; t < m; ++t) {
      returns[chain.mediator](t) = cc * returns[chain.source](t) + cn * med_stream.next();
    }
    for (int t = 0; t < m; ++t) {
      returns[chain.target](t) = cc * returns[chain.mediator](t) + cn * tgt_stream.next();
    }
  }

  // Nonlinear pairs rebuild y as a standardized even function of x plus
  // noise: zero linear correlation by symmetry, high mutual information.
  for (size_t k = 0; k < spec.nonlinear.size(); ++k) {
    const auto& pair = spec.nonlinear[k];
    GaussianStream stream(substream(spec.seed, kNonlinear, k));
    for (int t = 0; t < m; ++t) {
      const double x = returns[pair.x](t);
      double f = 0.0;
      if (pair.transform == NonlinearTransform::Square) {
        f = (x * x - 1.0) / std::sqrt(2.0);
      } else {
        f = (std::abs(x) - std::sqrt(2.0 / kPi)) / std::sqrt(1.0 - 2.0 / kPi);
      }
      returns[pair.y](t) = f + 0.5 * stream.next();
    }
  }

  SynthResult result;
  result.spec = spec;
  for (int i = 0; i < n; ++i) {
    ReturnSeries series;
    series.ticker = synth_ticker(i);
    series.returns = std::move(returns[i]);
    result.series.push_back(std::move(series));
    result.sectors[result.series.back().ticker] =
        "S" + std::to_string(block_of[i] + 1);
  }
  return result;
}

}  // namespace pminet
