#pragma once

#include "pminet/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pminet {

enum class NonlinearTransform { Square, Abs };

/// Mediated chain source -> mediator -> target: the mediator is rebuilt
/// from the source plus fresh noise and the target from the mediator plus
/// fresh noise, so source and target are conditionally independent given
/// the mediator.
struct MediationChain {
  int source = 0;
  int mediator = 0;
  int target = 0;
};

/// Pair where y is a standardized nonlinear function of x plus noise,
/// giving (near) zero linear correlation but high mutual information.
struct NonlinearPair {
  int x = 0;
  int y = 0;
  NonlinearTransform transform = NonlinearTransform::Square;
};

struct SynthSpec {
  int tickers = 0;
  int samples = 0;
  std::vector<int> sector_blocks;   // block sizes, must sum to `tickers`
  double block_coupling = 0.0;      // pairwise correlation inside a block
  double chain_coupling = 0.9;      // source->mediator and mediator->target
  std::vector<MediationChain> chains;
  std::vector<NonlinearPair> nonlinear;
  std::uint64_t seed = 1;
};

/// Generated market with its ground truth: sector labels per block and
/// the spec that produced it.  The same spec always yields bit-identical
/// series.
struct SynthResult {
  std::vector<ReturnSeries> series;
  SectorMap sectors;
  SynthSpec spec;
};

SynthResult generate(const SynthSpec& spec);

/// Ticker name used by the generator: "T001", "T002", ...
std::string synth_ticker(int index);

}  // namespace pminet
