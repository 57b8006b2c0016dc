#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrl/lattice_operator.hpp"

namespace lrl {

enum class HoppingLaw { DenseUniform, Sparse, NearestNeighbor };

struct HoppingLawSpec {
  HoppingLaw law = HoppingLaw::DenseUniform;
  double a_max = 1.0;             // dense/sparse amplitude ceiling
  double keep_probability = 0.5;  // sparse only
  double amplitude = 1.0;         // nearest-neighbor only
};

enum class RegimeTarget { Strict, SoftBoundary, Violated };

struct RegimeTargetSpec {
  RegimeTarget target = RegimeTarget::Strict;
  double margin_low = 0.25;   // Strict: v_j = hop_sum + U[margin_low, margin_high]
  double margin_high = 1.0;
  double deficit = 0.5;       // Violated: min_j v_j = hop_sum - deficit
};

struct EnsembleSpec {
  std::size_t count = 1;
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  HoppingLawSpec hopping;
  RegimeTargetSpec regime;
  std::uint64_t seed = 0;

  void validate() const;  // throws InvalidSpec
};

// Truncation order used for the per-instance series certificate check.
inline constexpr int kEnsembleSeriesOrder = 20;

struct InstanceRecord {
  std::size_t index = 0;
  std::size_t n = 0;
  RegimeKind regime = RegimeKind::Strict;
  double margin = 0;
  double min_green_entry = 0;
  double min_u = 0;
  double min_bound_margin = 0;
  double min_eigenvalue = 0;
  // error_bound - ||series - direct||_max at K = kEnsembleSeriesOrder;
  // NaN when the series was not run (no contraction certificate).
  double series_slack = 0;
  bool positivity_ok = false;
  bool bound_ok = false;
  std::string status;  // "ok" or a failure tag
};

struct EnsembleSummary {
  EnsembleSpec spec;
  std::vector<InstanceRecord> records;
  std::size_t positivity_ok_count = 0;
  std::size_t bound_ok_count = 0;
  std::vector<std::string> failures;
  // Under Strict/SoftBoundary targets: no failures at all. Violated runs are
  // observational and always report true.
  bool all_ok = false;
};

// Deterministic function of (spec.seed, index) alone.
std::pair<PotentialVector, HoppingProfile> generate_instance(
    const EnsembleSpec& spec, std::size_t index);

// Full pipeline per instance: assemble -> green_direct -> landscape ->
// eigen -> bound check, plus the series certificate where it applies.
// Per-instance errors land in the failures list; the batch never aborts.
// The summary is identical for every thread count.
EnsembleSummary run_ensemble(const EnsembleSpec& spec, unsigned threads = 1);

}  // namespace lrl
