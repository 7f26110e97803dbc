#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rslink {

enum class Method { wb, virs, mgs };

const char* to_string(Method m) noexcept;

enum class TrialResult { success, failure, miscorrection };

struct ExperimentConfig {
  std::uint32_t q = 0;
  std::optional<std::uint32_t> alpha;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t s = 1;
  std::vector<std::size_t> weights;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Method> methods;
  unsigned threads = 1;
};

struct TrialRecord {
  std::size_t weight = 0;
  std::size_t trial = 0;
  /// Parallel to ExperimentConfig::methods.
  std::vector<TrialResult> results;
  /// virs and mgs both ran and returned the same verdict and (f, Lambda).
  std::optional<bool> agreement;
  /// Of the mgs system, or the virs system when mgs was not run.
  std::optional<std::size_t> nullspace_dim;
};

/// Throws Error(invalid_argument) when the parameters are unusable for any
/// of the requested methods.
void validate(const ExperimentConfig& cfg);

/// Seeds are derived from (seed, weight, trial) alone, so the records do not
/// depend on the thread count or scheduling. Output is ordered by weight
/// (config order), then trial index.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg);

/// Header plus one row per (weight, method):
/// weight,method,trials,successes,failures,miscorrections,agreement_rate,mean_nullspace_dim
std::string summarize_csv(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);

std::string run_montecarlo(const ExperimentConfig& cfg);

std::uint64_t trial_seed(std::uint64_t seed, std::size_t weight, std::size_t trial) noexcept;

}  // namespace rslink
