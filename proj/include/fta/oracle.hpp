#pragma once

#include <cstdint>

#include "fta/distributions.hpp"
#include "fta/model.hpp"

namespace fta {

// Independent ground-truth evaluators used for differential checks of the
// gate algebra, the inclusion-exclusion engine and the bundled case study.

/// SplitMix64 finalizer; the building block of the counter-based stream.
std::uint64_t split_mix64(std::uint64_t z);

/// Counter-based uniform stream: one 64-bit word per (seed, sample, event)
/// triple, computed as split_mix64(split_mix64(split_mix64(seed) ^ sample)
/// ^ event). Each draw depends only on its own indices, so sampling is
/// reproducible under any partitioning of the sample range. This layout is
/// part of the tool's contract: changing it changes every seeded result.
std::uint64_t counter_word(std::uint64_t seed, std::uint64_t sample,
                           std::uint64_t event);

/// Top 53 bits of the word mapped to [0, 1).
double counter_uniform(std::uint64_t word);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(estimate (1 - estimate) / samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Exact top-event probability by exhaustive enumeration: iterates all 2^n
/// basic-event states as an n-bit counter and accumulates state weights
/// with compensated summation. n is capped at 24 (EnumTooLarge above).
double enum_prob(const FaultTree& tree, const ProbAssignment& assignment);

/// Monte Carlo estimate over `samples` independent trials. Each basic
/// event is drawn as Bernoulli(p_e) from the counter stream, so the result
/// is identical for a fixed (seed, samples) pair regardless of the worker
/// count used to split the sample range.
McEstimate mc_prob(const FaultTree& tree, const ProbAssignment& assignment,
                   std::uint64_t samples, std::uint64_t seed, int workers = 1);

}  // namespace fta
