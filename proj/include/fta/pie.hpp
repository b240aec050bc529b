#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "fta/cutsets.hpp"
#include "fta/distributions.hpp"
#include "fta/model.hpp"

namespace fta {

struct PieOptions {
  /// Maximum number of cut sets to enumerate subsets over; 25 keeps the
  /// term count at or below 2^25 - 1.
  std::size_t max_cut_sets = 25;
  /// Number of contiguous chunks the subset range is split into. The sum
  /// is reproducible bit-for-bit for a fixed partition count and agrees
  /// across partition counts to ~1e-12.
  int partitions = 1;
};

/// One signed term of the inclusion-exclusion sum.
struct PieTerm {
  std::vector<std::size_t> subset;  // indices into the MCS list, ascending
  int sign;                         // +1 for odd subsets, -1 for even
  std::vector<EventId> merged_events;  // union of the subset's cut sets
  double value;  // product of the merged events' probabilities
};

/// Probability that every cut set in the list occurs simultaneously:
/// the product over the *distinct* basic events of their union, so an
/// event shared by several cut sets is multiplied exactly once.
double intersection_prob(std::span<const CutSet> cut_sets,
                         const ProbAssignment& assignment);

/// Exact probability of the union of the cut sets by inclusion-exclusion:
/// sum over all non-empty subsets t of (-1)^(|t|+1) * intersection_prob(t).
/// Valid only under mutual independence of the basic events. The signed
/// sum is accumulated with compensated summation, checked against
/// [-1e-9, 1 + 1e-9], and clamped to [0, 1].
double pie_probability(const MCSList& mcs, const ProbAssignment& assignment,
                       const PieOptions& options = {});

/// Visits all 2^q - 1 terms in ascending subset-bitmask order. Meant for
/// small q (tests, tracing); pie_probability uses a tighter internal loop.
void for_each_pie_term(const MCSList& mcs, const ProbAssignment& assignment,
                       const std::function<void(const PieTerm&)>& visit);

/// Number of inclusion-exclusion terms for q cut sets: 2^q - 1, q >= 1.
std::uint64_t pie_term_count(unsigned q);

struct PieMethod {
  PieOptions options{};
};
struct EnumMethod {};
struct McMethod {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  int workers = 1;
};
using Method = std::variant<PieMethod, EnumMethod, McMethod>;

/// Result of a top-event analysis. Probabilities are meaningful only under
/// mutual independence of the basic events; `assumption` restates that in
/// every report. There is no runtime test for independence.
struct AnalysisReport {
  std::string method;  // "pie", "enum" or "mc"
  double time_hours = 0.0;
  double probability = 0.0;
  std::optional<std::uint64_t> terms;    // pie: 2^q - 1; enum: 2^n states
  std::optional<std::uint64_t> samples;  // mc only
  std::optional<double> std_error;       // mc only
  std::optional<std::uint64_t> seed;     // mc only
  double elapsed_seconds = 0.0;
  std::string assumption;
};

/// Orchestrates assign_probabilities plus the chosen evaluation path:
/// pie (requires a coherent tree), exhaustive enumeration, or Monte Carlo.
AnalysisReport top_probability(const FaultTree& tree, MissionTime t,
                               const Method& method);

}  // namespace fta
