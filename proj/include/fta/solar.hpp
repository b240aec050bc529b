#pragma once

#include <array>
#include <cstddef>

#include "fta/distributions.hpp"
#include "fta/model.hpp"

namespace fta {

/// Exponential failure rates (per hour) of the 14 solar-array basic events
/// x1..x14. Each must be finite and >= 0.
class SolarRates {
 public:
  explicit SolarRates(const std::array<double, 14>& per_hour);

  /// All 14 events at the same rate.
  static SolarRates uniform(double rate_per_hour);

  /// 0-based access: rate(0) is x1's rate.
  double rate(std::size_t i) const { return rates_.at(i); }
  const std::array<double, 14>& rates() const { return rates_; }

 private:
  std::array<double, 14> rates_;
};

/// The DFH-3 satellite solar-array fault tree: five failure mechanisms
/// (unlock, deployment, locking, orientation, mechanical parts) OR-ed into
/// the top event, 14 exponential basic events, 10 gates. Event x3 feeds
/// four distinct OR gates, so the raw cut-set list is deliberately
/// redundant before minimization.
FaultTree solar_tree(const SolarRates& rates);

/// Closed-form expression for the solar-array failure probability,
/// evaluated term by term as written: seven signed groups whose cross
/// terms factor the overlapping compound events (those sharing x5, x6) as
/// if they were independent. Because of that factoring it can drift from
/// the exact value; compare_solar reports the gap rather than hiding it.
/// Requires t >= 0.
double eq5_eval(const SolarRates& rates, MissionTime t);

struct SolarComparison {
  double pie = 0.0;
  double enumeration = 0.0;
  double eq5 = 0.0;
  double delta_pie_enum = 0.0;
  double delta_eq5_enum = 0.0;
};

/// Runs all three computation paths on the same rates and mission time:
/// inclusion-exclusion over the 13 minimal cut sets, exhaustive
/// enumeration of the 2^14 states, and the closed form above.
SolarComparison compare_solar(const SolarRates& rates, MissionTime t);

}  // namespace fta
