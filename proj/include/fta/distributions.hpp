#pragma once

#include <string>
#include <unordered_map>
#include <variant>

#include "fta/errors.hpp"

namespace fta {

/// Identifier of a basic event or gate: [A-Za-z_][A-Za-z0-9_]*.
using EventId = std::string;

/// Per-event failure probability at a fixed mission time.
using ProbAssignment = std::unordered_map<EventId, double>;

/// Mission time in hours. Any finite value is accepted; the lifetime
/// distributions map t < 0 to probability 0.
class MissionTime {
 public:
  explicit MissionTime(double hours);
  double hours() const { return hours_; }

 private:
  double hours_;
};

/// Constant failure rate lambda per hour: F(t) = 1 - exp(-lambda t).
/// lambda = 0 models a component that never fails.
class Exponential {
 public:
  explicit Exponential(double rate_per_hour);
  double rate() const { return rate_; }

  bool operator==(const Exponential&) const = default;

 private:
  double rate_;
};

/// Shape beta (dimensionless) and scale eta (hours):
/// F(t) = 1 - exp(-(t/eta)^beta).
class Weibull {
 public:
  Weibull(double shape, double scale);
  double shape() const { return shape_; }
  double scale() const { return scale_; }

  bool operator==(const Weibull&) const = default;

 private:
  double shape_;
  double scale_;
};

/// Time-independent failure probability.
class FixedProb {
 public:
  explicit FixedProb(double p);
  double p() const { return p_; }

  bool operator==(const FixedProb&) const = default;

 private:
  double p_;
};

using LifetimeModel = std::variant<Exponential, Weibull, FixedProb>;

/// Failure distribution F(t): the probability that the component has failed
/// by time t. Always in [0, 1].
double unreliability(const LifetimeModel& model, MissionTime t);

class FaultTree;

/// Maps every basic event of the tree to its unreliability at time t.
ProbAssignment assign_probabilities(const FaultTree& tree, MissionTime t);

}  // namespace fta
