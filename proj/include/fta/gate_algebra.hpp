#pragma once

#include <span>

#include "fta/errors.hpp"

namespace fta {

// Closed-form failure probabilities of single gates over mutually
// independent inputs. Every argument must lie in [0, 1] (OutOfRange
// otherwise); results are then guaranteed to lie in [0, 1] and are
// asserted, not clamped.

/// prod(p_i); the empty product is 1.
double and_prob(std::span<const double> ps);

/// 1 - prod(1 - p_i); the empty case is 0.
double or_prob(std::span<const double> ps);

/// prod(1 - p_i) = 1 - or_prob(ps).
double nor_prob(std::span<const double> ps);

/// prod(1 - p over negated) * prod(p over normal).
double nand_prob(std::span<const double> negated, std::span<const double> normal);

/// (1 - a) b + a (1 - b).
double xor_prob(double a, double b);

/// 1 - a.
double not_prob(double a);

}  // namespace fta
