#pragma once

#include <cstddef>
#include <vector>

#include "fta/model.hpp"

namespace fta {

/// Conjunction of basic failure events; positive literals only. Kept
/// sorted by id with no duplicates.
using CutSet = std::vector<EventId>;

/// Minimal cut sets: no member is a subset of another, canonically ordered
/// by size then lexicographically.
using MCSList = std::vector<CutSet>;

struct CutSetOptions {
  /// Expansion aborts with CutSetExplosion once any intermediate list
  /// exceeds this many cut sets.
  std::size_t max_intermediate = 100000;
};

/// Expands the structure function into disjunctive normal form over basic
/// events, distributing And over Or bottom-up with absorption applied after
/// each distribution step. The disjunction of the result is logically
/// equivalent to the tree; it is not yet minimal (duplicates arising from
/// Or-merges survive until minimize). Requires a coherent tree
/// (NonCoherent otherwise).
std::vector<CutSet> cut_sets(const FaultTree& tree,
                             const CutSetOptions& options = {});

/// Removes duplicates (idempotence) and supersets of other members
/// (absorption), then orders the result by size, then lexicographically.
/// Input cut sets need not be normalized.
MCSList minimize(std::vector<CutSet> sets);

/// minimize(cut_sets(tree)).
MCSList mcs(const FaultTree& tree, const CutSetOptions& options = {});

}  // namespace fta
