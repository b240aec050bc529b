#pragma once

#include <string>

#include "fta/model.hpp"

namespace fta {

/// Parses the line-oriented fault-tree format:
///
///   event ID exp rate=FLOAT
///   event ID weibull shape=FLOAT scale=FLOAT
///   event ID prob p=FLOAT
///   gate ID (and|or|nor|nand|xor|not) OPERAND...
///   toplevel ID
///
/// '#' starts a comment running to end of line; blank lines are ignored;
/// exactly one toplevel declaration is required. An operand of the form
/// ~ID marks a complemented nand input and is rejected anywhere else
/// (NandTildeOutsideNand); a nand needs at least one '~' operand and one
/// plain operand (NandMissingTilde). Syntax errors carry the 1-based line
/// and column; the assembled declarations are validated by build_tree.
FaultTree parse_ft(const std::string& text);

/// Canonical serialization: events sorted by id, gates in a deterministic
/// topological order (lexicographic among ready gates), toplevel last,
/// numbers in shortest round-trip form. parse_ft(print_ft(t)) is
/// structurally identical to t, and printing is a fixed point of a
/// parse/print round trip.
std::string print_ft(const FaultTree& tree);

}  // namespace fta
