#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fta/distributions.hpp"
#include "fta/errors.hpp"

namespace fta {

/// Truth assignment over the tree's basic events; true means the failure
/// event has occurred by the mission time. Must cover every basic event.
using EventState = std::unordered_map<EventId, bool>;

struct AndGate {
  std::vector<EventId> inputs;  // >= 2
  bool operator==(const AndGate&) const = default;
};

struct OrGate {
  std::vector<EventId> inputs;  // >= 2
  bool operator==(const OrGate&) const = default;
};

struct NorGate {
  std::vector<EventId> inputs;  // >= 2
  bool operator==(const NorGate&) const = default;
};

/// Fires when every `negated` input is absent AND every `normal` input is
/// present. This is the intersection of complemented and normal inputs,
/// deliberately not the complement of an AND gate; the two operand lists
/// are distinguished syntactically, never inferred.
struct NandGate {
  std::vector<EventId> negated;  // non-empty
  std::vector<EventId> normal;   // non-empty
  bool operator==(const NandGate&) const = default;
};

struct XorGate {
  EventId a;  // exactly two distinct inputs
  EventId b;
  bool operator==(const XorGate&) const = default;
};

struct NotGate {
  EventId input;
  bool operator==(const NotGate&) const = default;
};

using GateKind = std::variant<AndGate, OrGate, NorGate, NandGate, XorGate, NotGate>;

enum class GateOp { kAnd, kOr, kNor, kNand, kXor, kNot };

GateOp op_of(const GateKind& kind);
const char* to_string(GateOp op);

/// All ids referenced by the gate, negated list first for nand.
std::vector<EventId> gate_inputs(const GateKind& kind);

bool is_valid_id(const std::string& id);

/// Immutable, validated fault tree: a DAG of gates over basic events with a
/// designated top node. Use build_tree to construct one; instances never
/// mutate and are safe to share across threads.
class FaultTree {
 public:
  const std::vector<std::pair<EventId, LifetimeModel>>& basic_events() const {
    return events_;
  }
  const std::vector<std::pair<EventId, GateKind>>& gates() const {
    return gates_;
  }
  const EventId& top() const { return top_; }

  std::size_t basic_count() const { return events_.size(); }

  /// Index into basic_events(), or nullopt if the id is not a basic event.
  std::optional<std::size_t> basic_index(const EventId& id) const;
  /// Index into gates(), or nullopt if the id is not a gate.
  std::optional<std::size_t> gate_index(const EventId& id) const;

  /// Gate indices ordered so that every gate follows the gates it reads.
  const std::vector<std::size_t>& topo_order() const { return topo_; }

  /// True when every gate is And/Or; the structure function is then
  /// monotone and minimal cut sets are defined.
  bool is_coherent() const;

 private:
  FaultTree() = default;

  friend FaultTree build_tree(std::vector<std::pair<EventId, LifetimeModel>>,
                              std::vector<std::pair<EventId, GateKind>>,
                              EventId);
  friend class StructureEvaluator;

  // Node ids: basic event i -> i, gate j -> basic_count() + j.
  struct CompiledGate {
    GateOp op;
    std::vector<std::int32_t> inputs;
    std::vector<std::int32_t> negated;  // nand only
  };

  std::vector<std::pair<EventId, LifetimeModel>> events_;
  std::vector<std::pair<EventId, GateKind>> gates_;
  EventId top_;
  std::unordered_map<EventId, std::size_t> event_index_;
  std::unordered_map<EventId, std::size_t> gate_index_;
  std::vector<CompiledGate> compiled_;
  std::vector<std::size_t> topo_;
  std::int32_t top_node_ = 0;
};

/// Validates and assembles a fault tree. Throws Error with code
/// InvalidId/DuplicateId/UnknownReference/Cycle/BadArity naming the
/// offending declaration.
FaultTree build_tree(std::vector<std::pair<EventId, LifetimeModel>> events,
                     std::vector<std::pair<EventId, GateKind>> gates,
                     EventId top);

/// Evaluates the boolean structure function at the given state. Ids in the
/// state that do not name a basic event are ignored; missing basic events
/// raise IncompleteState.
bool structure_eval(const FaultTree& tree, const EventState& state);

/// Reusable evaluator for hot loops. `basic_values` is indexed by the
/// FaultTree::basic_events() order; each instance carries its own scratch
/// buffer, so use one per thread.
class StructureEvaluator {
 public:
  explicit StructureEvaluator(const FaultTree& tree);
  bool operator()(std::span<const char> basic_values);

 private:
  const FaultTree* tree_;
  std::vector<char> values_;
};

/// Same events with identical models, same gates with identical operand
/// lists, same top. Declaration order does not matter.
bool structurally_equal(const FaultTree& a, const FaultTree& b);

}  // namespace fta
