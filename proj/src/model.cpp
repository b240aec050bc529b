#include "fta/model.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace fta {

namespace {

std::string describe(const EventId& id, const char* what) {
  return std::string(what) + " '" + id + "'";
}

}  // namespace

GateOp op_of(const GateKind& kind) {
  return static_cast<GateOp>(kind.index());
}

const char* to_string(GateOp op) {
  switch (op) {
    case GateOp::kAnd:
      return "and";
    case GateOp::kOr:
      return "or";
    case GateOp::kNor:
      return "nor";
    case GateOp::kNand:
      return "nand";
    case GateOp::kXor:
      return "xor";
    case GateOp::kNot:
      return "not";
  }
  return "?";
}

std::vector<EventId> gate_inputs(const GateKind& kind) {
  return std::visit(
      [](const auto& g) -> std::vector<EventId> {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, AndGate> || std::is_same_v<T, OrGate> ||
                      std::is_same_v<T, NorGate>) {
          return g.inputs;
        } else if constexpr (std::is_same_v<T, NandGate>) {
          std::vector<EventId> all = g.negated;
          all.insert(all.end(), g.normal.begin(), g.normal.end());
          return all;
        } else if constexpr (std::is_same_v<T, XorGate>) {
          return {g.a, g.b};
        } else {
          return {g.input};
        }
      },
      kind);
}

bool is_valid_id(const std::string& id) {
  if (id.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(id.front())) return false;
  return std::all_of(id.begin() + 1, id.end(), tail);
}

std::optional<std::size_t> FaultTree::basic_index(const EventId& id) const {
  auto it = event_index_.find(id);
  if (it == event_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FaultTree::gate_index(const EventId& id) const {
  auto it = gate_index_.find(id);
  if (it == gate_index_.end()) return std::nullopt;
  return it->second;
}

bool FaultTree::is_coherent() const {
  return std::all_of(gates_.begin(), gates_.end(), [](const auto& g) {
    GateOp op = op_of(g.second);
    return op == GateOp::kAnd || op == GateOp::kOr;
  });
}

FaultTree build_tree(std::vector<std::pair<EventId, LifetimeModel>> events,
                     std::vector<std::pair<EventId, GateKind>> gates,
                     EventId top) {
  FaultTree tree;
  tree.events_ = std::move(events);
  tree.gates_ = std::move(gates);
  tree.top_ = std::move(top);

  auto check_id = [&](const EventId& id, const char* what) {
    if (!is_valid_id(id)) {
      throw Error(ErrorCode::kInvalidId,
                  describe(id, what) + " is not a valid identifier");
    }
    if (tree.event_index_.count(id) || tree.gate_index_.count(id)) {
      throw Error(ErrorCode::kDuplicateId, describe(id, "duplicate id"));
    }
  };

  for (std::size_t i = 0; i < tree.events_.size(); ++i) {
    check_id(tree.events_[i].first, "event");
    tree.event_index_.emplace(tree.events_[i].first, i);
  }
  for (std::size_t j = 0; j < tree.gates_.size(); ++j) {
    check_id(tree.gates_[j].first, "gate");
    tree.gate_index_.emplace(tree.gates_[j].first, j);
  }

  // Arity rules.
  for (const auto& [id, kind] : tree.gates_) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, AndGate> ||
                        std::is_same_v<T, OrGate> ||
                        std::is_same_v<T, NorGate>) {
            if (g.inputs.size() < 2) {
              throw Error(ErrorCode::kBadArity,
                          describe(id, "gate") +
                              " needs at least 2 inputs, has " +
                              std::to_string(g.inputs.size()));
            }
          } else if constexpr (std::is_same_v<T, NandGate>) {
            if (g.negated.empty() || g.normal.empty()) {
              throw Error(ErrorCode::kBadArity,
                          describe(id, "nand gate") +
                              " needs both a negated and a normal input list");
            }
          } else if constexpr (std::is_same_v<T, XorGate>) {
            if (g.a == g.b) {
              throw Error(ErrorCode::kBadArity,
                          describe(id, "xor gate") +
                              " needs two distinct inputs");
            }
          }
          // NotGate: arity fixed by the type.
        },
        kind);
  }

  const std::size_t nb = tree.events_.size();
  auto node_of = [&](const EventId& gate, const EventId& ref) -> std::int32_t {
    if (auto e = tree.basic_index(ref)) return static_cast<std::int32_t>(*e);
    if (auto g = tree.gate_index(ref)) {
      return static_cast<std::int32_t>(nb + *g);
    }
    throw Error(ErrorCode::kUnknownReference,
                describe(gate, "gate") + " references unknown id '" + ref +
                    "'");
  };

  tree.compiled_.resize(tree.gates_.size());
  for (std::size_t j = 0; j < tree.gates_.size(); ++j) {
    const auto& [id, kind] = tree.gates_[j];
    FaultTree::CompiledGate& cg = tree.compiled_[j];
    cg.op = op_of(kind);
    if (cg.op == GateOp::kNand) {
      const auto& nand = std::get<NandGate>(kind);
      for (const auto& r : nand.negated) cg.negated.push_back(node_of(id, r));
      for (const auto& r : nand.normal) cg.inputs.push_back(node_of(id, r));
    } else {
      for (const auto& r : gate_inputs(kind)) cg.inputs.push_back(node_of(id, r));
    }
  }

  if (!tree.event_index_.count(tree.top_) &&
      !tree.gate_index_.count(tree.top_)) {
    throw Error(ErrorCode::kUnknownReference,
                describe(tree.top_, "toplevel") + " does not exist");
  }
  tree.top_node_ = tree.event_index_.count(tree.top_)
                       ? static_cast<std::int32_t>(*tree.basic_index(tree.top_))
                       : static_cast<std::int32_t>(nb + *tree.gate_index(tree.top_));

  // Kahn's algorithm over gate-to-gate edges; leftovers mean a cycle.
  std::vector<std::size_t> indegree(tree.gates_.size(), 0);
  std::vector<std::vector<std::size_t>> dependents(tree.gates_.size());
  for (std::size_t j = 0; j < tree.compiled_.size(); ++j) {
    auto count_edge = [&](std::int32_t node) {
      if (node >= static_cast<std::int32_t>(nb)) {
        dependents[node - nb].push_back(j);
        ++indegree[j];
      }
    };
    for (auto n : tree.compiled_[j].inputs) count_edge(n);
    for (auto n : tree.compiled_[j].negated) count_edge(n);
  }
  std::deque<std::size_t> ready;
  for (std::size_t j = 0; j < indegree.size(); ++j) {
    if (indegree[j] == 0) ready.push_back(j);
  }
  while (!ready.empty()) {
    std::size_t j = ready.front();
    ready.pop_front();
    tree.topo_.push_back(j);
    for (std::size_t d : dependents[j]) {
      if (--indegree[d] == 0) ready.push_back(d);
    }
  }
  if (tree.topo_.size() != tree.gates_.size()) {
    for (std::size_t j = 0; j < indegree.size(); ++j) {
      if (indegree[j] != 0) {
        throw Error(ErrorCode::kCycle,
                    describe(tree.gates_[j].first, "gate") +
                        " participates in a cycle");
      }
    }
  }
  return tree;
}

StructureEvaluator::StructureEvaluator(const FaultTree& tree)
    : tree_(&tree), values_(tree.events_.size() + tree.gates_.size(), 0) {}

bool StructureEvaluator::operator()(std::span<const char> basic_values) {
  const std::size_t nb = tree_->events_.size();
  assert(basic_values.size() == nb);
  std::copy(basic_values.begin(), basic_values.end(), values_.begin());
  for (std::size_t j : tree_->topo_) {
    const auto& g = tree_->compiled_[j];
    bool v = false;
    switch (g.op) {
      case GateOp::kAnd:
        v = std::all_of(g.inputs.begin(), g.inputs.end(),
                        [&](std::int32_t n) { return values_[n]; });
        break;
      case GateOp::kOr:
        v = std::any_of(g.inputs.begin(), g.inputs.end(),
                        [&](std::int32_t n) { return values_[n]; });
        break;
      case GateOp::kNor:
        v = std::none_of(g.inputs.begin(), g.inputs.end(),
                         [&](std::int32_t n) { return values_[n]; });
        break;
      case GateOp::kNand:
        v = std::none_of(g.negated.begin(), g.negated.end(),
                         [&](std::int32_t n) { return values_[n]; }) &&
            std::all_of(g.inputs.begin(), g.inputs.end(),
                        [&](std::int32_t n) { return values_[n]; });
        break;
      case GateOp::kXor:
        v = values_[g.inputs[0]] != values_[g.inputs[1]];
        break;
      case GateOp::kNot:
        v = !values_[g.inputs[0]];
        break;
    }
    values_[nb + j] = v;
  }
  return values_[tree_->top_node_];
}

bool structure_eval(const FaultTree& tree, const EventState& state) {
  std::vector<char> basics(tree.basic_count());
  for (std::size_t i = 0; i < tree.basic_events().size(); ++i) {
    const EventId& id = tree.basic_events()[i].first;
    auto it = state.find(id);
    if (it == state.end()) {
      throw Error(ErrorCode::kIncompleteState,
                  "state is missing basic event '" + id + "'");
    }
    basics[i] = it->second;
  }
  StructureEvaluator eval(tree);
  return eval(basics);
}

bool structurally_equal(const FaultTree& a, const FaultTree& b) {
  if (a.top() != b.top()) return false;
  if (a.basic_events().size() != b.basic_events().size()) return false;
  if (a.gates().size() != b.gates().size()) return false;
  std::map<EventId, LifetimeModel> ea(a.basic_events().begin(),
                                      a.basic_events().end());
  std::map<EventId, LifetimeModel> eb(b.basic_events().begin(),
                                      b.basic_events().end());
  if (ea != eb) return false;
  std::map<EventId, GateKind> ga(a.gates().begin(), a.gates().end());
  std::map<EventId, GateKind> gb(b.gates().begin(), b.gates().end());
  return ga == gb;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidId:
      return "InvalidId";
    case ErrorCode::kDuplicateId:
      return "DuplicateId";
    case ErrorCode::kUnknownReference:
      return "UnknownReference";
    case ErrorCode::kCycle:
      return "Cycle";
    case ErrorCode::kBadArity:
      return "BadArity";
    case ErrorCode::kIncompleteState:
      return "IncompleteState";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kNonCoherent:
      return "NonCoherent";
    case ErrorCode::kCutSetExplosion:
      return "CutSetExplosion";
    case ErrorCode::kTooManyCutSets:
      return "TooManyCutSets";
    case ErrorCode::kMissingEvent:
      return "MissingEvent";
    case ErrorCode::kEnumTooLarge:
      return "EnumTooLarge";
    case ErrorCode::kParse:
      return "Parse";
    case ErrorCode::kNandTildeOutsideNand:
      return "NandTildeOutsideNand";
    case ErrorCode::kNandMissingTilde:
      return "NandMissingTilde";
  }
  return "?";
}

}  // namespace fta
