#pragma once

#include <variant>
#include <vector>

#include "core/world/types.hpp"

namespace rei::world {

using ApplyResult = std::variant<WorldState, ActionError>;

inline bool applied_ok(const ApplyResult& r) { return std::holds_alternative<WorldState>(r); }
inline const WorldState& applied_state(const ApplyResult& r) { return std::get<WorldState>(r); }
inline const ActionError& applied_error(const ApplyResult& r) { return std::get<ActionError>(r); }

// Validates the spec and places every object. Throws ValidationError naming
// the offending id on duplicates or dangling location references.
WorldState load_scene(const SceneSpec& spec);

// Every grounded action whose preconditions hold in `state`, plus Done.
// Deterministic: sorted by (verb, arg1, arg2).
std::vector<SkillAction> available_actions(const WorldState& state);

// Pure transition. Inapplicable actions return ActionError and leave the
// input untouched; Done succeeds and only bumps step_count.
ApplyResult apply_action(const WorldState& state, const SkillAction& action);

// Pure predicate; throws ValidationError on ids missing from the state.
bool check_goal(const WorldState& state, const TaskGoal& goal);

// Runs steps until Done, the first failing step, or the budget. Failures are
// recorded in the trace, never thrown.
ActionTrace execute_plan(const WorldState& state, const std::vector<SkillAction>& steps,
                         int step_budget = 30);

// True when the agent could touch the object from where it stands: held
// items, loose floor items, and contents of reachable open containers.
bool reachable(const WorldState& state, const std::string& object_id);

// Floor-standing receptacle ids, sorted. These are the GoTo targets.
std::vector<std::string> floor_receptacles(const WorldState& state);

// Human-readable one-line-per-fact description of the state.
std::string describe_state(const WorldState& state);

}  // namespace rei::world
