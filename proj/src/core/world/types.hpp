#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rei::world {

enum class Category { food, container, device, utensil, furniture, receptacle, light, decor };

struct KindProps {
  bool pickupable = false;
  bool openable = false;
  bool toggleable = false;
  bool sliceable = false;
  bool can_heat_source = false;
  bool can_cool_source = false;
  bool can_clean_source = false;
};

struct ObjectKind {
  std::string name;  // e.g. "Tomato", "Microwave"
  Category category = Category::decor;
  KindProps props;
  // Lowercase noun forms the kind answers to in text, most specific first
  // ("desk lamp", "lamp"). The first entry is the preferred surface.
  std::vector<std::string> surfaces;
};

enum class LocKind { receptacle, held, floor };

struct Location {
  LocKind kind = LocKind::floor;
  std::string id;  // receptacle id when kind == receptacle

  static Location at(std::string receptacle_id) { return {LocKind::receptacle, std::move(receptacle_id)}; }
  static Location held() { return {LocKind::held, {}}; }
  static Location floor() { return {LocKind::floor, {}}; }

  bool operator==(const Location& o) const { return kind == o.kind && id == o.id; }
};

struct StateFlags {
  bool heated = false;
  bool cooled = false;
  bool cleaned = false;
  bool sliced = false;
  bool toggled_on = false;
  bool open = false;

  bool operator==(const StateFlags& o) const = default;
};

struct ObjectInstance {
  std::string id;
  std::string kind;  // ObjectKind name, resolved against the vocabulary
  Location location;
  StateFlags state;
  bool is_receptacle = false;  // declared in the scene's receptacle list

  bool operator==(const ObjectInstance& o) const {
    return id == o.id && kind == o.kind && location == o.location && state == o.state &&
           is_receptacle == o.is_receptacle;
  }
};

struct AgentState {
  std::optional<std::string> location;  // floor receptacle id; nullopt = free
  std::optional<std::string> holding;

  bool operator==(const AgentState& o) const = default;
};

// Verb order matters: available_actions sorts by it and Done must sort last.
enum class Verb {
  GoTo,
  PickUp,
  PutOn,
  PutIn,
  Open,
  Close,
  ToggleOn,
  ToggleOff,
  Heat,
  Cool,
  Clean,
  Slice,
  Done
};

struct SkillAction {
  Verb verb = Verb::Done;
  std::optional<std::string> arg1;
  std::optional<std::string> arg2;

  bool operator==(const SkillAction& o) const = default;
  bool operator<(const SkillAction& o) const {
    if (verb != o.verb) return verb < o.verb;
    if (arg1 != o.arg1) return arg1 < o.arg1;
    return arg2 < o.arg2;
  }
};

int verb_arity(Verb v);
const char* verb_name(Verb v);
std::optional<Verb> verb_from_name(const std::string& name);

// "PutOn(Tomato, CounterTop)", "Done"
std::string format_action(const SkillAction& a);
SkillAction parse_action(const std::string& text);  // throws ParseError

enum class TaskKind { PickPlace, StackPlace, CleanPlace, HeatPlace, CoolPlace, ExamineInLight };

const char* task_kind_name(TaskKind k);
std::optional<TaskKind> task_kind_from_name(const std::string& name);
constexpr int kTaskKindCount = 6;

struct TaskGoal {
  TaskKind kind = TaskKind::PickPlace;
  std::string target;
  std::optional<std::string> carrier;      // StackPlace only
  std::optional<std::string> destination;  // all but ExamineInLight
  std::optional<std::string> light;        // ExamineInLight only

  bool operator==(const TaskGoal& o) const = default;
};

// Object ids the goal is about: target plus carrier/light when present.
// Destinations are receptacles, not targets.
std::vector<std::string> goal_targets(const TaskGoal& goal);

struct SceneObject {
  std::string id;
  std::string kind;
  Location location;
  StateFlags state;
};

struct SceneSpec {
  std::string scene_id;
  std::vector<SceneObject> objects;
  std::vector<SceneObject> receptacles;
};

struct WorldState {
  std::map<std::string, ObjectInstance> objects;  // receptacles included
  AgentState agent;
  int step_count = 0;

  bool operator==(const WorldState& o) const = default;

  const ObjectInstance* find(const std::string& id) const {
    auto it = objects.find(id);
    return it == objects.end() ? nullptr : &it->second;
  }
};

enum class ApplyErrorCode {
  unknown_id,
  bad_arity,
  hands_full,
  hands_empty,
  wrong_location,
  not_openable,
  not_pickupable,
  not_toggleable,
  not_sliceable,
  already_open,
  already_closed,
  already_on,
  already_off,
  already_there,
  closed_container,
  no_source,
  no_utensil,
  not_a_receptacle,
  cyclic_containment
};

struct ActionError {
  ApplyErrorCode code;
  std::string message;
};

struct StepOutcome {
  SkillAction action;
  bool ok = false;
  std::string error;  // empty when ok
};

enum class TraceStatus { completed, halted_on_error, budget_exhausted, ran_out_of_steps };

struct ActionTrace {
  std::vector<StepOutcome> steps;
  WorldState final_state;
  TraceStatus status = TraceStatus::ran_out_of_steps;
};

}  // namespace rei::world
