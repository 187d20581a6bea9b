#include "core/world/world.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "core/util/errors.hpp"
#include "core/util/strings.hpp"
#include "core/world/vocabulary.hpp"

namespace rei::world {

using util::ValidationError;

int verb_arity(Verb v) {
  switch (v) {
    case Verb::Done:
      return 0;
    case Verb::PutOn:
    case Verb::PutIn:
      return 2;
    default:
      return 1;
  }
}

const char* verb_name(Verb v) {
  switch (v) {
    case Verb::GoTo: return "GoTo";
    case Verb::PickUp: return "PickUp";
    case Verb::PutOn: return "PutOn";
    case Verb::PutIn: return "PutIn";
    case Verb::Open: return "Open";
    case Verb::Close: return "Close";
    case Verb::ToggleOn: return "ToggleOn";
    case Verb::ToggleOff: return "ToggleOff";
    case Verb::Heat: return "Heat";
    case Verb::Cool: return "Cool";
    case Verb::Clean: return "Clean";
    case Verb::Slice: return "Slice";
    case Verb::Done: return "Done";
  }
  return "?";
}

std::optional<Verb> verb_from_name(const std::string& name) {
  static const Verb all[] = {Verb::GoTo,      Verb::PickUp,    Verb::PutOn, Verb::PutIn,
                             Verb::Open,      Verb::Close,     Verb::ToggleOn, Verb::ToggleOff,
                             Verb::Heat,      Verb::Cool,      Verb::Clean, Verb::Slice,
                             Verb::Done};
  for (Verb v : all) {
    if (name == verb_name(v)) return v;
  }
  return std::nullopt;
}

std::string format_action(const SkillAction& a) {
  std::string out = verb_name(a.verb);
  if (a.arg1) {
    out += "(" + *a.arg1;
    if (a.arg2) out += ", " + *a.arg2;
    out += ")";
  }
  return out;
}

SkillAction parse_action(const std::string& text) {
  std::string t = util::trim(text);
  size_t paren = t.find('(');
  std::string verb_part = paren == std::string::npos ? t : t.substr(0, paren);
  auto verb = verb_from_name(util::trim(verb_part));
  if (!verb) throw util::ParseError("unknown action verb: '" + verb_part + "'", 0);
  SkillAction a;
  a.verb = *verb;
  if (paren != std::string::npos) {
    if (t.back() != ')') throw util::ParseError("missing ')' in action: " + t, 0);
    std::string args = t.substr(paren + 1, t.size() - paren - 2);
    auto parts = util::split(args, ',');
    if (!args.empty()) {
      if (parts.size() >= 1 && !util::trim(parts[0]).empty()) a.arg1 = util::trim(parts[0]);
      if (parts.size() >= 2) a.arg2 = util::trim(parts[1]);
      if (parts.size() > 2) throw util::ParseError("too many arguments: " + t, 0);
    }
  }
  int have = a.arg2 ? 2 : (a.arg1 ? 1 : 0);
  if (have != verb_arity(a.verb)) {
    throw util::ParseError(std::string(verb_name(a.verb)) + " takes " +
                               std::to_string(verb_arity(a.verb)) + " argument(s), got " +
                               std::to_string(have),
                           0);
  }
  return a;
}

const char* task_kind_name(TaskKind k) {
  switch (k) {
    case TaskKind::PickPlace: return "pick_place";
    case TaskKind::StackPlace: return "stack_place";
    case TaskKind::CleanPlace: return "clean_place";
    case TaskKind::HeatPlace: return "heat_place";
    case TaskKind::CoolPlace: return "cool_place";
    case TaskKind::ExamineInLight: return "examine_in_light";
  }
  return "?";
}

std::optional<TaskKind> task_kind_from_name(const std::string& name) {
  static const TaskKind all[] = {TaskKind::PickPlace,  TaskKind::StackPlace, TaskKind::CleanPlace,
                                 TaskKind::HeatPlace,  TaskKind::CoolPlace,  TaskKind::ExamineInLight};
  for (TaskKind k : all) {
    if (name == task_kind_name(k)) return k;
  }
  return std::nullopt;
}

std::vector<std::string> goal_targets(const TaskGoal& goal) {
  std::vector<std::string> out{goal.target};
  if (goal.carrier) out.push_back(*goal.carrier);
  if (goal.light) out.push_back(*goal.light);
  return out;
}

namespace {

const ObjectKind& kind_of(const ObjectInstance& obj) {
  const ObjectKind* k = find_kind(obj.kind);
  if (!k) throw ValidationError("unknown object kind: " + obj.kind);
  return *k;
}

ActionError err(ApplyErrorCode code, std::string msg) { return {code, std::move(msg)}; }

// Transitive containment: is `needle` somewhere inside `container`'s chain?
bool chain_contains(const WorldState& s, const std::string& container, const std::string& needle) {
  const ObjectInstance* cur = s.find(container);
  int depth = 0;
  while (cur && cur->location.kind == LocKind::receptacle && depth++ < 32) {
    if (cur->location.id == needle) return true;
    cur = s.find(cur->location.id);
  }
  return false;
}

bool reachable_impl(const WorldState& s, const ObjectInstance& obj, int depth) {
  if (depth > 32) return false;
  switch (obj.location.kind) {
    case LocKind::held:
      return true;
    case LocKind::floor:
      // Fixed furniture must be walked to; loose floor items are anywhere.
      if (obj.is_receptacle) return s.agent.location == obj.id;
      return true;
    case LocKind::receptacle: {
      const ObjectInstance* holder = s.find(obj.location.id);
      if (!holder) return false;
      if (kind_of(*holder).props.openable && !holder->state.open) return false;
      return reachable_impl(s, *holder, depth + 1);
    }
  }
  return false;
}

std::optional<ActionError> check_action(const WorldState& s, const SkillAction& a) {
  int have = a.arg2 ? 2 : (a.arg1 ? 1 : 0);
  if (have != verb_arity(a.verb)) {
    return err(ApplyErrorCode::bad_arity, std::string(verb_name(a.verb)) + " takes " +
                                              std::to_string(verb_arity(a.verb)) + " argument(s)");
  }
  if (a.verb == Verb::Done) return std::nullopt;

  const ObjectInstance* o1 = s.find(*a.arg1);
  if (!o1) return err(ApplyErrorCode::unknown_id, "no such object: " + *a.arg1);
  const ObjectInstance* o2 = nullptr;
  if (a.arg2) {
    o2 = s.find(*a.arg2);
    if (!o2) return err(ApplyErrorCode::unknown_id, "no such receptacle: " + *a.arg2);
  }

  const ObjectKind& k1 = kind_of(*o1);
  switch (a.verb) {
    case Verb::GoTo:
      if (!o1->is_receptacle)
        return err(ApplyErrorCode::not_a_receptacle, *a.arg1 + " is not a place to walk to");
      if (o1->location.kind != LocKind::floor)
        return err(ApplyErrorCode::wrong_location, *a.arg1 + " is not standing in the room");
      if (s.agent.location == o1->id)
        return err(ApplyErrorCode::already_there, "already at " + *a.arg1);
      return std::nullopt;
    case Verb::PickUp:
      if (!k1.props.pickupable)
        return err(ApplyErrorCode::not_pickupable, *a.arg1 + " cannot be picked up");
      if (s.agent.holding)
        return err(ApplyErrorCode::hands_full, "hands full with " + *s.agent.holding);
      if (!reachable_impl(s, *o1, 0))
        return err(ApplyErrorCode::wrong_location, *a.arg1 + " is out of reach");
      return std::nullopt;
    case Verb::PutOn:
    case Verb::PutIn: {
      if (!s.agent.holding || *s.agent.holding != *a.arg1)
        return err(ApplyErrorCode::hands_empty, "not holding " + *a.arg1);
      if (!o2->is_receptacle)
        return err(ApplyErrorCode::not_a_receptacle, *a.arg2 + " cannot hold things");
      const ObjectKind& k2 = kind_of(*o2);
      if (a.verb == Verb::PutOn && k2.props.openable)
        return err(ApplyErrorCode::not_a_receptacle, "use PutIn for " + *a.arg2);
      if (a.verb == Verb::PutIn && k2.props.openable && !o2->state.open)
        return err(ApplyErrorCode::closed_container, *a.arg2 + " is closed");
      if (*a.arg1 == *a.arg2 || chain_contains(s, *a.arg2, *a.arg1))
        return err(ApplyErrorCode::cyclic_containment,
                   *a.arg2 + " is inside " + *a.arg1);
      if (!reachable_impl(s, *o2, 0))
        return err(ApplyErrorCode::wrong_location, *a.arg2 + " is out of reach");
      return std::nullopt;
    }
    case Verb::Open:
      if (!k1.props.openable) return err(ApplyErrorCode::not_openable, *a.arg1 + " does not open");
      if (o1->state.open) return err(ApplyErrorCode::already_open, *a.arg1 + " is already open");
      if (!reachable_impl(s, *o1, 0))
        return err(ApplyErrorCode::wrong_location, *a.arg1 + " is out of reach");
      return std::nullopt;
    case Verb::Close:
      if (!k1.props.openable) return err(ApplyErrorCode::not_openable, *a.arg1 + " does not open");
      if (!o1->state.open) return err(ApplyErrorCode::already_closed, *a.arg1 + " is already closed");
      if (!reachable_impl(s, *o1, 0))
        return err(ApplyErrorCode::wrong_location, *a.arg1 + " is out of reach");
      return std::nullopt;
    case Verb::ToggleOn:
      if (!k1.props.toggleable)
        return err(ApplyErrorCode::not_toggleable, *a.arg1 + " has no switch");
      if (o1->state.toggled_on) return err(ApplyErrorCode::already_on, *a.arg1 + " is already on");
      if (!reachable_impl(s, *o1, 0))
        return err(ApplyErrorCode::wrong_location, *a.arg1 + " is out of reach");
      return std::nullopt;
    case Verb::ToggleOff:
      if (!k1.props.toggleable)
        return err(ApplyErrorCode::not_toggleable, *a.arg1 + " has no switch");
      if (!o1->state.toggled_on) return err(ApplyErrorCode::already_off, *a.arg1 + " is already off");
      if (!reachable_impl(s, *o1, 0))
        return err(ApplyErrorCode::wrong_location, *a.arg1 + " is out of reach");
      return std::nullopt;
    case Verb::Heat:
    case Verb::Cool:
    case Verb::Clean: {
      auto source_ok = [&](const ObjectInstance& r) {
        const KindProps& p = kind_of(r).props;
        if (a.verb == Verb::Heat) return p.can_heat_source;
        if (a.verb == Verb::Cool) return p.can_cool_source;
        return p.can_clean_source;
      };
      const char* what = a.verb == Verb::Heat ? "heat" : (a.verb == Verb::Cool ? "cool" : "clean");
      // Object inside a source receptacle, or held while standing at one.
      const ObjectInstance* source = nullptr;
      if (o1->location.kind == LocKind::receptacle) {
        const ObjectInstance* r = s.find(o1->location.id);
        if (r && source_ok(*r)) source = r;
      } else if (o1->location.kind == LocKind::held && s.agent.location) {
        const ObjectInstance* r = s.find(*s.agent.location);
        if (r && source_ok(*r)) source = r;
      }
      if (!source)
        return err(ApplyErrorCode::no_source,
                   std::string("nothing here can ") + what + " " + *a.arg1);
      if (s.agent.location != source->id)
        return err(ApplyErrorCode::wrong_location, "agent is not at " + source->id);
      return std::nullopt;
    }
    case Verb::Slice: {
      if (!k1.props.sliceable)
        return err(ApplyErrorCode::not_sliceable, *a.arg1 + " cannot be sliced");
      if (!s.agent.holding) return err(ApplyErrorCode::no_utensil, "no utensil in hand");
      const ObjectInstance* held = s.find(*s.agent.holding);
      if (!held || kind_of(*held).category != Category::utensil)
        return err(ApplyErrorCode::no_utensil, *s.agent.holding + " is not a utensil");
      if (!reachable_impl(s, *o1, 0))
        return err(ApplyErrorCode::wrong_location, *a.arg1 + " is out of reach");
      return std::nullopt;
    }
    default:
      return err(ApplyErrorCode::bad_arity, "unhandled verb");
  }
}

void apply_effects(WorldState& s, const SkillAction& a) {
  switch (a.verb) {
    case Verb::GoTo:
      s.agent.location = *a.arg1;
      break;
    case Verb::PickUp: {
      ObjectInstance& o = s.objects.at(*a.arg1);
      o.location = Location::held();
      s.agent.holding = o.id;
      if (s.agent.location == o.id) s.agent.location.reset();
      break;
    }
    case Verb::PutOn:
    case Verb::PutIn: {
      ObjectInstance& o = s.objects.at(*a.arg1);
      o.location = Location::at(*a.arg2);
      s.agent.holding.reset();
      break;
    }
    case Verb::Open:
      s.objects.at(*a.arg1).state.open = true;
      break;
    case Verb::Close:
      s.objects.at(*a.arg1).state.open = false;
      break;
    case Verb::ToggleOn:
      s.objects.at(*a.arg1).state.toggled_on = true;
      break;
    case Verb::ToggleOff:
      s.objects.at(*a.arg1).state.toggled_on = false;
      break;
    case Verb::Heat: {
      StateFlags& f = s.objects.at(*a.arg1).state;
      f.heated = true;
      f.cooled = false;
      break;
    }
    case Verb::Cool: {
      StateFlags& f = s.objects.at(*a.arg1).state;
      f.cooled = true;
      f.heated = false;
      break;
    }
    case Verb::Clean:
      s.objects.at(*a.arg1).state.cleaned = true;
      break;
    case Verb::Slice:
      s.objects.at(*a.arg1).state.sliced = true;
      break;
    case Verb::Done:
      break;
  }
  s.step_count += 1;
}

}  // namespace

bool reachable(const WorldState& state, const std::string& object_id) {
  const ObjectInstance* o = state.find(object_id);
  return o && reachable_impl(state, *o, 0);
}

WorldState load_scene(const SceneSpec& spec) {
  WorldState s;
  auto place = [&](const SceneObject& so, bool is_receptacle) {
    if (s.objects.count(so.id))
      throw ValidationError("duplicate object id: " + so.id);
    const ObjectKind* kind = find_kind(so.kind);
    if (!kind) throw ValidationError("unknown kind '" + so.kind + "' for object " + so.id);
    if (so.state.open && !kind->props.openable)
      throw ValidationError(so.id + " cannot be open: kind is not openable");
    if (so.state.toggled_on && !kind->props.toggleable)
      throw ValidationError(so.id + " cannot be toggled on: kind is not toggleable");
    if (so.state.heated && so.state.cooled)
      throw ValidationError(so.id + " cannot be both heated and cooled");
    ObjectInstance inst;
    inst.id = so.id;
    inst.kind = so.kind;
    inst.location = so.location;
    inst.state = so.state;
    inst.is_receptacle = is_receptacle;
    s.objects.emplace(inst.id, std::move(inst));
  };
  for (const auto& r : spec.receptacles) place(r, true);
  for (const auto& o : spec.objects) place(o, false);

  for (const auto& [id, obj] : s.objects) {
    if (obj.location.kind == LocKind::held)
      throw ValidationError(id + ": objects cannot start in the robot's hand");
    if (obj.location.kind == LocKind::receptacle) {
      const ObjectInstance* holder = s.find(obj.location.id);
      if (!holder || !holder->is_receptacle)
        throw ValidationError(id + " is located in nonexistent receptacle '" + obj.location.id + "'");
      if (obj.location.id == id) throw ValidationError(id + " cannot contain itself");
    }
  }
  s.agent = AgentState{};
  s.step_count = 0;
  return s;
}

std::vector<std::string> floor_receptacles(const WorldState& state) {
  std::vector<std::string> out;
  for (const auto& [id, obj] : state.objects) {
    if (obj.is_receptacle && obj.location.kind == LocKind::floor) out.push_back(id);
  }
  return out;  // objects map is ordered, so this is sorted
}

std::vector<SkillAction> available_actions(const WorldState& state) {
  std::vector<SkillAction> out;
  auto try_add = [&](SkillAction a) {
    if (!check_action(state, a)) out.push_back(std::move(a));
  };

  std::vector<std::string> receptacles;
  for (const auto& [id, obj] : state.objects) {
    if (obj.is_receptacle) receptacles.push_back(id);
  }

  for (const auto& [id, obj] : state.objects) {
    try_add({Verb::GoTo, id, std::nullopt});
    try_add({Verb::PickUp, id, std::nullopt});
    try_add({Verb::Open, id, std::nullopt});
    try_add({Verb::Close, id, std::nullopt});
    try_add({Verb::ToggleOn, id, std::nullopt});
    try_add({Verb::ToggleOff, id, std::nullopt});
    try_add({Verb::Heat, id, std::nullopt});
    try_add({Verb::Cool, id, std::nullopt});
    try_add({Verb::Clean, id, std::nullopt});
    try_add({Verb::Slice, id, std::nullopt});
    for (const auto& r : receptacles) {
      try_add({Verb::PutOn, id, r});
      try_add({Verb::PutIn, id, r});
    }
  }
  out.push_back({Verb::Done, std::nullopt, std::nullopt});
  std::sort(out.begin(), out.end());
  return out;
}

ApplyResult apply_action(const WorldState& state, const SkillAction& action) {
  if (auto problem = check_action(state, action)) return *problem;
  WorldState next = state;
  apply_effects(next, action);
  return next;
}

bool check_goal(const WorldState& state, const TaskGoal& goal) {
  auto need = [&](const std::string& id) -> const ObjectInstance& {
    const ObjectInstance* o = state.find(id);
    if (!o) throw ValidationError("goal references unknown id: " + id);
    return *o;
  };
  auto at_dest = [&](const ObjectInstance& o, const std::string& dest) {
    need(dest);
    return o.location.kind == LocKind::receptacle && o.location.id == dest;
  };
  switch (goal.kind) {
    case TaskKind::PickPlace:
      return at_dest(need(goal.target), goal.destination.value());
    case TaskKind::StackPlace: {
      const ObjectInstance& t = need(goal.target);
      const ObjectInstance& c = need(goal.carrier.value());
      return t.location.kind == LocKind::receptacle && t.location.id == c.id &&
             at_dest(c, goal.destination.value());
    }
    case TaskKind::CleanPlace: {
      const ObjectInstance& t = need(goal.target);
      return t.state.cleaned && at_dest(t, goal.destination.value());
    }
    case TaskKind::HeatPlace: {
      const ObjectInstance& t = need(goal.target);
      return t.state.heated && at_dest(t, goal.destination.value());
    }
    case TaskKind::CoolPlace: {
      const ObjectInstance& t = need(goal.target);
      return t.state.cooled && at_dest(t, goal.destination.value());
    }
    case TaskKind::ExamineInLight: {
      need(goal.target);
      const ObjectInstance& l = need(goal.light.value());
      return state.agent.holding == goal.target && l.state.toggled_on;
    }
  }
  return false;
}

ActionTrace execute_plan(const WorldState& state, const std::vector<SkillAction>& steps,
                         int step_budget) {
  ActionTrace trace;
  trace.final_state = state;
  trace.status = TraceStatus::ran_out_of_steps;
  for (const auto& step : steps) {
    if (static_cast<int>(trace.steps.size()) >= step_budget) {
      trace.status = TraceStatus::budget_exhausted;
      return trace;
    }
    ApplyResult r = apply_action(trace.final_state, step);
    if (applied_ok(r)) {
      trace.final_state = applied_state(r);
      trace.steps.push_back({step, true, {}});
      if (step.verb == Verb::Done) {
        trace.status = TraceStatus::completed;
        return trace;
      }
    } else {
      trace.steps.push_back({step, false, applied_error(r).message});
      trace.status = TraceStatus::halted_on_error;
      return trace;
    }
  }
  return trace;
}

std::string describe_state(const WorldState& state) {
  std::ostringstream os;
  os << "agent @ " << (state.agent.location ? *state.agent.location : "free") << " holding "
     << (state.agent.holding ? *state.agent.holding : "nothing") << "\n";
  for (const auto& [id, obj] : state.objects) {
    os << id << " @ ";
    switch (obj.location.kind) {
      case LocKind::held: os << "hand"; break;
      case LocKind::floor: os << "floor"; break;
      case LocKind::receptacle: os << obj.location.id; break;
    }
    std::vector<std::string> flags;
    if (obj.state.heated) flags.push_back("heated");
    if (obj.state.cooled) flags.push_back("cooled");
    if (obj.state.cleaned) flags.push_back("cleaned");
    if (obj.state.sliced) flags.push_back("sliced");
    if (obj.state.toggled_on) flags.push_back("on");
    if (obj.state.open) flags.push_back("open");
    if (!flags.empty()) os << " [" << util::join(flags, ",") << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace rei::world
