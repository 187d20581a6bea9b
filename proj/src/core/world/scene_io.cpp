#include "core/world/scene_io.hpp"

#include <json.hpp>

#include "core/util/errors.hpp"
#include "core/util/fs.hpp"

namespace rei::world {

using nlohmann::json;
using nlohmann::ordered_json;
using util::ParseError;

namespace {

const char* kSceneKeys[] = {"scene_id", "objects", "receptacles"};
const char* kObjectKeys[] = {"id", "kind", "location", "state_flags"};

template <size_t N>
void reject_unknown(const json& j, const char* (&allowed)[N], const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw ParseError("unknown field '" + it.key() + "' in " + where, 0);
  }
}

Location location_from_string(const std::string& s) {
  if (s == "floor") return Location::floor();
  if (s == "held") return Location::held();
  return Location::at(s);
}

std::string location_to_string(const Location& l) {
  switch (l.kind) {
    case LocKind::floor: return "floor";
    case LocKind::held: return "held";
    case LocKind::receptacle: return l.id;
  }
  return "floor";
}

StateFlags flags_from_json(const json& arr, const std::string& where) {
  StateFlags f;
  for (const auto& v : arr) {
    std::string s = v.get<std::string>();
    if (s == "heated") f.heated = true;
    else if (s == "cooled") f.cooled = true;
    else if (s == "cleaned") f.cleaned = true;
    else if (s == "sliced") f.sliced = true;
    else if (s == "toggled_on") f.toggled_on = true;
    else if (s == "open") f.open = true;
    else throw ParseError("unknown state flag '" + s + "' in " + where, 0);
  }
  return f;
}

ordered_json flags_to_json(const StateFlags& f) {
  ordered_json arr = ordered_json::array();
  if (f.heated) arr.push_back("heated");
  if (f.cooled) arr.push_back("cooled");
  if (f.cleaned) arr.push_back("cleaned");
  if (f.sliced) arr.push_back("sliced");
  if (f.toggled_on) arr.push_back("toggled_on");
  if (f.open) arr.push_back("open");
  return arr;
}

SceneObject object_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " entry must be an object", 0);
  reject_unknown(j, kObjectKeys, where);
  SceneObject o;
  o.id = j.at("id").get<std::string>();
  o.kind = j.at("kind").get<std::string>();
  o.location = location_from_string(j.at("location").get<std::string>());
  if (j.contains("state_flags")) o.state = flags_from_json(j.at("state_flags"), where + " " + o.id);
  return o;
}

ordered_json object_to_json(const SceneObject& o) {
  ordered_json j;
  j["id"] = o.id;
  j["kind"] = o.kind;
  j["location"] = location_to_string(o.location);
  j["state_flags"] = flags_to_json(o.state);
  return j;
}

}  // namespace

SceneSpec scene_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!j.is_object()) throw ParseError("scene file must be a JSON object", 0);
  reject_unknown(j, kSceneKeys, "scene");
  SceneSpec spec;
  spec.scene_id = j.at("scene_id").get<std::string>();
  for (const auto& e : j.value("objects", json::array()))
    spec.objects.push_back(object_from_json(e, "objects"));
  for (const auto& e : j.value("receptacles", json::array()))
    spec.receptacles.push_back(object_from_json(e, "receptacles"));
  return spec;
}

std::string scene_to_json(const SceneSpec& spec) {
  ordered_json j;
  j["scene_id"] = spec.scene_id;
  j["objects"] = ordered_json::array();
  for (const auto& o : spec.objects) j["objects"].push_back(object_to_json(o));
  j["receptacles"] = ordered_json::array();
  for (const auto& r : spec.receptacles) j["receptacles"].push_back(object_to_json(r));
  return j.dump(2) + "\n";
}

SceneSpec scene_from_file(const std::string& path) {
  return scene_from_json(util::read_file(path));
}

}  // namespace rei::world
