#pragma once

#include <string>

#include "core/world/types.hpp"

namespace rei::world {

// Scene files are JSON: {"scene_id", "objects": [...], "receptacles": [...]}
// with each entry {"id", "kind", "location", "state_flags"}. Unknown keys are
// rejected. scene_to_json emits the canonical form; parsing canonical output
// round-trips byte-identically.
SceneSpec scene_from_json(const std::string& text);
std::string scene_to_json(const SceneSpec& spec);

SceneSpec scene_from_file(const std::string& path);

}  // namespace rei::world
