#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/world/types.hpp"

namespace rei::world {

// Built-in object kind catalog for the household domain. Scene files refer to
// kinds by name; anything outside the catalog is a validation error.
const std::vector<ObjectKind>& vocabulary();

const ObjectKind* find_kind(const std::string& name);

// Kind for an instance id: "Tomato" and "Tomato_2" both map to Tomato.
const ObjectKind* kind_for_id(const std::string& object_id);

// One hit per matched span; kinds lists every catalog entry answering to the
// surface ("lamp" hits both lamps). Matches are whole-word, case-insensitive,
// longest-first, non-overlapping, left to right.
struct SurfaceHit {
  size_t begin = 0;
  size_t length = 0;
  std::string surface;                   // lowercased canonical surface
  std::vector<const ObjectKind*> kinds;  // candidates, catalog order
};
std::vector<SurfaceHit> find_kind_mentions(const std::string& text);

}  // namespace rei::world
