#include "core/world/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "core/util/strings.hpp"

namespace rei::world {

namespace {

ObjectKind mk(std::string name, Category cat, KindProps props, std::vector<std::string> surfaces) {
  ObjectKind k;
  k.name = std::move(name);
  k.category = cat;
  k.props = std::move(props);
  k.surfaces = std::move(surfaces);
  return k;
}

constexpr KindProps kPick{.pickupable = true};
constexpr KindProps kPickSlice{.pickupable = true, .sliceable = true};
constexpr KindProps kNone{};

std::vector<ObjectKind> build() {
  std::vector<ObjectKind> v;
  // Food
  v.push_back(mk("Apple", Category::food, kPickSlice, {"apple", "apples"}));
  v.push_back(mk("Tomato", Category::food, kPickSlice, {"tomato", "tomatoes"}));
  v.push_back(mk("Potato", Category::food, kPickSlice, {"potato", "potatoes"}));
  v.push_back(mk("Bread", Category::food, kPickSlice, {"bread", "loaf of bread"}));
  v.push_back(mk("Lettuce", Category::food, kPickSlice, {"lettuce"}));
  v.push_back(mk("Egg", Category::food, kPickSlice, {"egg", "eggs"}));
  // Containers (movable; usable as receptacles when a scene declares them so)
  v.push_back(mk("Bowl", Category::container, kPick, {"bowl", "bowls"}));
  v.push_back(mk("Mug", Category::container, kPick, {"mug", "mugs"}));
  v.push_back(mk("Cup", Category::container, kPick, {"cup", "cups"}));
  v.push_back(mk("Bottle", Category::container, kPick, {"bottle", "bottles"}));
  v.push_back(mk("Box", Category::container, {.pickupable = true, .openable = true}, {"box", "boxes"}));
  v.push_back(mk("Plate", Category::container, kPick, {"plate", "plates"}));
  v.push_back(mk("Pot", Category::container, kPick, {"pot", "pots"}));
  v.push_back(mk("Pan", Category::container, kPick, {"pan", "frying pan", "pans"}));
  v.push_back(mk("Vase", Category::container, kPick, {"vase", "vases"}));
  // Devices
  v.push_back(mk("Laptop", Category::device, kPick, {"laptop"}));
  v.push_back(mk("RemoteControl", Category::device, kPick, {"remote control", "remote"}));
  v.push_back(mk("CellPhone", Category::device, kPick, {"cell phone", "cellphone", "phone"}));
  v.push_back(mk("AlarmClock", Category::device, kPick, {"alarm clock", "clock"}));
  v.push_back(mk("Watch", Category::device, kPick, {"watch", "watches"}));
  v.push_back(mk("Television", Category::device, {.toggleable = true}, {"television", "tv"}));
  // Utensils
  v.push_back(mk("ButterKnife", Category::utensil, kPick, {"butter knife"}));
  v.push_back(mk("Knife", Category::utensil, kPick, {"knife", "knives"}));
  v.push_back(mk("Fork", Category::utensil, kPick, {"fork", "forks"}));
  v.push_back(mk("Spoon", Category::utensil, kPick, {"spoon", "spoons"}));
  // Lights
  v.push_back(mk("DeskLamp", Category::light, {.toggleable = true}, {"desk lamp", "lamp"}));
  v.push_back(mk("FloorLamp", Category::light, {.toggleable = true}, {"floor lamp", "lamp"}));
  v.push_back(mk("Candle", Category::light, {.pickupable = true, .toggleable = true}, {"candle", "candles"}));
  // Appliance receptacles
  v.push_back(mk("Microwave", Category::receptacle,
                 {.openable = true, .can_heat_source = true}, {"microwave", "microwave oven"}));
  v.push_back(mk("Fridge", Category::receptacle,
                 {.openable = true, .can_cool_source = true}, {"fridge", "refrigerator"}));
  v.push_back(mk("SinkBasin", Category::receptacle,
                 {.can_clean_source = true}, {"sink basin", "sink"}));
  v.push_back(mk("GarbageCan", Category::receptacle, kNone, {"garbage can", "trash can", "bin"}));
  v.push_back(mk("Drawer", Category::receptacle, {.openable = true}, {"drawer", "drawers"}));
  // Furniture
  v.push_back(mk("CounterTop", Category::furniture, kNone, {"counter top", "countertop", "counter"}));
  v.push_back(mk("DiningTable", Category::furniture, kNone, {"dining table", "table"}));
  v.push_back(mk("CoffeeTable", Category::furniture, kNone, {"coffee table", "table"}));
  v.push_back(mk("SideTable", Category::furniture, kNone, {"side table", "table"}));
  v.push_back(mk("Desk", Category::furniture, kNone, {"desk", "desks"}));
  v.push_back(mk("Shelf", Category::furniture, kNone, {"shelf", "shelves"}));
  v.push_back(mk("Dresser", Category::furniture, kNone, {"dresser"}));
  v.push_back(mk("ArmChair", Category::furniture, kNone, {"armchair", "arm chair"}));
  v.push_back(mk("Chair", Category::furniture, kNone, {"chair", "chairs"}));
  v.push_back(mk("Sofa", Category::furniture, kNone, {"sofa", "couch"}));
  v.push_back(mk("Bed", Category::furniture, kNone, {"bed", "beds"}));
  v.push_back(mk("TVStand", Category::furniture, kNone, {"tv stand"}));
  // Small items
  v.push_back(mk("Book", Category::decor, kPick, {"book", "books"}));
  v.push_back(mk("CD", Category::decor, kPick, {"cd", "compact disc"}));
  v.push_back(mk("Pencil", Category::decor, kPick, {"pencil", "pencils"}));
  v.push_back(mk("Pen", Category::decor, kPick, {"pen", "pens"}));
  v.push_back(mk("Newspaper", Category::decor, kPick, {"newspaper"}));
  v.push_back(mk("Pillow", Category::decor, kPick, {"pillow", "pillows"}));
  v.push_back(mk("TeddyBear", Category::decor, kPick, {"teddy bear"}));
  v.push_back(mk("Statue", Category::decor, kPick, {"statue", "statues"}));
  v.push_back(mk("BaseballBat", Category::decor, kPick, {"baseball bat", "bat"}));
  v.push_back(mk("BasketBall", Category::decor, kPick, {"basketball"}));
  v.push_back(mk("TennisRacket", Category::decor, kPick, {"tennis racket"}));
  v.push_back(mk("SprayBottle", Category::decor, kPick, {"spray bottle"}));
  v.push_back(mk("PepperShaker", Category::decor, kPick, {"pepper shaker"}));
  v.push_back(mk("SaltShaker", Category::decor, kPick, {"salt shaker"}));
  v.push_back(mk("HousePlant", Category::decor, kPick, {"house plant", "plant"}));
  v.push_back(mk("Painting", Category::decor, kNone, {"painting", "paintings"}));
  return v;
}

}  // namespace

const std::vector<ObjectKind>& vocabulary() {
  static const std::vector<ObjectKind> v = build();
  return v;
}

const ObjectKind* find_kind(const std::string& name) {
  for (const auto& k : vocabulary()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

const ObjectKind* kind_for_id(const std::string& object_id) {
  std::string base = object_id;
  size_t us = base.find_last_of('_');
  if (us != std::string::npos) {
    bool digits = us + 1 < base.size();
    for (size_t i = us + 1; i < base.size(); ++i) {
      digits = digits && std::isdigit(static_cast<unsigned char>(base[i]));
    }
    if (digits) base = base.substr(0, us);
  }
  return find_kind(base);
}

std::vector<SurfaceHit> find_kind_mentions(const std::string& text) {
  // surface -> kinds, precomputed once
  struct Entry {
    std::string surface;
    std::vector<const ObjectKind*> kinds;
  };
  static const std::vector<Entry> entries = [] {
    std::map<std::string, std::vector<const ObjectKind*>> by_surface;
    for (const auto& k : vocabulary()) {
      for (const auto& s : k.surfaces) by_surface[s].push_back(&k);
    }
    std::vector<Entry> out;
    for (auto& [s, ks] : by_surface) out.push_back({s, ks});
    // Longest surface first so "desk lamp" beats "desk" and "lamp".
    std::stable_sort(out.begin(), out.end(),
                     [](const Entry& a, const Entry& b) { return a.surface.size() > b.surface.size(); });
    return out;
  }();

  std::vector<SurfaceHit> hits;
  size_t pos = 0;
  while (pos < text.size()) {
    const Entry* best = nullptr;
    size_t best_at = std::string::npos;
    for (const auto& e : entries) {
      size_t at = util::find_word(text, e.surface, pos);
      if (at == std::string::npos) continue;
      if (at < best_at || (at == best_at && best && e.surface.size() > best->surface.size())) {
        best = &e;
        best_at = at;
      }
    }
    if (!best) break;
    hits.push_back({best_at, best->surface.size(), best->surface, best->kinds});
    pos = best_at + best->surface.size();
  }
  return hits;
}

}  // namespace rei::world
