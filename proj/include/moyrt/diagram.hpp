// Layered (Morse) presentation of colored MOY graphs and link diagrams.
//
// A diagram is read bottom to top. Between events the picture is a row of
// vertical strands, each with a color and a direction; every event rewrites a
// few adjacent strands of that row.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace moyrt {

enum class Side { left, right };
enum class Sign { positive, negative };
enum class DiagramKind { graph, link };

inline Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }
inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

/// Creates strands pos, pos+1 with opposite directions; up_side names the one pointing up.
struct Cup {
  int pos = 0;
  int color = 1;
  Side up_side = Side::right;
  friend bool operator==(const Cup&, const Cup&) = default;
};

/// Consumes strands pos, pos+1; up_side names the one pointing up.
struct Cap {
  int pos = 0;
  Side up_side = Side::right;
  friend bool operator==(const Cap&, const Cap&) = default;
};

/// Strands pos, pos+1 merge into one. `color`, when present, is the claimed result.
struct Join {
  int pos = 0;
  std::optional<int> color;
  friend bool operator==(const Join&, const Join&) = default;
};

/// Strand pos splits into two.
struct Fork {
  int pos = 0;
  int left_color = 1;
  int right_color = 1;
  friend bool operator==(const Fork&, const Fork&) = default;
};

/// Strands pos, pos+1 (both upward) cross. Positive: the over strand runs
/// from bottom-left to top-right.
struct Crossing {
  int pos = 0;
  Sign sign = Sign::positive;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

using Event = std::variant<Cup, Cap, Join, Fork, Crossing>;

inline int event_pos(const Event& e) {
  return std::visit([](const auto& ev) { return ev.pos; }, e);
}

struct Strand {
  int color = 1;
  bool up = true;
  friend bool operator==(const Strand&, const Strand&) = default;
};

using Profile = std::vector<Strand>;

struct LayeredDiagram {
  DiagramKind kind = DiagramKind::graph;
  std::optional<int> N;
  std::vector<Event> layers;
  friend bool operator==(const LayeredDiagram&, const LayeredDiagram&) = default;
};

struct Diagnostic {
  int layer = -1;  ///< index of the offending event, or layers.size() for boundary problems
  std::string reason;
};

class DiagramError : public std::runtime_error {
 public:
  DiagramError(Diagnostic d)
      : std::runtime_error("layer " + std::to_string(d.layer) + ": " + d.reason), diag_(std::move(d)) {}
  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

/// Applies one event to a profile, or explains why it cannot be applied.
inline std::optional<std::string> apply_event(Profile& p, const Event& ev) {
  const int size = static_cast<int>(p.size());
  auto need = [&](int pos, int count) -> std::optional<std::string> {
    if (pos < 0 || pos + count > size) return "position out of range";
    return std::nullopt;
  };
  if (const auto* e = std::get_if<Cup>(&ev)) {
    if (e->pos < 0 || e->pos > size) return "position out of range";
    if (e->color < 1) return "color must be positive";
    const bool left_up = e->up_side == Side::left;
    p.insert(p.begin() + e->pos, {Strand{e->color, left_up}, Strand{e->color, !left_up}});
    return std::nullopt;
  }
  if (const auto* e = std::get_if<Cap>(&ev)) {
    if (auto err = need(e->pos, 2)) return err;
    const Strand& a = p[e->pos];
    const Strand& b = p[e->pos + 1];
    if (a.color != b.color) return "cap color mismatch";
    if (a.up == b.up) return "cap direction mismatch";
    if (a.up != (e->up_side == Side::left)) return "cap up_side mismatch";
    p.erase(p.begin() + e->pos, p.begin() + e->pos + 2);
    return std::nullopt;
  }
  if (const auto* e = std::get_if<Join>(&ev)) {
    if (auto err = need(e->pos, 2)) return err;
    const Strand& a = p[e->pos];
    const Strand& b = p[e->pos + 1];
    if (a.up != b.up) return "join direction mismatch";
    const int c = a.color + b.color;
    if (e->color && *e->color != c) return "flow conservation";
    const Strand merged{c, a.up};
    p.erase(p.begin() + e->pos + 1);
    p[e->pos] = merged;
    return std::nullopt;
  }
  if (const auto* e = std::get_if<Fork>(&ev)) {
    if (auto err = need(e->pos, 1)) return err;
    if (e->left_color < 1 || e->right_color < 1) return "color must be positive";
    const Strand s = p[e->pos];
    if (e->left_color + e->right_color != s.color) return "flow conservation";
    p[e->pos] = Strand{e->left_color, s.up};
    p.insert(p.begin() + e->pos + 1, Strand{e->right_color, s.up});
    return std::nullopt;
  }
  const auto& e = std::get<Crossing>(ev);
  if (auto err = need(e.pos, 2)) return err;
  if (!p[e.pos].up || !p[e.pos + 1].up) return "crossing strands must point upward";
  std::swap(p[e.pos], p[e.pos + 1]);
  return std::nullopt;
}

/// Profile after the given events starting from `bottom`; throws DiagramError.
inline Profile propagate(Profile bottom, const std::vector<Event>& layers) {
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (auto err = apply_event(bottom, layers[i])) throw DiagramError({static_cast<int>(i), *err});
  return bottom;
}

/// Profiles before every event plus the final one (size layers+1).
inline std::vector<Profile> profiles(const LayeredDiagram& d) {
  std::vector<Profile> out{Profile{}};
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    Profile p = out.back();
    if (auto err = apply_event(p, d.layers[i])) throw DiagramError({static_cast<int>(i), *err});
    out.push_back(std::move(p));
  }
  return out;
}

/// All structural checks; an empty result means the diagram is valid and closed.
inline std::vector<Diagnostic> validate(const LayeredDiagram& d) {
  std::vector<Diagnostic> out;
  if (d.N && *d.N < 1) out.push_back({-1, "N must be positive"});
  Profile p;
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    const int layer = static_cast<int>(i);
    if (d.kind == DiagramKind::graph && std::holds_alternative<Crossing>(d.layers[i])) {
      out.push_back({layer, "crossing in a graph diagram"});
      return out;
    }
    if (auto err = apply_event(p, d.layers[i])) {
      out.push_back({layer, *err});
      return out;
    }
  }
  if (!p.empty()) out.push_back({static_cast<int>(d.layers.size()), "not closed"});
  return out;
}

inline void require_valid(const LayeredDiagram& d) {
  auto diags = validate(d);
  if (!diags.empty()) throw DiagramError(diags.front());
}

inline bool has_crossings(const LayeredDiagram& d) {
  for (const auto& e : d.layers)
    if (std::holds_alternative<Crossing>(e)) return true;
  return false;
}

inline bool has_vertices(const LayeredDiagram& d) {
  for (const auto& e : d.layers)
    if (std::holds_alternative<Join>(e) || std::holds_alternative<Fork>(e)) return true;
  return false;
}

inline int max_color(const LayeredDiagram& d) {
  int best = 0;
  for (const auto& p : profiles(d))
    for (const auto& s : p) best = std::max(best, s.color);
  return best;
}

/// Reverses the orientation of every edge. Only meaningful without crossings.
inline LayeredDiagram reverse_orientation(LayeredDiagram d) {
  for (auto& e : d.layers) {
    if (auto* c = std::get_if<Cup>(&e)) c->up_side = flip(c->up_side);
    if (auto* c = std::get_if<Cap>(&e)) c->up_side = flip(c->up_side);
  }
  return d;
}

/// Reflection in a vertical line; crossing signs flip.
inline LayeredDiagram mirror(const LayeredDiagram& d) {
  LayeredDiagram out{d.kind, d.N, {}};
  const auto profs = profiles(d);
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    const int s = static_cast<int>(profs[i].size());
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, Cup>)
            out.layers.push_back(Cup{s - ev.pos, ev.color, flip(ev.up_side)});
          else if constexpr (std::is_same_v<T, Cap>)
            out.layers.push_back(Cap{s - 2 - ev.pos, flip(ev.up_side)});
          else if constexpr (std::is_same_v<T, Join>)
            out.layers.push_back(Join{s - 2 - ev.pos, ev.color});
          else if constexpr (std::is_same_v<T, Fork>)
            out.layers.push_back(Fork{s - 1 - ev.pos, ev.right_color, ev.left_color});
          else
            out.layers.push_back(Crossing{s - 2 - ev.pos, flip(ev.sign)});
        },
        d.layers[i]);
  }
  return out;
}

/// Side-by-side placement of two closed diagrams (one above the other in the sweep).
inline LayeredDiagram disjoint_union(const LayeredDiagram& a, const LayeredDiagram& b) {
  LayeredDiagram out = a;
  if (b.kind == DiagramKind::link) out.kind = DiagramKind::link;
  out.layers.insert(out.layers.end(), b.layers.begin(), b.layers.end());
  return out;
}

}  // namespace moyrt
