// Building open tangles with possibly zero-colored strands, and closing them.
//
// The builder keeps a "virtual" row of strands in which color 0 is allowed.
// Color-0 strands do not exist in the picture (an edge colored 0 is absent),
// so events touching them are elided and real positions count only
// nonzero strands.
#pragma once

#include "diagram.hpp"

#include <stdexcept>
#include <vector>

namespace moyrt {

struct Tangle {
  Profile bottom;
  std::vector<Event> layers;
  Profile top;
};

class TangleBuilder {
 public:
  explicit TangleBuilder(Profile bottom = {}) : virt_(std::move(bottom)) {
    for (const auto& s : virt_) {
      if (s.color < 0) throw std::invalid_argument("TangleBuilder: negative color");
      if (s.color > 0) bottom_.push_back(s);
    }
  }

  const Profile& virtual_profile() const noexcept { return virt_; }

  TangleBuilder& cup(int vpos, int color, Side up_side) {
    if (color < 0) throw std::invalid_argument("TangleBuilder::cup: negative color");
    check(vpos, 0);
    const bool left_up = up_side == Side::left;
    if (color > 0) events_.push_back(Cup{real(vpos), color, up_side});
    virt_.insert(virt_.begin() + vpos, {Strand{color, left_up}, Strand{color, !left_up}});
    return *this;
  }

  TangleBuilder& cap(int vpos, Side up_side) {
    check(vpos, 2);
    const Strand a = virt_[vpos], b = virt_[vpos + 1];
    if (a.color != b.color) throw std::invalid_argument("TangleBuilder::cap: color mismatch");
    if (a.color > 0) events_.push_back(Cap{real(vpos), up_side});
    virt_.erase(virt_.begin() + vpos, virt_.begin() + vpos + 2);
    return *this;
  }

  TangleBuilder& join(int vpos) {
    check(vpos, 2);
    const Strand a = virt_[vpos], b = virt_[vpos + 1];
    if (a.color > 0 && b.color > 0) events_.push_back(Join{real(vpos), std::nullopt});
    const bool up = a.color > 0 ? a.up : b.up;
    virt_.erase(virt_.begin() + vpos + 1);
    virt_[vpos] = Strand{a.color + b.color, up};
    return *this;
  }

  TangleBuilder& fork(int vpos, int left_color, int right_color) {
    check(vpos, 1);
    if (left_color < 0 || right_color < 0) throw std::invalid_argument("TangleBuilder::fork: negative color");
    const Strand s = virt_[vpos];
    if (left_color + right_color != s.color) throw std::invalid_argument("TangleBuilder::fork: flow conservation");
    if (left_color > 0 && right_color > 0) events_.push_back(Fork{real(vpos), left_color, right_color});
    virt_[vpos] = Strand{left_color, s.up};
    virt_.insert(virt_.begin() + vpos + 1, Strand{right_color, s.up});
    return *this;
  }

  TangleBuilder& crossing(int vpos, Sign sign) {
    check(vpos, 2);
    if (virt_[vpos].color > 0 && virt_[vpos + 1].color > 0) events_.push_back(Crossing{real(vpos), sign});
    std::swap(virt_[vpos], virt_[vpos + 1]);
    return *this;
  }

  /// Drops color-0 strands that remain in the virtual row.
  Tangle finish() const {
    Tangle t{bottom_, events_, {}};
    for (const auto& s : virt_)
      if (s.color > 0) t.top.push_back(s);
    return t;
  }

 private:
  void check(int vpos, int count) const {
    if (vpos < 0 || vpos + count > static_cast<int>(virt_.size()))
      throw std::out_of_range("TangleBuilder: position out of range");
  }
  int real(int vpos) const {
    int r = 0;
    for (int i = 0; i < vpos; ++i)
      if (virt_[i].color > 0) ++r;
    return r;
  }

  Profile virt_;
  Profile bottom_;
  std::vector<Event> events_;
};

/// Appends `extra` on top of `base` (the boundaries must agree).
inline Tangle compose(const Tangle& base, const Tangle& extra) {
  if (base.top != extra.bottom) throw std::invalid_argument("compose: boundary mismatch");
  Tangle t = base;
  t.layers.insert(t.layers.end(), extra.layers.begin(), extra.layers.end());
  t.top = extra.top;
  return t;
}

/// Closes a tangle whose top matches its bottom by nested arcs on the right:
/// the i-th bottom endpoint is joined to the i-th top endpoint.
inline LayeredDiagram close_nested_right(const Tangle& t, DiagramKind kind = DiagramKind::graph) {
  if (t.top != t.bottom) throw std::invalid_argument("close_nested_right: top and bottom boundaries differ");
  const int k = static_cast<int>(t.bottom.size());
  LayeredDiagram d{kind, std::nullopt, {}};
  for (int i = 0; i < k; ++i)
    d.layers.push_back(Cup{i, t.bottom[i].color, t.bottom[i].up ? Side::left : Side::right});
  d.layers.insert(d.layers.end(), t.layers.begin(), t.layers.end());
  for (int i = k - 1; i >= 0; --i) d.layers.push_back(Cap{i, t.top[i].up ? Side::left : Side::right});
  require_valid(d);
  return d;
}

/// The identity tangle on a profile.
inline Tangle identity_tangle(const Profile& p) { return TangleBuilder(p).finish(); }

}  // namespace moyrt
