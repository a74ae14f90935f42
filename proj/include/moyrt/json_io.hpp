// The "moy-layered/1" JSON file format.
//
//   {
//     "format": "moy-layered/1",
//     "kind": "graph",
//     "N": 2,
//     "layers": [
//       {"event":"cup","pos":0,"color":2,"up_side":"right"},
//       ...
//     ]
//   }
//
// Parsing is strict (unknown or missing fields are errors). Serialization is
// canonical: fixed key order, one event per line.
#pragma once

#include "diagram.hpp"

#include <json.hpp>  // vendored nlohmann/json

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace moyrt {

inline constexpr const char* kFormatTag = "moy-layered/1";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline void only_keys(const ojson& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw FormatError(where + ": unknown field \"" + it.key() + "\"");
}

inline int get_int(const ojson& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw FormatError(where + ": missing field \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw FormatError(where + ": field \"" + key + "\" must be an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw FormatError(where + ": field \"" + key + "\" is out of range");
  return static_cast<int>(x);
}

inline std::string get_string(const ojson& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw FormatError(where + ": missing field \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_string()) throw FormatError(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

inline Side get_side(const ojson& j, const std::string& where) {
  const auto s = get_string(j, "up_side", where);
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw FormatError(where + ": up_side must be \"left\" or \"right\"");
}

inline Event parse_event(const ojson& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": event must be an object");
  const auto kind = get_string(j, "event", where);
  if (kind == "cup") {
    only_keys(j, {"event", "pos", "color", "up_side"}, where);
    return Cup{get_int(j, "pos", where), get_int(j, "color", where), get_side(j, where)};
  }
  if (kind == "cap") {
    only_keys(j, {"event", "pos", "up_side"}, where);
    return Cap{get_int(j, "pos", where), get_side(j, where)};
  }
  if (kind == "join") {
    only_keys(j, {"event", "pos", "color"}, where);
    Join e{get_int(j, "pos", where), std::nullopt};
    if (j.contains("color")) e.color = get_int(j, "color", where);
    return e;
  }
  if (kind == "fork") {
    only_keys(j, {"event", "pos", "left_color", "right_color"}, where);
    return Fork{get_int(j, "pos", where), get_int(j, "left_color", where), get_int(j, "right_color", where)};
  }
  if (kind == "crossing") {
    only_keys(j, {"event", "pos", "sign"}, where);
    const auto s = get_string(j, "sign", where);
    if (s != "+" && s != "-") throw FormatError(where + ": sign must be \"+\" or \"-\"");
    return Crossing{get_int(j, "pos", where), s == "+" ? Sign::positive : Sign::negative};
  }
  throw FormatError(where + ": unknown event \"" + kind + "\"");
}

inline ojson event_json(const Event& ev) {
  ojson j;
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        auto side = [](Side s) { return s == Side::left ? "left" : "right"; };
        if constexpr (std::is_same_v<T, Cup>) {
          j["event"] = "cup";
          j["pos"] = e.pos;
          j["color"] = e.color;
          j["up_side"] = side(e.up_side);
        } else if constexpr (std::is_same_v<T, Cap>) {
          j["event"] = "cap";
          j["pos"] = e.pos;
          j["up_side"] = side(e.up_side);
        } else if constexpr (std::is_same_v<T, Join>) {
          j["event"] = "join";
          j["pos"] = e.pos;
          if (e.color) j["color"] = *e.color;
        } else if constexpr (std::is_same_v<T, Fork>) {
          j["event"] = "fork";
          j["pos"] = e.pos;
          j["left_color"] = e.left_color;
          j["right_color"] = e.right_color;
        } else {
          j["event"] = "crossing";
          j["pos"] = e.pos;
          j["sign"] = e.sign == Sign::positive ? "+" : "-";
        }
      },
      ev);
  return j;
}

}  // namespace detail

/// Parses a diagram document; structure only (call validate() for the geometry).
inline LayeredDiagram parse_diagram(const std::string& text) {
  using detail::ojson;
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("document must be a JSON object");
  detail::only_keys(j, {"format", "kind", "N", "layers"}, "document");
  if (detail::get_string(j, "format", "document") != kFormatTag)
    throw FormatError(std::string("document: format must be \"") + kFormatTag + "\"");
  LayeredDiagram d;
  const auto kind = detail::get_string(j, "kind", "document");
  if (kind == "graph")
    d.kind = DiagramKind::graph;
  else if (kind == "link")
    d.kind = DiagramKind::link;
  else
    throw FormatError("document: kind must be \"graph\" or \"link\"");
  if (j.contains("N")) {
    d.N = detail::get_int(j, "N", "document");
    if (*d.N < 1) throw FormatError("document: N must be positive");
  }
  if (!j.contains("layers") || !j.at("layers").is_array()) throw FormatError("document: \"layers\" must be an array");
  int i = 0;
  for (const auto& ev : j.at("layers")) {
    d.layers.push_back(detail::parse_event(ev, "layer " + std::to_string(i)));
    ++i;
  }
  return d;
}

inline std::string serialize_diagram(const LayeredDiagram& d) {
  using detail::ojson;
  std::ostringstream os;
  os << "{\n  \"format\": " << ojson(kFormatTag).dump() << ",\n  \"kind\": "
     << ojson(d.kind == DiagramKind::graph ? "graph" : "link").dump() << ",\n";
  if (d.N) os << "  \"N\": " << *d.N << ",\n";
  if (d.layers.empty()) {
    os << "  \"layers\": []\n}\n";
    return os.str();
  }
  os << "  \"layers\": [\n";
  for (std::size_t i = 0; i < d.layers.size(); ++i)
    os << "    " << detail::event_json(d.layers[i]).dump() << (i + 1 < d.layers.size() ? ",\n" : "\n");
  os << "  ]\n}\n";
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LayeredDiagram load_diagram(const std::string& path) { return parse_diagram(read_text_file(path)); }

inline void save_diagram(const std::string& path, const LayeredDiagram& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << serialize_diagram(d);
}

}  // namespace moyrt
