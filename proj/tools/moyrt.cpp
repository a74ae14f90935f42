// moyrt: evaluate MOY brackets and colored RT polynomials, run the
// verification suites, inspect diagram files.
//
// Exit codes: 0 ok, 1 input error, 2 verification failure or engine
// disagreement. Wall time goes to stderr and file paths are not echoed, so
// stdout depends only on the diagram.

#include <moyrt/moyrt.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using ojson = nlohmann::ordered_json;
using namespace moyrt;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string path;
  int N = 0;
  std::string engine = "dp";
  std::string output = "text";
  std::uint64_t seed = 7;
  std::vector<std::string> bounds;
  std::string suite;
};

LayeredDiagram load_valid(const std::string& path) {
  LayeredDiagram d = load_diagram(path);
  const auto diags = validate(d);
  if (!diags.empty()) {
    std::string msg = path + ": invalid diagram";
    for (const auto& g : diags) msg += "\n  layer " + std::to_string(g.layer) + ": " + g.reason;
    throw InputError(msg);
  }
  return d;
}

int resolve_N(const RunConfig& c, const LayeredDiagram& d) {
  const int N = c.N > 0 ? c.N : d.N.value_or(0);
  if (N < 1) throw InputError("N is required (use --n or an \"N\" field in the file)");
  if (N > kMaxN) throw InputError("N must be at most " + std::to_string(kMaxN));
  return N;
}

const char* kind_name(DiagramKind k) { return k == DiagramKind::graph ? "graph" : "link"; }

struct Evaluation {
  std::optional<LaurentPoly> dp, naive;
  EvalStats stats;
};

Evaluation evaluate(const LayeredDiagram& d, int N, const std::string& engine) {
  Evaluation e;
  const bool link = d.kind == DiagramKind::link;
  if (engine != "naive") e.dp = link ? bracket_link(d, N, LinkEngine::expand, &e.stats) : bracket(d, N, &e.stats);
  if (engine != "dp") e.naive = link ? bracket_link_naive(d, N) : bracket_naive(d, N);
  if (engine == "naive") e.stats.layers = d.layers.size();
  return e;
}

/// Prints the evaluation; returns false when both engines ran and disagree.
bool report_brackets(const Evaluation& e, const std::string& engine, ojson& j, std::ostream& out, bool text) {
  const bool agree = !(e.dp && e.naive) || *e.dp == *e.naive;
  if (text) {
    if (engine == "both") {
      out << "bracket (dp): " << e.dp->to_string() << "\n";
      out << "bracket (naive): " << e.naive->to_string() << "\n";
      out << "engines: " << (agree ? "agree" : "DISAGREE") << "\n";
    } else {
      out << "bracket: " << (e.dp ? *e.dp : *e.naive).to_string() << "\n";
    }
  } else {
    if (e.dp) j["bracket_dp"] = e.dp->to_string();
    if (e.naive) j["bracket_naive"] = e.naive->to_string();
    j["bracket"] = (e.dp ? *e.dp : *e.naive).to_string();
    if (engine == "both") j["engines_agree"] = agree;
  }
  return agree;
}

int cmd_eval(const RunConfig& c) {
  const auto d = load_valid(c.path);
  const int N = resolve_N(c, d);
  const auto e = evaluate(d, N, c.engine);
  const bool text = c.output == "text";
  ojson j;
  if (text) {
    std::cout << "kind: " << kind_name(d.kind) << "\nN: " << N << "\nengine: " << c.engine << "\n";
  } else {
    j["command"] = "eval";
    j["kind"] = kind_name(d.kind);
    j["N"] = N;
    j["engine"] = c.engine;
  }
  const bool agree = report_brackets(e, c.engine, j, std::cout, text);
  if (text) {
    if (e.dp) std::cout << "peak_states: " << e.stats.peak_states << "\n";
    std::cout << "layers: " << e.stats.layers << "\n";
  } else {
    if (e.dp) j["peak_states"] = e.stats.peak_states;
    j["layers"] = e.stats.layers;
    std::cout << j.dump(2) << "\n";
  }
  return agree ? 0 : 2;
}

int cmd_rt(const RunConfig& c) {
  const auto d = load_valid(c.path);
  if (d.kind != DiagramKind::link) throw InputError(c.path + ": rt needs a file of kind \"link\"");
  const int N = resolve_N(c, d);
  const auto e = evaluate(d, N, c.engine);
  const auto cs = crossings(d);
  const LaurentPoly shift = shift_product(d, N);
  const LaurentPoly rt = (e.dp ? *e.dp : *e.naive) * shift;
  const int tc = total_color(d), cr = adjusted_rotation(d);
  const bool parity = ((cr - tc) % 2 + 2) % 2 == 0;
  const bool text = c.output == "text";
  ojson j;
  if (text) {
    std::cout << "N: " << N << "\nengine: " << c.engine << "\ncrossings: " << cs.size() << "\n";
  } else {
    j["command"] = "rt";
    j["N"] = N;
    j["engine"] = c.engine;
    j["crossings"] = cs.size();
  }
  const bool agree = report_brackets(e, c.engine, j, std::cout, text);
  ojson shifts = ojson::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto s = shift_factor(cs[i].m, cs[i].n, cs[i].sign, N).to_string();
    if (text)
      std::cout << "shift " << i << " (layer " << cs[i].layer << ", " << (cs[i].sign == Sign::positive ? "+" : "-")
                << ", colors " << cs[i].n << "," << cs[i].m << "): " << s << "\n";
    else
      shifts.push_back(s);
  }
  if (text) {
    std::cout << "shift product: " << shift.to_string() << "\nrt: " << rt.to_string() << "\ntc: " << tc
              << "\ncr_hat: " << cr << "\nparity " << (parity ? "OK" : "FAIL") << "\n";
  } else {
    j["shifts"] = shifts;
    j["shift_product"] = shift.to_string();
    j["rt"] = rt.to_string();
    j["tc"] = tc;
    j["cr_hat"] = cr;
    j["parity"] = parity ? "OK" : "FAIL";
    std::cout << j.dump(2) << "\n";
  }
  return agree && parity ? 0 : 2;
}

Bounds parse_bounds(const std::vector<std::string>& raw) {
  Bounds b;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("bounds must look like key=value, got \"" + kv + "\"");
    try {
      std::size_t used = 0;
      const int v = std::stoi(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing");
      b[kv.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw InputError("bound \"" + kv + "\" needs an integer value");
    }
  }
  return b;
}

int cmd_verify(const RunConfig& c) {
  const Bounds b = parse_bounds(c.bounds);
  std::vector<std::string> suites;
  if (c.suite == "all")
    suites = suite_names();
  else
    suites = {c.suite};
  bool ok = true;
  const bool text = c.output == "text";
  ojson all = ojson::array();
  for (const auto& s : suites) {
    const SuiteReport r = run_suite(s, b, c.seed);
    ok = ok && r.ok();
    if (text) {
      for (const auto& it : r.items) {
        std::cout << (it.ok ? "PASS " : "FAIL ") << s << ": " << it.label;
        if (!it.ok) std::cout << " (" << it.detail << ")";
        std::cout << "\n";
      }
      std::cout << "suite " << s << ": " << r.items.size() << " checked, " << r.failures() << " failed\n";
    } else {
      ojson j;
      j["suite"] = s;
      j["checked"] = r.items.size();
      j["failed"] = r.failures();
      ojson items = ojson::array();
      for (const auto& it : r.items) {
        ojson x;
        x["label"] = it.label;
        x["ok"] = it.ok;
        if (!it.ok) x["detail"] = it.detail;
        items.push_back(x);
      }
      j["items"] = items;
      all.push_back(j);
    }
  }
  if (!text) std::cout << all.dump(2) << "\n";
  return ok ? 0 : 2;
}

int cmd_info(const RunConfig& c) {
  const LayeredDiagram d = load_diagram(c.path);
  const auto diags = validate(d);
  const bool text = c.output == "text";
  ojson j;
  j["kind"] = kind_name(d.kind);
  if (d.N) j["N"] = *d.N;
  j["layers"] = d.layers.size();
  j["valid"] = diags.empty();
  if (diags.empty()) {
    j["crossings"] = crossings(d).size();
    j["vertices"] = has_vertices(d);
    j["max_color"] = max_color(d);
    if (d.kind == DiagramKind::link && !has_vertices(d)) {
      j["total_color"] = total_color(d);
      j["cr_hat"] = adjusted_rotation(d);
    } else if (!has_crossings(d)) {
      j["rotation"] = colored_rotation_number(d);
    }
  } else {
    ojson ds = ojson::array();
    for (const auto& g : diags) ds.push_back("layer " + std::to_string(g.layer) + ": " + g.reason);
    j["diagnostics"] = ds;
  }
  if (text) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_array()) {
        for (const auto& x : *it) std::cout << it.key() << ": " << x.get<std::string>() << "\n";
      } else {
        std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return diags.empty() ? 0 : 1;
}

int cmd_fmt(const RunConfig& c) {
  std::cout << serialize_diagram(load_diagram(c.path));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored sl(N) MOY brackets and Reshetikhin-Turaev polynomials"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub, bool with_engine) {
    sub->add_option("--output", c.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (with_engine) {
      sub->add_option("file", c.path, "diagram file")->required();
      sub->add_option("--n", c.N, "rank N (overrides the file)")->check(CLI::Range(1, 1000000));
      sub->add_option("--engine", c.engine, "dp, naive or both")->check(CLI::IsMember({"dp", "naive", "both"}));
    }
  };

  auto* eval = app.add_subcommand("eval", "evaluate the bracket of a graph or link file");
  add_common(eval, true);
  auto* rt = app.add_subcommand("rt", "RT polynomial, shifts, total color and parity of a link file");
  add_common(rt, true);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--bounds", c.bounds, "key=value bounds, e.g. N=3 colors=2")->expected(1, -1);
  verify->add_option("--seed", c.seed, "seed for randomized suites");
  add_common(verify, false);
  auto* info = app.add_subcommand("info", "diagram metadata and validation");
  info->add_option("file", c.path, "diagram file")->required();
  add_common(info, false);
  auto* fmt = app.add_subcommand("fmt", "print a diagram file in canonical form");
  fmt->add_option("file", c.path, "diagram file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (eval->parsed()) rc = cmd_eval(c);
    else if (rt->parsed()) rc = cmd_rt(c);
    else if (verify->parsed()) rc = cmd_verify(c);
    else if (info->parsed()) rc = cmd_info(c);
    else rc = cmd_fmt(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "wall time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  return rc;
}
