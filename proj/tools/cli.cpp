#include "cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "fourcolor/coloring.hpp"
#include "fourcolor/search.hpp"
#include "fourcolor/shelling.hpp"
#include "fourcolor/text_format.hpp"

namespace fourcolor::cli {

namespace {

/// Input problem that maps to the usage exit status.
struct InputError : Error {
  using Error::Error;
};

template <class Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

LSet load_start(const std::string& arg, int k) {
  if (arg == "S") return LSet::start(Alphabet(k));
  return load(arg, [](const std::string& t) { return parse_lset(t); });
}

std::vector<TransitionLabel> load_script(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_deriv(t); });
}

PlaneGraph load_graph(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_rot(t); });
}

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t t = 0; t < vs.size(); ++t) out += (t ? "," : "") + std::to_string(vs[t] + 1);
  return out;
}

std::string join_labels(const std::vector<TransitionLabel>& labels) {
  std::string out;
  for (std::size_t t = 0; t < labels.size(); ++t) out += (t ? "," : "") + labels[t].str();
  return out;
}

void emit_kv(std::ostream& out, const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
}

ColoringSeed parse_seed(const std::string& text, int n, Alphabet alphabet) {
  ColoringSeed seed;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq + 2 != item.size())
      throw InputError("--seed expects entries like 1=a, got \"" + item + "\"");
    int v = 0;
    try {
      v = std::stoi(item.substr(0, eq));
    } catch (const std::exception&) {
      throw InputError("--seed: bad vertex in \"" + item + "\"");
    }
    if (v < 1 || v > n) throw InputError("--seed: vertex " + std::to_string(v) + " out of range");
    seed.emplace_back(v - 1, alphabet.parse(item[eq + 1]));
  }
  return seed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String-set automaton for four-coloring plane near-triangulations"};
  app.require_subcommand(1, 1);

  // derive
  std::string derive_start = "S", derive_script;
  int derive_k = 4;
  auto* derive = app.add_subcommand("derive", "Replay a derivation script and print every state");
  derive->add_option("--start", derive_start, "Start state: S or an .lset file")->capture_default_str();
  derive->add_option("--script", derive_script, "Derivation script (.deriv)")->required();
  derive->add_option("--alphabet", derive_k, "Alphabet size used for S")->check(CLI::Range(3, 8))->capture_default_str();

  // search
  std::string search_start = "S", canon = "cd", emit_states, emit_witness;
  int search_k = 4;
  SearchConfig config;
  std::vector<std::string> probes;
  auto* search = app.add_subcommand("search", "Bounded breadth-first search for the empty set");
  search->add_option("--start", search_start, "Start state: S or an .lset file")->capture_default_str();
  search->add_option("--max-depth", config.max_depth, "Derivation depth bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  search->add_option("--max-length", config.max_length, "Drop states longer than this")->check(CLI::Range(3, 64))->capture_default_str();
  search->add_option("--max-states", config.max_states, "Stored-state budget")->check(CLI::PositiveNumber)->capture_default_str();
  search->add_option("--canon", canon, "Symmetry reduction")->check(CLI::IsMember({"none", "cd", "cd-rev", "full"}))->capture_default_str();
  search->add_option("--alphabet", search_k, "Alphabet size")->check(CLI::IsMember({4, 5}))->capture_default_str();
  search->add_option("--probe", probes, "Property probe evaluated on every state")->check(CLI::IsMember({"missing-letter"}));
  search->add_option("--emit-states", emit_states, "Write every stored state as an .lset stream");
  search->add_option("--emit-witness", emit_witness, "Write the witness script (.deriv) if the empty set is reached");

  // build
  std::string build_script, build_out;
  auto* build = app.add_subcommand("build", "Build the near-triangulation of a derivation script");
  build->add_option("--script", build_script, "Derivation script (.deriv) applied from S")->required();
  build->add_option("--out", build_out, "Write the .rot graph here instead of stdout");

  // order
  std::string order_graph, order_script;
  int order_v1 = 0, order_v2 = 0;
  auto* order = app.add_subcommand("order", "Shelling order of a 4-connected plane triangulation");
  order->add_option("--graph", order_graph, "Triangulation (.rot)")->required();
  order->add_option("--v1", order_v1, "First vertex (default: first outer vertex)");
  order->add_option("--v2", order_v2, "Second vertex (default: second outer vertex)");
  order->add_option("--emit-script", order_script, "Write the derivation script (.deriv)");

  // verify-roundtrip
  std::string verify_script;
  int verify_k = 4;
  auto* verify = app.add_subcommand("verify-roundtrip", "Compare string replay with the coloring oracle");
  verify->add_option("--script", verify_script, "Derivation script (.deriv) applied from S")->required();
  verify->add_option("--alphabet", verify_k, "Alphabet size")->check(CLI::Range(3, 8))->capture_default_str();

  // colorings
  std::string color_graph, color_seed;
  int color_k = 4;
  bool color_count = false;
  auto* colorings = app.add_subcommand("colorings", "Enumerate or count proper colorings");
  colorings->add_option("--graph", color_graph, "Graph (.rot)")->required();
  colorings->add_option("--k", color_k, "Number of letters")->check(CLI::Range(2, 8))->capture_default_str();
  colorings->add_option("--seed", color_seed, "Fixed letters, e.g. 1=a,2=b");
  colorings->add_flag("--count", color_count, "Print only the number of colorings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (derive->parsed()) {
      const auto start = load_start(derive_start, derive_k);
      const auto steps = load_script(derive_script);
      std::vector<LSet> states;
      try {
        states = replay({start, steps});
      } catch (const PreconditionError& e) {
        throw InputError(derive_script + ": " + e.what());
      }
      out << format_lset_stream(states);
      return kExitOk;
    }

    if (search->parsed()) {
      config.alphabet = Alphabet(search_k);
      config.canon = parse_symmetry_group(canon);
      for (const auto& p : probes)
        if (p == "missing-letter") config.probes.push_back(missing_letter_probe());
      const auto start = load_start(search_start, search_k);
      if (start.alphabet() != config.alphabet)
        throw InputError(search_start + ": alphabet k=" + std::to_string(start.alphabet().size()) +
                         " does not match --alphabet " + std::to_string(search_k));
      std::vector<LSet> stored;
      const auto report = bfs(start, config, [&](int, const LSet& s) {
        if (!emit_states.empty()) stored.push_back(s);
      });
      if (!emit_states.empty()) write_text_file(emit_states, format_lset_stream(stored));
      if (!emit_witness.empty() && report.witness) write_text_file(emit_witness, format_deriv(report.witness->steps));
      out << report.table() << "\n" << report.key_values();
      if (report.witness && !verify_witness(start, report.witness->steps)) return kExitVerificationFailed;
      for (const auto& p : report.probes)
        if (p.failed > 0) {
          err << "probe " << p.id << " violated by " << p.failed << " states\n";
          return kExitVerificationFailed;
        }
      return kExitOk;
    }

    if (build->parsed()) {
      const auto steps = load_script(build_script);
      Construction c;
      try {
        c = build_from_derivation(steps);
      } catch (const PreconditionError& e) {
        throw InputError(build_script + ": " + e.what());
      }
      const auto text = format_rot(c.graph);
      if (build_out.empty()) out << text;
      else write_text_file(build_out, text);
      return kExitOk;
    }

    if (order->parsed()) {
      const auto graph = load_graph(order_graph);
      const Vertex v1 = order_v1 > 0 ? order_v1 - 1 : graph.outer().at(0);
      const Vertex v2 = order_v2 > 0 ? order_v2 - 1 : graph.outer().at(1);
      ShellingOrder shelling;
      try {
        shelling = compute_shelling_order(graph, v1, v2);
      } catch (const GraphError& e) {
        throw InputError(order_graph + ": " + e.what());
      }
      const auto check = check_shelling(graph, shelling.order);
      const auto states = replay({LSet::start(), shelling.labels});
      if (!order_script.empty()) write_text_file(order_script, format_deriv(shelling.labels));
      emit_kv(out, {{"final_state", states.back().str()},
                    {"labels", join_labels(shelling.labels)},
                    {"order", join_vertices(shelling.order)},
                    {"shelling_check", check.ok ? "pass" : "fail: " + check.reason}});
      return check.ok ? kExitOk : kExitVerificationFailed;
    }

    if (verify->parsed()) {
      const auto steps = load_script(verify_script);
      RoundtripResult result;
      try {
        result = roundtrip_check({LSet::start(Alphabet(verify_k)), steps});
      } catch (const PreconditionError& e) {
        throw InputError(verify_script + ": " + e.what());
      }
      std::map<std::string, std::string> kv{{"roundtrip", result.ok ? "pass" : "fail"},
                                            {"steps", std::to_string(steps.size())}};
      if (!result.ok) {
        kv["mismatch_prefix"] = std::to_string(*result.mismatch_prefix);
        kv["replayed"] = result.replayed->str();
        kv["colorings"] = result.from_colorings->str();
      }
      emit_kv(out, kv);
      return result.ok ? kExitOk : kExitVerificationFailed;
    }

    if (colorings->parsed()) {
      const auto graph = load_graph(color_graph);
      const Alphabet alphabet(color_k);
      const auto seed = parse_seed(color_seed, graph.vertex_count(), alphabet);
      std::uint64_t count = 0;
      try {
        enumerate_colorings(graph, seed, alphabet, [&](const Coloring& c) {
          ++count;
          if (!color_count) {
            std::string line;
            for (Letter x : c) line.push_back(Alphabet::display(x));
            out << line << "\n";
          }
          return true;
        });
      } catch (const PreconditionError& e) {
        throw InputError(color_graph + ": " + e.what());
      }
      if (color_count) out << "count=" << count << "\n";
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fourcolor::cli
