// Copyright 2026 The dualswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualswitch/cli.hpp"

#include "dualswitch/odd.hpp"
#include "dualswitch/serialize.hpp"
#include "dualswitch/switching.hpp"
#include "dualswitch/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace dualswitch::cli {

namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

Format effective_format(const RunConfig& config) {
  if (config.format) return *config.format;
  const bool builds = config.command == Command::star_build || config.command == Command::odd_build;
  return builds ? Format::graph6 : Format::json;
}

// Writes the primary output to --out or stdout. Graph6 output to a file gets a
// "<path>.labels" sidecar mapping vertex index to label.
void emit(const RunConfig& config, std::ostream& out, const std::string& text, const Graph* labelled = nullptr) {
  if (!config.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + *config.output_path + " for writing");
  file << text;
  if (labelled != nullptr && labelled->has_labels()) {
    std::ofstream sidecar(*config.output_path + ".labels", std::ios::binary);
    if (!sidecar) throw std::runtime_error("cannot open " + *config.output_path + ".labels for writing");
    for (Vertex v = 0; v < labelled->order(); ++v) sidecar << v << '\t' << labelled->label(v) << '\n';
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string verdict_text(const IntegralityVerdict& v) {
  if (v.integral) return format_spectrum(*v.spectrum);
  return "not integral (deficiency " + std::to_string(*v.deficiency) + ")";
}

Json graph_summary(const Graph& g) {
  return {{"order", g.order()},
          {"edges", g.edge_count()},
          {"degree", to_json(degree_profile(g))},
          {"bipartite", bipartition(g).has_value()},
          {"connected", is_connected(g)}};
}

int emit_build(const RunConfig& config, std::ostream& out, Json header, const Graph& g) {
  const Format format = effective_format(config);
  if (format == Format::graph6) {
    emit(config, out, encode_graph6(g) + "\n", &g);
    return kExitOk;
  }
  const Json summary = graph_summary(g);
  if (format == Format::json) {
    header.update(summary);
    header["graph6"] = encode_graph6(g);
    emit(config, out, dump(header));
    return kExitOk;
  }
  std::ostringstream text;
  text << "vertices " << g.order() << ", edges " << g.edge_count() << ", degree "
       << summary["degree"]["min"].get<std::size_t>() << ".." << summary["degree"]["max"].get<std::size_t>()
       << ", bipartite " << yes_no(summary["bipartite"]) << ", connected " << yes_no(summary["connected"]) << "\n";
  emit(config, out, text.str());
  return kExitOk;
}

std::string switch_report_text(const SwitchReport& r, const Graph& g) {
  std::string text = "switch: involution " + yes_no(r.is_involution) + ", automorphism " + yes_no(r.is_automorphism) +
                     ", swaps only non-adjacent " + yes_no(r.swaps_only_nonadjacent);
  if (r.violating_pair) text += " (adjacent pair " + g.label(r.violating_pair->first) + " / " + g.label(r.violating_pair->second) + ")";
  return text + "\n";
}

int run_star_switch(const RunConfig& config, std::ostream& out) {
  const SwitchPair pair(config.n, parse_cycles(config.pi_l, config.n), parse_cycles(config.pi_r, config.n));
  const PairReport conditions = check_switch_pair(pair, config.side);
  const Graph g = build_star(config.n, config.side);
  const VertexMap f = pair_to_vertex_map(pair);
  const SwitchReport report = validate_switch_involution(g, f);
  const Format format = effective_format(config);

  Json j = {{"command", "star-switch"},
            {"pair", to_json(pair)},
            {"side", to_string(config.side)},
            {"pair_report", to_json(conditions)},
            {"switch_report", to_json(report, g)}};
  std::ostringstream text;
  text << "pair " << format_cycles(pair.pi_l) << " " << format_cycles(pair.pi_r) << " on Sym_" << pair.n << " ("
       << to_string(config.side) << ")\n"
       << "conditions: order 2 " << yes_no(conditions.cond_order2) << ", parity " << yes_no(conditions.cond_parity)
       << ", normalises " << yes_no(conditions.cond_normalizes) << ", non-conjugate "
       << yes_no(conditions.cond_nonconjugate) << "\n"
       << switch_report_text(report, g);

  const auto finish = [&](bool passed, const Graph* switched) {
    j["passed"] = passed;
    if (format == Format::json) {
      emit(config, out, dump(j));
    } else if (format == Format::graph6 && switched != nullptr) {
      emit(config, out, encode_graph6(*switched) + "\n", switched);
    } else {
      text << (passed ? "PASS\n" : "FAIL\n");
      emit(config, out, text.str());
    }
    return passed ? kExitOk : kExitVerificationFailed;
  };

  if (!conditions.overall || !report.valid()) return finish(false, nullptr);

  const Graph switched = dual_seidel_switch(g, f);
  const bool square = square_identity_check(g, switched);
  j["order"] = switched.order();
  j["degree"] = to_json(degree_profile(switched));
  j["square_identity"] = square;
  text << "square identity " << yes_no(square) << "\n";
  StarSplitReport split;
  try {
    split = split_star_switch(switched, f, *bipartition(g));
  } catch (const std::logic_error& e) {
    j["error"] = e.what();
    text << e.what() << "\n";
    return finish(false, &switched);
  }

  const SymmetricGroup group(config.n);
  Json comps = Json::array();
  bool integral = true;
  for (const Component& c : split.components) {
    Json item = {{"size", c.vertices.size()}, {"part", to_string(parity(group[c.vertices.front()]))}};
    text << "component (" << item["part"].get<std::string>() << "), " << c.vertices.size() << " vertices";
    // Components of the Sym_7 switch have 2520 vertices; their spectra are out of desk range.
    if (config.n <= 6) {
      const IntegralityVerdict v = integer_spectrum(c.graph);
      integral = integral && v.integral;
      item["spectrum"] = to_json(v, c.graph.order());
      text << ": " << verdict_text(v);
    } else {
      item["spectrum"] = nullptr;
    }
    text << "\n";
    comps.push_back(item);
  }
  j["components"] = comps;
  j["parts_match"] = split.parts_match;
  j["isomorphic"] = split.isomorphic;
  text << "components isomorphic under the switching map " << yes_no(split.isomorphic) << "\n";
  return finish(square && split.parts_match && split.isomorphic && integral, &switched);
}

int run_odd_switch(const RunConfig& config, std::ostream& out) {
  const Graph g = build_odd(config.m);
  const VertexMap f = tau_map(config.m, config.t);
  const SwitchReport report = validate_switch_involution(g, f);
  const Format format = effective_format(config);

  Json j = {{"command", "odd-switch"}, {"m", config.m}, {"t", config.t}, {"switch_report", to_json(report, g)}};
  std::ostringstream text;
  text << "O_" << config.m + 1 << " switched by tau_" << config.t << "\n" << switch_report_text(report, g);

  const auto finish = [&](bool passed, const Graph* switched) {
    j["passed"] = passed;
    if (format == Format::json) {
      emit(config, out, dump(j));
    } else if (format == Format::graph6 && switched != nullptr) {
      emit(config, out, encode_graph6(*switched) + "\n", switched);
    } else {
      text << (passed ? "PASS\n" : "FAIL\n");
      emit(config, out, text.str());
    }
    return passed ? kExitOk : kExitVerificationFailed;
  };
  if (!report.valid()) return finish(false, nullptr);

  const Graph switched = dual_seidel_switch(g, f);
  const bool square = square_identity_check(g, switched);
  const IntegralityVerdict v = integer_spectrum(switched);
  const Spectrum predicted = predicted_switch_spectrum(config.m, config.t);
  const bool matches = v.integral && *v.spectrum == predicted;
  const bool connected = is_connected(switched);
  j.update(graph_summary(switched));
  j["square_identity"] = square;
  j["spectrum"] = to_json(v, switched.order());
  j["predicted"] = to_json(predicted);
  j["matches_prediction"] = matches;
  text << "vertices " << switched.order() << ", connected " << yes_no(connected) << ", square identity "
       << yes_no(square) << "\n"
       << "spectrum " << verdict_text(v) << "\n"
       << "predicted " << format_spectrum(predicted) << " (" << (matches ? "match" : "MISMATCH") << ")\n";
  return finish(square && matches, &switched);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  std::string content = buffer.str();
  while (!content.empty() && std::isspace(static_cast<unsigned char>(content.back()))) content.pop_back();
  // graph6 is a single token; the edge-list header already contains a space.
  if (content.find_first_of(" \t\n") == std::string::npos) return decode_graph6(content);
  std::istringstream in(content);
  return read_edge_list(in);
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
  Graph g;
  try {
    g = read_graph_file(config.input_path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(config.input_path + ": " + e.what());
  }
  const IntegralityVerdict v = integer_spectrum(g);
  if (effective_format(config) == Format::json) {
    emit(config, out, dump(to_json(v, g.order())));
  } else {
    emit(config, out, verdict_text(v) + "\n");
  }
  return kExitOk;
}

int run_predict(const RunConfig& config, std::ostream& out) {
  const Spectrum s = predicted_switch_spectrum(config.m, config.t);
  if (effective_format(config) == Format::json) {
    emit(config, out, dump(Json{{"command", "predict-odd"}, {"m", config.m}, {"t", config.t}, {"spectrum", to_json(s)}}));
  } else {
    emit(config, out, format_spectrum(s) + "\n");
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const auto results = run_reproduction_checks();
  Json j = to_json(results);
  if (effective_format(config) == Format::json) {
    Json wrapped = {{"command", "verify-paper"}};
    wrapped.update(j);
    emit(config, out, dump(wrapped));
  } else {
    std::ostringstream text;
    for (const CheckResult& r : results) text << (r.passed ? "PASS " : "FAIL ") << r.id << ". " << r.title << "\n";
    emit(config, out, text.str());
  }
  return j["passed"].get<bool>() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

void validate(const RunConfig& c) {
  const Format format = effective_format(c);
  const bool graph_output = c.command == Command::star_build || c.command == Command::odd_build ||
                            c.command == Command::star_switch || c.command == Command::odd_switch;
  require(format != Format::graph6 || graph_output, "--format graph6 applies only to commands that build a graph");
  switch (c.command) {
    case Command::star_build:
      require(c.n >= 3 && c.n <= 7, "--n must satisfy 3 <= n <= 7");
      break;
    case Command::star_switch:
      require(c.n >= 3 && c.n <= 7, "--n must satisfy 3 <= n <= 7");
      try {
        parse_cycles(c.pi_l, c.n);
        parse_cycles(c.pi_r, c.n);
      } catch (const CycleParseError& e) {
        throw UsageError(std::string("bad permutation: ") + e.what());
      }
      break;
    case Command::star_search:
      require(c.n >= 3 && c.n <= 6, "--n must satisfy 3 <= n <= 6");
      break;
    case Command::odd_build:
      require(c.m >= 1 && c.m <= kMaxOddGraphM, "--m must satisfy 1 <= m <= 5");
      break;
    case Command::odd_switch:
      require(c.m >= 1 && c.m <= kMaxOddGraphM, "--m must satisfy 1 <= m <= 5");
      require(c.t >= 1 && c.t <= c.m, "--t must satisfy 1 <= t <= m");
      break;
    case Command::predict_odd:
      require(c.m >= 2 && c.m <= kMaxPredictionM, "--m must satisfy 2 <= m <= 6");
      require(c.t >= 1 && c.t <= c.m - 1, "--t must satisfy 1 <= t <= m - 1");
      break;
    case Command::spectrum:
      require(!c.input_path.empty(), "spectrum needs an input file");
      break;
    case Command::verify_paper:
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::star_build:
        return emit_build(config, out, {{"command", "star-build"}, {"n", config.n}, {"side", to_string(config.side)}},
                          build_star(config.n, config.side));
      case Command::odd_build:
        return emit_build(config, out, {{"command", "odd-build"}, {"m", config.m}}, build_odd(config.m));
      case Command::star_switch:
        return run_star_switch(config, out);
      case Command::star_search: {
        const auto pairs = search_switch_pairs(config.n);
        if (effective_format(config) == Format::json) {
          Json list = Json::array();
          for (const SwitchPair& p : pairs) list.push_back(to_json(p));
          emit(config, out, dump(Json{{"command", "star-search"}, {"n", config.n}, {"count", pairs.size()}, {"pairs", list}}));
        } else {
          std::string text;
          for (const SwitchPair& p : pairs) text += format_cycles(p.pi_l) + " " + format_cycles(p.pi_r) + "\n";
          emit(config, out, text);
        }
        return kExitOk;
      }
      case Command::odd_switch:
        return run_odd_switch(config, out);
      case Command::spectrum:
        return run_spectrum(config, out);
      case Command::predict_odd:
        return run_predict(config, out);
      case Command::verify_paper:
        return run_verify(config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitInvalidArguments;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual Seidel switching of Star and Odd graphs with exact integer spectra", "dualswitch"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format;
  std::string side = "left";
  std::string output;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "graph6"}));
    sub->add_option("--out", output, "Write output to this file instead of stdout");
  };
  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"star-build", "Build the Star graph on Sym_n", Command::star_build},
      {"star-switch", "Switch the Star graph by x -> pi_l x pi_r and analyse the result", Command::star_switch},
      {"star-search", "List every switching pair passing the four conditions", Command::star_search},
      {"odd-build", "Build the Odd graph O_{m+1}", Command::odd_build},
      {"odd-switch", "Switch O_{m+1} by the involution induced from tau_t", Command::odd_switch},
      {"spectrum", "Exact integer spectrum of a graph6 or edge-list file", Command::spectrum},
      {"predict-odd", "Predicted spectrum of the switched Odd graph", Command::predict_odd},
      {"verify-paper", "Run every reproduction check", Command::verify_paper},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    const Command command = e.command;
    sub->callback([&config, command] { config.command = command; });
    switch (command) {
      case Command::star_build:
      case Command::star_switch:
      case Command::star_search:
        sub->add_option("--n", config.n, "Degree of the symmetric group")->required(command != Command::star_switch);
        if (command != Command::star_search) sub->add_option("--side", side, "left or right Cayley graph")->check(CLI::IsMember({"left", "right"}));
        if (command == Command::star_switch) {
          sub->add_option("--pi-l", config.pi_l, "Left multiplier in cycle notation");
          sub->add_option("--pi-r", config.pi_r, "Right multiplier in cycle notation");
        }
        break;
      case Command::odd_build:
        sub->add_option("--m", config.m, "Subset size (O_{m+1} on a (2m+1)-set)")->required();
        break;
      case Command::odd_switch:
      case Command::predict_odd:
        sub->add_option("--m", config.m, "Subset size")->required();
        sub->add_option("--t", config.t, "Number of transpositions in tau_t")->required();
        break;
      case Command::spectrum:
        sub->add_option("file", config.input_path, "graph6 or edge-list file")->required();
        break;
      case Command::verify_paper:
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  }
  if (!format.empty()) config.format = format == "json" ? Format::json : format == "text" ? Format::text : Format::graph6;
  if (!output.empty()) config.output_path = output;
  config.side = parse_side(side);
  return run(config, out, err);
}

}  // namespace dualswitch::cli
