#include "cgwc/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cgwc/connectivity.hpp"
#include "cgwc/decomposition.hpp"
#include "cgwc/instance_io.hpp"
#include "cgwc/mimick.hpp"
#include "cgwc/oracle.hpp"
#include "cgwc/solver_general.hpp"

namespace cgwc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Weight parse_weight_option(const std::string& token, const std::string& name) {
  if (token == "inf") return kInfWeight;
  if (token == "auto") return RecursionConfig::kAutoConst;
  try {
    size_t pos = 0;
    long long v = std::stoll(token, &pos);
    if (pos != token.size()) throw std::runtime_error("");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("bad value for " + name + ": '" + token + "'");
  }
}

struct ConfigOptions {
  std::string config_file;
  std::string p = "", q = "", family_cap = "", bruteforce_at = "", z_cap = "";
  bool oracle_check = false;
};

RecursionConfig resolve_config(const ConfigOptions& opts) {
  RecursionConfig cfg;
  auto apply = [&](const std::string& key, const std::string& value) {
    if (key == "p")
      cfg.p_const = parse_weight_option(value, "p");
    else if (key == "q")
      cfg.q_const = parse_weight_option(value, "q");
    else if (key == "family_cap")
      cfg.family_cap = parse_weight_option(value, "family_cap");
    else if (key == "bruteforce_at")
      cfg.force_bruteforce_at = parse_weight_option(value, "bruteforce_at");
    else if (key == "z_cap")
      cfg.z_cap = parse_weight_option(value, "z_cap");
    else if (key == "oracle_check")
      cfg.oracle_check = value != "0" && value != "off" && value != "false";
    else
      throw std::runtime_error("unknown config key: " + key);
  };
  if (!opts.config_file.empty()) {
    std::istringstream in(read_file(opts.config_file));
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::string trimmed;
      for (char c : line)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
      if (trimmed.empty()) continue;
      auto eq = trimmed.find('=');
      if (eq == std::string::npos) throw std::runtime_error("bad config line: " + line);
      apply(trimmed.substr(0, eq), trimmed.substr(eq + 1));
    }
  }
  if (!opts.p.empty()) apply("p", opts.p);
  if (!opts.q.empty()) apply("q", opts.q);
  if (!opts.family_cap.empty()) apply("family_cap", opts.family_cap);
  if (!opts.bruteforce_at.empty()) apply("bruteforce_at", opts.bruteforce_at);
  if (!opts.z_cap.empty()) apply("z_cap", opts.z_cap);
  cfg.oracle_check = cfg.oracle_check || opts.oracle_check;
  return cfg;
}

std::string config_value(Weight w) {
  if (w == RecursionConfig::kAutoConst) return "auto";
  return weight_to_string(w);
}

void print_config(std::ostream& out, const RecursionConfig& cfg) {
  out << "config p " << config_value(cfg.p_const) << " q " << config_value(cfg.q_const)
      << " family_cap " << weight_to_string(cfg.family_cap) << " bruteforce_at "
      << weight_to_string(cfg.force_bruteforce_at) << " z_cap " << weight_to_string(cfg.z_cap)
      << " oracle_check " << (cfg.oracle_check ? 1 : 0) << "\n";
}

void print_solution(std::ostream& out, const WeightedGraph& g,
                    const std::optional<Solution>& solution) {
  if (!solution) {
    out << "answer NO\n";
    return;
  }
  out << "answer YES\n";
  out << "weight " << solution->total_weight << "\n";
  out << "edges " << solution->edges.size() << "\n";
  for (const Edge& e : solution->edges)
    out << "edge " << e.u << ' ' << e.v << ' ' << g.weight(e.u, e.v) << "\n";
  out << "components " << solution->components.size() << "\n";
  for (size_t i = 0; i < solution->components.size(); ++i) {
    out << "component " << i << " lambda " << weight_to_string(solution->components[i].second)
        << " vertices";
    for (int v : solution->components[i].first) out << ' ' << v;
    out << "\n";
  }
}

std::vector<int> parse_vertex_list(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  return out;
}

void print_cut(std::ostream& out, const CutResult& cut, const WeightedGraph* g = nullptr) {
  out << (is_inf(cut.weight) ? std::string("weight inf") : "weight " + std::to_string(cut.weight))
      << "\n";
  if (cut.partition) {
    out << "side_a";
    for (int v : cut.partition->first) out << ' ' << v;
    out << "\nside_b";
    for (int v : cut.partition->second) out << ' ' << v;
    out << "\n";
  }
  if (cut.edges) {
    out << "cut_edges " << cut.edges->size() << "\n";
    for (const Edge& e : *cut.edges) {
      out << "cut " << e.u << ' ' << e.v;
      if (g) out << ' ' << g->weight(e.u, e.v);
      out << "\n";
    }
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const CommandHooks& hooks) {
  CLI::App app{"Exact solver for clustering into components with prescribed edge-connectivity "
               "lower bounds"};
  app.require_subcommand(1);

  ConfigOptions opts;
  std::string file;
  bool timings = false;

  auto add_config_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_file, "key=value config file");
    cmd->add_option("--p", opts.p, "separation cut parameter (int, inf, auto)");
    cmd->add_option("--q", opts.q, "separation size threshold (int, inf, auto)");
    cmd->add_option("--family-cap", opts.family_cap, "completion family vertex cap");
    cmd->add_option("--bruteforce-at", opts.bruteforce_at, "direct-solve size threshold");
    cmd->add_option("--z-cap", opts.z_cap, "replacement boundary cap");
    cmd->add_flag("--oracle-check", opts.oracle_check, "cross-check every table entry");
  };

  auto* solve_cmd = app.add_subcommand("solve", "decide the instance (full pipeline)");
  solve_cmd->add_option("file", file, "instance file")->required();
  solve_cmd->add_flag("--timings", timings, "append wall-clock timing (non-reproducible)");
  add_config_flags(solve_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "decide by exhaustive scan");
  oracle_cmd->add_option("file", file, "instance file")->required();
  oracle_cmd->add_flag("--timings", timings, "append wall-clock timing (non-reproducible)");

  auto* mincut_cmd = app.add_subcommand("mincut", "global minimum cut of a connected instance");
  mincut_cmd->add_option("file", file, "instance file")->required();

  std::string a_list, b_list;
  auto* sep_cmd = app.add_subcommand("sep", "minimum (A,B)-separator");
  sep_cmd->add_option("file", file, "instance file")->required();
  sep_cmd->add_option("--a", a_list, "comma-separated A vertices")->required();
  sep_cmd->add_option("--b", b_list, "comma-separated B vertices")->required();

  std::string q_arg, p_arg;
  auto* goodsep_cmd = app.add_subcommand("goodsep", "good edge separation or unbreakability");
  goodsep_cmd->add_option("q", q_arg, "side size threshold")->required();
  goodsep_cmd->add_option("p", p_arg, "cut weight threshold")->required();
  goodsep_cmd->add_option("file", file, "instance file")->required();

  std::string boundary_list;
  auto* cutreduce_cmd = app.add_subcommand("cutreduce", "cut reduction of a boundaried instance");
  cutreduce_cmd->add_option("p", p_arg, "truncation threshold (int or inf)")->required();
  cutreduce_cmd->add_option("file", file, "instance file")->required();
  cutreduce_cmd->add_option("--boundary", boundary_list, "comma-separated boundary vertices")
      ->required();

  std::string r_arg, s_arg, cap_arg = "6";
  auto* family_cmd = app.add_subcommand("family", "enumerate the completion family");
  family_cmd->add_option("r", r_arg, "boundary size")->required();
  family_cmd->add_option("s", s_arg, "maximum weight")->required();
  family_cmd->add_option("--cap", cap_arg, "vertex cap");

  std::vector<std::string> selftest_args;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suites");
  selftest_cmd->add_option("args", selftest_args, "criteria selection (e.g. 1 2 9) or 'quick'");

  try {
    std::vector<std::string> argv_like = args;
    std::reverse(argv_like.begin(), argv_like.end());
    app.parse(argv_like);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    auto emit_timing = [&]() {
      if (timings) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        out << "elapsed_ms " << elapsed << "\n";
      }
    };

    if (*solve_cmd) {
      Instance inst = parse_instance(read_file(file));
      RecursionConfig cfg = resolve_config(opts);
      auto solution = solve_cgwc(inst.graph, inst.spec, inst.k, cfg);
      out << "command solve\n";
      print_solution(out, inst.graph, solution);
      print_config(out, cfg);
      emit_timing();
      return solution ? 0 : 1;
    }
    if (*oracle_cmd) {
      Instance inst = parse_instance(read_file(file));
      EdgeSet all;
      for (const auto& [e, w] : inst.graph.edges()) all.insert(e);
      auto solution = oracle_solve(inst.graph, all, inst.spec, inst.k);
      out << "command oracle\n";
      print_solution(out, inst.graph, solution);
      emit_timing();
      return solution ? 0 : 1;
    }
    if (*mincut_cmd) {
      Instance inst = parse_instance(read_file(file));
      CutResult cut = global_min_cut(inst.graph);
      out << "command mincut\n";
      out << "lambda " << weight_to_string(cut.weight) << "\n";
      if (cut.partition) {
        out << "side_a";
        for (int v : cut.partition->first) out << ' ' << v;
        out << "\nside_b";
        for (int v : cut.partition->second) out << ' ' << v;
        out << "\n";
      }
      if (cut.edges) {
        out << "cut_edges " << cut.edges->size() << "\n";
        for (const Edge& e : *cut.edges)
          out << "cut " << e.u << ' ' << e.v << ' ' << inst.graph.weight(e.u, e.v) << "\n";
      }
      return 0;
    }
    if (*sep_cmd) {
      Instance inst = parse_instance(read_file(file));
      CutResult cut = min_separator(inst.graph, parse_vertex_list(a_list), parse_vertex_list(b_list));
      out << "command sep\n";
      print_cut(out, cut, &inst.graph);
      return 0;
    }
    if (*goodsep_cmd) {
      Instance inst = parse_instance(read_file(file));
      Weight q = parse_weight_option(q_arg, "q"), p = parse_weight_option(p_arg, "p");
      SeparationVerdict verdict = find_good_separation(inst.graph, q, p);
      out << "command goodsep\n";
      if (verdict.good()) {
        out << "verdict good\n";
        out << "cut_weight " << verdict.cut_weight << "\n";
        out << "side_a";
        for (int v : verdict.side_a) out << ' ' << v;
        out << "\nside_b";
        for (int v : verdict.side_b) out << ' ' << v;
        out << "\n";
      } else {
        out << "verdict unbreakable\n";
        out << "q_out " << weight_to_string(verdict.q_out) << "\n";
        out << "p " << weight_to_string(verdict.p) << "\n";
      }
      return 0;
    }
    if (*cutreduce_cmd) {
      Instance inst = parse_instance(read_file(file));
      Weight p = parse_weight_option(p_arg, "p");
      BoundariedGraph input(inst.graph, parse_vertex_list(boundary_list));
      BoundariedGraph reduced = cut_reduce(input, p);
      out << "command cutreduce\n";
      out << "vertices " << reduced.graph.vertex_count() << "\n";
      out << "edges " << reduced.graph.edge_count() << "\n";
      out << "boundary";
      for (int v : reduced.boundary) out << ' ' << v;
      out << "\n";
      for (const auto& [e, w] : reduced.graph.edges())
        out << "edge " << e.u << ' ' << e.v << ' ' << w << "\n";
      return 0;
    }
    if (*family_cmd) {
      int r = static_cast<int>(parse_weight_option(r_arg, "r"));
      Weight s = parse_weight_option(s_arg, "s");
      Weight cap = parse_weight_option(cap_arg, "cap");
      auto family = enumerate_family(r, s, cap);
      out << "command family\n";
      out << "r " << r << "\n";
      out << "s " << weight_to_string(s) << "\n";
      out << "members " << family.size() << "\n";
      for (size_t i = 0; i < family.size(); ++i) {
        out << "member " << i << " vertices " << family[i].graph.vertex_count() << " edges "
            << family[i].graph.edge_count() << "\n";
        for (const auto& [e, w] : family[i].graph.edges())
          out << "member " << i << " edge " << e.u << ' ' << e.v << ' ' << w << "\n";
      }
      return 0;
    }
    if (*selftest_cmd) {
      if (!hooks.selftest) {
        err << "error: selftest is not available in this build\n";
        return 2;
      }
      return hooks.selftest(selftest_args, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const FamilyCapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap or shrink r/s)\n";
    return 2;
  } catch (const OracleBudgetExceeded& e) {
    err << "error: " << e.what() << " (instance too large for the exhaustive scan)\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace cgwc
