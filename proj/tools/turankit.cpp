// turankit: command-line front end for the rooted-graph toolkit.
//
// Verbs: construct, transform, check, realise, embed, ex, fit.
// Graphs travel as canonical JSON on stdin/stdout so verbs compose in pipes:
//   turankit construct D 4 3 | turankit check rho
// Exit codes: 0 success / property holds, 1 property fails (witness printed),
// 2 usage or validation error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/turan.hpp"

namespace {

using turan::json;

int to_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw turan::Error(turan::ErrorKind::bad_parameters,
                       std::string(what) + ": '" + s + "' is not an integer");
  }
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

turan::RootedGraph read_graph(const std::string& path) {
  if (path.empty() || path == "-") return turan::graph_from_json_text(read_stream(std::cin));
  std::ifstream f(path);
  if (!f)
    throw turan::Error(turan::ErrorKind::bad_parameters, "cannot open '" + path + "'");
  return turan::graph_from_json_text(read_stream(f));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f)
    throw turan::Error(turan::ErrorKind::bad_parameters, "cannot open '" + out_path + "'");
  f << text << "\n";
}

std::string graph_summary(const std::string& name, const turan::RootedGraph& g) {
  std::string s = name + ": n=" + std::to_string(g.n) +
                  ", edges=" + std::to_string(g.edge_count()) +
                  ", roots=" + std::to_string(g.roots.size());
  if (static_cast<int>(g.roots.size()) < g.n) s += ", rho=" + turan::rho(g).str();
  return s;
}

struct Options {
  bool summary = false;
  std::string input;
  std::string output;
  long long node_budget = 10'000'000;
  long long time_ms = 60'000;
  std::uint64_t seed = 0;

  turan::SearchBudget budget() const { return {node_budget, time_ms, seed}; }
};

int run_construct(const std::vector<std::string>& args, const Options& opt) {
  if (args.empty())
    throw turan::Error(turan::ErrorKind::bad_parameters,
                       "construct needs a family: star k | path m | cycle k | "
                       "complete_bipartite s t | T a b | D t s | H t s | theta m ell");
  const std::string& fam = args[0];
  auto need = [&](size_t k) {
    if (args.size() != k + 1)
      throw turan::Error(turan::ErrorKind::bad_parameters,
                         fam + " takes " + std::to_string(k) + " parameter(s)");
  };
  turan::RootedGraph g;
  std::string name;
  if (fam == "star") {
    need(1);
    g = turan::construct_star(to_int(args[1], "k"));
    name = "star(" + args[1] + ")";
  } else if (fam == "path") {
    need(1);
    g = turan::construct_path(to_int(args[1], "m"));
    name = "path(" + args[1] + ")";
  } else if (fam == "cycle") {
    need(1);
    g = turan::construct_cycle(to_int(args[1], "k"));
    name = "cycle(" + args[1] + ")";
  } else if (fam == "complete_bipartite") {
    need(2);
    g = turan::construct_complete_bipartite(to_int(args[1], "s"), to_int(args[2], "t"));
    name = "complete_bipartite(" + args[1] + "," + args[2] + ")";
  } else if (fam == "T") {
    need(2);
    g = turan::construct_T(to_int(args[1], "a"), to_int(args[2], "b"));
    name = "T(" + args[1] + "," + args[2] + ")";
  } else if (fam == "D") {
    need(2);
    g = turan::construct_D(to_int(args[1], "t"), to_int(args[2], "s"));
    name = "D(" + args[1] + "," + args[2] + ")";
  } else if (fam == "H") {
    need(2);
    g = turan::construct_H(to_int(args[1], "t"), to_int(args[2], "s"));
    name = "H(" + args[1] + "," + args[2] + ")";
  } else if (fam == "theta") {
    need(2);
    g = turan::construct_theta(to_int(args[1], "m"), to_int(args[2], "ell"));
    name = "theta(" + args[1] + "," + args[2] + ")";
  } else {
    throw turan::Error(turan::ErrorKind::bad_parameters, "unknown family '" + fam + "'");
  }
  emit(opt.summary ? graph_summary(name, g) : turan::graph_to_json(g).dump(), opt.output);
  return 0;
}

int run_transform(const std::vector<std::string>& args, bool star, const Options& opt) {
  if (args.empty())
    throw turan::Error(turan::ErrorKind::bad_parameters,
                       "transform needs an op: blowup ell | subdivide | densify t "
                       "[--star] | identify u v");
  turan::RootedGraph g = read_graph(opt.input);
  const std::string& op = args[0];
  turan::RootedGraph out;
  std::string name;
  if (op == "blowup") {
    if (args.size() != 2)
      throw turan::Error(turan::ErrorKind::bad_parameters, "blowup takes ell");
    out = turan::blow_up(g, to_int(args[1], "ell"));
    name = "blowup(" + args[1] + ")";
  } else if (op == "subdivide") {
    if (args.size() != 1)
      throw turan::Error(turan::ErrorKind::bad_parameters, "subdivide takes no parameters");
    out = turan::subdivide(g);
    name = "subdivide";
  } else if (op == "densify") {
    if (args.size() != 2)
      throw turan::Error(turan::ErrorKind::bad_parameters, "densify takes t");
    out = turan::densify(g, to_int(args[1], "t"), star);
    name = star ? "densify*(" + args[1] + ")" : "densify(" + args[1] + ")";
  } else if (op == "identify") {
    if (args.size() != 3)
      throw turan::Error(turan::ErrorKind::bad_parameters, "identify takes u v");
    out = turan::identify(g, to_int(args[1], "u"), to_int(args[2], "v"));
    name = "identify(" + args[1] + "," + args[2] + ")";
  } else {
    throw turan::Error(turan::ErrorKind::bad_parameters, "unknown transform '" + op + "'");
  }
  emit(opt.summary ? graph_summary(name, out) : turan::graph_to_json(out).dump(),
       opt.output);
  return 0;
}

int run_check(const std::string& prop, int budget_vertices, const Options& opt) {
  turan::RootedGraph g = read_graph(opt.input);
  if (prop == "rho") {
    emit(turan::rho(g).str(), opt.output);
    return 0;
  }
  if (prop == "bipartite") {
    bool ok = turan::is_bipartite(g);
    json j;
    j["bipartite"] = ok;
    emit(opt.summary ? std::string(ok ? "bipartite" : "not bipartite") : j.dump(),
         opt.output);
    return ok ? 0 : 1;
  }
  if (prop == "balanced") {
    auto rep = turan::is_balanced(g, budget_vertices);
    json j;
    j["balanced"] = rep.balanced;
    j["rho"] = turan::rho(g).str();
    std::string summary;
    if (rep.balanced) {
      summary = "balanced (rho=" + turan::rho(g).str() + ")";
    } else {
      j["witness"] = json::object();
      j["witness"]["set"] = rep.witness->first;
      j["witness"]["rho"] = rep.witness->second.str();
      summary = "unbalanced: rho(S)=" + rep.witness->second.str() + " < rho=" +
                turan::rho(g).str();
    }
    emit(opt.summary ? summary : j.dump(), opt.output);
    return rep.balanced ? 0 : 1;
  }
  throw turan::Error(turan::ErrorKind::bad_parameters,
                     "unknown check '" + prop + "' (balanced | bipartite | rho)");
}

int run_realise(const std::string& fraction, const std::string& mode, const Options& opt) {
  turan::Rational r = turan::parse_rational(fraction);
  long long a = r.num, b = r.den;
  if (mode == "thm48" || mode == "modm1") {
    turan::ConstructionChain chain =
        mode == "thm48" ? turan::realise(a, b) : turan::realise_mod1_chain(a, b);
    if (opt.summary) {
      std::string steps;
      for (const auto& st : chain.steps) {
        if (!steps.empty()) steps += " -> ";
        switch (st.kind) {
          case turan::ConstructionStep::Kind::base:
            steps += (st.base_family == turan::ConstructionStep::BaseFamily::star
                          ? "base star("
                          : "base path(") +
                     std::to_string(st.base_k) + ")";
            break;
          case turan::ConstructionStep::Kind::densify:
            steps += "densify";
            break;
          case turan::ConstructionStep::Kind::subdivide:
            steps += "subdivide";
            break;
        }
      }
      std::string status =
          mode == "thm48"
              ? "exponent proven as lower bound; matching upper bound conjectural"
              : "realisable exponent";
      emit("2 - " + fraction + " = " + chain.exponent().str() + " via " + steps +
               "; rho = " + chain.density().str() + "; " + status,
           opt.output);
    } else {
      emit(turan::chain_to_json(chain).dump(), opt.output);
    }
    return 0;
  }
  if (mode == "d-family") {
    turan::RootedGraph g = turan::realise_D(a, b);
    turan::Rational exponent = turan::exponent_of(g);
    if (opt.summary) {
      emit("2 - " + fraction + " = " + exponent.str() + " via the D family; rho = " +
               turan::rho(g).str() + "; realisable exponent",
           opt.output);
    } else {
      json j;
      j["exponent"] = exponent.str();
      j["graph"] = turan::graph_to_json(g);
      emit(j.dump(), opt.output);
    }
    return 0;
  }
  throw turan::Error(turan::ErrorKind::bad_parameters,
                     "unknown mode '" + mode + "' (thm48 | modm1 | d-family)");
}

int run_embed(const std::string& host_path, const std::string& pattern_path,
              const Options& opt) {
  if (host_path == "-" && pattern_path == "-")
    throw turan::Error(turan::ErrorKind::bad_parameters,
                       "host and pattern cannot both come from stdin");
  turan::RootedGraph host_g = read_graph(host_path);
  turan::RootedGraph pattern = read_graph(pattern_path);
  turan::HostGraph host(host_g);
  auto emb = turan::find_subgraph(host, pattern, opt.budget());
  if (!emb) {
    emit(opt.summary ? "no embedding (exhaustive search)"
                     : json{{"found", false}}.dump(),
         opt.output);
    return 1;
  }
  if (opt.summary) {
    std::string s = "embedding found:";
    for (size_t v = 0; v < emb->map.size(); ++v)
      s += " " + std::to_string(v) + "->" + std::to_string(emb->map[v]);
    emit(s, opt.output);
  } else {
    emit(turan::embedding_to_json(*emb).dump(), opt.output);
  }
  return 0;
}

int run_ex(int n, const std::string& pattern_path, const Options& opt) {
  turan::RootedGraph pattern = read_graph(pattern_path);
  turan::ExtremalResult r = turan::extremal_number(n, pattern, opt.budget());
  if (opt.summary) {
    std::string s = r.certified
                        ? "ex(" + std::to_string(n) + ", F) = " + std::to_string(r.max_edges)
                        : "ex(" + std::to_string(n) + ", F) >= " + std::to_string(r.max_edges) +
                              " (lower bound only: search truncated)";
    emit(s, opt.output);
  } else {
    emit(turan::result_to_json(r).dump(), opt.output);
  }
  return r.certified ? 0 : 3;
}

std::vector<int> parse_n_range(const std::string& text) {
  std::vector<int> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int lo = to_int(text.substr(0, dots), "n range");
    int hi = to_int(text.substr(dots + 2), "n range");
    if (lo > hi)
      throw turan::Error(turan::ErrorKind::bad_parameters, "empty n range " + text);
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item, "n list"));
  return out;
}

int run_fit(const std::string& n_range, const std::string& pattern_path,
            const Options& opt) {
  turan::RootedGraph pattern = read_graph(pattern_path);
  turan::FitResult fit = turan::exponent_fit(pattern, parse_n_range(n_range), opt.budget());
  if (opt.summary) {
    std::ostringstream ss;
    ss << "slope " << fit.slope << " over n=" << n_range << " -- " << fit.note;
    emit(ss.str(), opt.output);
  } else {
    emit(turan::fit_to_json(fit).dump(), opt.output);
  }
  for (const auto& p : fit.points)
    if (!p.certified) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rooted-graph toolkit: exact densities, realisation chains, "
               "embedding search and brute-force extremal numbers"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --summary after the subcommand

  Options opt;
  app.add_flag("--summary", opt.summary, "one-line human summary instead of JSON");

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "graph JSON file ('-' or absent: stdin)");
    cmd->add_option("--output", opt.output, "output file (absent: stdout)");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", opt.node_budget, "search node limit");
    cmd->add_option("--time", opt.time_ms, "search time limit (ms)");
    cmd->add_option("--seed", opt.seed, "search seed");
  };

  std::vector<std::string> construct_args;
  auto* c_construct = app.add_subcommand("construct", "build a named family graph");
  c_construct->add_option("args", construct_args, "family and parameters");
  c_construct->add_option("--output", opt.output, "output file");

  std::vector<std::string> transform_args;
  bool star_flag = false;
  auto* c_transform = app.add_subcommand("transform", "apply a graph operator");
  c_transform->add_option("args", transform_args, "op and parameters");
  c_transform->add_flag("--star", star_flag, "starred densification");
  add_io(c_transform);

  std::string check_prop;
  int budget_vertices = 24;
  auto* c_check = app.add_subcommand("check", "test a graph property");
  c_check->add_option("property", check_prop, "balanced | bipartite | rho")->required();
  c_check->add_option("--budget-vertices", budget_vertices,
                      "non-root cap for the balancedness enumeration");
  add_io(c_check);

  std::string fraction, mode = "thm48";
  auto* c_realise = app.add_subcommand("realise", "realise the exponent 2 - a/b");
  c_realise->add_option("fraction", fraction, "a/b with a < b")->required();
  c_realise->add_option("--mode", mode, "thm48 | modm1 | d-family");
  c_realise->add_option("--output", opt.output, "output file");

  std::string host_path, pattern_path;
  auto* c_embed = app.add_subcommand("embed", "search for a pattern in a host");
  c_embed->add_option("--host", host_path, "host graph JSON")->required();
  c_embed->add_option("--pattern", pattern_path, "pattern graph JSON")->required();
  c_embed->add_option("--output", opt.output, "output file");
  add_budget(c_embed);

  int ex_n = 0;
  std::string ex_pattern;
  auto* c_ex = app.add_subcommand("ex", "exact extremal number at desk scale");
  c_ex->add_option("n", ex_n, "number of vertices")->required();
  c_ex->add_option("--pattern", ex_pattern, "forbidden pattern JSON")->required();
  c_ex->add_option("--output", opt.output, "output file");
  add_budget(c_ex);

  std::string fit_pattern, fit_range;
  auto* c_fit = app.add_subcommand("fit", "log-log slope of ex(n,F) (diagnostic)");
  c_fit->add_option("--pattern", fit_pattern, "forbidden pattern JSON")->required();
  c_fit->add_option("--n", fit_range, "range a..b or comma list")->required();
  c_fit->add_option("--output", opt.output, "output file");
  add_budget(c_fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << turan::json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*c_construct) return run_construct(construct_args, opt);
    if (*c_transform) return run_transform(transform_args, star_flag, opt);
    if (*c_check) return run_check(check_prop, budget_vertices, opt);
    if (*c_realise) return run_realise(fraction, mode, opt);
    if (*c_embed) return run_embed(host_path, pattern_path, opt);
    if (*c_ex) return run_ex(ex_n, ex_pattern, opt);
    if (*c_fit) return run_fit(fit_range, fit_pattern, opt);
  } catch (const turan::Error& e) {
    turan::json err;
    err["error"] = to_string(e.kind());
    err["message"] = e.what();
    if (!e.witness().empty()) err["set"] = e.witness();
    std::cerr << err.dump() << "\n";
    return e.kind() == turan::ErrorKind::budget_exceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << turan::json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
