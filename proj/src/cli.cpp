#include "mpd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <variant>

#include "mpd/batch.hpp"
#include "mpd/io.hpp"
#include "mpd/solver.hpp"
#include "mpd/verify.hpp"

namespace mpd::cli {

namespace {

struct NotCograph {
  P4Witness witness;
};

void print_p4(std::ostream& out, const P4Witness& w) {
  out << "p4 " << w.path[0] << ' ' << w.path[1] << ' ' << w.path[2] << ' ' << w.path[3] << '\n';
}

void print_isolated(std::ostream& out, const std::vector<Vertex>& isolated) {
  out << "isolated";
  for (Vertex v : isolated) out << ' ' << v;
  out << '\n';
}

RestrictedSet load_restricted(const RunConfig& cfg, Vertex universe) {
  if (cfg.restricted.empty()) return RestrictedSet(universe);
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.restricted, ec))
    return parse_restricted(read_file(cfg.restricted), universe);
  return parse_restricted(cfg.restricted, universe);
}

Cotree load_cotree(const RunConfig& cfg) {
  return parse_cotree(read_file(cfg.cotree_path));
}

Graph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_path.empty()) return parse_graph(read_file(cfg.graph_path));
  if (!cfg.cotree_path.empty()) return materialize(load_cotree(cfg), cfg.edge_cap);
  throw InputError("need --graph or --cotree");
}

// Cotree for solving: parsed directly, or recognized from a graph file.
std::variant<Cotree, NotCograph> load_tree(const RunConfig& cfg) {
  if (!cfg.graph_path.empty() && !cfg.cotree_path.empty())
    throw InputError("give exactly one of --graph and --cotree");
  if (!cfg.cotree_path.empty()) return load_cotree(cfg);
  if (cfg.graph_path.empty()) throw InputError("need --graph or --cotree");
  Recognition rec = recognize(parse_graph(read_file(cfg.graph_path)));
  if (auto* w = std::get_if<P4Witness>(&rec)) return NotCograph{*w};
  return std::get<Cotree>(std::move(rec));
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty())
    out << text;
  else
    write_file(cfg.output, text);
}

template <typename Body>
int guarded(std::ostream& out, std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NoSolutionError& e) {
    print_isolated(out, e.isolated());
    err << "error: " << e.what() << '\n';
    return kNoSolution;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

std::int64_t median(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    auto loaded = load_tree(cfg);
    if (auto* bad = std::get_if<NotCograph>(&loaded)) {
      print_p4(out, bad->witness);
      err << "error: graph is not a cograph\n";
      return int(kNotCograph);
    }
    const Cotree& tree = std::get<Cotree>(loaded);
    const RestrictedSet r = load_restricted(cfg, tree.leaf_count());
    emit(cfg, out, format_solution(solve(tree, r)));
    return int(kOk);
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    if (cfg.solution_path.empty()) throw InputError("need --solution");
    const Graph g = load_graph(cfg);
    const RestrictedSet r = load_restricted(cfg, g.vertex_count());
    const SolutionFile stated = parse_solution(read_file(cfg.solution_path));
    const auto edges = stated.edge_list();
    VerificationReport rep = verify_solution(g, r, edges);

    bool stats_ok = true;
    if (rep.is_matching) {
      if (stated.k != rep.k || stated.s != rep.s || stated.f != rep.f ||
          stated.beta != rep.matched_number) {
        stats_ok = false;
        rep.reasons.push_back("stats-mismatch");
      }
      for (const PairedEdge& p : stated.pairs) {
        if (classify_edge(p.u, p.v, r) != p.cls) {
          stats_ok = false;
          rep.reasons.push_back("class-mismatch " + std::to_string(p.u) + " " + std::to_string(p.v));
        }
      }
    }

    std::ostringstream text;
    text << "valid " << (rep.valid ? "yes" : "no") << '\n';
    text << "matching " << (rep.is_matching ? "yes" : "no") << '\n';
    text << "dominating " << (rep.is_dominating ? "yes" : "no") << '\n';
    text << "kfs " << rep.k << ' ' << rep.s << ' ' << rep.f << '\n';
    text << "beta " << rep.matched_number << '\n';
    text << "certificate " << to_string(rep.certificate) << '\n';
    for (const auto& reason : rep.reasons) text << "reason " << reason << '\n';
    emit(cfg, out, text.str());
    return int(rep.valid && stats_ok ? kOk : kVerifyFailed);
  });
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    const Graph g = load_graph(cfg);
    const OracleOptions opts{cfg.oracle_cap, cfg.reference_oracle};
    std::ostringstream text;
    if (cfg.gamma_p) {
      text << "gamma_p " << oracle_paired_domination_number(g, opts) << '\n';
    } else {
      const RestrictedSet r = load_restricted(cfg, g.vertex_count());
      const OracleResult res = oracle_canonical(g, r, opts);
      std::string sol = format_solution(res.witness);
      sol = sol.substr(sol.find('\n') + 1);  // beta line replaced below
      text << "beta " << res.beta << " fmin " << res.f_min << '\n' << sol;
      text << "# explored " << res.count_explored << '\n';
    }
    emit(cfg, out, text.str());
    return int(kOk);
  });
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    if (cfg.n < 1) throw InputError("-n must be at least 1");
    const Instance inst = make_instance({cfg.n, cfg.join_bias, cfg.density, cfg.seed});
    const std::string tree = serialize_cotree(inst.tree) + "\n";
    const std::string restricted = format_restricted(inst.restricted);
    if (cfg.output.empty()) {
      out << tree << restricted;
    } else {
      write_file(cfg.output + ".cotree", tree);
      write_file(cfg.output + ".restricted", restricted);
    }
    return int(kOk);
  });
}

BenchReport run_bench(const std::vector<Vertex>& sizes, int repeats, std::uint64_t seed,
                      double join_bias, double density) {
  if (repeats < 1) throw InputError("--repeats must be at least 1");
  std::vector<InstanceSpec> specs;
  for (Vertex n : sizes) {
    if (n < 2) throw InputError("bench sizes must be at least 2");
    specs.push_back({n, join_bias, density, seed, true});
  }
  // Generation may run concurrently; timing never does.
  const std::vector<Instance> instances = make_instances(specs, Execution::Parallel);

  BenchReport report;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    std::vector<std::int64_t> times;
    for (int rep = 0; rep < repeats; ++rep) {
      BenchSample sample{specs[i].n, seed, 0, 0, 0};
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const MPDSolution sol = solve(inst.tree, inst.restricted);
        sample.pairs = static_cast<std::int64_t>(sol.pairs.size());
        sample.beta = sol.matched_number;
      } catch (const NoSolutionError&) {
        sample.pairs = -1;
        sample.beta = -1;
      }
      const auto t1 = std::chrono::steady_clock::now();
      sample.solve_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      times.push_back(sample.solve_ns);
      report.samples.push_back(sample);
    }
    report.medians.emplace_back(specs[i].n, median(times));
  }
  for (std::size_t i = 1; i < report.medians.size(); ++i) {
    report.ratios.push_back(static_cast<double>(report.medians[i].second) /
                            static_cast<double>(std::max<std::int64_t>(1, report.medians[i - 1].second)));
  }
  return report;
}

std::string format_bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "n,seed,solve_ns,pairs,beta\n";
  for (const auto& s : report.samples)
    out << s.n << ',' << s.seed << ',' << s.solve_ns << ',' << s.pairs << ',' << s.beta << '\n';
  for (const auto& [n, ns] : report.medians) out << "median," << n << ',' << ns << '\n';
  for (std::size_t i = 0; i < report.ratios.size(); ++i) {
    char value[32];
    std::snprintf(value, sizeof value, "%.3f", report.ratios[i]);
    out << "ratio," << report.medians[i].first << ',' << report.medians[i + 1].first << ','
        << value << '\n';
  }
  return out.str();
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    if (cfg.sizes.empty()) throw InputError("need --sizes");
    const BenchReport report = run_bench(cfg.sizes, cfg.repeats, cfg.seed, cfg.join_bias, cfg.density);
    emit(cfg, out, format_bench_csv(report));
    return int(kOk);
  });
}

int cmd_recognize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    if (cfg.graph_path.empty()) throw InputError("need --graph");
    Recognition rec = recognize(parse_graph(read_file(cfg.graph_path)));
    if (auto* w = std::get_if<P4Witness>(&rec)) {
      print_p4(out, *w);
      return int(kNotCograph);
    }
    emit(cfg, out, serialize_cotree(std::get<Cotree>(rec)) + "\n");
    return int(kOk);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Maximum matched-paired-domination on cographs", "mpd"};
  app.require_subcommand(1);

  auto graph_opt = [&](CLI::App* sub) {
    return sub->add_option("--graph", cfg.graph_path, "graph file (p/e lines)");
  };
  auto cotree_opt = [&](CLI::App* sub) {
    return sub->add_option("--cotree", cfg.cotree_path, "cotree file (s-expression)");
  };
  auto restricted_opt = [&](CLI::App* sub) {
    sub->add_option("--restricted", cfg.restricted, "restricted set: file or comma list");
  };
  auto edge_cap_opt = [&](CLI::App* sub) {
    sub->add_option("--edge-cap", cfg.edge_cap, "edge limit when materializing a cotree");
  };
  auto output_opt = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "output path (stdout if absent)");
  };

  auto* solve = app.add_subcommand("solve", "canonical solution of a cograph");
  graph_opt(solve)->excludes(cotree_opt(solve));
  restricted_opt(solve);
  output_opt(solve);

  auto* verify = app.add_subcommand("verify", "check a solution file");
  graph_opt(verify)->excludes(cotree_opt(verify));
  restricted_opt(verify);
  verify->add_option("--solution", cfg.solution_path, "solution file")->required();
  edge_cap_opt(verify);
  output_opt(verify);

  auto* oracle = app.add_subcommand("oracle", "exhaustive search on a small graph");
  graph_opt(oracle)->excludes(cotree_opt(oracle));
  restricted_opt(oracle);
  oracle->add_flag("--gamma-p", cfg.gamma_p, "print the paired-domination number only");
  oracle->add_flag("--reference-oracle", cfg.reference_oracle, "disable pruning");
  oracle->add_option("--cap", cfg.oracle_cap, "largest vertex count accepted");
  edge_cap_opt(oracle);
  output_opt(oracle);

  auto* gen = app.add_subcommand("gen", "random cotree and restricted set");
  gen->add_option("-n", cfg.n, "vertex count")->required();
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--join-bias", cfg.join_bias)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--density", cfg.density)->check(CLI::Range(0.0, 1.0));
  gen->add_option("-o,--output", cfg.output, "write <output>.cotree and <output>.restricted");

  auto* bench = app.add_subcommand("bench", "solve timings as CSV");
  bench->add_option("--sizes", cfg.sizes, "comma-separated vertex counts")->delimiter(',')->required();
  bench->add_option("--repeats", cfg.repeats);
  bench->add_option("--seed", cfg.seed);
  bench->add_option("--join-bias", cfg.join_bias)->check(CLI::Range(0.0, 1.0));
  bench->add_option("--density", cfg.density)->check(CLI::Range(0.0, 1.0));
  output_opt(bench);

  auto* recognize_cmd = app.add_subcommand("recognize", "cotree of a graph, or an induced P4");
  graph_opt(recognize_cmd)->required();
  output_opt(recognize_cmd);

  std::vector<const char*> argv{"mpd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "solve") return cmd_solve(cfg, out, err);
  if (cfg.command == "verify") return cmd_verify(cfg, out, err);
  if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
  if (cfg.command == "gen") return cmd_gen(cfg, out, err);
  if (cfg.command == "bench") return cmd_bench(cfg, out, err);
  return cmd_recognize(cfg, out, err);
}

}  // namespace mpd::cli
