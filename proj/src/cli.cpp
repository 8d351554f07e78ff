#include "scgraph/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>

#include "scgraph/antimorphism.hpp"
#include "scgraph/constructions.hpp"
#include "scgraph/errors.hpp"
#include "scgraph/p4_partition.hpp"
#include "scgraph/report.hpp"
#include "scgraph/structure.hpp"

namespace scgraph::cli {

namespace {

struct RunConfig {
  int n = 0;
  int jobs = 1;
  std::string out_path;
  std::vector<std::string> graphs;
  bool pow2 = false;
  bool c5 = false, skew = false, symmetric = false;
  std::string p4_input;
  std::vector<std::string> join_inputs;
  std::string tau;
  DetectorLimits limits = DetectorLimits::from_environment();
};

// Applies `one` to a graph6 argument, or to every non-empty stdin line for "-".
// The worst exit code wins.
int for_each_input(const std::string& arg, std::istream& in, std::ostream& err,
                   const std::function<int(const Graph&)>& one) {
  auto guarded = [&](std::string_view text) {
    try {
      return one(parse_graph6(text));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return static_cast<int>(kUsage);
    }
  };
  if (arg != "-") return guarded(arg);
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    worst = std::max(worst, guarded(line));
  }
  return worst;
}

int cmd_enum(const RunConfig& cfg, std::ostream& out) {
  for (const auto& g : enumerate_sc_graphs(cfg.n, {.max_n = 13, .jobs = cfg.jobs})) out << write_graph6(g) << '\n';
  return kOk;
}

int cmd_antimorphism(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_input(cfg.graphs.front(), in, err, [&](const Graph& g) {
    if (!find_antimorphism(g)) {
      out << "none\n";
      return static_cast<int>(kAbsent);
    }
    const Permutation t = cfg.pow2 ? find_power_of_two_antimorphism(g) : *find_antimorphism(g);
    out << format_cycles(t) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_p4_partition(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_input(cfg.graphs.front(), in, err, [&](const Graph& g) {
    const auto p = p4_partition(g);
    for (const auto& q : p.quads) out << q[0] << '-' << q[1] << '-' << q[2] << '-' << q[3] << '\n';
    if (p.leftover) out << "leftover " << *p.leftover << '\n';
    out << to_json(p).dump() << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_detect(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_input(cfg.graphs.front(), in, err, [&](const Graph& g) {
    std::optional<Json> found;
    if (cfg.c5) {
      if (auto w = find_induced_c5(g)) found = to_json(Witness(*w));
    } else if (cfg.skew) {
      if (auto w = find_skew_partition(g, cfg.limits)) found = to_json(*w);
    } else {
      if (auto w = find_symmetric_partition(g, cfg.limits)) found = to_json(*w);
    }
    out << (found ? found->dump() : std::string("none")) << '\n';
    return static_cast<int>(found ? kOk : kAbsent);
  });
}

int cmd_theorem_m(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_input(cfg.graphs.front(), in, err, [&](const Graph& g) {
    std::optional<Permutation> t;
    if (!cfg.tau.empty()) {
      t = parse_cycles(cfg.tau);
    } else {
      t = find_theorem_m_antimorphism(g);
    }
    if (!t) {
      out << "none\n";
      return static_cast<int>(kAbsent);
    }
    const auto result = theorem_m_decompose(g, *t);
    Json j = to_json(result);
    j["antimorphism"] = format_cycles(*t);
    out << j.dump() << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_conjecture(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto graphs = enumerate_sc_graphs(cfg.n, {.max_n = 13, .jobs = cfg.jobs});
  std::vector<std::optional<StructureReport>> reports(graphs.size());
  std::vector<std::string> failures(graphs.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < graphs.size(); i += step) {
      try {
        reports[i] = conjecture_check(graphs[i], cfg.limits);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
  std::vector<std::thread> workers;
  for (std::size_t j = 1; j < jobs; ++j) workers.emplace_back(work, j, jobs);
  work(0, jobs);
  for (auto& w : workers) w.join();

  for (const auto& f : failures) {
    if (!f.empty()) {
      err << "error: " << f << '\n';
      return kUsage;
    }
  }

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = cfg.out_path.empty() ? out : file;
  std::size_t holds = 0, theorem = 0, mismatches = 0;
  std::vector<std::string> counterexamples;
  for (const auto& r : reports) {
    sink << to_json(*r).dump() << '\n';
    if (r->conjecture_holds) {
      ++holds;
    } else {
      counterexamples.push_back(r->graph);
    }
    if (r->theorem_m) {
      ++theorem;
      if (!r->theorem_m->consistent) ++mismatches;
    }
  }
  for (const auto& c : counterexamples) out << "counterexample " << c << '\n';
  const bool in_scope = cfg.n % 4 == 0;
  out << "n=" << cfg.n << " graphs=" << reports.size() << " conjecture_holds=" << holds
      << " counterexamples=" << counterexamples.size() << " theorem_m_applied=" << theorem
      << " theorem_m_mismatches=" << mismatches << (in_scope ? "" : " (n not 0 mod 4: outside conjecture scope)")
      << '\n';
  return kOk;
}

int cmd_construct(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!cfg.join_inputs.empty()) {
    try {
      out << write_graph6(j_construction(parse_graph6(cfg.join_inputs[0]), parse_graph6(cfg.join_inputs[1])))
          << '\n';
      return kOk;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return for_each_input(cfg.p4_input, in, err, [&](const Graph& g) {
    out << write_graph6(p4_construction(g).graph) << '\n';
    return static_cast<int>(kOk);
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-complementary graph toolkit", "scgraph"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* en = app.add_subcommand("enum", "List sc-graphs on n vertices as graph6, one per isomorphism class");
  en->add_option("--n", cfg.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  en->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* anti = app.add_subcommand("antimorphism", "Print an antimorphism in cycle notation");
  anti->add_flag("--pow2", cfg.pow2, "require every cycle length to be a power of two");
  anti->add_option("graph", cfg.graphs, "graph6 string or - for stdin")->required()->expected(1);

  auto* p4 = app.add_subcommand("p4-partition", "Partition into induced P4s");
  p4->add_option("graph", cfg.graphs, "graph6 string or - for stdin")->required()->expected(1);

  auto* det = app.add_subcommand("detect", "Search for an induced C5, skew or symmetric partition");
  auto* f_c5 = det->add_flag("--c5", cfg.c5);
  auto* f_skew = det->add_flag("--skew", cfg.skew);
  auto* f_sym = det->add_flag("--symmetric", cfg.symmetric);
  det->add_option("graph", cfg.graphs, "graph6 string or - for stdin")->required()->expected(1);
  f_c5->excludes(f_skew)->excludes(f_sym);
  f_skew->excludes(f_sym);

  auto* thm = app.add_subcommand("theorem-m", "16-case decomposition along a (4, other) antimorphism");
  thm->add_option("graph", cfg.graphs, "graph6 string or - for stdin")->required()->expected(1);
  thm->add_option("--tau", cfg.tau, "antimorphism in cycle notation (default: searched)");

  auto* conj = app.add_subcommand("conjecture", "Sweep all sc-graphs on n vertices; JSON lines + summary");
  conj->add_option("--n", cfg.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  conj->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  conj->add_option("--out", cfg.out_path, "write JSON lines here instead of stdout");

  auto* con = app.add_subcommand("construct", "P4-construction or two-graph join");
  auto* o_p4 = con->add_option("--p4", cfg.p4_input, "graph6 input (or -)");
  auto* o_join = con->add_option("--join", cfg.join_inputs, "two graph6 inputs")->expected(2);
  o_p4->excludes(o_join);
  con->require_option(1);

  std::vector<const char*> argv{"scgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (det->parsed() && !cfg.c5 && !cfg.skew && !cfg.symmetric) {
    err << "error: detect needs one of --c5, --skew, --symmetric\n";
    return kUsage;
  }

  try {
    if (en->parsed()) return cmd_enum(cfg, out);
    if (anti->parsed()) return cmd_antimorphism(cfg, in, out, err);
    if (p4->parsed()) return cmd_p4_partition(cfg, in, out, err);
    if (det->parsed()) return cmd_detect(cfg, in, out, err);
    if (thm->parsed()) return cmd_theorem_m(cfg, in, out, err);
    if (conj->parsed()) return cmd_conjecture(cfg, out, err);
    if (con->parsed()) return cmd_construct(cfg, in, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace scgraph::cli
