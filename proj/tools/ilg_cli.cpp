// Batch front end: iteration, parameters, indices, family scans, generation,
// enumeration, and the verification harness. All subcommands are
// deterministic; worker counts change wall time, never output.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ilg/dot.hpp"
#include "ilg/enumeration.hpp"
#include "ilg/index_engine.hpp"
#include "ilg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct InputSpec {
  std::string path;    // graph6 file, "-" for stdin
  std::string family;  // family descriptor, e.g. claw:2,1,1
};

std::vector<ilg::Graph> load_inputs(const InputSpec& in) {
  std::vector<ilg::Graph> graphs;
  if (!in.family.empty()) {
    auto fd = ilg::parse_family(in.family);
    if (!fd) throw ilg::graph_error(ilg::errc::invalid_descriptor,
                                    "unrecognized family descriptor: " + in.family);
    graphs.push_back(ilg::generate(*fd));
    return graphs;
  }
  std::istream* is = &std::cin;
  std::ifstream file;
  if (!in.path.empty() && in.path != "-") {
    file.open(in.path);
    if (!file) throw std::runtime_error("cannot open " + in.path);
    is = &file;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(*is, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      graphs.push_back(ilg::parse_graph6(line));
    } catch (const ilg::graph_error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

std::string rational_str(const ilg::Rational& r) { return r.str(); }

ilg::ParamKind parse_param_or_throw(const std::string& s) {
  auto p = ilg::param_from_string(s);
  if (!p) throw CLI::ValidationError("--param", "unknown parameter: " + s);
  return *p;
}

std::vector<ilg::Graph> class_universe(int n, const std::string& cls) {
  using ilg::Graph;
  auto pred = [&cls](const Graph& g) {
    if (!ilg::is_prolific(g)) return false;
    if (cls == "all" || cls.empty()) return true;
    if (cls == "min-deg-3") return g.min_degree() >= 3;
    if (cls == "min-deg-2") return g.min_degree() == 2;
    if (cls == "avg-deg-3")
      return ilg::Rational(2LL * g.m(), g.n()) >= ilg::Rational(3);
    if (cls == "avg-deg-4")
      return ilg::Rational(2LL * g.m(), g.n()) >= ilg::Rational(4);
    throw CLI::ValidationError("--class", "unknown class: " + cls);
  };
  std::vector<Graph> out;
  for (int k = 4; k <= n; ++k)
    for (const Graph& g : ilg::enumerate_connected(k))
      if (pred(g)) out.push_back(g);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterated line graph toolkit"};
  app.require_subcommand(1);

  ilg::Budget budget;
  app.add_option("--max-vertices", budget.max_vertices,
                 "largest iterate materialized, in vertices");
  app.add_option("--max-iter", budget.max_iterations, "iteration depth cap");
  app.add_option("--node-cap", budget.solver_node_cap, "exact solver node cap");
  int workers = 1;
  app.add_option("--workers", workers, "worker threads for scans and checks")
      ->check(CLI::PositiveNumber);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a named family member");
  std::string gen_family, gen_format = "graph6";
  gen->add_option("family", gen_family, "descriptor, e.g. claw:2,1,1 cp:3,2 ch:2,2,3")
      ->required();
  gen->add_option("--format", gen_format, "graph6 | dot")
      ->check(CLI::IsMember({"graph6", "dot"}));

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "stream connected graphs up to isomorphism");
  int enu_n = 0;
  bool enu_prolific = false;
  int enu_max_edges = -1;
  enu->add_option("--n", enu_n, "vertex count (1..10)")->required();
  enu->add_flag("--prolific", enu_prolific, "prolific graphs only");
  enu->add_option("--max-edges", enu_max_edges, "edge cap (e.g. n-1 for trees)");

  // iterate
  auto* itc = app.add_subcommand("iterate", "per-level counts of L^0..L^k");
  InputSpec it_in;
  int it_k = 4;
  bool it_g6 = false;
  itc->add_option("input", it_in.path, "graph6 file or - for stdin");
  itc->add_option("--family", it_in.family, "generate the input instead");
  itc->add_option("-k,--levels", it_k, "iteration depth");
  itc->add_flag("--write-graph6", it_g6, "also print each level as graph6");

  // params
  auto* par = app.add_subcommand("params", "exact parameter values");
  InputSpec par_in;
  std::vector<std::string> par_names;
  par->add_option("input", par_in.path, "graph6 file or - for stdin");
  par->add_option("--family", par_in.family, "generate the input instead");
  par->add_option("--param", par_names, "parameter name(s), or 'all'");

  // index
  auto* idx = app.add_subcommand("index", "ind(P,G) per input graph");
  InputSpec idx_in;
  std::string idx_param;
  idx->add_option("input", idx_in.path, "graph6 file or - for stdin");
  idx->add_option("--family", idx_in.family, "generate the input instead");
  idx->add_option("--param", idx_param, "parameter name")->required();

  // scan
  auto* scn = app.add_subcommand("scan", "family index scan with histogram");
  std::string scn_param, scn_class = "all";
  int scn_n = 8;
  scn->add_option("--param", scn_param, "parameter name")->required();
  scn->add_option("--n", scn_n, "corpus cap (prolific graphs up to this order)");
  scn->add_option("--class", scn_class, "all | min-deg-3 | min-deg-2 | avg-deg-3 | avg-deg-4");

  // verify
  auto* ver = app.add_subcommand("verify", "run registered checks");
  std::vector<std::string> ver_checks;
  bool ver_list = false, ver_all = false, ver_timings = false, ver_expensive = false;
  int ver_max_n = 8;
  ver->add_option("--check", ver_checks, "check id(s), e.g. A1 T5");
  ver->add_flag("--list", ver_list, "list the check registry");
  ver->add_flag("--all", ver_all, "run every check");
  ver->add_flag("--timings", ver_timings, "include wall time in reports");
  ver->add_flag("--expensive", ver_expensive, "enable the Hamiltonicity checks");
  ver->add_option("--max-n", ver_max_n, "corpus cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      auto fd = ilg::parse_family(gen_family);
      if (!fd) {
        std::cerr << "error: unrecognized family descriptor: " << gen_family << "\n";
        return kExitUsage;
      }
      ilg::Graph g = ilg::generate(*fd);
      if (gen_format == "dot")
        std::cout << ilg::write_dot(g);
      else
        std::cout << ilg::write_graph6(g) << "\n";
      return kExitOk;
    }

    if (*enu) {
      ilg::EnumOptions opt;
      opt.max_edges = enu_max_edges;
      for (const auto& g : ilg::enumerate_connected(enu_n, opt)) {
        if (enu_prolific && !ilg::is_prolific(g)) continue;
        std::cout << ilg::write_graph6(g) << "\n";
      }
      return kExitOk;
    }

    if (*itc) {
      for (const auto& g : load_inputs(it_in)) {
        if (!ilg::is_connected(g)) {
          std::cerr << "error: iterate requires connected inputs\n";
          return kExitUsage;
        }
        auto tr = ilg::iterate_line_graph(g, it_k, budget,
                                          it_g6 ? ilg::LastLevel::materialize
                                                : ilg::LastLevel::degree_only);
        std::cout << "graph " << ilg::write_graph6(g) << "\n";
        std::cout << "k\tn\te\tDelta\tdelta\td\n";
        for (const auto& lvl : tr.levels) {
          ilg::Rational d = lvl.n > 0 ? ilg::Rational(2 * lvl.e, lvl.n) : ilg::Rational(0);
          std::cout << lvl.k << "\t" << lvl.n << "\t" << lvl.e << "\t" << lvl.max_degree()
                    << "\t" << lvl.min_degree() << "\t" << rational_str(d) << "\n";
          if (it_g6 && lvl.graph)
            std::cout << "graph6 " << ilg::write_graph6(*lvl.graph) << "\n";
        }
        if (tr.truncated) {
          std::cout << "truncated: " << tr.truncation_reason << "\n";
          if (tr.truncation_reason == "max_vertices") return kExitBudget;
        }
      }
      return kExitOk;
    }

    if (*par) {
      std::vector<ilg::ParamKind> kinds;
      if (par_names.empty() || (par_names.size() == 1 && par_names[0] == "all")) {
        kinds.assign(ilg::all_params.begin(), ilg::all_params.end());
      } else {
        for (const auto& s : par_names) kinds.push_back(parse_param_or_throw(s));
      }
      std::cout << "graph";
      for (auto k : kinds) std::cout << "\t" << ilg::param_name(k);
      std::cout << "\n";
      for (const auto& g : load_inputs(par_in)) {
        std::cout << ilg::write_graph6(g);
        for (auto k : kinds) std::cout << "\t" << rational_str(ilg::compute_param(g, k, budget));
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (*idx) {
      ilg::ParamKind p = parse_param_or_throw(idx_param);
      bool budget_hit = false;
      for (const auto& g : load_inputs(idx_in)) {
        auto r = ilg::parameter_index(g, p, budget);
        std::cout << ilg::write_graph6(g) << "\t" << ilg::param_name(p) << "\t";
        if (r.found())
          std::cout << "found r=" << r.index;
        else {
          std::cout << "budget-exceeded after " << (r.levels.size() - 1) << " levels ("
                    << r.truncation_reason << ")";
          budget_hit = true;
        }
        std::cout << "\tvalues=";
        for (size_t i = 0; i < r.levels.size(); ++i)
          std::cout << (i ? "," : "") << r.levels[i].str();
        if (!r.shortcut_log.empty()) {
          std::cout << "\tshortcuts=";
          for (size_t i = 0; i < r.shortcut_log.size(); ++i)
            std::cout << (i ? ";" : "") << r.shortcut_log[i];
        }
        std::cout << "\n";
      }
      return budget_hit ? kExitBudget : kExitOk;
    }

    if (*scn) {
      ilg::ParamKind p = parse_param_or_throw(scn_param);
      auto uni = class_universe(scn_n, scn_class);
      auto sr = ilg::family_index_scan(uni, p, budget, workers,
                                       "prolific class=" + scn_class +
                                           " n<=" + std::to_string(scn_n));
      std::cout << "scan param=" << ilg::param_name(p) << " universe=" << sr.universe
                << " graphs=" << sr.graphs << "\n";
      std::cout << "max-index: " << sr.max_index << "\n";
      std::cout << "histogram:";
      for (const auto& [k, c] : sr.histogram) std::cout << " " << k << ":" << c;
      std::cout << "\n";
      std::cout << "witnesses (" << sr.witnesses.size() << "):\n";
      for (const auto& w : sr.witnesses) std::cout << "  " << w << "\n";
      if (!sr.budget_exceeded.empty()) {
        std::cout << "budget-exceeded (" << sr.budget_exceeded.size() << "):\n";
        for (const auto& w : sr.budget_exceeded) std::cout << "  " << w << "\n";
        return kExitBudget;
      }
      return kExitOk;
    }

    if (*ver) {
      if (ver_list) {
        for (const auto& info : ilg::check_registry())
          std::cout << info.id << "\t" << info.statement << "\n";
        return kExitOk;
      }
      if (ver_all) {
        ver_checks.clear();
        for (const auto& info : ilg::check_registry()) ver_checks.push_back(info.id);
      }
      if (ver_checks.empty()) {
        std::cerr << "error: pass --check ID (or --all / --list)\n";
        return kExitUsage;
      }
      ilg::VerifyConfig cfg;
      cfg.max_n = ver_max_n;
      cfg.budget = budget;
      cfg.workers = workers;
      cfg.enable_expensive = ver_expensive;
      bool all_pass = true;
      for (const auto& id : ver_checks) {
        auto rep = ilg::run_check(id, cfg);
        std::cout << rep.to_text(ver_timings);
        all_pass = all_pass && rep.pass();
      }
      return all_pass ? kExitOk : kExitCheckFailed;
    }
  } catch (const ilg::graph_error& e) {
    if (e.code() == ilg::errc::budget_exceeded) {
      std::cerr << "budget exhausted: " << e.what() << "\n";
      return kExitBudget;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
