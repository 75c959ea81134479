// tripack: generators, solvers, kernels and gadget builders for triangle
// packing in tournaments, all file-driven and seed-deterministic.
//
// Exit codes: 0 success / YES decisions, 1 valid NO answers (not sparse,
// not packable, invalid packing, exhausted budget), 2 usage or format
// errors. Timings go to stderr so identical command + seed produces
// byte-identical artifacts.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "tripack/approx.hpp"
#include "tripack/core.hpp"
#include "tripack/exact.hpp"
#include "tripack/gadgets.hpp"
#include "tripack/io.hpp"
#include "tripack/kernel.hpp"

namespace {

using namespace tripack;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "time_s=" << std::fixed << std::setprecision(3) << dt << "\n";
  }
};

std::string span_str(const std::optional<int>& s) { return s ? std::to_string(*s) : "-"; }

std::string instance_stats(const LinearTournament& t) {
  std::ostringstream os;
  os << "n=" << t.n << " m=" << t.backward.size() << " minspan=" << span_str(minspan(t))
     << " maxspan=" << span_str(maxspan(t)) << " sparse=" << (degrees_in_dm(t) ? 1 : 0);
  return os.str();
}

SolverBudget budget_from(std::uint64_t flag_nodes) {
  SolverBudget b;
  if (const char* env = std::getenv("TRIPACK_BUDGET_NODES")) b.node_limit = std::strtoull(env, nullptr, 10);
  if (flag_nodes > 0) b.node_limit = flag_nodes;
  return b;
}

int cmd_gen(int n, int arcs, int minspan_c, std::uint64_t seed, const std::string& out) {
  LinearTournament t = gen_sparse(n, arcs, minspan_c, seed);
  write_file(out, serialize_ltour(t));
  std::cout << "RESULT cmd=gen " << instance_stats(t) << " seed=" << seed << "\n";
  return 0;
}

int cmd_detect(const std::string& in) {
  AdjacencyTournament a = parse_tour(read_file(in));
  auto res = detect_sparse(a);
  if (!res) {
    std::cout << "not sparse\n";
    std::cout << "RESULT cmd=detect n=" << a.n << " sparse=0\n";
    return 1;
  }
  std::cout << serialize_ltour(res->t);
  std::cout << "RESULT cmd=detect " << instance_stats(res->t) << "\n";
  return 0;
}

int cmd_solve(const std::string& in, const std::string& algo, int c, std::uint64_t budget_nodes,
              const std::string& out) {
  LinearTournament t = parse_ltour(read_file(in));
  std::ostringstream extra;
  Packing packing;
  int exit_code = 0;
  if (algo == "exact") {
    ExactResult r = max_packing_exact(t, budget_from(budget_nodes));
    packing = r.packing;
    extra << " size=" << r.packing.size() << " optimal=" << (r.optimal ? 1 : 0) << " nodes=" << r.nodes;
    if (!r.optimal) exit_code = 1;
  } else if (algo == "dp") {
    packing = max_packing_dp_bounded_maxspan(t);
    extra << " size=" << packing.size();
  } else if (algo == "phi") {
    PhiReport rep = phi(t);
    packing = rep.packing;
    std::cout << "phi m0=" << rep.m0 << " m1=" << rep.m1 << " m2=" << rep.m2
              << " size=" << rep.packing.size() << "\n";
    extra << " m0=" << rep.m0 << " m1=" << rep.m1 << " m2=" << rep.m2 << " size=" << rep.packing.size();
  } else {
    throw CLI::ValidationError("--algo must be exact, dp or phi");
  }
  std::cout << "RESULT cmd=solve algo=" << algo << " " << instance_stats(t);
  if (c > 0) std::cout << " c=" << c;
  std::cout << extra.str() << "\n";
  write_file(out, serialize_packing(packing));
  return exit_code;
}

int cmd_kernel(const std::string& in, const std::string& mode, int k, const std::string& out) {
  LinearTournament t = parse_ltour(read_file(in));
  KernelOutcome o;
  if (mode == "fas")
    o = kernel_by_fas(t, k);
  else if (mode == "sparse")
    o = sparse_kernel(t, k);
  else
    throw CLI::ValidationError("--mode must be fas or sparse");
  if (o.yes) {
    std::cout << "YES\n";
    std::cout << "RESULT cmd=kernel mode=" << mode << " " << instance_stats(t) << " k=" << k
              << " outcome=yes witness=" << o.witness.size() << "\n";
    write_file(out, serialize_packing(o.witness));
    return 0;
  }
  write_file(out, serialize_ltour(o.reduced));
  if (out != "-") {
    std::ostringstream remap;
    for (int v = 0; v < t.n; ++v)
      if (o.remap[v] >= 0) remap << v + 1 << " " << o.remap[v] + 1 << "\n";
    write_file(out + ".remap", remap.str());
  }
  std::cout << "RESULT cmd=kernel mode=" << mode << " " << instance_stats(t) << " k=" << k
            << " outcome=reduced kprime=" << o.k_prime << " vertices=" << o.reduced.n << "\n";
  return 0;
}

int cmd_gadget(const std::string& cnf_path, const std::string& variant, int k, const std::string& out,
               const std::string& layout_path) {
  std::string text = read_file(cnf_path);
  LinearTournament t;
  GadgetLayout lay;
  if (variant == "max2sat3") {
    std::tie(t, lay) = build_2sat3_gadget(parse_cnf(text, CnfMode::TwoSat3));
  } else if (variant == "perfect2sat3") {
    std::tie(t, lay) = build_perfect_2sat3(parse_cnf(text, CnfMode::TwoSat3), k);
  } else if (variant == "perfect3sat3") {
    std::tie(t, lay) = build_perfect_3sat3(parse_cnf(text, CnfMode::ThreeSat3));
  } else {
    throw CLI::ValidationError("--variant must be max2sat3, perfect2sat3 or perfect3sat3");
  }
  write_file(out, serialize_ltour(t));
  if (!layout_path.empty()) write_file(layout_path, serialize_layout(lay.slots()));
  std::cout << "RESULT cmd=gadget variant=" << variant << " vars=" << lay.num_vars
            << " clauses=" << lay.num_clauses << " " << instance_stats(t) << "\n";
  return 0;
}

int cmd_selector(int m, int g, const std::string& out, int select, const std::string& layout_path) {
  auto [t, lay] = build_selector(m, g);
  write_file(out, serialize_ltour(t));
  if (!layout_path.empty()) {
    std::vector<std::pair<std::string, int>> slots;
    for (int i = 0; i < lay.g; ++i)
      for (int j = 0; j < lay.set_size; ++j)
        slots.emplace_back("x" + std::to_string(i) + "_" + std::to_string(j + 1), lay.x_pos[i][j]);
    for (int l = 0; l < lay.levels; ++l) {
      for (int kk = 0; kk < static_cast<int>(lay.level_pos[l].size()); ++kk)
        slots.emplace_back("v" + std::to_string(l) + "_" + std::to_string(kk + 1), lay.level_pos[l][kk]);
      slots.emplace_back("alpha" + std::to_string(l), lay.alpha_pos[l]);
    }
    write_file(layout_path, serialize_layout(slots));
  }
  std::cout << "RESULT cmd=selector m=" << m << " g=" << g << " " << instance_stats(t) << "\n";
  if (select >= 0) {
    Packing p = selector_select(t, lay, select);
    std::cout << serialize_packing(p);
  }
  return 0;
}

int cmd_compose(const std::string& cnf_path, int copies, const std::string& out) {
  CnfFormula f = parse_cnf(read_file(cnf_path), CnfMode::ThreeSat3);
  std::vector<std::pair<LinearTournament, GadgetLayout>> instances;
  for (int i = 0; i < copies; ++i) instances.push_back(build_perfect_3sat3(f));
  auto [t, lay] = compose(instances);
  write_file(out, serialize_ltour(t));
  std::cout << "RESULT cmd=compose t=" << copies << " g=" << lay.g << " " << instance_stats(t) << "\n";
  return 0;
}

int cmd_verify(const std::string& in, const std::string& packing_path) {
  LinearTournament t = parse_ltour(read_file(in));
  Packing p;
  try {
    p = bind_packing(t, parse_packing(read_file(packing_path)));
  } catch (const parse_error& e) {
    std::cout << "INVALID " << e.what() << "\n";
    return 1;
  }
  if (!is_valid_packing(t, p)) {
    std::cout << "INVALID overlapping triangles\n";
    return 1;
  }
  std::cout << "OK size=" << p.size() << "\n";
  return 0;
}

int cmd_bench(const std::string& suite, int seeds, const std::string& out) {
  std::ostringstream csv;
  if (suite == "ratio") {
    csv << "seed,n,c,opt,phi,ratio\n";
    for (int s = 0; s < seeds; ++s) {
      for (int c = 2; c <= 8; ++c) {
        int n = 18 + (s % 13);
        int arcs = 2 + (s % 4);
        LinearTournament t = gen_sparse(n, arcs, c, 1000 * static_cast<std::uint64_t>(s) + c);
        ExactResult opt = max_packing_exact(t);
        PhiReport rep = phi(t);
        double ratio = rep.packing.size() > 0
                           ? static_cast<double>(opt.packing.size()) / rep.packing.size()
                           : (opt.packing.size() == 0 ? 1.0 : std::numeric_limits<double>::infinity());
        csv << s << "," << n << "," << c << "," << opt.packing.size() << "," << rep.packing.size()
            << "," << std::fixed << std::setprecision(6) << ratio << "\n";
      }
    }
  } else if (suite == "kernel") {
    csv << "seed,n,m,k,outcome,vertices,bound_ok\n";
    for (int s = 0; s < seeds; ++s) {
      int n = 15 + (s % 10);
      int arcs = 3 + (s % 3);
      LinearTournament t = gen_sparse(n, arcs, 1, 777 * static_cast<std::uint64_t>(s) + 1);
      for (int k = 1; k <= 3; ++k) {
        KernelOutcome o = sparse_kernel(t, k);
        bool bound_ok = o.yes ? o.witness.size() == k : o.reduced.n < 15 * k;
        csv << s << "," << n << "," << t.backward.size() << "," << k << ","
            << (o.yes ? "yes" : "reduced") << "," << (o.yes ? 3 * k : o.reduced.n) << ","
            << (bound_ok ? 1 : 0) << "\n";
      }
    }
  } else {
    throw CLI::ValidationError("--suite must be ratio or kernel");
  }
  write_file(out, csv.str());
  std::cout << "RESULT cmd=bench suite=" << suite << " seeds=" << seeds << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangle packing in tournaments via linear representations"};
  app.require_subcommand(1);
  app.footer(
      "exit codes: 0 success or YES decision, 1 valid NO answer (not sparse,\n"
      "not packable, exhausted budget), 2 usage or format error");

  auto* gen = app.add_subcommand("gen", "generate a seeded sparse instance");
  int gen_n = 0, gen_arcs = 0, gen_minspan = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-";
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--arcs", gen_arcs, "number of backward arcs")->required();
  gen->add_option("--minspan", gen_minspan, "minimum span of every arc");
  gen->add_option("--seed", gen_seed, "random seed")->required();
  gen->add_option("--out", gen_out, "output ltour file, - for stdout");

  auto* detect = app.add_subcommand("detect", "decide sparseness, print a matching-FAS representation");
  std::string detect_in;
  detect->add_option("--in", detect_in, "input tour file, - for stdin")->required();

  auto* solve = app.add_subcommand("solve", "maximum triangle packing");
  std::string solve_in, solve_algo = "exact", solve_out = "-";
  int solve_c = 0;
  std::uint64_t solve_budget = 0;
  solve->add_option("--in", solve_in, "input ltour file")->required();
  solve->add_option("--algo", solve_algo, "exact, dp or phi")->required();
  solve->add_option("--c", solve_c, "minspan lower bound to report");
  solve->add_option("--budget", solve_budget, "node budget for the exact solver");
  solve->add_option("--out", solve_out, "packing output file, - for stdout");

  auto* kernel = app.add_subcommand("kernel", "kernelize an instance");
  std::string kernel_in, kernel_mode, kernel_out = "-";
  int kernel_k = 0;
  kernel->add_option("--in", kernel_in, "input ltour file")->required();
  kernel->add_option("--mode", kernel_mode, "fas or sparse")->required();
  kernel->add_option("--k", kernel_k, "parameter k")->required();
  kernel->add_option("--out", kernel_out, "output file (reduced instance or witness packing)");

  auto* gadget = app.add_subcommand("gadget", "build a SAT(3) gadget tournament");
  std::string gadget_cnf, gadget_variant, gadget_out = "-", gadget_layout;
  int gadget_k = 0;
  gadget->add_option("--cnf", gadget_cnf, "DIMACS cnf input")->required();
  gadget->add_option("--variant", gadget_variant, "max2sat3, perfect2sat3 or perfect3sat3")->required();
  gadget->add_option("--k", gadget_k, "clauses to satisfy (perfect2sat3)");
  gadget->add_option("--out", gadget_out, "output ltour file");
  gadget->add_option("--layout", gadget_layout, "optional slot layout file");

  auto* selector = app.add_subcommand("selector", "build an instance selector");
  int sel_m = 0, sel_g = 0, sel_select = -1;
  std::string sel_out = "-", sel_layout;
  selector->add_option("--m", sel_m, "distinguished set size")->required();
  selector->add_option("--g", sel_g, "number of distinguished sets (power of two)")->required();
  selector->add_option("--out", sel_out, "output ltour file");
  selector->add_option("--select", sel_select, "also print the packing leaving X^i");
  selector->add_option("--layout", sel_layout, "optional slot layout file");

  auto* compose_cmd = app.add_subcommand("compose", "weak composition of gadget instances");
  std::string compose_cnf, compose_out = "-";
  int compose_t = 0;
  compose_cmd->add_option("--cnf", compose_cnf, "DIMACS 3-SAT(3) input")->required();
  compose_cmd->add_option("--t", compose_t, "number of instance copies")->required();
  compose_cmd->add_option("--out", compose_out, "output ltour file");

  auto* verify = app.add_subcommand("verify", "check a packing against an instance");
  std::string verify_in, verify_packing;
  verify->add_option("--in", verify_in, "input ltour file")->required();
  verify->add_option("--packing", verify_packing, "packing file")->required();

  auto* bench = app.add_subcommand("bench", "run a benchmark suite, emit CSV");
  std::string bench_suite, bench_out = "-";
  int bench_seeds = 0;
  bench->add_option("--suite", bench_suite, "ratio or kernel")->required();
  bench->add_option("--seeds", bench_seeds, "number of seeds")->required();
  bench->add_option("--out", bench_out, "CSV output file");

  {
    std::ostringstream echo;
    echo << "command:";
    for (int i = 0; i < argc; ++i) echo << " " << argv[i];
    std::cerr << echo.str() << "\n";
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    Timer timer;
    if (gen->parsed()) return cmd_gen(gen_n, gen_arcs, gen_minspan, gen_seed, gen_out);
    if (detect->parsed()) return cmd_detect(detect_in);
    if (solve->parsed()) {
      try {
        return cmd_solve(solve_in, solve_algo, solve_c, solve_budget, solve_out);
      } catch (const std::invalid_argument& e) {
        // window too wide / degrees outside D_M are valid refusals
        std::cerr << e.what() << "\n";
        return 1;
      }
    }
    if (kernel->parsed()) return cmd_kernel(kernel_in, kernel_mode, kernel_k, kernel_out);
    if (gadget->parsed()) return cmd_gadget(gadget_cnf, gadget_variant, gadget_k, gadget_out, gadget_layout);
    if (selector->parsed()) return cmd_selector(sel_m, sel_g, sel_out, sel_select, sel_layout);
    if (compose_cmd->parsed()) return cmd_compose(compose_cnf, compose_t, compose_out);
    if (verify->parsed()) return cmd_verify(verify_in, verify_packing);
    if (bench->parsed()) return cmd_bench(bench_suite, bench_seeds, bench_out);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
