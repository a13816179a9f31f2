// qcif command-line tool: JSON in, JSON out, scripting-friendly exit codes.
// Talks to the core exclusively through the C API (qcif.h).
//
// Exit codes: 0 success / true verdict, 1 false verdict or failed selftest,
// 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcif.h"

namespace {

struct ContextDeleter {
  void operator()(qcif_context* c) const { qcif_context_free(c); }
};
using Context = std::unique_ptr<qcif_context, ContextDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qcif_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int fail(const Context& ctx, qcif_status status) {
  std::cerr << "error: " << qcif_context_error(ctx.get()) << " (status " << status << ")\n";
  return 2;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int write_output(const std::string& out_path, const char* json, bool echo_to_stdout) {
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << json << "\n";
    return 0;
  }
  if (echo_to_stdout) std::cout << json << "\n";
  return 0;
}

struct GlobalOpts {
  double member_tol = 0.0;
  double rank_tol = 0.0;
  int cap = 0;
  std::uint64_t seed = 0;
  bool have_seed = false;
  std::string out_path;
};

int apply_config(const Context& ctx, const GlobalOpts& g) {
  qcif_status s;
  if (g.member_tol > 0 && (s = qcif_context_set_member_tol(ctx.get(), g.member_tol)) != QCIF_OK)
    return fail(ctx, s);
  if (g.rank_tol > 0 && (s = qcif_context_set_rank_tol(ctx.get(), g.rank_tol)) != QCIF_OK)
    return fail(ctx, s);
  if (g.cap > 0 && (s = qcif_context_set_cap(ctx.get(), g.cap)) != QCIF_OK) return fail(ctx, s);
  if (g.have_seed && (s = qcif_context_set_seed(ctx.get(), g.seed)) != QCIF_OK)
    return fail(ctx, s);
  return -1;  // no error
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-control interface-algebra toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--tol", g.member_tol, "membership tolerance override (default 1e-8)");
  app.add_option("--rank-tol", g.rank_tol, "Gram-Schmidt rank tolerance override (default 1e-9)");
  app.add_option("--cap", g.cap, "brute-force dimension cap (default 81, max 256)");
  auto* seed_opt = app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--out", g.out_path, "output file (default: stdout)");

  // decompose
  std::string in_path, obs_path, state_path, a_path, b_path, spec_path, kind, op;
  int dim_c = 0, dim_s = 0, m = 16, cut = 1;
  bool strip = false, brute = false, slow = false;

  auto* cmd_decompose = app.add_subcommand("decompose", "operator-Schmidt decomposition");
  cmd_decompose->add_option("--dim-c", dim_c, "controller dimension")->required();
  cmd_decompose->add_option("--dim-s", dim_s, "system dimension")->required();
  cmd_decompose->add_option("--in", in_path, "matrix JSON")->required();
  cmd_decompose->add_flag("--strip", strip, "zero the local terms and the scalar");

  auto* cmd_closure = app.add_subcommand("closure", "Lie or *-algebra closure of generators");
  cmd_closure->add_option("--kind", kind, "lie | star")->required();
  cmd_closure->add_option("--in", in_path, "generators JSON")->required();

  auto* cmd_interface = app.add_subcommand("interface", "interface algebra analysis");
  cmd_interface->add_option("--in", in_path, "Hamiltonian JSON")->required();
  cmd_interface->add_flag("--brute-force", brute, "force the brute-force closure above the cap");

  auto* cmd_control = app.add_subcommand("check-control", "universal-control predicate");
  cmd_control->add_option("--in", in_path, "Hamiltonian JSON")->required();

  auto* cmd_measure = app.add_subcommand("check-measure",
                                         "implementability / CQND-measurability predicate");
  cmd_measure->add_option("--in", in_path, "Hamiltonian JSON")->required();
  cmd_measure->add_option("--observable", obs_path, "observable matrix JSON")->required();

  auto* cmd_synth = app.add_subcommand("synthesize", "control-sequence synthesis");
  cmd_synth->add_option("--kind", kind, "invert | trotter | commutator")->required();
  cmd_synth->add_option("--in", in_path, "synthesis input JSON")->required();

  auto* cmd_sim = app.add_subcommand("simulate-measurement", "run a measurement scheme");
  cmd_sim->add_option("--in", in_path, "scheme JSON")->required();
  cmd_sim->add_option("--state", state_path, "system state JSON")->required();

  auto* cmd_compose = app.add_subcommand("compose", "composite measurement scheme");
  cmd_compose->add_option("--op", op, "sum | commutator | jordan")->required();
  cmd_compose->add_option("--a", a_path, "measurement Hamiltonian JSON {controller, system}")
      ->required();
  cmd_compose->add_option("--b", b_path, "measurement Hamiltonian JSON {controller, system}")
      ->required();
  cmd_compose->add_option("--m", m, "product-formula parameter");

  auto* cmd_chain = app.add_subcommand("chain-check", "Theorem-2 chain controllability");
  cmd_chain->add_option("--spec", spec_path, "chain JSON")->required();
  cmd_chain->add_option("--cut", cut, "number of controller sites")->required();
  cmd_chain->add_flag("--slow", slow, "allow minutes-long closures");

  auto* cmd_selftest = app.add_subcommand("selftest", "run the full verification suite");
  cmd_selftest->add_flag("--slow", slow, "include the 3-qutrit stress case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Context ctx(qcif_context_new());
  if (!ctx) {
    std::cerr << "error: cannot allocate context\n";
    return 2;
  }
  if (const char* env_tol = std::getenv("QCIF_TOL"); env_tol && g.member_tol <= 0.0)
    g.member_tol = std::atof(env_tol);
  g.have_seed = seed_opt->count() > 0;
  if (int rc = apply_config(ctx, g); rc >= 0) return rc;

  auto slurp = [&](const std::string& path, std::string& dst) -> bool {
    if (read_file(path, dst)) return true;
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  };

  char* raw = nullptr;
  qcif_status status = QCIF_OK;
  int verdict = 1;

  if (*cmd_decompose) {
    std::string matrix;
    if (!slurp(in_path, matrix)) return 2;
    std::string wrapped = "{\"dim_c\": " + std::to_string(dim_c) +
                          ", \"dim_s\": " + std::to_string(dim_s) + ", \"matrix\": " + matrix +
                          "}";
    status = qcif_run_decompose(ctx.get(), wrapped.c_str(), strip ? 1 : 0, &raw);
  } else if (*cmd_closure) {
    std::string gens;
    if (!slurp(in_path, gens)) return 2;
    status = qcif_run_closure(ctx.get(), kind.c_str(), gens.c_str(), &raw);
  } else if (*cmd_interface) {
    std::string h;
    if (!slurp(in_path, h)) return 2;
    status = qcif_run_interface(ctx.get(), h.c_str(), brute ? 1 : 0, &raw);
  } else if (*cmd_control) {
    std::string h;
    if (!slurp(in_path, h)) return 2;
    status = qcif_run_check_control(ctx.get(), h.c_str(), &raw, &verdict);
  } else if (*cmd_measure) {
    std::string h, obs;
    if (!slurp(in_path, h) || !slurp(obs_path, obs)) return 2;
    status = qcif_run_check_measure(ctx.get(), h.c_str(), obs.c_str(), &raw, &verdict);
  } else if (*cmd_synth) {
    std::string in;
    if (!slurp(in_path, in)) return 2;
    status = qcif_run_synthesize(ctx.get(), kind.c_str(), in.c_str(), &raw);
  } else if (*cmd_sim) {
    std::string scheme, state;
    if (!slurp(in_path, scheme) || !slurp(state_path, state)) return 2;
    status = qcif_run_simulate_measurement(ctx.get(), scheme.c_str(), state.c_str(), &raw);
  } else if (*cmd_compose) {
    std::string a, b;
    if (!slurp(a_path, a) || !slurp(b_path, b)) return 2;
    status = qcif_run_compose(ctx.get(), op.c_str(), a.c_str(), b.c_str(), m, &raw);
  } else if (*cmd_chain) {
    std::string chain;
    if (!slurp(spec_path, chain)) return 2;
    status = qcif_run_chain_check(ctx.get(), chain.c_str(), cut, slow ? 1 : 0, &raw, &verdict);
  } else if (*cmd_selftest) {
    int all_pass = 0;
    status = qcif_run_selftest(ctx.get(), slow ? 1 : 0, &raw, &all_pass);
    if (status == QCIF_OK) {
      ApiString guard(raw);
      // human-readable table on stdout; JSON goes to --out when requested
      auto report = nlohmann::json::parse(raw);
      std::printf("%-3s  %-58s %-5s %8s\n", "id", "criterion", "pass", "seconds");
      for (const auto& row : report["criteria"]) {
        std::printf("%-3d  %-58s %-5s %8.2f\n", row["id"].get<int>(),
                    row["name"].get<std::string>().c_str(),
                    row["pass"].get<bool>() ? "PASS" : "FAIL", row["seconds"].get<double>());
        if (!row["pass"].get<bool>())
          std::printf("     -> %s\n", row["details"].get<std::string>().c_str());
      }
      std::printf("all_pass: %s\n", all_pass ? "true" : "false");
      if (!g.out_path.empty()) {
        int rc = write_output(g.out_path, raw, false);
        if (rc != 0) return rc;
      }
      return all_pass ? 0 : 1;
    }
  }

  if (status != QCIF_OK) return fail(ctx, status);
  ApiString guard(raw);
  int rc = write_output(g.out_path, raw, true);
  if (rc != 0) return rc;
  bool has_verdict = *cmd_control || *cmd_measure || *cmd_chain;
  return has_verdict ? (verdict ? 0 : 1) : 0;
}
