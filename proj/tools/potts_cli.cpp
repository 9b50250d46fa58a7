// potts: regime classification, cubic roots, finite-volume checks and grid
// scans for the p-adic Potts model on the order-3 Cayley tree.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "report/commands.hpp"

namespace {

void add_model_options(CLI::App* cmd, report::ModelSpec& spec) {
  cmd->add_option("--p", spec.p, "prime p >= 5")->required();
  cmd->add_option("--q", spec.q, "number of spin states, q >= 3")->required();
  auto* rho = cmd->add_option("--rho", spec.rho, "rho as a p-adic literal");
  auto* exp_of = cmd->add_option("--exp", spec.exp_of, "coupling J with rho = exp_p(J)");
  rho->excludes(exp_of);
  cmd->add_option("--digits", spec.digits, "verified p-adic digits")->check(CLI::Range(4, 400));
}

// One human-readable line per record.
std::string summary(const report::Json& j) {
  if (j.contains("error")) return "error (" + j["error"]["kind"].get<std::string>() + "): " + j["error"]["message"].get<std::string>();
  const std::string cmd = j["command"];
  if (cmd == "classify") {
    return "regime " + j["verdict"]["regime"].get<std::string>() + " [" + j["verdict"]["subcase"].get<std::string>() +
           "], measures " + std::to_string(j["catalog"]["count"].get<int>()) + ", transition " +
           j["transition"]["kind"].get<std::string>() +
           (j["prediction"]["agrees"].get<bool>() ? "" : "; " + j["prediction"]["message"].get<std::string>());
  }
  if (cmd == "roots") {
    std::string s = "count " + std::to_string(j["report"]["count"].get<int>()) + " (" +
                    j["report"]["norm_class"].get<std::string>() + ", " + j["report"]["rule"].get<std::string>() + ")";
    if (!j["oracle"].is_null()) s += j["oracle"]["agrees"].get<bool>() ? ", oracle agrees" : ", ORACLE DISAGREES";
    return s;
  }
  if (cmd == "simulate") {
    std::string s = j["check"].get<std::string>() + " n=" + std::to_string(j["n"].get<int>()) + ":";
    for (const auto& e : j["results"]) s += " " + e["measure"].get<std::string>() + (e["pass"].get<bool>() ? "=pass" : "=FAIL");
    return s;
  }
  const auto& sm = j["summary"];
  return "points " + std::to_string(sm["points"].get<int>()) + ", prediction disagreements " +
         std::to_string(sm["prediction_disagreements"].get<int>()) + ", errors " + std::to_string(sm["errors"].get<int>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic Potts model on the Cayley tree of order 3"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool text = false;
  app.add_option("--out", out_path, "write the record to FILE instead of stdout");
  app.add_flag("--text", text, "print a one-line summary instead of JSON");

  report::ClassifyOptions classify_opts;
  auto* classify = app.add_subcommand("classify", "regime, measures and transition for (p, q, rho)");
  add_model_options(classify, classify_opts.model);
  classify->add_option("--levels", classify_opts.witness_levels, "witness trajectory levels")->check(CLI::Range(1, 18));

  report::RootsOptions roots_opts;
  auto* roots = app.add_subcommand("roots", "roots of y^3 + a y = b in Z_p^*");
  roots->add_option("--p", roots_opts.p, "prime p >= 5")->required();
  roots->add_option("--a", roots_opts.a, "coefficient a (p-adic literal)")->required();
  roots->add_option("--b", roots_opts.b, "coefficient b (p-adic literal)")->required();
  roots->add_option("--digits", roots_opts.digits, "root precision")->check(CLI::Range(4, 400));
  roots->add_option("--oracle", roots_opts.oracle_depth, "cross-check by exhaustive search mod p^depth");

  report::SimulateOptions sim_opts;
  std::string check = "compat";
  auto* simulate = app.add_subcommand("simulate", "exhaustive finite-volume checks");
  add_model_options(simulate, sim_opts.model);
  simulate->add_option("--n", sim_opts.n, "tree depth")->required();
  simulate->add_option("--check", check, "compat | recursion | norms")
      ->check(CLI::IsMember({"compat", "recursion", "norms"}));
  simulate->add_option("--measure", sim_opts.measure, "restrict to one catalog label, e.g. mu1");

  report::ScanOptions scan_opts;
  auto* scan = app.add_subcommand("scan", "classify every q in a range");
  scan->add_option("--p", scan_opts.p, "prime p >= 5")->required();
  scan->add_option("--q-from", scan_opts.q_from, "first q")->required();
  scan->add_option("--q-to", scan_opts.q_to, "last q")->required();
  auto* scan_rho = scan->add_option("--rho", scan_opts.rho, "rho as a p-adic literal");
  scan->add_option("--exp", scan_opts.exp_of, "coupling J with rho = exp_p(J)")->excludes(scan_rho);
  scan->add_option("--digits", scan_opts.digits, "verified p-adic digits")->check(CLI::Range(4, 400));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(report::ExitCode::Parse);
  }

  const auto start = std::chrono::steady_clock::now();
  report::CommandResult result;
  std::string name = app.get_subcommands().front()->get_name();
  try {
    if (*classify) {
      result = report::classify(classify_opts);
    } else if (*roots) {
      result = report::roots(roots_opts);
    } else if (*simulate) {
      sim_opts.check = check == "compat"      ? report::SimulateCheck::Compatibility
                       : check == "recursion" ? report::SimulateCheck::Recursion
                                              : report::SimulateCheck::Norms;
      result = report::simulate(sim_opts);
    } else {
      result = report::scan(scan_opts);
    }
  } catch (const std::exception& e) {
    result = report::error_result(e, name);
  }
  const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string body = text ? summary(result.record) + "\n" : result.record.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return static_cast<int>(report::ExitCode::Parse);
    }
    out << body;
  }
  std::cerr << name << ": " << elapsed << " ms, exit " << static_cast<int>(result.code) << "\n";
  return static_cast<int>(result.code);
}
