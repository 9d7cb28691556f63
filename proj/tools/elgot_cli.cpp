#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elgot/algebra.hpp"
#include "elgot/collapse_laws.hpp"
#include "elgot/delay_laws.hpp"
#include "elgot/elgot_monad.hpp"
#include "elgot/kleisli.hpp"
#include "elgot/lang/eval.hpp"
#include "elgot/lang/parser.hpp"
#include "elgot/report.hpp"
#include "elgot/sigma.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ordered_json store_json(const elgot::lang::Store& s) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : s) j[k] = v;
  return j;
}

elgot::LawReport run_suite(const std::string& name, int max_size, unsigned seed) {
  using namespace elgot;
  if (name == "elgot-algebra") {
    std::vector<Partial<int>> carrier = {Partial<int>::bottom(), eta(0), eta(1)};
    return check_elgot_laws<Partial<int>>(
        partial_algebra<int>(), carrier, max_size > 0 ? max_size : 3,
        [](const Partial<int>& p) { return p.defined() ? std::to_string(p.get()) : std::string("_"); });
  }
  if (name == "loop-splitting") return check_loop_splitting<int>(max_size > 0 ? max_size : 2);
  if (name == "restriction") {
    int m = max_size > 0 ? max_size : 2;
    return check_restriction_axioms(m, m + 1);
  }
  if (name == "lifting") return check_equational_lifting(max_size > 0 ? max_size : 3);
  if (name == "elgot-monad") return check_elgot_monad_axioms(max_size > 0 ? max_size : 2,
                                                            max_size > 0 ? max_size : 3);
  if (name == "iterate-dom") return check_iterate_dom_law(max_size > 0 ? max_size : 2);
  if (name == "kleene") return check_kleene_suite(max_size > 0 ? max_size : 4, 2, 2);
  if (name == "bounded-elgot") return check_bounded_elgot(max_size > 0 ? max_size : 2);
  if (name == "sigma") return check_sigma_lattice();
  if (name == "delay") return check_delay_laws(seed, 200, 50);
  if (name == "collapse") return check_collapse_coherence(max_size > 0 ? max_size : 4, 2, 100);
  throw CLI::ValidationError("--suite", "unknown suite '" + name + "'");
}

const std::vector<std::string> kAllSuites = {
    "elgot-algebra", "loop-splitting", "restriction", "lifting", "elgot-monad",
    "iterate-dom",   "kleene",         "bounded-elgot", "sigma", "delay",
    "collapse"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable iteration theories: delay machines, partiality, and a while-language"};
  app.require_subcommand(1);

  std::string program_path;
  long fuel = elgot::kDefaultFuel;
  std::string backend = "intensional";
  std::string output = "text";
  std::string suite = "all";
  int max_size = 0;  // 0 = per-suite default
  unsigned seed = 0;
  bool deterministic = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* run = app.add_subcommand("run", "Evaluate a program to its final store");
  run->add_option("program", program_path, "Program file (.whl)")->required();
  run->add_option("--fuel", fuel, "Step budget for the intensional backend");
  run->add_option("--backend", backend, "Semantics backend")
      ->check(CLI::IsMember({"intensional", "extensional"}));
  add_output(run);

  CLI::App* trace_cmd = app.add_subcommand("trace", "Print the machine-step trace");
  trace_cmd->add_option("program", program_path, "Program file (.whl)")->required();
  trace_cmd->add_option("--fuel", fuel, "Number of steps to trace");
  add_output(trace_cmd);

  CLI::App* collapse = app.add_subcommand("collapse", "Compare both backends");
  collapse->add_option("program", program_path, "Program file (.whl)")->required();
  collapse->add_option("--fuel", fuel, "Unused; accepted for uniformity");
  add_output(collapse);

  CLI::App* laws = app.add_subcommand("laws", "Run exhaustive/randomized law suites");
  laws->add_option("--suite", suite, "Suite name or 'all'");
  laws->add_option("--max-size", max_size, "Size cap (0 = per-suite default)");
  laws->add_option("--seed", seed, "PRNG seed for randomized suites");
  laws->add_flag("--deterministic", deterministic, "Omit timing from JSON output");
  add_output(laws);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (laws->parsed()) {
      std::vector<std::string> names =
          suite == "all" ? kAllSuites : std::vector<std::string>{suite};
      for (const auto& name : names) {
        if (std::find(kAllSuites.begin(), kAllSuites.end(), name) == kAllSuites.end()) {
          std::cerr << "error: unknown suite '" << name << "'\n";
          return 2;
        }
      }
      std::vector<elgot::LawReport> reports;
      bool all_passed = true;
      for (const auto& name : names) {
        auto t0 = std::chrono::steady_clock::now();
        elgot::LawReport r = run_suite(name, max_size, seed);
        auto t1 = std::chrono::steady_clock::now();
        if (!deterministic)
          r.elapsed_ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        all_passed = all_passed && r.passed();
        reports.push_back(std::move(r));
      }
      if (output == "json") {
        if (reports.size() == 1) {
          std::cout << elgot::to_json(reports[0]).dump(2) << "\n";
        } else {
          ordered_json arr = ordered_json::array();
          for (const auto& r : reports) arr.push_back(elgot::to_json(r));
          std::cout << arr.dump(2) << "\n";
        }
      } else {
        for (const auto& r : reports) {
          std::cout << r.suite << ": " << r.instances << " instances, "
                    << r.failures.size() << " failures"
                    << (r.elapsed_ms ? " (" + std::to_string(*r.elapsed_ms) + " ms)" : "")
                    << "\n";
          for (const auto& f : r.failures)
            std::cout << "  FAIL " << f.law << " @ " << f.instance
                      << (f.lhs.empty() ? "" : " lhs=" + f.lhs + " rhs=" + f.rhs) << "\n";
        }
      }
      return all_passed ? 0 : 1;
    }

    elgot::lang::Program p = elgot::lang::parse(read_file(program_path));
    elgot::lang::Store s0 = elgot::lang::initial_store(p);

    if (run->parsed()) {
      if (backend == "extensional") {
        auto r = elgot::lang::eval_extensional(p, s0);
        if (output == "json") {
          ordered_json j{{"command", "run"}, {"backend", backend}};
          j["result"] = r.defined() ? "converged" : "diverges";
          if (r.defined()) j["store"] = store_json(r.get());
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << (r.defined() ? elgot::lang::pretty(r.get()) : "DIVERGES") << "\n";
        }
      } else {
        auto obs = elgot::run_for(elgot::lang::eval_intensional(p, s0), fuel);
        if (output == "json") {
          ordered_json j{{"command", "run"}, {"backend", backend}, {"fuel", fuel}};
          j["result"] = obs.converged() ? "converged" : "unknown";
          if (obs.converged()) {
            j["store"] = store_json(*obs.value);
            j["steps"] = obs.steps;
          }
          std::cout << j.dump(2) << "\n";
        } else if (obs.converged()) {
          std::cout << elgot::lang::pretty(*obs.value) << "\n";
        } else {
          std::cout << "UNKNOWN after " << fuel << " steps\n";
        }
      }
      return 0;
    }

    if (trace_cmd->parsed()) {
      elgot::lang::Trace t = elgot::lang::trace(p, s0, fuel);
      if (output == "json") {
        ordered_json j{{"command", "trace"}, {"fuel", fuel}};
        j["entries"] = ordered_json::array();
        for (const auto& e : t.entries)
          j["entries"].push_back({{"step", e.step},
                                  {"line", e.loc.line},
                                  {"col", e.loc.col},
                                  {"store", store_json(e.store)}});
        j["status"] = t.status == elgot::lang::TraceStatus::Converged ? "converged"
                      : t.status == elgot::lang::TraceStatus::Diverged ? "diverged"
                                                                       : "fuel-exhausted";
        if (t.final_store) j["store"] = store_json(*t.final_store);
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& e : t.entries)
          std::cout << e.step << ": " << e.loc.line << ":" << e.loc.col << "  "
                    << elgot::lang::pretty(e.store) << "\n";
        switch (t.status) {
          case elgot::lang::TraceStatus::Converged:
            std::cout << "CONVERGED: " << elgot::lang::pretty(*t.final_store) << "\n";
            break;
          case elgot::lang::TraceStatus::Diverged:
            std::cout << "DIVERGED\n";
            break;
          case elgot::lang::TraceStatus::FuelExhausted:
            std::cout << "FUEL EXHAUSTED after " << t.entries.size() << " steps\n";
            break;
        }
      }
      return 0;
    }

    // collapse: certificate-exact collapse of the intensional machine vs
    // the extensional backend.
    auto ext = elgot::lang::eval_extensional(p, s0);
    auto col = elgot::collapse_finite(elgot::lang::machine_certificate(p, s0));
    bool agree = ext == col;
    auto render = [](const elgot::Partial<elgot::lang::Store>& r) {
      return r.defined() ? elgot::lang::pretty(r.get()) : std::string("DIVERGES");
    };
    if (output == "json") {
      ordered_json j{{"command", "collapse"}, {"agree", agree}};
      j["extensional"] = render(ext);
      j["intensional_collapse"] = render(col);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (agree ? "AGREE" : "DISAGREE") << "\n"
                << "extensional:          " << render(ext) << "\n"
                << "intensional collapse: " << render(col) << "\n";
    }
    return agree ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
