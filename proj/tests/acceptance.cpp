// Acceptance gate: one line per criterion, nonzero exit if any fail.
#include <chrono>
#include <iostream>
#include <string>

#include "elgot/algebra.hpp"
#include "elgot/collapse_laws.hpp"
#include "elgot/delay_laws.hpp"
#include "elgot/elgot_monad.hpp"
#include "elgot/kleisli.hpp"
#include "elgot/lang/eval.hpp"
#include "elgot/lang/generator.hpp"
#include "elgot/lang/parser.hpp"
#include "elgot/sigma.hpp"

using namespace elgot;

namespace {

int failures_total = 0;

void verdict(int n, const std::string& what, bool ok, const std::string& detail) {
  if (!ok) ++failures_total;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what << " ("
            << detail << ")\n";
}

long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

std::string report_detail(const LawReport& r, long ms) {
  return std::to_string(r.instances) + " instances, " + std::to_string(r.failures.size()) +
         " failures, " + std::to_string(ms) + " ms";
}

}  // namespace

int main() {
  // 1. Elgot-algebra suite, |S| <= 3, carrier {_, 0, 1}, under 60 s.
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Partial<int>> carrier = {Partial<int>::bottom(), eta(0), eta(1)};
    auto r = check_elgot_laws<Partial<int>>(
        partial_algebra<int>(), carrier, 3,
        [](const Partial<int>& p) { return p.defined() ? std::to_string(p.get()) : std::string("_"); });
    r.merge(check_loop_splitting<int>(2));
    long ms = ms_since(t0);
    verdict(1, "elgot-algebra laws exhaustive at |S|<=3, |A|<=2", r.passed() && ms < 60000,
            report_detail(r, ms));
  }

  // 2. Restriction suite at sizes <= 2, RST1/RST3 at 3, under 60 s.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_restriction_axioms(2, 3);
    long ms = ms_since(t0);
    verdict(2, "restriction axioms RST1-RST4 + dom lemmas", r.passed() && ms < 60000,
            report_detail(r, ms));
  }

  // 3. Equational lifting at |X| <= 3.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_equational_lifting(3);
    verdict(3, "equational lifting / commutativity / copyable / discardable", r.passed(),
            report_detail(r, ms_since(t0)));
  }

  // 4. Elgot-monad axioms at sizes <= 2, Fixpoint/Uniformity at 3.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_elgot_monad_axioms(2, 3);
    verdict(4, "elgot-monad fixpoint/naturality/codiagonal/uniformity/strength", r.passed(),
            report_detail(r, ms_since(t0)));
  }

  // 5. Kleene chain, stabilization, leastness, three-way oracle agreement.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_kleene_suite(4, 2, 2);
    verdict(5, "kleene chain + leastness + oracle agreement", r.passed(),
            report_detail(r, ms_since(t0)));
  }

  // 6. Delay laws at depth 50 on 200 seeded machines.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_delay_laws(2024, 200, 50);
    verdict(6, "delay monad/strength/commutativity laws, depth 50, 200 machines", r.passed(),
            report_detail(r, ms_since(t0)));
  }

  // 7. Collapse coherence on machines <= 4 states and 100 programs.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_collapse_coherence(4, 2, 100);
    verdict(7, "collapse coherence + monad morphism + program agreement", r.passed(),
            report_detail(r, ms_since(t0)));
  }

  // 8. Sigma lattice: exact truth tables, step-exact race join, frame law.
  {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_sigma_lattice();
    bool step_exact = true;
    for (long k1 = 0; k1 <= 20 && step_exact; ++k1) {
      for (long k2 = 0; k2 <= 20 && step_exact; ++k2) {
        auto obs = run_for(sigma_join_delay(sigma_top_delay(k1), sigma_top_delay(k2)), 50);
        step_exact = obs.converged() && obs.steps == std::min(k1, k2);
        auto meet = run_for(sigma_meet_delay(sigma_top_delay(k1), sigma_top_delay(k2)), 50);
        step_exact = step_exact && meet.converged() && meet.steps == k1 + k2;
      }
    }
    // Lattice laws at fuel-50 weak bisimilarity in the delay backend.
    auto a = sigma_top_delay(13);
    auto b = sigma_top_delay(4);
    bool delay_laws =
        bisim_weak_fuel(sigma_join_delay(a, b), sigma_join_delay(b, a), 50) == ThreeValued::True &&
        bisim_weak_fuel(sigma_meet_delay(a, sigma_join_delay(a, b)), a, 50) == ThreeValued::True &&
        bisim_weak_fuel(sigma_join_delay(a, a), a, 50) == ThreeValued::True;
    verdict(8, "sigma lattice exact + race join step-exact + frame law",
            r.passed() && step_exact && delay_laws, report_detail(r, ms_since(t0)));
  }

  // 9. Language end-to-end: golden countdown, divergence bound, unrolling.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why = "ok";

    lang::Program countdown = lang::parse("var x:8; x:=0; while x<3 do x:=x+1 od");
    lang::Store s0 = lang::initial_store(countdown);
    auto obs = run_for(lang::eval_intensional(countdown, s0), 1000);
    if (!(obs.converged() && obs.value->at("x") == 3 && obs.steps == 8)) {
      ok = false;
      why = "countdown golden (x=3 in 8 steps) violated";
    }
    auto ext = lang::eval_extensional(countdown, s0);
    if (!(ext.defined() && ext.get().at("x") == 3)) {
      ok = false;
      why = "countdown extensional result wrong";
    }

    lang::Program looping = lang::parse("var x:2; while true do x:=x+1 od");
    lang::Store ls0 = lang::initial_store(looping);
    auto cert = lang::machine_certificate(looping, ls0);
    long bound = cert.certificate.steps.num_states;
    if (!(lang::eval_extensional(looping, ls0) == Partial<lang::Store>::bottom() && bound <= 2 * 4)) {
      ok = false;
      why = "divergence not detected within the pigeonhole bound";
    }

    int unroll_ok = 0;
    for (unsigned seed = 0; seed < 100; ++seed) {
      lang::Program p = lang::generate_program(seed);
      lang::Store ps0 = lang::initial_store(p);
      if (lang::eval_extensional(p, ps0) == lang::eval_extensional(lang::unroll_once(p), ps0))
        ++unroll_ok;
    }
    if (unroll_ok != 100) {
      ok = false;
      why = "unrolling equivalence failed on " + std::to_string(100 - unroll_ok) + " programs";
    }
    verdict(9, "while-language end-to-end", ok, why + ", " + std::to_string(ms_since(t0)) + " ms");
  }

  return failures_total == 0 ? 0 : 1;
}
