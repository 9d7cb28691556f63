#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elgot/lang/eval.hpp"
#include "elgot/lang/generator.hpp"
#include "elgot/lang/parser.hpp"

using namespace elgot;
using namespace elgot::lang;

namespace {
const char* kCountdown = "var x:8; x:=0; while x<3 do x:=x+1 od";
}

TEST_CASE("parsing basics") {
  Program p = parse("var x:4; x := 3;");
  CHECK(p.decls.size() == 1);
  CHECK(p.decls[0].name == "x");
  CHECK(p.decls[0].width == 4);
  REQUIRE(p.body != nullptr);
  CHECK(p.body->kind == Stmt::Kind::Assign);

  // Declaration-only file: the empty program.
  Program empty = parse("var x:4;");
  CHECK(empty.body == nullptr);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse("while true do skip"), SyntaxError);
  CHECK_THROWS_AS(parse("var x:4; x := y;"), UndeclaredVariable);
  CHECK_THROWS_AS(parse("var x:4; x := true;"), TypeError);
  CHECK_THROWS_AS(parse("var x:4; while x do skip od"), TypeError);
  CHECK_THROWS_AS(parse("var x:4; var x:2; skip"), SyntaxError);
  CHECK_THROWS_AS(parse("var x:0; skip"), SyntaxError);

  try {
    parse("while true do skip");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.loc.line == 1);
    CHECK(e.loc.col == 19);  // at the gap where 'od' should be
  }
}

TEST_CASE("pretty-printing round-trips") {
  for (const char* src :
       {kCountdown, "var x:4; skip", "var x:4; var y:2; if x < y then x := 1 else skip fi",
        "var x:4; x := (x + 2) * x; while not (x = 0) do x := x - 1 od",
        "var x:1; if true and (x = 0 or false) then skip else x := 1 fi"}) {
    Program p = parse(src);
    CHECK(pretty(parse(pretty(p))) == pretty(p));
  }
}

TEST_CASE("countdown golden run: x = 3 in 8 steps") {
  Program p = parse(kCountdown);
  Store s0 = initial_store(p);
  auto obs = run_for(eval_intensional(p, s0), 1000);
  REQUIRE(obs.converged());
  CHECK(obs.value->at("x") == 3);
  CHECK(obs.steps == 8);  // 1 init assign + 4 guard tests + 3 body assigns

  Partial<Store> ext = eval_extensional(p, s0);
  REQUIRE(ext.defined());
  CHECK(ext.get().at("x") == 3);
}

TEST_CASE("empty program converges in zero steps") {
  Program p = parse("var x:4;");
  auto obs = run_for(eval_intensional(p, initial_store(p)), 10);
  REQUIRE(obs.converged());
  CHECK(obs.steps == 0);
}

TEST_CASE("divergence is detected within the pigeonhole bound") {
  Program p = parse("var x:2; while true do x:=x+1 od");
  Store s0 = initial_store(p);
  CHECK(!run_for(eval_intensional(p, s0), 1000).converged());
  CHECK(eval_extensional(p, s0) == Partial<Store>::bottom());
  // The certificate walk visits at most |control points| * |stores| states.
  auto cert = machine_certificate(p, s0);
  CHECK(cert.certificate.steps.num_states <= 2 * 4);
  CHECK(collapse_finite(cert) == Partial<Store>::bottom());
}

TEST_CASE("modular arithmetic wraps at the declared width") {
  Program p = parse("var x:2; x := 3 + 1");
  CHECK(eval_extensional(p, initial_store(p)).get().at("x") == 0);
  Program q = parse("var x:3; x := 2 - 5");
  CHECK(eval_extensional(q, initial_store(q)).get().at("x") == 5);  // -3 mod 8
}

TEST_CASE("trace semantics") {
  Program p = parse(kCountdown);
  Store s0 = initial_store(p);

  Trace t3 = trace(p, s0, 3);
  CHECK(t3.entries.size() == 3);
  CHECK(t3.status == TraceStatus::FuelExhausted);
  for (size_t i = 0; i < t3.entries.size(); ++i)
    CHECK(t3.entries[i].step == static_cast<long>(i));

  Program sk = parse("var x:4; skip");
  Trace tsk = trace(sk, initial_store(sk), 100);
  CHECK(tsk.entries.size() == 1);
  CHECK(tsk.status == TraceStatus::Converged);

  Program dv = parse("var x:1; while true do skip od");
  Trace tdv = trace(dv, initial_store(dv), 10);
  CHECK(tdv.entries.size() == 10);
  CHECK(tdv.status == TraceStatus::FuelExhausted);

  Trace tcy = trace(dv, initial_store(dv), 10, /*detect_cycles=*/true);
  CHECK(tcy.status == TraceStatus::Diverged);
}

TEST_CASE("extensional agrees with certificate collapse on the corpus") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    Program p = generate_program(seed);
    Store s0 = initial_store(p);
    CHECK(eval_extensional(p, s0) == collapse_finite(machine_certificate(p, s0)));
  }
}

TEST_CASE("generator is deterministic and round-trips through the parser") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    Program a = generate_program(seed);
    Program b = generate_program(seed);
    CHECK(pretty(a) == pretty(b));
    CHECK(pretty(parse(pretty(a))) == pretty(a));
  }
}

TEST_CASE("loop unrolling is a fixpoint instance in both backends") {
  // Extensional: exact equality on the corpus.
  for (unsigned seed = 0; seed < 100; ++seed) {
    Program p = generate_program(seed);
    Store s0 = initial_store(p);
    CHECK(eval_extensional(p, s0) == eval_extensional(unroll_once(p), s0));
  }

  // Intensional on a single top-level loop: same value; steps shift by +1
  // exactly when the guard is initially false (the unrolled `if` falls
  // through to its skip).
  Program taken = parse(kCountdown);
  Store s_taken = initial_store(taken);
  auto o1 = run_for(eval_intensional(taken, s_taken), 1000);
  auto o2 = run_for(eval_intensional(unroll_once(taken), s_taken), 1000);
  REQUIRE(o1.converged());
  REQUIRE(o2.converged());
  CHECK(*o1.value == *o2.value);
  CHECK(o1.steps == o2.steps);  // guard initially true: no offset

  Program untaken = parse("var x:4; while x < 0 do skip od");
  Store s_un = initial_store(untaken);
  auto u1 = run_for(eval_intensional(untaken, s_un), 1000);
  auto u2 = run_for(eval_intensional(unroll_once(untaken), s_un), 1000);
  REQUIRE(u1.converged());
  REQUIRE(u2.converged());
  CHECK(*u1.value == *u2.value);
  CHECK(u2.steps == u1.steps + 1);  // guard initially false: one extra skip
}

TEST_CASE("generated corpus: intensional/extensional value agreement at fuel") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    Program p = generate_program(seed);
    Store s0 = initial_store(p);
    Partial<Store> ext = eval_extensional(p, s0);
    // The reachable-state count bounds the convergence step (pigeonhole).
    long fuel = machine_certificate(p, s0).certificate.steps.num_states;
    auto obs = run_for(eval_intensional(p, s0), fuel);
    if (ext.defined()) {
      REQUIRE(obs.converged());
      CHECK(*obs.value == ext.get());
    } else {
      CHECK(!obs.converged());
    }
  }
}
