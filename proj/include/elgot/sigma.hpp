#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "elgot/delay.hpp"
#include "elgot/partial.hpp"
#include "elgot/report.hpp"

namespace elgot {

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

/// Sigma, maybe backend: exactly two values, top (defined) and bottom.
using SigmaK = Partial<Unit>;

/// Sigma, delay backend: a termination observation with visible step counts.
using SigmaD = Delay<Unit>;

inline SigmaK sigma_top() { return eta(Unit{}); }
inline SigmaK sigma_bottom() { return SigmaK::bottom(); }

/// Meet is sequencing: strength, costrength-bind, then discard the pair.
inline SigmaK sigma_meet(const SigmaK& a, const SigmaK& b) {
  auto paired = elgot::bind(strength(a, b), [](const std::pair<SigmaK, Unit>& p) {
    return costrength(p.first, p.second);
  });
  return map(paired, [](const std::pair<Unit, Unit>&) { return Unit{}; });
}

/// Join: defined iff either argument is.
inline SigmaK sigma_join(const SigmaK& a, const SigmaK& b) {
  return a.defined() ? a : b;
}

inline SigmaD sigma_top_delay(long steps = 0) { return iota(Unit{}, steps); }

inline SigmaD sigma_bottom_delay() {
  return coit([](Unit u) { return Either<Unit, Unit>::right(u); }, Unit{});
}

/// Delay-backend meet: sequencing, so convergence steps add.
inline SigmaD sigma_meet_delay(const SigmaD& a, const SigmaD& b) {
  return bind(a, [b](Unit) { return b; });
}

/// Delay-backend join: the lockstep race, so convergence happens at the
/// minimum of the arms' steps.
inline SigmaD sigma_join_delay(const SigmaD& a, const SigmaD& b) {
  return map(race(a, b), [](const auto&) { return Unit{}; });
}

/// Countable join by dovetailing: step k inspects pair number k in the
/// schedule that enumerates (index i, depth d) in waves of constant i + d,
/// i ascending within a wave. Converges iff some sequence member converges.
inline SigmaD sigma_omega_join(std::function<SigmaD(long)> seq) {
  return coit(
      [seq](long k) {
        // Decode k into (i, d) along the diagonal schedule.
        long wave = 0;
        long base = 0;
        while (base + wave + 1 <= k) {
          base += wave + 1;
          ++wave;
        }
        long i = k - base;
        long d = wave - i;
        auto obs = run_for(seq(i), d);
        if (obs.converged()) return Either<Unit, long>::left(Unit{});
        return Either<Unit, long>::right(k + 1);
      },
      0L);
}

/// Exact countable join when a bound on the relevant indices is declared:
/// the join over seq(0..bound-1) in the maybe backend.
inline SigmaK sigma_omega_join_bounded(const std::function<SigmaK(long)>& seq, long bound) {
  for (long i = 0; i < bound; ++i)
    if (seq(i).defined()) return sigma_top();
  return sigma_bottom();
}

/// Full distributive-lattice truth tables in the maybe backend, plus the
/// frame law on eventually-constant sequences.
inline LawReport check_sigma_lattice() {
  LawReport report;
  report.suite = "sigma";
  const std::vector<SigmaK> vals = {sigma_bottom(), sigma_top()};
  auto name = [](const SigmaK& v) { return std::string(v.defined() ? "T" : "_"); };
  for (const auto& a : vals) {
    report.tally(sigma_meet(a, a) == a, "meet-idempotent", name(a));
    report.tally(sigma_join(a, a) == a, "join-idempotent", name(a));
    report.tally(sigma_meet(a, sigma_top()) == a, "meet-top", name(a));
    report.tally(sigma_join(a, sigma_bottom()) == a, "join-bottom", name(a));
    for (const auto& b : vals) {
      std::string ab = name(a) + name(b);
      report.tally(sigma_meet(a, b) == sigma_meet(b, a), "meet-commutative", ab);
      report.tally(sigma_join(a, b) == sigma_join(b, a), "join-commutative", ab);
      report.tally(sigma_join(a, sigma_meet(a, b)) == a, "absorption-join", ab);
      report.tally(sigma_meet(a, sigma_join(a, b)) == a, "absorption-meet", ab);
      for (const auto& c : vals) {
        std::string abc = ab + name(c);
        report.tally(sigma_meet(a, sigma_meet(b, c)) == sigma_meet(sigma_meet(a, b), c),
                     "meet-associative", abc);
        report.tally(sigma_join(a, sigma_join(b, c)) == sigma_join(sigma_join(a, b), c),
                     "join-associative", abc);
        report.tally(sigma_meet(a, sigma_join(b, c)) ==
                         sigma_join(sigma_meet(a, b), sigma_meet(a, c)),
                     "distributivity", abc);
      }
    }
  }
  // Frame law on eventually-constant sequences: finite prefix plus tail.
  const long prefix_len = 3;
  for (int mask = 0; mask < (1 << (prefix_len + 1)); ++mask) {
    auto seq = [mask](long i) {
      long bit = i < prefix_len ? i : prefix_len;  // tail is the last bit
      return (mask >> bit) & 1 ? sigma_top() : sigma_bottom();
    };
    // Eventually-constant: a bound of prefix_len + 1 indices is exact.
    for (const auto& a : std::vector<SigmaK>{sigma_bottom(), sigma_top()}) {
      SigmaK lhs = sigma_meet(a, sigma_omega_join_bounded(seq, prefix_len + 1));
      SigmaK rhs = sigma_omega_join_bounded(
          [&](long i) { return sigma_meet(a, seq(i)); }, prefix_len + 1);
      report.tally(lhs == rhs, "frame-law", "mask=" + std::to_string(mask) + " a=" + name(a));
    }
  }
  return report;
}

}  // namespace elgot
