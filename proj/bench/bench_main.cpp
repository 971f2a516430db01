// Serial-vs-parallel comparison for the three index-parallel kernels: path
// order materialization over a ground universe, one randomized soundness
// campaign, and the ground-term normalization survey. Each kernel runs in
// both modes on an identical workload; the two results must agree exactly,
// and the wall times for both modes are printed side by side.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "descent/campaign.hpp"
#include "descent/parallel.hpp"
#include "descent/rewrite.hpp"
#include "descent/rpo.hpp"
#include "descent/term.hpp"

using namespace descent;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& body) {
  const auto t0 = Clock::now();
  body();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool agree) {
  std::cout << std::left << std::setw(26) << name << std::right << std::fixed
            << std::setprecision(1) << "serial " << std::setw(9) << serial_ms << " ms"
            << "   parallel " << std::setw(9) << parallel_ms << " ms"
            << "   speedup " << std::setprecision(2) << (serial_ms / parallel_ms) << "x   "
            << (agree ? "agree" : "MISMATCH") << "\n";
}

RpoInstance nat_ack_instance() {
  Signature sig({{"0", 0}, {"s", 1}, {"ack", 2}});
  const std::vector<SymbolId> descending = {2, 0, 1};
  std::vector<Lifting> status(3, Lifting::Lexicographic);
  PrecedenceStatus order = PrecedenceStatus::total(sig, descending, std::move(status));
  return RpoInstance{std::move(sig), std::move(order)};
}

// The three-rule ackermann system, built directly.
Trs ackermann_trs(const Signature& sig) {
  auto t0 = []() { return Term::app(0, {}); };
  auto ts = [](Term a) { return Term::app(1, {std::move(a)}); };
  auto tack = [](Term a, Term b) { return Term::app(2, {std::move(a), std::move(b)}); };
  const Term x = Term::var("x");
  const Term y = Term::var("y");
  std::vector<Rule> rules;
  rules.push_back({tack(t0(), y), ts(y)});
  rules.push_back({tack(ts(x), t0()), tack(x, ts(t0()))});
  rules.push_back({tack(ts(x), ts(y)), tack(x, tack(ts(x), y))});
  return Trs(sig, rules);
}

// Kernel 1: materialize the path order over every pair of ground terms.
// Rows are independent; each writes its own byte range.
std::size_t materialize_order(const RpoInstance& inst, const std::vector<Term>& universe,
                              par::Mode mode) {
  const std::size_t n = universe.size();
  std::vector<std::uint8_t> cells(n * n, 0);
  par::for_index(n, mode, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j)
      if (rpo_gt(inst, universe[i], universe[j])) cells[i * n + j] = 1;
  });
  return static_cast<std::size_t>(
      std::accumulate(cells.begin(), cells.end(), std::size_t{0}));
}

}  // namespace

int main() {
  std::cout << "modes: serial reference vs OpenMP (" << par::worker_count()
            << " workers, default " << par::to_string(par::default_mode()) << ")\n\n";

  const RpoInstance inst = nat_ack_instance();
  const std::vector<Term> universe = enumerate_ground_terms(inst.sig, 3);

  {
    std::size_t edges_serial = 0, edges_parallel = 0;
    const double s =
        time_ms([&] { edges_serial = materialize_order(inst, universe, par::Mode::Serial); });
    const double p =
        time_ms([&] { edges_parallel = materialize_order(inst, universe, par::Mode::Parallel); });
    row("order materialization", s, p, edges_serial == edges_parallel);
    std::cout << "  " << universe.size() << " ground terms, " << edges_serial
              << " ordered pairs\n";
  }

  {
    CampaignConfig cfg;
    cfg.seed = 5;
    cfg.count = 20000;
    StpCampaignResult serial, parallel;
    cfg.mode = par::Mode::Serial;
    const double s = time_ms([&] { serial = stp_campaign(cfg); });
    cfg.mode = par::Mode::Parallel;
    const double p = time_ms([&] { parallel = stp_campaign(cfg); });
    const bool agree = serial.trials == parallel.trials &&
                       serial.hypotheses_passed == parallel.hypotheses_passed &&
                       serial.failures.size() == parallel.failures.size();
    row("stp soundness campaign", s, p, agree);
    std::cout << "  " << serial.trials << " trials, " << serial.hypotheses_passed
              << " hypothesis passes\n";
  }

  {
    const Trs trs = ackermann_trs(inst.sig);
    TerminationSurvey serial, parallel;
    const double s =
        time_ms([&] { serial = empirical_termination(trs, 3, 256, par::Mode::Serial); });
    const double p =
        time_ms([&] { parallel = empirical_termination(trs, 3, 256, par::Mode::Parallel); });
    const bool agree = serial.universe_size == parallel.universe_size &&
                       serial.normalized == parallel.normalized &&
                       serial.fuel_exhausted == parallel.fuel_exhausted &&
                       serial.loops == parallel.loops && serial.exhausted == parallel.exhausted;
    row("normalization survey", s, p, agree);
    std::cout << "  " << serial.universe_size << " terms, " << serial.normalized
              << " normalized, " << serial.fuel_exhausted << " out of fuel\n";
  }

  return 0;
}
