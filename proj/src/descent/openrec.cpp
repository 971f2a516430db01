#include "descent/openrec.hpp"

#include <memory>
#include <sstream>

namespace descent {

PhiDomain nat_gt_domain() {
  return {[](int a, int b) { return a > b; }, [](int a, int b) { return a > b; }};
}

bool trace_replays(const PhiTrace& trace, std::size_t probes) {
  for (const PhiFrame& frame : trace.frames) {
    LazySequence<int> expect = splice(frame.parent, frame.spliced_at, frame.y, frame.beta);
    for (std::size_t i = 0; i < probes; ++i)
      if (frame.child.at(i) != expect.at(i)) return false;
  }
  return true;
}

namespace {

// Internal control-flow signal for budget exhaustion; converted into a
// PhiOutcome before phi returns.
struct BudgetHit {
  std::string path;
};

struct PhiEval {
  const PhiDomain& dom;
  const Realizer& f;
  const PhiBudget& budget;
  std::shared_ptr<std::size_t> probes = std::make_shared<std::size_t>(0);
  PhiTrace trace;

  LazySequence<int> metered(const LazySequence<int>& seq) {
    auto counter = probes;
    std::size_t cap = budget.max_probes;
    return LazySequence<int>([seq, counter, cap](std::size_t i) {
      if (++*counter > cap) throw BudgetHit{"sequence probe budget exhausted"};
      return seq.at(i);
    });
  }

  std::size_t eval(const LazySequence<int>& alpha, std::size_t depth, std::string path) {
    if (depth >= budget.max_depth)
      throw BudgetHit{path.empty() ? "recursion depth exhausted"
                                   : "recursion depth exhausted after " + path};
    PhiCallback callback = [this, &alpha, depth, &path](std::size_t n, int y,
                                                        const LazySequence<int>& beta) {
      if (!dom.sub(alpha.at(n), y)) return static_cast<std::size_t>(0);  // the else clause
      LazySequence<int> child = splice(alpha, n, y, beta);
      std::string step = "(" + std::to_string(n) + "," + std::to_string(y) + ")";
      std::size_t result =
          eval(child, depth + 1, path.empty() ? step : path + " -> " + step);
      trace.frames.push_back({depth + 1, n, y, result, alpha, child, beta});
      return result;
    };
    return f(metered(alpha), callback);
  }
};

}  // namespace

PhiOutcome phi(const PhiDomain& dom, const Realizer& f, const LazySequence<int>& alpha,
               const PhiBudget& budget) {
  PhiOutcome outcome;
  PhiEval eval{dom, f, budget};
  try {
    outcome.index = eval.eval(alpha, 0, "");
  } catch (const BudgetHit& hit) {
    outcome.budget_exceeded = true;
    outcome.diagnostic = hit.path;
    outcome.trace = std::move(eval.trace);
    return outcome;
  }
  outcome.trace = std::move(eval.trace);
  outcome.conclusion_holds = !dom.succ(alpha.at(outcome.index), alpha.at(outcome.index + 1));
  return outcome;
}

Realizer scan_realizer(const PhiDomain& dom, std::size_t scan_bound) {
  return [dom, scan_bound](const LazySequence<int>& alpha, const PhiCallback&) {
    for (std::size_t n = 0; n < scan_bound; ++n)
      if (!dom.succ(alpha.at(n), alpha.at(n + 1))) return n;
    return scan_bound;
  };
}

Realizer consult_realizer(const PhiDomain& dom, std::size_t scan_bound) {
  return [dom, scan_bound](const LazySequence<int>& alpha, const PhiCallback& callback) {
    int second = alpha.at(1);
    int drop = second > 0 ? second - 1 : 0;
    std::size_t from = callback(0, drop, LazySequence<int>::constant(0));
    for (std::size_t n = from; n < from + scan_bound; ++n)
      if (!dom.succ(alpha.at(n), alpha.at(n + 1))) return n;
    return from + scan_bound;
  };
}

Realizer broken_realizer() {
  return [](const LazySequence<int>&, const PhiCallback&) { return std::size_t{0}; };
}

RealizerValidation validate_realizer(const PhiDomain& dom, const Realizer& f,
                                     const RealizerCampaignConfig& cfg) {
  RealizerValidation report;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Rng rng(mix_seed(cfg.seed, i));
    std::vector<int> prefix;
    std::size_t len = rng.below(cfg.max_prefix + 1);
    for (std::size_t k = 0; k < len; ++k)
      prefix.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.value_bound))));
    int tail = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.value_bound)));

    std::ostringstream rendered;
    for (int v : prefix) rendered << v << ',';
    rendered << ';' << tail;

    LazySequence<int> alpha = LazySequence<int>::eventually_constant(prefix, tail);
    PhiOutcome outcome = phi(dom, f, alpha, cfg.budget);
    ++report.tested;
    if (outcome.budget_exceeded) {
      report.violations.push_back({rendered.str(), 0, true});
    } else if (!outcome.conclusion_holds) {
      report.violations.push_back({rendered.str(), outcome.index, false});
    }
  }
  return report;
}

}  // namespace descent
