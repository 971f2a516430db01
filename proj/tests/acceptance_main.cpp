// Acceptance gate: one line per criterion, nonzero exit iff any fail.
//
// Each block is self-contained and states its own tolerances (time bounds,
// trial counts). Campaign failures carry replayable (index, seed) pairs, so a
// FAIL line plus the campaign seed is enough to reproduce.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "descent/campaign.hpp"
#include "descent/cli.hpp"
#include "descent/openrec.hpp"
#include "descent/principle.hpp"
#include "descent/relation.hpp"
#include "descent/rewrite.hpp"
#include "descent/rng.hpp"
#include "descent/rpo.hpp"
#include "descent/term.hpp"

using namespace descent;
using Clock = std::chrono::steady_clock;

namespace {

std::string data_path(const std::string& name) {
  return std::string(DESCENT_DATA_DIR) + "/" + name;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(0) << ms << " ms";
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// The flagship path-order instance: ack > 0 > s, everything lexicographic.
RpoInstance nat_ack_instance() {
  Signature sig({{"0", 0}, {"s", 1}, {"ack", 2}});
  const std::vector<SymbolId> descending = {2, 0, 1};
  std::vector<Lifting> status(3, Lifting::Lexicographic);
  PrecedenceStatus order = PrecedenceStatus::total(sig, descending, std::move(status));
  return RpoInstance{std::move(sig), std::move(order)};
}

// Random open term over {0,s,ack} with variables from {x,y}.
Term random_open_term(Rng& rng, int depth) {
  if (depth == 0 || rng.below(4) == 0) {
    if (rng.below(3) == 0) return Term::var(rng.below(2) == 0 ? "x" : "y");
    return Term::app(0, {});
  }
  if (rng.below(2) == 0) return Term::app(1, {random_open_term(rng, depth - 1)});
  return Term::app(2, {random_open_term(rng, depth - 1), random_open_term(rng, depth - 1)});
}

// One- or two-deep context with ground side terms drawn from the universe.
Context random_context(Rng& rng, const std::vector<Term>& universe) {
  Term skel = Context::hole();
  const std::size_t wraps = 1 + rng.below(2);
  for (std::size_t k = 0; k < wraps; ++k) {
    const Term side = universe[rng.below(universe.size())];
    switch (rng.below(3)) {
      case 0: skel = Term::app(1, {std::move(skel)}); break;
      case 1: skel = Term::app(2, {std::move(skel), side}); break;
      default: skel = Term::app(2, {side, std::move(skel)}); break;
    }
  }
  return Context(std::move(skel));
}

PrincipleInstance chain_instance() {
  EdgeMatrix succ(4), sub(4);
  succ.set(0, 1); succ.set(0, 2); succ.set(0, 3); succ.set(1, 2); succ.set(2, 3);
  sub.set(0, 2); sub.set(1, 3);
  return PrincipleInstance::make({"a", "b", "c", "d"}, std::move(succ), std::move(sub),
                                 std::nullopt, std::nullopt, 4);
}

PrincipleInstance bare_cycle_instance() {
  EdgeMatrix succ(2), sub(2);
  succ.set(0, 1); succ.set(1, 0);
  return PrincipleInstance::make({"a", "b"}, std::move(succ), std::move(sub), std::nullopt,
                                 std::nullopt, 2);
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&failed](int num, bool ok, const std::string& detail) {
    std::cout << "criterion " << std::setw(2) << num << ": " << (ok ? "PASS" : "FAIL") << " - "
              << detail << "\n";
    if (!ok) ++failed;
  };

  // 1. The three ackermann rules orient YES with a lexicographic status for
  //    ack in under a second, and every stored clause trace re-validates.
  {
    const auto t0 = Clock::now();
    std::ostringstream out, err;
    const int code = cmd_check(data_path("ackermann.trs"), CheckOptions{}, out, err);
    const double ms = ms_since(t0);

    const TrsFile file = load_trs_file(data_path("ackermann.trs"));
    const Certificate cert = orient_trs(file.sig, file.rules, {});
    bool traces_ok = cert.status == Certificate::Status::Yes && cert.oriented.size() == 3;
    bool ack_lex = false;
    if (traces_ok) {
      ack_lex = cert.instance->order.status(*file.sig.find("ack")) == Lifting::Lexicographic;
      for (const RuleOrientation& ro : cert.oriented)
        traces_ok = traces_ok && !ro.trace.empty() && revalidate_trace(*cert.instance, ro.trace);
    }
    const bool ok =
        code == kExitProven && contains(out.str(), "YES") && ack_lex && traces_ok && ms < 1000.0;
    report(1, ok, "ackermann orients YES, ack lexicographic, 3 traces revalidate, " + fmt_ms(ms));
  }

  // 2. On the full ground universe of {0,s,ack} up to height 3, the
  //    materialized order is irreflexive, transitive, acyclic, and closed
  //    under 100 sampled substitutions and 100 sampled contexts, in < 30 s.
  {
    const auto t0 = Clock::now();
    const RpoInstance inst = nat_ack_instance();
    const std::vector<Term> universe = enumerate_ground_terms(inst.sig, 3);
    const std::size_t n = universe.size();

    std::vector<char> gt(n * n, 0);
    EdgeMatrix edges(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rpo_gt(inst, universe[i], universe[j])) {
          gt[i * n + j] = 1;
          edges.set(i, j);
        }

    bool irreflexive = true;
    for (std::size_t i = 0; i < n; ++i) irreflexive = irreflexive && !gt[i * n + i];
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (!gt[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (gt[j * n + k] && !gt[i * n + k]) {
            transitive = false;
            break;
          }
      }
    const bool acyclic = is_acyclic(edges);

    Rng rng(42);
    std::size_t sampled = 0;
    bool closed = true;
    for (std::size_t attempts = 0; sampled < 100 && attempts < 200000 && closed; ++attempts) {
      const Term t = random_open_term(rng, 3);
      const Term s = random_open_term(rng, 2);
      if (!rpo_gt(inst, t, s)) continue;
      Substitution sigma;
      sigma.bindings.emplace("x", universe[rng.below(n)]);
      sigma.bindings.emplace("y", universe[rng.below(n)]);
      closed = closed && rpo_gt(inst, apply_substitution(t, sigma), apply_substitution(s, sigma));
      const Context c = random_context(rng, universe);
      closed = closed && rpo_gt(inst, c.plug(t), c.plug(s));
      ++sampled;
    }

    const double ms = ms_since(t0);
    const bool ok = n == 183 && irreflexive && transitive && acyclic && closed &&
                    sampled == 100 && ms < 30000.0;
    std::ostringstream d;
    d << "order laws on " << n << " ground terms, " << sampled
      << " substitution+context closures, " << fmt_ms(ms);
    report(2, ok, d.str());
  }

  // 3. Decomposition laws (a) and (b) hold for (gt, gt0, immediate subterm)
  //    on the same universe; dropping the same-root clause from gt0 must be
  //    caught as a law (a) violation.
  {
    const RpoInstance inst = nat_ack_instance();
    const std::vector<Term> universe = enumerate_ground_terms(inst.sig, 3);
    auto gt_fn = [&inst](const Term& a, const Term& b) { return rpo_gt(inst, a, b); };
    auto gt0_fn = [&inst](const Term& a, const Term& b) { return rpo_decomp_gt0(inst, a, b); };
    const DecompositionReport full = check_decomposition_laws(universe, gt_fn, gt0_fn);

    auto gt0_no_same_root = [&inst](const Term& a, const Term& b) {
      if (!a.is_app() || !b.is_app() || a.symbol() == b.symbol()) return false;
      if (!inst.order.above(a.symbol(), b.symbol())) return false;
      for (const Term& u : b.args())
        if (!rpo_gt(inst, a, u)) return false;
      return true;
    };
    const DecompositionReport broken =
        check_decomposition_laws(universe, gt_fn, gt0_no_same_root);
    const bool all_law_a =
        !broken.violations.empty() &&
        std::all_of(broken.violations.begin(), broken.violations.end(),
                    [](const DecompositionReport::Violation& v) { return v.law == 'a'; });

    const bool ok = full.ok() && all_law_a;
    std::ostringstream d;
    d << "laws (a),(b) clean on " << universe.size() << " terms; same-root clause removal trips law (a) at "
      << broken.violations.size() << " pairs";
    report(3, ok, d.str());
  }

  // 4. Decomposition-principle soundness: 10^4 random instances (carrier <= 6,
  //    sub acyclic); every hypothesis pass forces everywhere-wellfoundedness.
  //    Zero counterexamples, < 60 s, seeds recorded in any failure.
  {
    const auto t0 = Clock::now();
    CampaignConfig cfg;
    cfg.seed = 97;
    cfg.count = 10000;
    const StpCampaignResult r = stp_campaign(cfg);
    const double ms = ms_since(t0);
    const bool ok = r.ok() && r.trials == 10000 && r.hypotheses_passed > 0 && ms < 60000.0;
    std::ostringstream d;
    d << "stp campaign: trials=" << r.trials << " hypotheses_passed=" << r.hypotheses_passed
      << " failures=" << r.failures.size() << " seed=" << r.master_seed << ", " << fmt_ms(ms);
    report(4, ok, d.str());
  }

  // 5. Graded-comparison reduction: a passing gl_check must delegate to a
  //    passing decomposition check on the induced succ0, 10^3 instances.
  {
    CampaignConfig cfg;
    cfg.seed = 101;
    cfg.count = 1000;
    const GlCampaignResult r = gl_campaign(cfg);
    const bool ok = r.ok() && r.trials == 1000 && r.gl_passed > 0;
    std::ostringstream d;
    d << "gl campaign: trials=" << r.trials << " gl_passed=" << r.gl_passed
      << " failures=" << r.failures.size() << " seed=" << r.master_seed;
    report(5, ok, d.str());
  }

  // 6. Sequence-carrier construction fidelity: 10^3 random coherent chains
  //    (base carrier <= 4, length cap 6); the transcribed bookkeeping
  //    identities and the end-game inference hold on every chain.
  {
    Lemma34CampaignConfig cfg;
    cfg.seed = 103;
    cfg.count = 1000;
    const Lemma34CampaignResult r = lemma34_campaign(cfg);
    const bool ok = r.ok() && r.trials == 1000 && r.bar_hits > 0;
    std::ostringstream d;
    d << "lemma34 campaign: trials=" << r.trials << " bar_hits=" << r.bar_hits
      << " failures=" << r.failures.size() << " seed=" << r.master_seed;
    report(6, ok, d.str());
  }

  // 7. Premise adapter agreement: on 10^3 random instances the two minimality
  //    premise checkers agree, with matching witnesses on the bounded fragment.
  {
    CampaignConfig cfg;
    cfg.seed = 107;
    cfg.count = 1000;
    const Lemma44CampaignResult r = lemma44_campaign(cfg);
    const bool ok = r.ok() && r.trials == 1000 && r.sequences_tested >= 1000;
    std::ostringstream d;
    d << "lemma44 campaign: trials=" << r.trials << " sequences_tested=" << r.sequences_tested
      << " failures=" << r.failures.size() << " seed=" << r.master_seed;
    report(7, ok, d.str());
  }

  // 8. Minimal bad sequence: over 10^3 random instances, NoBad coincides with
  //    wellfoundedness, and every returned prefix verifies as pointwise
  //    minimal by exhaustive alternative checking.
  {
    CampaignConfig cfg;
    cfg.seed = 109;
    cfg.count = 1000;
    const MbsCampaignResult r = mbs_campaign(cfg);
    const bool ok =
        r.ok() && r.trials == 1000 && r.bad_found > 0 && r.no_bad > 0 &&
        r.bad_found + r.no_bad == r.trials;
    std::ostringstream d;
    d << "mbs campaign: trials=" << r.trials << " bad_found=" << r.bad_found
      << " no_bad=" << r.no_bad << " failures=" << r.failures.size() << " seed=" << r.master_seed;
    report(8, ok, d.str());
  }

  // 9. Bar induction premises: wellfounded instances verify all three premises
  //    and derive the empty prefix secured; an unguarded cycle fails a premise
  //    with a recorded witness. Campaign plus two pinned instances.
  {
    CampaignConfig cfg;
    cfg.seed = 113;
    cfg.count = 200;
    const BiCampaignResult r = bi_campaign(cfg);

    const BiReport wf = bar_induction_check(chain_instance(), 3);
    const bool wf_ok = wf.premise1 && wf.premise2 && wf.premise3 && wf.p_empty_derived;
    const BiReport cyc = bar_induction_check(bare_cycle_instance(), 3);
    const bool cyc_ok = !cyc.premise2 && cyc.premise2_witness.has_value();

    const bool ok = r.ok() && r.wellfounded_trials > 0 && r.cycle_trials > 0 &&
                    r.wellfounded_trials + r.cycle_trials == r.trials && wf_ok && cyc_ok;
    std::ostringstream d;
    d << "bi campaign: trials=" << r.trials << " wellfounded=" << r.wellfounded_trials
      << " cycle=" << r.cycle_trials << " failures=" << r.failures.size()
      << " seed=" << r.master_seed << "; pinned chain derives P(empty), pinned cycle fails premise 2 with witness";
    report(9, ok, d.str());
  }

  // 10. Open-recursion fidelity: the scan realizer over 200 random
  //     eventually-constant sequences on (N<32, >) always lands on an index
  //     with no descent, every trace replays as exact splice recursions, and
  //     the constant-0 realizer is flagged.
  {
    const PhiDomain dom = nat_gt_domain();
    const Realizer scan = scan_realizer(dom);
    std::size_t replayed = 0;
    bool all_ok = true;
    for (std::size_t i = 0; i < 200 && all_ok; ++i) {
      Rng rng(mix_seed(777, i));
      std::vector<int> prefix;
      const std::size_t len = rng.below(7);
      for (std::size_t k = 0; k < len; ++k) prefix.push_back(static_cast<int>(rng.below(32)));
      const int tail = static_cast<int>(rng.below(32));
      const LazySequence<int> alpha = LazySequence<int>::eventually_constant(prefix, tail);

      const PhiOutcome res = phi(dom, scan, alpha, PhiBudget{});
      all_ok = !res.budget_exceeded && res.conclusion_holds &&
               !dom.succ(alpha.at(res.index), alpha.at(res.index + 1)) &&
               trace_replays(res.trace, 64);
      if (all_ok) ++replayed;
    }

    const RealizerValidation broken = validate_realizer(dom, broken_realizer(), {});
    const bool ok = all_ok && replayed == 200 && broken.tested == 200 && !broken.ok();
    std::ostringstream d;
    d << "scan realizer: " << replayed << "/200 sequences hit a non-descent index with replaying traces; "
      << "constant-0 realizer flagged " << broken.violations.size() << " times";
    report(10, ok, d.str());
  }

  // 11. Certificates against execution: every corpus system certified YES
  //     normalizes its whole height<=2 ground universe with zero loops; the
  //     self-embedding system loops and is never certified.
  {
    bool ok = true;
    std::ostringstream d;
    for (const char* f : {"ackermann.trs", "plus.trs", "double.trs"}) {
      const TrsFile file = load_trs_file(data_path(f));
      const Certificate cert = orient_trs(file.sig, file.rules, {});
      const Trs trs(file.sig, file.rules);
      const TerminationSurvey sv = empirical_termination(trs, 2, 256);
      const bool this_ok = cert.status == Certificate::Status::Yes && sv.loops.empty() &&
                           sv.fuel_exhausted == 0 && sv.normalized == sv.universe_size;
      ok = ok && this_ok;
      d << f << " YES+" << sv.normalized << "/" << sv.universe_size << " normalized; ";
    }
    const TrsFile se = load_trs_file(data_path("selfembed.trs"));
    const Certificate cert = orient_trs(se.sig, se.rules, {});
    const Trs trs(se.sig, se.rules);
    const TerminationSurvey sv = empirical_termination(trs, 2, 64);
    ok = ok && cert.status != Certificate::Status::Yes && !sv.loops.empty();
    d << "selfembed.trs uncertified with " << sv.loops.size() << " looping terms";
    report(11, ok, d.str());
  }

  if (failed == 0)
    std::cout << "acceptance: all 11 criteria passed\n";
  else
    std::cout << "acceptance: " << failed << " criterion(s) FAILED\n";
  return failed == 0 ? 0 : 1;
}
