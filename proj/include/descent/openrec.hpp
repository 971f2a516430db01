#pragma once

// Interpreter for the prefix-splice recursion functional. A realizer f is
// handed the sequence plus a callback phi; phi(n, y, beta) answers the
// question "where does the sequence obtained by dropping to y at position n
// stop descending" by recursing on the spliced sequence when alpha_n is
// sub-above y, and answers 0 otherwise, exactly one clause each way. The
// functional's own termination is semantic, so evaluation carries an
// explicit budget and fails gracefully instead of diverging.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "descent/rng.hpp"
#include "descent/sequence.hpp"

namespace descent {

// Decidable step and part relations on plain integer elements. Unlike a
// PrincipleInstance carrier this domain may be unbounded.
struct PhiDomain {
  std::function<bool(int, int)> succ;  // strictly above
  std::function<bool(int, int)> sub;   // x sub-above y: y is a part of x
};

// Naturals under >, parts also by >.
PhiDomain nat_gt_domain();

struct PhiBudget {
  std::size_t max_depth = 16;     // nesting of recursive evaluations
  std::size_t max_probes = 4096;  // sequence elements sampled in total
};

// One recursive unfolding: the call at `depth` spliced (n, y) into its
// sequence and the nested evaluation answered f_result. The sequences are
// kept so a trace can be replayed against the defining equation.
struct PhiFrame {
  std::size_t depth = 0;
  std::size_t spliced_at = 0;
  int y = 0;
  std::size_t f_result = 0;
  LazySequence<int> parent;  // sequence of the asking call
  LazySequence<int> child;   // sequence the nested evaluation received
  LazySequence<int> beta;    // tail supplied by the realizer
};

struct PhiTrace {
  std::vector<PhiFrame> frames;  // in order of nested-call completion
};

// Checks each frame's child against splice(parent, n, y, beta) pointwise on
// the first `probes` indices: the recursion only ever evaluates on spliced
// sequences.
bool trace_replays(const PhiTrace& trace, std::size_t probes);

// The realizer contract: given alpha and a phi answering every admissible
// drop with a non-descent index of the spliced sequence, return a
// non-descent index of alpha.
using PhiCallback = std::function<std::size_t(std::size_t, int, const LazySequence<int>&)>;
using Realizer = std::function<std::size_t(const LazySequence<int>&, const PhiCallback&)>;

struct PhiOutcome {
  bool budget_exceeded = false;
  std::size_t index = 0;        // f's answer, when within budget
  bool conclusion_holds = false;  // not succ(alpha_index, alpha_{index+1})
  PhiTrace trace;
  std::string diagnostic;  // splice path when the budget was exceeded
};

// Evaluates the functional on alpha. A failed conclusion signals a broken
// realizer, never a broken interpreter, and is reported rather than thrown.
PhiOutcome phi(const PhiDomain& dom, const Realizer& f, const LazySequence<int>& alpha,
               const PhiBudget& budget);

// Reference realizers, executable documentation of the contract.
//
// scan: ignore phi, return the first non-descent index (searching at most
// scan_bound positions; on eventually-constant input the bound is never the
// binding constraint).
Realizer scan_realizer(const PhiDomain& dom, std::size_t scan_bound = 256);

// consult: ask phi once about dropping to alpha_1 - 1 at position 0 (the else
// clause answers 0 when that is not a drop), then scan alpha from the answer.
Realizer consult_realizer(const PhiDomain& dom, std::size_t scan_bound = 256);

// constant 0 regardless of input; violates the contract on any sequence
// descending at 0.
Realizer broken_realizer();

struct RealizerValidation {
  struct Violation {
    std::string alpha;  // rendered sequence
    std::size_t index = 0;
    bool budget_exceeded = false;
  };
  std::size_t tested = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct RealizerCampaignConfig {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  int value_bound = 32;        // sequence values in [0, value_bound)
  std::size_t max_prefix = 6;  // eventually-constant prefix length
  PhiBudget budget;
};

// Runs the realizer through the functional on random eventually-constant
// sequences and checks the non-descent conclusion each time.
RealizerValidation validate_realizer(const PhiDomain& dom, const Realizer& f,
                                     const RealizerCampaignConfig& cfg);

}  // namespace descent
