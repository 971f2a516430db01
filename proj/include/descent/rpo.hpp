#pragma once

// Recursive path order with per-symbol argument liftings, its top-level
// decomposition (the subterm clause split off), decomposition law checking
// over finite universes, and precedence search that orients a rule set and
// emits a replayable certificate.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "descent/relation.hpp"
#include "descent/term.hpp"

namespace descent {

// Strict precedence on symbols (stored transitively closed) plus one lifting
// per symbol. Construction rejects cyclic precedences and incomplete status
// maps.
class PrecedenceStatus {
 public:
  // above_pairs lists f > g constraints by name; status covers every symbol.
  static PrecedenceStatus make(const Signature& sig,
                               std::span<const std::pair<std::string, std::string>> above_pairs,
                               std::vector<Lifting> status);

  // Total order: symbols[0] > symbols[1] > ...; all statuses lifting.
  static PrecedenceStatus total(const Signature& sig, std::span<const SymbolId> descending,
                                std::vector<Lifting> status);

  bool above(SymbolId f, SymbolId g) const { return prec_.at(f, g); }
  Lifting status(SymbolId f) const { return status_[f]; }
  const EdgeMatrix& precedence() const { return prec_; }
  std::span<const Lifting> statuses() const { return status_; }

 private:
  PrecedenceStatus(EdgeMatrix prec, std::vector<Lifting> status)
      : prec_(std::move(prec)), status_(std::move(status)) {}

  EdgeMatrix prec_;
  std::vector<Lifting> status_;
};

struct RpoInstance {
  Signature sig;
  PrecedenceStatus order;
};

// t > s in the recursive path order:
//   (i)   some immediate subterm of t is >= s,
//   (ii)  s = g(...), root(t) precedence-above g, and t > every argument of s,
//   (iii) s has the same root, t > every argument of s, and the argument
//         tuples compare under the root's lifting.
// Variables are minimal: nothing is below a variable except via (i) equality.
bool rpo_gt(const RpoInstance& inst, const Term& t, const Term& s);

inline bool rpo_geq(const RpoInstance& inst, const Term& t, const Term& s) {
  return t == s || rpo_gt(inst, t, s);
}

// The order with the subterm clause (i) removed; clauses (ii) and (iii) keep
// their inner comparisons in the full order. Splitting t > s into
// "some subterm of t is >= s, or t >0 s" is what the decomposition laws test.
bool rpo_decomp_gt0(const RpoInstance& inst, const Term& t, const Term& s);

// One step of a successful comparison: which clause closed lhs > rhs.
// Subgoal steps follow their parent (preorder).
struct ClauseStep {
  Term lhs, rhs;
  enum class Clause { Subterm, Precedence, SameRoot } clause;
};

const char* to_string(ClauseStep::Clause c);

// As rpo_gt, recording the winning derivation. trace is only meaningful when
// the result is true.
bool rpo_gt_traced(const RpoInstance& inst, const Term& t, const Term& s,
                   std::vector<ClauseStep>& trace);

// Replays a recorded derivation: every step's clause claim is re-checked
// structurally, with subgoals re-evaluated by rpo_gt.
bool revalidate_trace(const RpoInstance& inst, std::span<const ClauseStep> trace);

// Decomposition laws over a finite universe, for arbitrary succ/succ0 pairs:
//   (a) x > y  implies  some immediate subterm u of x has u >= y, or x >0 y;
//   (b) x >0 y implies  x > u for every immediate subterm u of y.
// The universe must be closed under immediate subterms.
struct DecompositionReport {
  struct Violation {
    char law;  // 'a' or 'b'
    Term x, y;
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

DecompositionReport check_decomposition_laws(
    std::span<const Term> universe,
    const std::function<bool(const Term&, const Term&)>& succ,
    const std::function<bool(const Term&, const Term&)>& succ0,
    par::Mode mode = par::Mode::Serial);

struct Rule {
  Term lhs, rhs;
};

struct SearchConfig {
  // one candidate = one (total precedence, status assignment) pair
  long candidate_budget = 100000;
  enum class StatusMode { Auto, LexOnly, MulOnly } status_mode = StatusMode::Auto;
};

struct RuleOrientation {
  std::size_t rule;
  std::vector<ClauseStep> trace;
};

// Orientation outcome. Yes carries the instance plus per-rule traces;
// NoInstance means the whole search space was exhausted (reason set when the
// rules are structurally unorientable); Budget means the candidate cap was
// hit first.
struct Certificate {
  enum class Status { Yes, NoInstance, Budget };
  Status status = Status::NoInstance;
  std::optional<RpoInstance> instance;
  std::vector<RuleOrientation> oriented;
  std::string reason;
  long candidates_tried = 0;
};

// Searches total precedences extending the canonical symbol order crossed
// with per-symbol statuses (Lexicographic enumerated before Multiset; only
// symbols of arity >= 2 vary, the lifting is immaterial below that). First
// success in this deterministic order wins. Rules whose left side is a
// variable or whose right side has extra variables are unorientable by any
// instance and short-circuit to NoInstance with a reason.
Certificate orient_trs(const Signature& sig, std::span<const Rule> rules,
                       const SearchConfig& cfg = {});

}  // namespace descent
