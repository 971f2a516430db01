#pragma once

// First-order term rewriting: matching, single steps in a deterministic
// order, normalization with fuel and loop detection, rule orientation
// reports, and an empirical termination survey over a ground universe.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "descent/parallel.hpp"
#include "descent/rpo.hpp"
#include "descent/term.hpp"

namespace descent {

// A rewrite system over a fixed signature. Construction enforces that no
// left side is a bare variable and right sides introduce no new variables.
class Trs {
 public:
  Trs(Signature sig, std::vector<Rule> rules);

  const Signature& sig() const { return sig_; }
  std::span<const Rule> rules() const { return rules_; }

 private:
  Signature sig_;
  std::vector<Rule> rules_;
};

// Syntactic matching: a substitution s with apply_substitution(pattern, s)
// == subject, if one exists. Nonlinear patterns require equal images.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

// Path from the root: empty = root, then child indices.
using Position = std::vector<int>;

std::string to_string(const Position& p);

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& replacement);

struct RewriteResult {
  Term term;
  std::size_t rule;
  Position position;
};

// Every rule applied at every position, ordered outermost-leftmost first
// (preorder positions) with rules in declaration order at each position.
std::vector<RewriteResult> rewrite_once(const Trs& trs, const Term& t);

struct DerivationStep {
  std::size_t rule;
  Position position;
  Term term;  // the term reached by this step
};

struct DerivationTrace {
  Term initial;
  std::vector<DerivationStep> steps;
};

struct Normalized {
  Term normal_form;
  DerivationTrace trace;
};
struct FuelExhausted {
  DerivationTrace trace;
};
struct LoopFound {
  DerivationTrace trace;
  std::size_t loop_start;  // chain index (initial = 0) of the term that reappears
};
using NormalizeResult = std::variant<Normalized, FuelExhausted, LoopFound>;

// Repeatedly takes the first rewrite_once result. Stops with Normalized when
// no rule applies, LoopFound when an earlier term of the chain reappears as
// an exact subterm of the current one (t ->+ C[t] pumps to an infinite
// derivation, so this is a certified nontermination witness; exact repeats
// are the C = hole case), FuelExhausted after fuel steps.
NormalizeResult normalize(const Trs& trs, const Term& t, std::size_t fuel);

// Every consecutive pair of the trace is one legal step with the recorded
// rule at the recorded position.
bool validate_derivation(const Trs& trs, const DerivationTrace& trace);

// Per-rule orientation under an RPO instance, with clause traces.
struct OrientationReport {
  struct Entry {
    std::size_t rule;
    bool oriented;
    std::vector<ClauseStep> trace;
  };
  std::vector<Entry> entries;
  bool all_oriented() const {
    for (const Entry& e : entries)
      if (!e.oriented) return false;
    return true;
  }
};

OrientationReport check_rule_orientation(const Trs& trs, const RpoInstance& inst);

// Normalizes every ground term of height <= depth and tallies outcomes.
// Witness lists are in universe (canonical) order; both modes agree exactly.
struct TerminationSurvey {
  std::size_t universe_size = 0;
  std::size_t normalized = 0;
  std::size_t fuel_exhausted = 0;
  std::vector<Term> loops;           // terms whose derivation looped
  std::vector<Term> exhausted;       // terms that ran out of fuel
};

TerminationSurvey empirical_termination(const Trs& trs, int depth, std::size_t fuel,
                                        par::Mode mode = par::Mode::Serial);

}  // namespace descent
