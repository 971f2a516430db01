// Randomized soundness campaigns over principle-lab instances.
//
// Every campaign draws independent per-trial seeds from a master seed, so a
// failure is replayable from the (index, seed) pair in its report. Trials are
// independent and run through the parallel kernel.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent/parallel.hpp"
#include "descent/principle.hpp"
#include "descent/rng.hpp"

namespace descent {

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t min_carrier = 1;
  std::size_t max_carrier = 6;
  std::size_t seq_cap = 3;  // length cap L for sequence-indexed checks
  par::Mode mode = par::default_mode();
};

struct CampaignFailure {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string message;
};

// How the succ relation of a random instance is shaped.
enum class SuccShape {
  Random,    // arbitrary digraph
  Acyclic,   // edges only from higher to lower vertex: wellfounded by design
  WithCycle  // arbitrary digraph plus one forced cycle
};

// Random instance with acyclic sub. When `closed_succ0` is set, succ is
// closed so that (succ, sub, succ0) satisfies both decomposition laws by
// construction; otherwise succ0 is left unset.
PrincipleInstance random_instance(Rng& rng, std::size_t min_carrier, std::size_t max_carrier,
                                  SuccShape shape, bool closed_succ0);

// Ultimately periodic sequence with values drawn from [0, carrier).
UpSeq random_upseq(Rng& rng, std::size_t carrier, std::size_t max_prefix,
                   std::size_t max_period);

// Bounded family of sequences used when a campaign quantifies over alpha:
// every prefix of length <= cap continued by every constant, every pure
// period of length <= cap, plus random draws.
std::vector<UpSeq> premise_family(Rng& rng, std::size_t carrier, std::size_t cap,
                                  std::size_t random_extra);

struct StpCampaignResult {
  std::size_t trials = 0;
  std::size_t hypotheses_passed = 0;
  std::uint64_t master_seed = 0;
  std::vector<CampaignFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Soundness of the decomposition principle: whenever the hypotheses pass,
// every carrier point must come out everywhere-wellfounded.
StpCampaignResult stp_campaign(const CampaignConfig& cfg);

struct GlCampaignResult {
  std::size_t trials = 0;
  std::size_t gl_passed = 0;
  std::uint64_t master_seed = 0;
  std::vector<CampaignFailure> failures;
  bool ok() const { return failures.empty(); }
};

// A passing graded-comparison check must delegate to a passing decomposition
// check on the induced succ0.
GlCampaignResult gl_campaign(const CampaignConfig& cfg);

struct Lemma44CampaignResult {
  std::size_t trials = 0;
  std::size_t sequences_tested = 0;
  std::uint64_t master_seed = 0;
  std::vector<CampaignFailure> failures;
  bool ok() const { return failures.empty(); }
};

// The two minimality premises must fail on exactly the same sequences, and
// the premise adapters must agree with the direct checkers.
Lemma44CampaignResult lemma44_campaign(const CampaignConfig& cfg);

struct MbsCampaignResult {
  std::size_t trials = 0;
  std::size_t bad_found = 0;
  std::size_t no_bad = 0;
  std::uint64_t master_seed = 0;
  std::vector<CampaignFailure> failures;
  bool ok() const { return failures.empty(); }
};

// NoBad must coincide with wellfoundedness of succ; returned prefixes must
// verify as pointwise minimal.
MbsCampaignResult mbs_campaign(const CampaignConfig& cfg);

struct BiCampaignResult {
  std::size_t trials = 0;
  std::size_t wellfounded_trials = 0;
  std::size_t cycle_trials = 0;
  std::uint64_t master_seed = 0;
  std::vector<CampaignFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Wellfounded instances must verify all three bar-induction premises and
// derive the empty prefix secured; instances with a cycle not guarded by sub
// must fail a premise with a recorded witness.
BiCampaignResult bi_campaign(const CampaignConfig& cfg);

struct Lemma34CampaignResult {
  std::size_t trials = 0;
  std::size_t bar_hits = 0;
  std::uint64_t master_seed = 0;
  std::vector<CampaignFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct Lemma34CampaignConfig {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_base = 4;   // base carrier size
  std::size_t max_len = 6;    // sequence length cap
  par::Mode mode = par::default_mode();
};

// Sequence-algebra bookkeeping: chain shapes, diagonal prefixes, transfer of
// lex-descent to the sequence carrier, and the bar end-game inference.
Lemma34CampaignResult lemma34_campaign(const Lemma34CampaignConfig& cfg);

}  // namespace descent
