#pragma once

// Executable renditions of abstract termination principles over finite
// carriers: strict/extended wellfoundedness of probed sequences, lex-minimal
// scope checks, the sequence-algebra transform that turns an open predicate
// into a pair of step relations, diagonal sequences over coherent chains,
// premise adapters between the minimality styles, the decomposition-based
// termination principle and its graph-closure corollary, greedy minimal bad
// sequences, and a bar-induction premise check.
//
// Carriers are index sets 0..n-1 with display labels. Edge direction reads
// downward: succ.at(x,y) means x is succ-above y, sub.at(x,y) means y sits
// immediately below x. Instances with more than the carrier cap or a cyclic
// sub relation are rejected at construction.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "descent/relation.hpp"
#include "descent/sequence.hpp"

namespace descent {

inline constexpr std::size_t kCarrierCap = 12;

class PrincipleInstance {
 public:
  static PrincipleInstance make(std::vector<std::string> labels, EdgeMatrix succ,
                                EdgeMatrix sub, std::optional<EdgeMatrix> succ0 = {},
                                std::optional<EdgeMatrix> gg = {},
                                std::size_t carrier_cap = kCarrierCap);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const EdgeMatrix& succ() const { return succ_; }
  const EdgeMatrix& sub() const { return sub_; }
  const std::optional<EdgeMatrix>& succ0() const { return succ0_; }
  const std::optional<EdgeMatrix>& gg() const { return gg_; }

 private:
  PrincipleInstance() = default;
  std::vector<std::string> labels_;
  EdgeMatrix succ_, sub_;
  std::optional<EdgeMatrix> succ0_, gg_;
};

// Ultimately periodic sequence: prefix then period repeated forever. Every
// sequence-level check on these is decided exactly by scanning one period
// past the prefix; they are the artifact's decidable fragment of sequence
// space. period must be nonempty.
struct UpSeq {
  std::vector<int> prefix;
  std::vector<int> period;

  int at(std::size_t i) const {
    return i < prefix.size() ? prefix[i]
                             : period[(i - prefix.size()) % period.size()];
  }
  // scanning indices < probe_bound() covers every distinct (alpha_n, alpha_{n+1}) pair
  std::size_t probe_bound() const { return prefix.size() + period.size() + 1; }
  LazySequence<int> as_lazy() const;
  bool operator==(const UpSeq&) const = default;
};

std::string to_string(const UpSeq& s);

// prefix of alpha below n, then y, then the tail sequence
UpSeq up_splice(const UpSeq& alpha, std::size_t n, int y, const UpSeq& tail);

// ---- sequence-level checks -------------------------------------------------

// Least n <= fuel with not succ(alpha_n, alpha_{n+1}); nullopt (Unknown) if
// every probed pair descends. Probes alpha up to fuel+1.
std::optional<std::size_t> swf(const PrincipleInstance& inst,
                               const LazySequence<int>& alpha, std::size_t fuel);

// Exact on the periodic fragment: nullopt means alpha genuinely descends
// forever (it is a bad sequence).
std::optional<std::size_t> swf_exact(const PrincipleInstance& inst, const UpSeq& alpha);

// Extended wellfoundedness of a point: no infinite succ-descent starts at x.
// Exhaustive on the finite carrier. The counter chain, when present, is a
// pumping witness: a walk from x to a succ-cycle with the cycle entry repeated.
struct EwfResult {
  bool yes;
  std::vector<int> counter_chain;
};

EwfResult ewf(const PrincipleInstance& inst, int x);

// ewf for every carrier point at once (index = point).
std::vector<char> ewf_all(const PrincipleInstance& inst);

// Sequences lex-below alpha: divergence at n to a sub-smaller value, then a
// bounded family of tails (one constant tail per carrier element).
std::vector<LazySequence<int>> lex_scope(const PrincipleInstance& inst,
                                         const LazySequence<int>& alpha,
                                         std::size_t bound);

// Minimality of alpha within an explicitly supplied scope of lex-below
// sequences: every member must have a non-descent witness within fuel.
bool min_check(const PrincipleInstance& inst, const LazySequence<int>& alpha,
               std::span<const LazySequence<int>> scope, std::size_t fuel);

// Exact lex-minimality on the periodic fragment: no bad sequence is lex-below
// alpha (scanning divergence points one period past the prefix).
bool min_exact(const PrincipleInstance& inst, const UpSeq& alpha);

// Pointwise minimality: every y with alpha_{n-1} succ-above y (dropped at
// n = 0) and alpha_n sub-above y satisfies ewf(y).
bool emin_check(const PrincipleInstance& inst, const LazySequence<int>& alpha,
                std::size_t fuel);

bool emin_exact(const PrincipleInstance& inst, const UpSeq& alpha);

// ---- open predicate to step relations (sequence algebra) --------------------

// Carrier: sequences over 0..base_size-1 of length <= max_len (max_len >= 2).
// succ steps extend by one element while the bar kernel stays false on every
// prefix of the target; length-max_len sequences are succ-maximal, an
// artifact of truncating the sequence universe. sub_star compares pointwise
// below the shorter length at the first divergence.
struct Lemma34Instance {
  int base_size = 0;
  int max_len = 0;
  std::function<bool(std::span<const int>)> bar;
  EdgeMatrix base_sub;

  bool succ(std::span<const int> a, std::span<const int> b) const;
  bool sub_star(std::span<const int> a, std::span<const int> b) const;
};

Lemma34Instance lemma34_transform(std::function<bool(std::span<const int>)> bar,
                                  EdgeMatrix base_sub, int base_size, int max_len);

// All sequences over 0..base-1 of length <= max_len, shortest first, then
// lexicographic.
std::vector<std::vector<int>> all_sequences(int base, int max_len);

struct ChainCoherenceError : std::runtime_error {
  ChainCoherenceError(const std::string& msg, std::size_t index)
      : std::runtime_error(msg), index(index) {}
  std::size_t index;  // chain link where coherence first fails
};

// Diagonal of a coherent chain gamma of finite sequences with |gamma_0| = n0
// and gamma_m a strict one-step extension chain: result_i = gamma_0[i] for
// i < n0, and result_{n0+m} = gamma_{m+1}[n0+m]. Chain shape is validated
// lazily as probes reach each link; violations raise ChainCoherenceError.
LazySequence<int> diagonal(const LazySequence<std::vector<int>>& gamma, std::size_t n0);

// ---- premise adapters (minimality styles) -----------------------------------

// A premise checker evaluates one universally quantified premise instance at
// a sampled sequence. tp: lex-minimality implies a non-descent witness.
// etp: pointwise minimality implies a non-descent witness.
using PremiseChecker = std::function<bool(const UpSeq&)>;

PremiseChecker tp_premise_checker(const PrincipleInstance& inst);
PremiseChecker etp_premise_checker(const PrincipleInstance& inst);

enum class PremiseDirection {
  MinToEmin,  // from a lex-minimality checker, build a pointwise-minimality checker
  EminToMin,  // the converse, via spliced sequences
};

// Wraps an underlying checker of the source style into one of the target
// style, following the translation's case analysis. On the periodic fragment
// the adapter must agree with the directly computed target checker.
PremiseChecker lemma44_translate(const PrincipleInstance& inst, PremiseDirection dir,
                                 PremiseChecker underlying);

struct Lemma44Report {
  std::size_t tested = 0;
  std::vector<UpSeq> disagreements;       // adapter vs direct checker mismatches
  std::vector<UpSeq> identity_failures;   // case-analysis obligations that failed
  bool ok() const { return disagreements.empty() && identity_failures.empty(); }
};

// Runs both adapters against the direct checkers on the samples and verifies
// the case-analysis obligations at witness level:
//   pointwise minimality forces lex minimality (each lex-below splice gets a
//   witness from a non-descending boundary or from ewf of the dropped-to
//   point), and a lex-minimal bad sequence forces pointwise minimality (each
//   admissible drop splices to a lex-below sequence whose witness must land
//   inside the spliced tail).
Lemma44Report lemma44_agreement(const PrincipleInstance& inst,
                                std::span<const UpSeq> samples);

// ---- decomposition principle and graph-closure corollary --------------------

struct InstanceLawViolation {
  char law;  // 'a' or 'b'
  int x, y;
};

// Law (a): succ(x,y) implies some u below x has u == y or succ(u,y), or
// succ0(x,y). Law (b): succ0(x,y) implies succ(x,u) for every u below y.
std::vector<InstanceLawViolation> check_instance_laws(const EdgeMatrix& succ,
                                                      const EdgeMatrix& sub,
                                                      const EdgeMatrix& succ0);

// Hypotheses: both laws on the carrier, and no succ0-chain escapes inside
// A = { x : every y below x has ewf(y) }. Conclusion (asserted whenever the
// hypotheses hold): ewf(x) for every x. conclusion_failures nonempty with
// hypotheses_ok() is an implementation falsification, never expected.
struct StpReport {
  std::vector<InstanceLawViolation> law_violations;
  std::vector<char> in_A;
  std::vector<int> ewfa_failures;
  std::vector<int> conclusion_failures;

  bool laws_ok() const { return law_violations.empty(); }
  bool ewfa_ok() const { return ewfa_failures.empty(); }
  bool hypotheses_ok() const { return laws_ok() && ewfa_ok(); }
  bool conclusion_ok() const { return conclusion_failures.empty(); }
  bool sound() const { return !hypotheses_ok() || conclusion_ok(); }
};

StpReport stp_check(const PrincipleInstance& inst);  // requires succ0

// Derives succ0 from the auxiliary relation gg: induced(x,y) iff gg(x,y) and
// succ(x,u) for every u below y. Hypotheses: the decomposition split for the
// induced succ0 (law (a); law (b) holds by construction), sub acyclic, and
// every A-member gg-accessible inside A. When they hold, delegates to
// stp_check on the induced relation.
struct GlReport {
  EdgeMatrix induced_succ0;
  std::vector<InstanceLawViolation> split_violations;
  bool sub_acyclic = true;
  std::vector<int> accessibility_failures;
  std::optional<StpReport> delegate;

  bool hypotheses_ok() const {
    return split_violations.empty() && sub_acyclic && accessibility_failures.empty();
  }
  bool sound() const {
    if (!hypotheses_ok()) return true;
    return delegate && delegate->hypotheses_ok() && delegate->conclusion_ok();
  }
};

GlReport gl_check(const PrincipleInstance& inst);  // requires gg

// ---- minimal bad sequences ---------------------------------------------------

// Greedy construction of a length-L bad prefix that is pointwise sub-minimal:
// position by position, the first carrier element (in index order) that still
// extends to a bad sequence while no sub-smaller element does. no_bad iff no
// bad sequence exists at all (succ acyclic on the finite carrier).
struct MbsResult {
  bool no_bad;
  std::vector<int> prefix;
};

MbsResult minimal_bad_sequence(const PrincipleInstance& inst, std::size_t L);

// Exhaustive re-check: the prefix extends to a bad sequence and no position
// can be replaced by a sub-smaller element that still extends to one.
bool verify_pointwise_minimality(const PrincipleInstance& inst, std::span<const int> prefix);

// ---- bar induction -----------------------------------------------------------

// S(a): no position n of a admits a bad continuation that agrees with a below
// n and drops sub-below a_n at n. P(a): no bad sequence starts with a.
// Premises: S holds at the empty sequence; every (sampled periodic) sequence
// whose prefixes all satisfy S hits a prefix with P; and for S-sequences a of
// length <= L, P propagates from all S-successors a*x back to a. When all
// three hold, the bar recursion re-derives P(empty), bottoming out at
// prefixes where P already holds and truncating (reported) at length L.
struct BiReport {
  bool premise1 = true;
  bool premise2 = true;
  std::optional<UpSeq> premise2_witness;
  bool premise3 = true;
  std::optional<std::vector<int>> premise3_witness;
  bool p_empty_exact = false;
  bool p_empty_derived = false;
  bool derivation_truncated = false;
  std::size_t family_size = 0;

  bool premises_ok() const { return premise1 && premise2 && premise3; }

  // Premise 2 is checked on a sampled sequence family, so premises can pass
  // on an instance that still has a bad sequence; the derivation then runs
  // into the length cap and is inconclusive rather than wrong. What must
  // never happen: a derivation that completes claims P(empty) while a bad
  // sequence exists, or fails without hitting the cap.
  bool sound() const {
    if (!premises_ok()) return true;
    if (p_empty_derived) return p_empty_exact;
    return derivation_truncated;
  }
};

BiReport bar_induction_check(const PrincipleInstance& inst, std::size_t L);

// S and P on finite prefixes, exposed for oracles.
bool bi_prefix_safe(const PrincipleInstance& inst, std::span<const int> a);   // S
bool bi_prefix_secured(const PrincipleInstance& inst, std::span<const int> a);  // P

}  // namespace descent
