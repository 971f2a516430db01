#include "descent/campaign.hpp"

#include <algorithm>
#include <sstream>

namespace descent {

namespace {

std::vector<std::string> make_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, 'a' + static_cast<char>(i)));
  return labels;
}

EdgeMatrix random_acyclic(Rng& rng, std::size_t n, std::uint32_t pct) {
  EdgeMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rng.chance(pct, 100)) m.set(i, j);
  return m;
}

EdgeMatrix random_succ(Rng& rng, std::size_t n, SuccShape shape) {
  EdgeMatrix m(n);
  switch (shape) {
    case SuccShape::Acyclic:
      return random_acyclic(rng, n, 35);
    case SuccShape::Random:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && rng.chance(25, 100)) m.set(i, j);
      return m;
    case SuccShape::WithCycle: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && rng.chance(20, 100)) m.set(i, j);
      if (n == 1) {
        m.set(0, 0);
        return m;
      }
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      for (std::size_t i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
      std::size_t len = 2 + rng.below(std::min<std::size_t>(2, n - 1));
      for (std::size_t i = 0; i < len; ++i) m.set(order[i], order[(i + 1) % len]);
      return m;
    }
  }
  return m;
}

// Least fixpoint making (succ, sub, succ0) satisfy both decomposition laws:
// succ0 collects the succ edges not justified through sub, and succ absorbs
// the edges law (b) then demands.
std::pair<EdgeMatrix, EdgeMatrix> close_decomposition(EdgeMatrix succ, const EdgeMatrix& sub) {
  std::size_t n = succ.size();
  for (;;) {
    EdgeMatrix succ0(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!succ.at(x, y)) continue;
        bool justified = false;
        for (std::size_t u = 0; u < n && !justified; ++u)
          if (sub.at(x, u) && (u == y || succ.at(u, y))) justified = true;
        if (!justified) succ0.set(x, y);
      }
    bool grew = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!succ0.at(x, y)) continue;
        for (std::size_t u = 0; u < n; ++u)
          if (sub.at(y, u) && !succ.at(x, u)) {
            succ.set(x, u);
            grew = true;
          }
      }
    if (!grew) return {std::move(succ), std::move(succ0)};
  }
}

}  // namespace

PrincipleInstance random_instance(Rng& rng, std::size_t min_carrier, std::size_t max_carrier,
                                  SuccShape shape, bool closed_succ0) {
  std::size_t n = static_cast<std::size_t>(
      rng.range(static_cast<int>(min_carrier), static_cast<int>(max_carrier)));
  EdgeMatrix sub = random_acyclic(rng, n, 30);
  EdgeMatrix succ = random_succ(rng, n, shape);
  if (!closed_succ0)
    return PrincipleInstance::make(make_labels(n), std::move(succ), std::move(sub));
  auto [closed, succ0] = close_decomposition(std::move(succ), sub);
  return PrincipleInstance::make(make_labels(n), std::move(closed), std::move(sub),
                                 std::move(succ0));
}

UpSeq random_upseq(Rng& rng, std::size_t carrier, std::size_t max_prefix,
                   std::size_t max_period) {
  UpSeq s;
  std::size_t plen = rng.below(max_prefix + 1);
  for (std::size_t i = 0; i < plen; ++i)
    s.prefix.push_back(static_cast<int>(rng.below(carrier)));
  std::size_t qlen = 1 + rng.below(max_period);
  for (std::size_t i = 0; i < qlen; ++i)
    s.period.push_back(static_cast<int>(rng.below(carrier)));
  return s;
}

std::vector<UpSeq> premise_family(Rng& rng, std::size_t carrier, std::size_t cap,
                                  std::size_t random_extra) {
  std::vector<UpSeq> family;
  if (carrier == 0) return family;
  std::vector<std::vector<int>> seqs =
      all_sequences(static_cast<int>(carrier), static_cast<int>(cap));
  for (const auto& a : seqs) {
    for (int c = 0; c < static_cast<int>(carrier); ++c) family.push_back(UpSeq{a, {c}});
    if (!a.empty()) family.push_back(UpSeq{{}, a});
  }
  for (std::size_t i = 0; i < random_extra; ++i)
    family.push_back(random_upseq(rng, carrier, cap + 1, cap));
  return family;
}

namespace {

SuccShape shape_for(std::size_t index) {
  switch (index % 3) {
    case 0: return SuccShape::Acyclic;
    case 1: return SuccShape::Random;
    default: return SuccShape::WithCycle;
  }
}

template <class Result, class Body>
void run_trials(Result& result, const CampaignConfig& cfg, Body&& body) {
  result.trials = cfg.count;
  result.master_seed = cfg.seed;
  std::vector<std::string> errors(cfg.count);
  par::for_index(cfg.count, cfg.mode, [&](std::size_t i) {
    std::uint64_t seed = mix_seed(cfg.seed, i);
    Rng rng(seed);
    std::string err = body(i, rng);
    if (!err.empty()) errors[i] = std::move(err);
  });
  for (std::size_t i = 0; i < cfg.count; ++i)
    if (!errors[i].empty())
      result.failures.push_back({i, mix_seed(cfg.seed, i), errors[i]});
}

}  // namespace

StpCampaignResult stp_campaign(const CampaignConfig& cfg) {
  StpCampaignResult result;
  std::vector<char> hyp(cfg.count, 0);
  run_trials(result, cfg, [&](std::size_t i, Rng& rng) -> std::string {
    PrincipleInstance inst =
        random_instance(rng, cfg.min_carrier, cfg.max_carrier, shape_for(i), true);
    StpReport report = stp_check(inst);
    if (report.hypotheses_ok()) hyp[i] = 1;
    if (!report.sound())
      return "hypotheses passed but " + std::to_string(report.conclusion_failures.size()) +
             " carrier points are not everywhere-wellfounded";
    // the conclusion must coincide with acyclicity of succ
    bool acyclic = is_acyclic(inst.succ());
    if (report.conclusion_ok() != acyclic)
      return "everywhere-wellfoundedness disagrees with acyclicity of succ";
    return {};
  });
  for (char h : hyp)
    if (h) ++result.hypotheses_passed;
  return result;
}

GlCampaignResult gl_campaign(const CampaignConfig& cfg) {
  GlCampaignResult result;
  std::vector<char> passed(cfg.count, 0);
  run_trials(result, cfg, [&](std::size_t i, Rng& rng) -> std::string {
    PrincipleInstance base =
        random_instance(rng, cfg.min_carrier, cfg.max_carrier, shape_for(i), true);
    std::size_t n = base.size();
    EdgeMatrix gg(n);
    switch (i % 3) {
      case 0:
        gg = *base.succ0();
        break;
      case 1:
        gg = base.succ();
        break;
      default:
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (base.succ().at(x, y) && rng.chance(60, 100)) gg.set(x, y);
        break;
    }
    PrincipleInstance inst = PrincipleInstance::make(base.labels(), base.succ(), base.sub(),
                                                     base.succ0(), std::move(gg));
    GlReport report = gl_check(inst);
    if (report.hypotheses_ok()) {
      passed[i] = 1;
      if (!report.delegate)
        return "graded hypotheses passed but no delegated decomposition report";
      if (!report.delegate->hypotheses_ok() || !report.delegate->conclusion_ok())
        return "graded check passed but the decomposition check on the induced relation "
               "failed";
    }
    if (!report.sound()) return "graded check soundness violated";
    return {};
  });
  for (char p : passed)
    if (p) ++result.gl_passed;
  return result;
}

Lemma44CampaignResult lemma44_campaign(const CampaignConfig& cfg) {
  Lemma44CampaignResult result;
  std::vector<std::size_t> tested(cfg.count, 0);
  run_trials(result, cfg, [&](std::size_t i, Rng& rng) -> std::string {
    PrincipleInstance inst =
        random_instance(rng, cfg.min_carrier, cfg.max_carrier, shape_for(i), false);
    std::vector<UpSeq> family = premise_family(rng, inst.size(), cfg.seq_cap, 16);
    tested[i] = family.size();

    // the two minimality premises must fail on exactly the same sequences
    for (const UpSeq& alpha : family) {
      bool tp_fails = min_exact(inst, alpha) && !swf_exact(inst, alpha);
      bool etp_fails = emin_exact(inst, alpha) && !swf_exact(inst, alpha);
      if (tp_fails != etp_fails)
        return "premise failure witnesses differ at " + to_string(alpha);
    }

    Lemma44Report report = lemma44_agreement(inst, family);
    if (!report.disagreements.empty())
      return "adapter disagrees with direct checker at " +
             to_string(report.disagreements.front());
    if (!report.identity_failures.empty())
      return "case-analysis obligation failed at " +
             to_string(report.identity_failures.front());
    return {};
  });
  for (std::size_t t : tested) result.sequences_tested += t;
  return result;
}

MbsCampaignResult mbs_campaign(const CampaignConfig& cfg) {
  MbsCampaignResult result;
  std::vector<char> outcome(cfg.count, 0);
  run_trials(result, cfg, [&](std::size_t i, Rng& rng) -> std::string {
    PrincipleInstance inst =
        random_instance(rng, cfg.min_carrier, cfg.max_carrier, shape_for(i), false);
    MbsResult mbs = minimal_bad_sequence(inst, inst.size() + 1);

    RelationSpec<int> spec;
    spec.holds = [&inst](const int& a, const int& b) { return inst.succ().at(a, b); };
    spec.carrier = std::vector<int>();
    for (std::size_t x = 0; x < inst.size(); ++x) spec.carrier->push_back(static_cast<int>(x));
    bool wellfounded = is_wellfounded_finite(spec).wellfounded;

    if (mbs.no_bad != wellfounded)
      return mbs.no_bad ? "NoBad returned on a non-wellfounded instance"
                        : "bad prefix returned on a wellfounded instance";
    if (!mbs.no_bad && !verify_pointwise_minimality(inst, mbs.prefix))
      return "returned prefix is not pointwise sub-minimal";
    outcome[i] = mbs.no_bad ? 1 : 2;
    return {};
  });
  for (char o : outcome) {
    if (o == 1) ++result.no_bad;
    if (o == 2) ++result.bad_found;
  }
  return result;
}

namespace {

// WithCycle instance whose cycle vertices have nothing sub-below them, so the
// cycle sequence stays inside S and premise 2 must fail on it.
PrincipleInstance unguarded_cycle_instance(Rng& rng, std::size_t min_carrier,
                                           std::size_t max_carrier) {
  std::size_t n = static_cast<std::size_t>(
      rng.range(static_cast<int>(std::max<std::size_t>(2, min_carrier)),
                static_cast<int>(std::max<std::size_t>(2, max_carrier))));
  EdgeMatrix succ = random_acyclic(rng, n, 25);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  std::size_t len = 2 + rng.below(std::min<std::size_t>(2, n - 1));
  std::vector<char> on_cycle(n, 0);
  for (std::size_t i = 0; i < len; ++i) {
    succ.set(order[i], order[(i + 1) % len]);
    on_cycle[order[i]] = 1;
  }
  EdgeMatrix sub(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (on_cycle[x]) continue;
    for (std::size_t y = 0; y < x; ++y)
      if (rng.chance(30, 100)) sub.set(x, y);
  }
  return PrincipleInstance::make(make_labels(n), std::move(succ), std::move(sub));
}

}  // namespace

BiCampaignResult bi_campaign(const CampaignConfig& cfg) {
  BiCampaignResult result;
  std::vector<char> kind(cfg.count, 0);
  run_trials(result, cfg, [&](std::size_t i, Rng& rng) -> std::string {
    bool wellfounded_case = i % 2 == 0;
    PrincipleInstance inst =
        wellfounded_case
            ? random_instance(rng, cfg.min_carrier, cfg.max_carrier, SuccShape::Acyclic, false)
            : unguarded_cycle_instance(rng, cfg.min_carrier, cfg.max_carrier);
    kind[i] = wellfounded_case ? 1 : 2;
    BiReport report = bar_induction_check(inst, cfg.seq_cap);
    if (!report.sound()) return "derivation disagrees with the exact empty-prefix check";
    if (wellfounded_case) {
      if (!report.premises_ok()) return "a premise failed on a wellfounded instance";
      if (!report.p_empty_exact || !report.p_empty_derived || report.derivation_truncated)
        return "empty prefix not derived secured on a wellfounded instance";
    } else {
      if (report.premises_ok()) return "all premises passed on an unguarded cycle";
      if (!report.premise2_witness && !report.premise3_witness)
        return "premise failed without a recorded witness";
    }
    return {};
  });
  for (char k : kind) {
    if (k == 1) ++result.wellfounded_trials;
    if (k == 2) ++result.cycle_trials;
  }
  return result;
}

Lemma34CampaignResult lemma34_campaign(const Lemma34CampaignConfig& cfg) {
  Lemma34CampaignResult result;
  result.trials = cfg.count;
  result.master_seed = cfg.seed;
  std::vector<std::string> errors(cfg.count);
  std::vector<char> hits(cfg.count, 0);

  par::for_index(cfg.count, cfg.mode, [&](std::size_t i) {
    std::uint64_t seed = mix_seed(cfg.seed, i);
    Rng rng(seed);
    auto fail = [&](const std::string& msg) { errors[i] = msg; };

    int base = rng.range(2, static_cast<int>(cfg.max_base));
    int max_len = rng.range(3, static_cast<int>(cfg.max_len));
    EdgeMatrix base_sub = random_acyclic(rng, static_cast<std::size_t>(base), 40);

    // pseudo-random open-predicate kernel, deterministic in the trial seed
    std::uint64_t bar_salt = rng.next();
    auto bar = [bar_salt](std::span<const int> c) {
      std::uint64_t h = bar_salt;
      for (int v : c) h = (h ^ static_cast<std::uint64_t>(v + 1)) * 0x100000001b3ULL;
      h ^= h >> 33;
      return h % 4 == 0;
    };
    Lemma34Instance inst = lemma34_transform(bar, base_sub, base, max_len);

    std::size_t n0 = rng.below(3);
    if (n0 > static_cast<std::size_t>(max_len) - 2) n0 = 0;
    std::size_t links = static_cast<std::size_t>(max_len) - n0;  // chain: gamma_0..gamma_links

    std::vector<std::vector<int>> chain(links + 1);
    for (std::size_t k = 0; k < n0; ++k)
      chain[0].push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(base))));
    for (std::size_t m = 1; m <= links; ++m) {
      chain[m] = chain[m - 1];
      chain[m].push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(base))));
    }

    LazySequence<std::vector<int>> gamma([chain](std::size_t k) {
      if (k >= chain.size())
        throw std::out_of_range("chain probed beyond its materialized length");
      return chain[k];
    });
    LazySequence<int> diag = diagonal(gamma, n0);

    // diagonal prefixes reproduce the chain members
    std::size_t reach = n0 + links;  // diag probed below this index
    for (std::size_t m = 0; m < links; ++m) {
      for (std::size_t j = 0; j < n0 + m; ++j)
        if (diag.at(j) != chain[m][j]) return fail("diagonal prefix differs from chain member");
      if (chain[m].size() != n0 + m) return fail("chain member has the wrong length");
    }

    // a sequence lex-below the diagonal maps to a sub_star-below prefix chain
    std::size_t p = rng.below(reach > 1 ? reach - 1 : 1);
    std::vector<int> drops;
    for (int y = 0; y < base; ++y)
      if (base_sub.at(static_cast<std::size_t>(diag.at(p)), static_cast<std::size_t>(y)))
        drops.push_back(y);
    if (!drops.empty()) {
      int y = drops[rng.below(drops.size())];
      std::vector<int> beta;
      for (std::size_t j = 0; j < reach; ++j) {
        if (j < p) beta.push_back(diag.at(j));
        else if (j == p) beta.push_back(y);
        else beta.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(base))));
      }
      std::size_t k = p < n0 ? 0 : p - n0 + 1;
      for (std::size_t m = 0; m <= links; ++m) {
        if (n0 + m > reach) break;
        std::vector<int> delta(beta.begin(), beta.begin() + static_cast<long>(n0 + m));
        if (m < k) {
          if (delta != chain[m]) return fail("prefix chains diverge before the drop point");
        } else {
          if (!inst.sub_star(chain[m], delta))
            return fail("lex-descent did not transfer to the sequence carrier");
        }
      }
    }

    // bar hit on a diagonal prefix kills the chain link at that height
    bool hit = false;
    std::vector<int> prefix;
    for (std::size_t n = 0; n < reach; ++n) {
      if (bar(prefix)) {
        hit = true;
        std::size_t m0 = n < n0 ? 0 : n - n0;
        if (m0 + 1 <= links && inst.succ(chain[m0], chain[m0 + 1]))
          return fail("chain still steps past a barred prefix");
      }
      prefix.push_back(diag.at(n));
    }
    hits[i] = hit ? 1 : 0;
  });

  for (std::size_t i = 0; i < cfg.count; ++i)
    if (!errors[i].empty())
      result.failures.push_back({i, mix_seed(cfg.seed, i), errors[i]});
  for (char h : hits)
    if (h) ++result.bar_hits;
  return result;
}

}  // namespace descent
