#include "descent/rpo.hpp"

#include <algorithm>
#include <map>

namespace descent {

PrecedenceStatus PrecedenceStatus::make(
    const Signature& sig, std::span<const std::pair<std::string, std::string>> above_pairs,
    std::vector<Lifting> status) {
  if (status.size() != sig.size())
    throw std::invalid_argument("precedence: status must cover every symbol");
  EdgeMatrix prec(sig.size());
  for (const auto& [f, g] : above_pairs) {
    auto fi = sig.find(f), gi = sig.find(g);
    if (!fi || !gi)
      throw std::invalid_argument("precedence: unknown symbol in pair (" + f + "," + g + ")");
    prec.set(*fi, *gi);
  }
  prec = prec.transitive_closure();
  if (!prec.is_irreflexive())
    throw std::invalid_argument("precedence: pairs induce a cycle");
  return PrecedenceStatus(std::move(prec), std::move(status));
}

PrecedenceStatus PrecedenceStatus::total(const Signature& sig,
                                         std::span<const SymbolId> descending,
                                         std::vector<Lifting> status) {
  if (status.size() != sig.size())
    throw std::invalid_argument("precedence: status must cover every symbol");
  EdgeMatrix prec(sig.size());
  for (std::size_t i = 0; i < descending.size(); ++i)
    for (std::size_t j = i + 1; j < descending.size(); ++j)
      prec.set(descending[i], descending[j]);
  if (!prec.is_irreflexive())
    throw std::invalid_argument("precedence: repeated symbol in total order");
  return PrecedenceStatus(std::move(prec), std::move(status));
}

namespace {

// Single recursive evaluator. When trace is nonnull, successful comparisons
// append their step before their subgoals' steps.
bool gt_rec(const RpoInstance& inst, const Term& t, const Term& s,
            bool allow_subterm_clause, std::vector<ClauseStep>* trace);

bool geq_rec(const RpoInstance& inst, const Term& t, const Term& s,
             std::vector<ClauseStep>* trace) {
  return t == s || gt_rec(inst, t, s, true, trace);
}

bool args_lifted(const RpoInstance& inst, SymbolId f, std::span<const Term> ts,
                 std::span<const Term> ss, std::vector<ClauseStep>* trace) {
  std::function<bool(const Term&, const Term&)> gt = [&inst](const Term& a, const Term& b) {
    return gt_rec(inst, a, b, true, nullptr);
  };
  std::function<bool(const Term&, const Term&)> eq = [](const Term& a, const Term& b) {
    return a == b;
  };
  if (!lifted_gt<Term>(inst.order.status(f), gt, eq, ts, ss)) return false;
  if (!trace) return true;
  // Re-derive the witnessing comparisons for the trace.
  if (inst.order.status(f) == Lifting::Lexicographic) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i] == ss[i]) continue;
      gt_rec(inst, ts[i], ss[i], true, trace);
      break;
    }
  } else {
    std::vector<char> used(ss.size(), 0);
    std::vector<const Term*> rest_xs;
    for (const Term& x : ts) {
      bool cancelled = false;
      for (std::size_t j = 0; j < ss.size(); ++j)
        if (!used[j] && x == ss[j]) {
          used[j] = 1;
          cancelled = true;
          break;
        }
      if (!cancelled) rest_xs.push_back(&x);
    }
    for (std::size_t j = 0; j < ss.size(); ++j) {
      if (used[j]) continue;
      for (const Term* x : rest_xs)
        if (gt_rec(inst, *x, ss[j], true, nullptr)) {
          gt_rec(inst, *x, ss[j], true, trace);
          break;
        }
    }
  }
  return true;
}

bool gt_rec(const RpoInstance& inst, const Term& t, const Term& s,
            bool allow_subterm_clause, std::vector<ClauseStep>* trace) {
  if (t.is_var()) return false;  // variables are minimal

  std::size_t mark = trace ? trace->size() : 0;
  auto rollback = [&] {
    if (trace) trace->erase(trace->begin() + static_cast<std::ptrdiff_t>(mark), trace->end());
  };

  if (allow_subterm_clause) {
    for (const Term& ti : t.args()) {
      if (trace) trace->push_back({t, s, ClauseStep::Clause::Subterm});
      if (ti == s || gt_rec(inst, ti, s, true, trace)) return true;
      rollback();
    }
  }

  if (s.is_var()) return false;  // only the subterm clause reaches variables

  SymbolId f = t.symbol(), g = s.symbol();
  if (f != g && inst.order.above(f, g)) {
    if (trace) trace->push_back({t, s, ClauseStep::Clause::Precedence});
    bool all = true;
    for (const Term& sj : s.args())
      if (!gt_rec(inst, t, sj, true, trace)) {
        all = false;
        break;
      }
    if (all) return true;
    rollback();
  }

  if (f == g) {
    if (trace) trace->push_back({t, s, ClauseStep::Clause::SameRoot});
    bool all = true;
    for (const Term& sj : s.args())
      if (!gt_rec(inst, t, sj, true, trace)) {
        all = false;
        break;
      }
    if (all && args_lifted(inst, f, t.args(), s.args(), trace)) return true;
    rollback();
  }

  return false;
}

}  // namespace

bool rpo_gt(const RpoInstance& inst, const Term& t, const Term& s) {
  return gt_rec(inst, t, s, true, nullptr);
}

bool rpo_decomp_gt0(const RpoInstance& inst, const Term& t, const Term& s) {
  return gt_rec(inst, t, s, false, nullptr);
}

const char* to_string(ClauseStep::Clause c) {
  switch (c) {
    case ClauseStep::Clause::Subterm: return "i";
    case ClauseStep::Clause::Precedence: return "ii";
    case ClauseStep::Clause::SameRoot: return "iii";
  }
  return "?";
}

bool rpo_gt_traced(const RpoInstance& inst, const Term& t, const Term& s,
                   std::vector<ClauseStep>& trace) {
  trace.clear();
  return gt_rec(inst, t, s, true, &trace);
}

bool revalidate_trace(const RpoInstance& inst, std::span<const ClauseStep> trace) {
  for (const ClauseStep& step : trace) {
    const Term& t = step.lhs;
    const Term& s = step.rhs;
    if (t.is_var()) return false;
    switch (step.clause) {
      case ClauseStep::Clause::Subterm: {
        bool found = false;
        for (const Term& ti : t.args())
          if (rpo_geq(inst, ti, s)) {
            found = true;
            break;
          }
        if (!found) return false;
        break;
      }
      case ClauseStep::Clause::Precedence: {
        if (s.is_var() || !inst.order.above(t.symbol(), s.symbol())) return false;
        for (const Term& sj : s.args())
          if (!rpo_gt(inst, t, sj)) return false;
        break;
      }
      case ClauseStep::Clause::SameRoot: {
        if (s.is_var() || t.symbol() != s.symbol()) return false;
        for (const Term& sj : s.args())
          if (!rpo_gt(inst, t, sj)) return false;
        std::function<bool(const Term&, const Term&)> gt = [&](const Term& a, const Term& b) {
          return rpo_gt(inst, a, b);
        };
        std::function<bool(const Term&, const Term&)> eq = [](const Term& a, const Term& b) {
          return a == b;
        };
        if (!lifted_gt<Term>(inst.order.status(t.symbol()), gt, eq, t.args(), s.args()))
          return false;
        break;
      }
    }
  }
  return !trace.empty();
}

DecompositionReport check_decomposition_laws(
    std::span<const Term> universe,
    const std::function<bool(const Term&, const Term&)>& succ,
    const std::function<bool(const Term&, const Term&)>& succ0, par::Mode mode) {
  EdgeMatrix gt = materialize<Term>(universe, succ, mode);
  EdgeMatrix gt0 = materialize<Term>(universe, succ0, mode);

  // index of each universe member; universe is closed under immediate
  // subterms, so lookups below must succeed
  std::map<Term, std::size_t, TermLess> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], i);
  std::vector<std::vector<std::size_t>> subs(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (const Term& u : immediate_subterms(universe[i])) {
      auto it = index.find(u);
      if (it == index.end())
        throw std::invalid_argument(
            "check_decomposition_laws: universe not closed under immediate subterms");
      subs[i].push_back(it->second);
    }

  std::size_t n = universe.size();
  std::vector<std::vector<DecompositionReport::Violation>> found(n);
  par::for_index(n, mode, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (gt.at(x, y)) {
        bool via_sub = false;
        for (std::size_t u : subs[x])
          if (u == y || gt.at(u, y)) {
            via_sub = true;
            break;
          }
        if (!via_sub && !gt0.at(x, y))
          found[x].push_back({'a', universe[x], universe[y]});
      }
      if (gt0.at(x, y)) {
        for (std::size_t u : subs[y])
          if (!gt.at(x, u)) {
            found[x].push_back({'b', universe[x], universe[y]});
            break;
          }
      }
    }
  });

  DecompositionReport report;
  for (auto& per_row : found)
    for (auto& v : per_row) report.violations.push_back(std::move(v));
  return report;
}

namespace {

// Structural preconditions: no variable left sides, no variables invented on
// the right. Returns a reason when violated.
std::optional<std::string> unorientable_reason(const Signature& sig,
                                               std::span<const Rule> rules) {
  for (std::size_t k = 0; k < rules.size(); ++k) {
    if (rules[k].lhs.is_var())
      return "rule " + std::to_string(k) + ": left-hand side is a variable";
    auto lhs_vars = variables_of(rules[k].lhs);
    for (const std::string& v : variables_of(rules[k].rhs))
      if (!lhs_vars.count(v))
        return "rule " + std::to_string(k) + ": variable " + v +
               " occurs only on the right-hand side";
  }
  (void)sig;
  return std::nullopt;
}

}  // namespace

Certificate orient_trs(const Signature& sig, std::span<const Rule> rules,
                       const SearchConfig& cfg) {
  Certificate cert;
  if (auto reason = unorientable_reason(sig, rules)) {
    cert.status = Certificate::Status::NoInstance;
    cert.reason = *reason;
    return cert;
  }
  if (rules.empty()) {
    // vacuous orientation: no constraints needed
    cert.status = Certificate::Status::Yes;
    cert.instance = RpoInstance{
        sig, PrecedenceStatus::make(sig, {}, std::vector<Lifting>(sig.size(), Lifting::Lexicographic))};
    return cert;
  }

  std::vector<SymbolId> order(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) order[i] = static_cast<SymbolId>(i);

  std::vector<SymbolId> vary;  // symbols whose lifting matters
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (sig.arity(static_cast<SymbolId>(i)) >= 2) vary.push_back(static_cast<SymbolId>(i));

  long status_count = 1;
  if (cfg.status_mode == SearchConfig::StatusMode::Auto)
    status_count = 1L << vary.size();

  do {
    for (long sc = 0; sc < status_count; ++sc) {
      if (cert.candidates_tried >= cfg.candidate_budget) {
        cert.status = Certificate::Status::Budget;
        return cert;
      }
      ++cert.candidates_tried;

      std::vector<Lifting> status(sig.size(), cfg.status_mode == SearchConfig::StatusMode::MulOnly
                                                  ? Lifting::Multiset
                                                  : Lifting::Lexicographic);
      if (cfg.status_mode == SearchConfig::StatusMode::Auto) {
        // tuple order lexicographic with Lex < Mul: last varying symbol flips fastest
        for (std::size_t j = 0; j < vary.size(); ++j)
          if ((sc >> (vary.size() - 1 - j)) & 1) status[vary[j]] = Lifting::Multiset;
      }

      RpoInstance inst{sig, PrecedenceStatus::total(sig, order, std::move(status))};
      bool all = true;
      for (const Rule& r : rules)
        if (!rpo_gt(inst, r.lhs, r.rhs)) {
          all = false;
          break;
        }
      if (all) {
        cert.status = Certificate::Status::Yes;
        for (std::size_t k = 0; k < rules.size(); ++k) {
          RuleOrientation ro{k, {}};
          rpo_gt_traced(inst, rules[k].lhs, rules[k].rhs, ro.trace);
          cert.oriented.push_back(std::move(ro));
        }
        cert.instance = std::move(inst);
        return cert;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));

  cert.status = Certificate::Status::NoInstance;
  return cert;
}

}  // namespace descent
