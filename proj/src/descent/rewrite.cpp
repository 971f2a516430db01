#include "descent/rewrite.hpp"

#include <map>
#include <sstream>

namespace descent {

Trs::Trs(Signature sig, std::vector<Rule> rules)
    : sig_(std::move(sig)), rules_(std::move(rules)) {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const Rule& r = rules_[k];
    if (r.lhs.is_var())
      throw std::invalid_argument("trs: rule " + std::to_string(k) +
                                  " has a variable left-hand side");
    auto lhs_vars = variables_of(r.lhs);
    for (const std::string& v : variables_of(r.rhs))
      if (!lhs_vars.count(v))
        throw std::invalid_argument("trs: rule " + std::to_string(k) + " introduces variable " +
                                    v + " on the right-hand side");
    if (!well_formed(sig_, r.lhs) || !well_formed(sig_, r.rhs))
      throw std::invalid_argument("trs: rule " + std::to_string(k) +
                                  " is not well-formed over the signature");
  }
}

namespace {

bool match_rec(const Term& pattern, const Term& subject, Substitution& s) {
  if (pattern.is_var()) {
    auto [it, fresh] = s.bindings.emplace(pattern.var_name(), subject);
    return fresh || it->second == subject;
  }
  if (subject.is_var() || pattern.symbol() != subject.symbol()) return false;
  auto ps = pattern.args(), ss = subject.args();
  if (ps.size() != ss.size()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (!match_rec(ps[i], ss[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  Substitution s;
  if (!match_rec(pattern, subject, s)) return std::nullopt;
  return s;
}

std::string to_string(const Position& p) {
  if (p.empty()) return "root";
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << '.';
    out << p[i];
  }
  return out.str();
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (int i : p) cur = &cur->args()[i];
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
  if (p.empty()) return replacement;
  std::vector<Term> args(t.args().begin(), t.args().end());
  Position rest(p.begin() + 1, p.end());
  args[p[0]] = replace_at(args[p[0]], rest, replacement);
  return Term::app(t.symbol(), std::move(args));
}

namespace {

void rewrite_positions(const Trs& trs, const Term& whole, const Term& here, Position& pos,
                       std::vector<RewriteResult>& out) {
  for (std::size_t k = 0; k < trs.rules().size(); ++k) {
    const Rule& r = trs.rules()[k];
    if (auto s = match(r.lhs, here)) {
      out.push_back({replace_at(whole, pos, apply_substitution(r.rhs, *s)), k, pos});
    }
  }
  for (std::size_t i = 0; i < here.args().size(); ++i) {
    pos.push_back(static_cast<int>(i));
    rewrite_positions(trs, whole, here.args()[i], pos, out);
    pos.pop_back();
  }
}

}  // namespace

std::vector<RewriteResult> rewrite_once(const Trs& trs, const Term& t) {
  std::vector<RewriteResult> out;
  Position pos;
  rewrite_positions(trs, t, t, pos, out);
  return out;
}

NormalizeResult normalize(const Trs& trs, const Term& t, std::size_t fuel) {
  DerivationTrace trace{t, {}};
  std::vector<Term> chain{t};
  Term cur = t;
  for (std::size_t step = 0; step < fuel; ++step) {
    std::vector<RewriteResult> nexts = rewrite_once(trs, cur);
    if (nexts.empty()) return Normalized{cur, std::move(trace)};
    RewriteResult& first = nexts.front();
    trace.steps.push_back({first.rule, first.position, first.term});
    cur = first.term;
    // An earlier chain term inside the current one certifies nontermination:
    // the suffix derivation rebuilds that term inside a context and pumps.
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (contains_subterm(cur, chain[i])) return LoopFound{std::move(trace), i};
    chain.push_back(cur);
  }
  if (rewrite_once(trs, cur).empty()) return Normalized{cur, std::move(trace)};
  return FuelExhausted{std::move(trace)};
}

bool validate_derivation(const Trs& trs, const DerivationTrace& trace) {
  const Term* cur = &trace.initial;
  for (const DerivationStep& step : trace.steps) {
    if (step.rule >= trs.rules().size()) return false;
    const Rule& r = trs.rules()[step.rule];
    const Term* redex = cur;
    for (int i : step.position) {
      if (redex->is_var() || i < 0 || static_cast<std::size_t>(i) >= redex->args().size())
        return false;
      redex = &redex->args()[i];
    }
    auto s = match(r.lhs, *redex);
    if (!s) return false;
    if (replace_at(*cur, step.position, apply_substitution(r.rhs, *s)) != step.term)
      return false;
    cur = &step.term;
  }
  return true;
}

OrientationReport check_rule_orientation(const Trs& trs, const RpoInstance& inst) {
  OrientationReport report;
  for (std::size_t k = 0; k < trs.rules().size(); ++k) {
    OrientationReport::Entry entry{k, false, {}};
    entry.oriented = rpo_gt_traced(inst, trs.rules()[k].lhs, trs.rules()[k].rhs, entry.trace);
    if (!entry.oriented) entry.trace.clear();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

TerminationSurvey empirical_termination(const Trs& trs, int depth, std::size_t fuel,
                                        par::Mode mode) {
  std::vector<Term> universe = enumerate_ground_terms(trs.sig(), depth);
  enum class Outcome : std::uint8_t { Normal, Fuel, Loop };
  std::vector<Outcome> outcomes(universe.size(), Outcome::Normal);

  par::for_index(universe.size(), mode, [&](std::size_t i) {
    NormalizeResult r = normalize(trs, universe[i], fuel);
    if (std::holds_alternative<Normalized>(r))
      outcomes[i] = Outcome::Normal;
    else if (std::holds_alternative<FuelExhausted>(r))
      outcomes[i] = Outcome::Fuel;
    else
      outcomes[i] = Outcome::Loop;
  });

  TerminationSurvey survey;
  survey.universe_size = universe.size();
  for (std::size_t i = 0; i < universe.size(); ++i) {
    switch (outcomes[i]) {
      case Outcome::Normal: ++survey.normalized; break;
      case Outcome::Fuel:
        ++survey.fuel_exhausted;
        survey.exhausted.push_back(universe[i]);
        break;
      case Outcome::Loop: survey.loops.push_back(universe[i]); break;
    }
  }
  return survey;
}

}  // namespace descent
