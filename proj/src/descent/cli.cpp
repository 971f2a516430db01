#include "descent/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "descent/campaign.hpp"
#include "descent/json_io.hpp"
#include "descent/openrec.hpp"
#include "descent/principle.hpp"
#include "descent/term.hpp"

namespace descent {
namespace {

// ---- TRS file parsing --------------------------------------------------------

struct Token {
  enum class Kind { LParen, RParen, Comma, Arrow, Ident, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex_trs(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::Kind::LParen, "(", i});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Token::Kind::RParen, ")", i});
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back({Token::Kind::Comma, ",", i});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < n && text[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->", i});
      i += 2;
      continue;
    }
    const std::size_t start = i;
    while (i < n) {
      char d = text[i];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ',' ||
          d == '#')
        break;
      if (d == '-' && i + 1 < n && text[i + 1] == '>') break;
      ++i;
    }
    out.push_back({Token::Kind::Ident, std::string(text.substr(start, i - start)), start});
  }
  out.push_back({Token::Kind::End, "", n});
  return out;
}

// Builds the signature while parsing: symbols are interned in first-appearance
// order, which fixes the canonical symbol order the precedence search extends.
class TrsReader {
 public:
  explicit TrsReader(std::string_view text) : toks_(lex_trs(text)) {}

  TrsFile read() {
    bool saw_rules = false;
    while (peek().kind == Token::Kind::LParen) {
      next();
      const Token kw = next();
      if (kw.kind != Token::Kind::Ident)
        fail(kw, "expected a section keyword after '('");
      if (kw.text == "VAR") {
        if (saw_rules) fail(kw, "(VAR ...) must precede (RULES ...)");
        read_var_section();
      } else if (kw.text == "RULES") {
        read_rules_section();
        saw_rules = true;
      } else {
        fail(kw, "unknown section '" + kw.text + "' (expected VAR or RULES)");
      }
    }
    if (peek().kind != Token::Kind::End)
      fail(peek(), "expected '(' or end of file");
    if (!saw_rules) fail(peek(), "missing (RULES ...) section");
    return TrsFile{Signature(std::move(symbols_)), std::move(vars_), std::move(rules_)};
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg,
                                ParseError::Kind kind = ParseError::Kind::Syntax) {
    throw ParseError(kind, msg, t.pos);
  }

  void read_var_section() {
    while (peek().kind == Token::Kind::Ident) vars_.insert(next().text);
    const Token close = next();
    if (close.kind != Token::Kind::RParen)
      fail(close, "expected a variable name or ')' in (VAR ...)");
  }

  void read_rules_section() {
    while (peek().kind != Token::Kind::RParen && peek().kind != Token::Kind::End) {
      Term lhs = read_term();
      const Token arrow = next();
      if (arrow.kind != Token::Kind::Arrow) fail(arrow, "expected '->' after a left side");
      Term rhs = read_term();
      rules_.push_back({std::move(lhs), std::move(rhs)});
    }
    const Token close = next();
    if (close.kind != Token::Kind::RParen) fail(close, "unterminated (RULES ...) section");
  }

  Term read_term() {
    const Token head = next();
    if (head.kind != Token::Kind::Ident) fail(head, "expected a term");
    if (peek().kind == Token::Kind::LParen) {
      if (vars_.count(head.text))
        fail(head, "variable '" + head.text + "' used as a function symbol");
      // Claim the id before descending into arguments, so the canonical
      // symbol order follows the text left to right; the arity is filled in
      // once the argument list closes.
      reserve(head);
      next();
      std::vector<Term> args;
      if (peek().kind != Token::Kind::RParen) {
        args.push_back(read_term());
        while (peek().kind == Token::Kind::Comma) {
          next();
          args.push_back(read_term());
        }
      }
      const Token close = next();
      if (close.kind != Token::Kind::RParen) fail(close, "expected ')' or ',' in argument list");
      const SymbolId id = intern(head, static_cast<int>(args.size()));
      return Term::app(id, std::move(args));
    }
    if (vars_.count(head.text)) return Term::var(head.text);
    return Term::app(intern(head, 0), {});
  }

  static constexpr int kArityPending = -1;

  SymbolId reserve(const Token& tok) {
    auto it = ids_.find(tok.text);
    if (it != ids_.end()) return it->second;
    const SymbolId id = static_cast<SymbolId>(symbols_.size());
    ids_.emplace(tok.text, id);
    symbols_.push_back({tok.text, kArityPending});
    return id;
  }

  SymbolId intern(const Token& tok, int arity) {
    auto it = ids_.find(tok.text);
    if (it == ids_.end()) {
      const SymbolId id = static_cast<SymbolId>(symbols_.size());
      ids_.emplace(tok.text, id);
      symbols_.push_back({tok.text, arity});
      return id;
    }
    Signature::Symbol& sym = symbols_[static_cast<std::size_t>(it->second)];
    if (sym.arity == kArityPending) {
      sym.arity = arity;
      return it->second;
    }
    if (sym.arity != arity)
      fail(tok,
           "symbol '" + tok.text + "' used with arity " + std::to_string(arity) +
               " after arity " +
               std::to_string(symbols_[static_cast<std::size_t>(it->second)].arity),
           ParseError::Kind::ArityMismatch);
    return it->second;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::set<std::string> vars_;
  std::vector<Rule> rules_;
  std::vector<Signature::Symbol> symbols_;
  std::map<std::string, SymbolId> ids_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// ---- shared rendering helpers -------------------------------------------------

std::vector<SymbolId> precedence_chain(const Signature& sig, const PrecedenceStatus& order) {
  std::vector<SymbolId> chain(sig.size());
  std::iota(chain.begin(), chain.end(), 0);
  std::stable_sort(chain.begin(), chain.end(),
                   [&](SymbolId a, SymbolId b) { return order.above(a, b); });
  return chain;
}

std::string render_clauses(std::span<const ClauseStep> trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ",";
    out += to_string(trace[i].clause);
  }
  return out;
}

std::string join_labels(const PrincipleInstance& inst, std::span<const int> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += inst.labels()[static_cast<std::size_t>(xs[i])];
  }
  return out + "}";
}

std::string render_prefix(const PrincipleInstance& inst, std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += inst.labels()[static_cast<std::size_t>(xs[i])];
  }
  return out;
}

PrincipleInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in);
  return instance_from_json(j);
}

// ---- lab helpers ---------------------------------------------------------------

void print_law_violations(const std::vector<InstanceLawViolation>& vs,
                          const PrincipleInstance& inst, std::ostream& out) {
  for (const InstanceLawViolation& v : vs)
    out << "  law (" << v.law << ") fails at (" << inst.labels()[static_cast<std::size_t>(v.x)]
        << ", " << inst.labels()[static_cast<std::size_t>(v.y)] << ")\n";
}

void print_stp(const PrincipleInstance& inst, const StpReport& r, std::ostream& out) {
  out << "laws: " << (r.laws_ok() ? "ok" : "violated") << "\n";
  print_law_violations(r.law_violations, inst, out);
  std::vector<int> a_members;
  for (std::size_t i = 0; i < r.in_A.size(); ++i)
    if (r.in_A[i]) a_members.push_back(static_cast<int>(i));
  out << "A = " << join_labels(inst, a_members) << "\n";
  out << "eWF within A: " << (r.ewfa_ok() ? "ok" : "fails at " + join_labels(inst, r.ewfa_failures))
      << "\n";
  out << "hypotheses: " << (r.hypotheses_ok() ? "pass" : "fail") << "\n";
  if (r.hypotheses_ok())
    out << "conclusion (everywhere eWF): "
        << (r.conclusion_ok() ? "pass" : "FAIL at " + join_labels(inst, r.conclusion_failures))
        << "\n";
  out << "sound: " << (r.sound() ? "yes" : "NO") << "\n";
}

void print_gl(const PrincipleInstance& inst, const GlReport& r, std::ostream& out) {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < r.induced_succ0.size(); ++i)
    for (std::size_t j = 0; j < r.induced_succ0.size(); ++j)
      if (r.induced_succ0.at(i, j)) ++edges;
  out << "induced succ0 edges: " << edges << "\n";
  out << "split law (a): " << (r.split_violations.empty() ? "ok" : "violated") << "\n";
  print_law_violations(r.split_violations, inst, out);
  out << "sub acyclic: " << (r.sub_acyclic ? "yes" : "no") << "\n";
  out << "accessibility: "
      << (r.accessibility_failures.empty() ? "ok"
                                           : "fails at " + join_labels(inst, r.accessibility_failures))
      << "\n";
  out << "hypotheses: " << (r.hypotheses_ok() ? "pass" : "fail") << "\n";
  if (r.delegate) {
    out << "delegate decomposition check:\n";
    print_stp(inst, *r.delegate, out);
  }
  out << "sound: " << (r.sound() ? "yes" : "NO") << "\n";
}

template <class R>
int finish_campaign(const R& r, const char* name, bool json, std::ostream& out) {
  const OrderedJson j = campaign_to_json(r);
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << name << " campaign: trials=" << j["count"].template get<std::size_t>()
        << " seed=" << j["seed"].template get<std::uint64_t>();
    for (const auto& [k, v] : j["counters"].items()) out << " " << k << "=" << v.dump();
    out << "\n";
    for (const CampaignFailure& f : r.failures)
      out << "  failure @" << f.index << " (seed " << f.seed << "): " << f.message << "\n";
    out << (r.ok() ? "PASS" : "FAIL") << "\n";
  }
  return r.ok() ? kExitProven : kExitInternal;
}

// Carrier, succ, sub, succ0, gg straight off a certified rewrite system: the
// ground universe under the certificate's path order, immediate subterms, the
// no-subterm-clause order, and gg := succ0.
PrincipleInstance instance_from_certificate(const RpoInstance& rpo, int depth) {
  const std::vector<Term> universe = enumerate_ground_terms(rpo.sig, depth);
  if (universe.empty()) throw std::runtime_error("empty ground universe (no constants?)");
  const std::size_t n = universe.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Term& t : universe) labels.push_back(to_string(rpo.sig, t));
  EdgeMatrix succ(n), sub(n), succ0(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rpo_gt(rpo, universe[i], universe[j])) succ.set(i, j);
      if (rpo_decomp_gt0(rpo, universe[i], universe[j])) succ0.set(i, j);
    }
    for (const Term& u : immediate_subterms(universe[i])) {
      for (std::size_t j = 0; j < n; ++j)
        if (universe[j] == u) sub.set(i, j);
    }
  }
  EdgeMatrix gg = succ0;
  return PrincipleInstance::make(std::move(labels), std::move(succ), std::move(sub),
                                 std::move(succ0), std::move(gg), n);
}

int lab_single(const std::string& sub, const PrincipleInstance& inst, const LabOptions& opt,
               std::ostream& out, std::ostream& err) {
  if (sub == "stp") {
    const StpReport r = stp_check(inst);
    if (opt.json) {
      OrderedJson j;
      j["check"] = "stp";
      j["hypotheses_ok"] = r.hypotheses_ok();
      j["conclusion_ok"] = r.conclusion_ok();
      j["sound"] = r.sound();
      j["ewfa_failures"] = r.ewfa_failures;
      j["conclusion_failures"] = r.conclusion_failures;
      out << j.dump(2) << "\n";
    } else {
      print_stp(inst, r, out);
    }
    if (!r.sound()) {
      err << "decomposition principle falsified\n";
      return kExitInternal;
    }
    return kExitProven;
  }
  if (sub == "gl") {
    const GlReport r = gl_check(inst);
    if (opt.json) {
      OrderedJson j;
      j["check"] = "gl";
      j["hypotheses_ok"] = r.hypotheses_ok();
      j["delegate_ok"] =
          r.delegate && r.delegate->hypotheses_ok() && r.delegate->conclusion_ok();
      j["sound"] = r.sound();
      out << j.dump(2) << "\n";
    } else {
      print_gl(inst, r, out);
    }
    if (!r.sound()) {
      err << "graph-closure corollary falsified\n";
      return kExitInternal;
    }
    return kExitProven;
  }
  if (sub == "mbs") {
    const MbsResult m = minimal_bad_sequence(inst, inst.size() + 1);
    const bool acyclic = is_acyclic(inst.succ());
    bool breach = (m.no_bad != acyclic);
    if (opt.json) {
      OrderedJson j;
      j["check"] = "mbs";
      j["no_bad"] = m.no_bad;
      if (!m.no_bad) j["prefix"] = m.prefix;
      out << j.dump(2) << "\n";
    } else if (m.no_bad) {
      out << "no bad sequence: succ is wellfounded on the carrier\n";
    } else {
      out << "minimal bad prefix: " << render_prefix(inst, m.prefix) << "\n";
    }
    if (!m.no_bad) {
      const bool minimal = verify_pointwise_minimality(inst, m.prefix);
      if (!opt.json)
        out << "pointwise minimality: " << (minimal ? "verified" : "REFUTED") << "\n";
      breach = breach || !minimal;
    }
    if (breach) {
      err << "minimal bad sequence construction falsified\n";
      return kExitInternal;
    }
    return kExitProven;
  }
  if (sub == "bi") {
    const BiReport r = bar_induction_check(inst, opt.seq_cap);
    if (opt.json) {
      OrderedJson j;
      j["check"] = "bi";
      j["premise1"] = r.premise1;
      j["premise2"] = r.premise2;
      if (r.premise2_witness) j["premise2_witness"] = to_string(*r.premise2_witness);
      j["premise3"] = r.premise3;
      if (r.premise3_witness) j["premise3_witness"] = *r.premise3_witness;
      j["p_empty_exact"] = r.p_empty_exact;
      j["p_empty_derived"] = r.p_empty_derived;
      j["derivation_truncated"] = r.derivation_truncated;
      j["family_size"] = r.family_size;
      j["sound"] = r.sound();
      out << j.dump(2) << "\n";
    } else {
      out << "premise 1 (empty prefix safe): " << (r.premise1 ? "pass" : "fail") << "\n";
      out << "premise 2 (safe sequences hit the bar): " << (r.premise2 ? "pass" : "fail");
      if (r.premise2_witness) out << "  witness: " << to_string(*r.premise2_witness);
      out << "\n";
      out << "premise 3 (securedness propagates back): " << (r.premise3 ? "pass" : "fail");
      if (r.premise3_witness) out << "  witness prefix: " << render_prefix(inst, *r.premise3_witness);
      out << "\n";
      out << "P(empty) exact: " << (r.p_empty_exact ? "yes" : "no")
          << ", derived: " << (r.p_empty_derived ? "yes" : "no")
          << (r.derivation_truncated ? " (truncated)" : "") << "\n";
      out << "family size: " << r.family_size << "\n";
      out << "sound: " << (r.sound() ? "yes" : "NO") << "\n";
    }
    if (!r.sound()) {
      err << "bar induction check falsified\n";
      return kExitInternal;
    }
    return kExitProven;
  }
  if (sub == "lemma44") {
    Rng rng(opt.seed);
    const std::vector<UpSeq> family = premise_family(rng, inst.size(), opt.seq_cap, 16);
    const Lemma44Report r = lemma44_agreement(inst, family);
    if (opt.json) {
      OrderedJson j;
      j["check"] = "lemma44";
      j["tested"] = r.tested;
      j["disagreements"] = r.disagreements.size();
      j["identity_failures"] = r.identity_failures.size();
      j["ok"] = r.ok();
      out << j.dump(2) << "\n";
    } else {
      out << "sequences tested: " << r.tested << "\n";
      for (const UpSeq& s : r.disagreements) out << "  adapter disagrees at " << to_string(s) << "\n";
      for (const UpSeq& s : r.identity_failures) out << "  obligation fails at " << to_string(s) << "\n";
      out << (r.ok() ? "PASS" : "FAIL") << "\n";
    }
    if (!r.ok()) {
      err << "premise translation falsified\n";
      return kExitInternal;
    }
    return kExitProven;
  }
  err << "lab check '" << sub << "' does not take an instance (runs with --random)\n";
  return kExitParse;
}

}  // namespace

TrsFile load_trs(std::string_view text) { return TrsReader(text).read(); }

TrsFile load_trs_file(const std::string& path) { return load_trs(read_file(path)); }

std::pair<std::vector<int>, int> parse_alpha_spec(std::string_view spec) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("alpha spec needs a ';tail' part, e.g. \"5,4,3;7\" or \";0\"");
  const auto parse_value = [](std::string_view s) -> int {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
      throw std::invalid_argument("bad alpha value '" + std::string(s) +
                                  "' (nonnegative integers only)");
    return v;
  };
  std::vector<int> prefix;
  std::string_view head = spec.substr(0, semi);
  const bool blank = head.find_first_not_of(" \t") == std::string_view::npos;
  while (!blank) {
    const auto comma = head.find(',');
    prefix.push_back(parse_value(head.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    head.remove_prefix(comma + 1);
  }
  return {std::move(prefix), parse_value(spec.substr(semi + 1))};
}

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  if (end == v || *end != '\0') return fallback;
  return x;
}

int cmd_check(const std::string& path, const CheckOptions& opt, std::ostream& out,
              std::ostream& err) {
  TrsFile file;
  try {
    file = load_trs_file(path);
  } catch (const ParseError& e) {
    err << path << ": parse error at byte " << e.position << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  SearchConfig cfg;
  cfg.candidate_budget = opt.budget;
  cfg.status_mode = opt.status_mode;
  const Certificate cert = orient_trs(file.sig, file.rules, cfg);

  if (cert.status == Certificate::Status::Yes) {
    for (const RuleOrientation& ro : cert.oriented) {
      if (!revalidate_trace(*cert.instance, ro.trace)) {
        err << "internal: stored trace for rule " << ro.rule << " does not re-validate\n";
        return kExitInternal;
      }
    }
  }

  if (opt.json) {
    out << certificate_to_json(cert, file.sig, file.rules).dump(2) << "\n";
  } else {
    switch (cert.status) {
      case Certificate::Status::Yes: {
        out << "YES\n";
        const PrecedenceStatus& order = cert.instance->order;
        const std::vector<SymbolId> chain = precedence_chain(file.sig, order);
        out << "precedence:";
        for (std::size_t i = 0; i < chain.size(); ++i)
          out << (i ? " > " : " ") << file.sig.name(chain[i]);
        out << "\nstatus:";
        for (SymbolId id : chain)
          out << " " << file.sig.name(id) << "=" << to_string(order.status(id));
        out << "\n";
        for (const RuleOrientation& ro : cert.oriented) {
          const Rule& r = file.rules[ro.rule];
          out << "rule " << ro.rule << ": " << to_string(file.sig, r.lhs) << " > "
              << to_string(file.sig, r.rhs) << "  [" << render_clauses(ro.trace) << "]\n";
        }
        out << "candidates tried: " << cert.candidates_tried << "\n";
        break;
      }
      case Certificate::Status::NoInstance:
        out << "MAYBE\n";
        if (!cert.reason.empty()) out << "reason: " << cert.reason << "\n";
        out << "candidates tried: " << cert.candidates_tried << "\n";
        break;
      case Certificate::Status::Budget:
        out << "BUDGET\ncandidates tried: " << cert.candidates_tried << " (budget "
            << opt.budget << ")\n";
        break;
    }
  }

  if (opt.empirical) {
    try {
      const Trs trs(file.sig, file.rules);
      const TerminationSurvey survey =
          empirical_termination(trs, opt.depth, opt.fuel);
      out << "survey: universe=" << survey.universe_size << " normalized=" << survey.normalized
          << " fuel_exhausted=" << survey.fuel_exhausted << " loops=" << survey.loops.size()
          << "\n";
      if (cert.status == Certificate::Status::Yes && !survey.loops.empty()) {
        err << "internal: certificate says YES but "
            << to_string(file.sig, survey.loops.front()) << " loops\n";
        return kExitInternal;
      }
    } catch (const std::invalid_argument& e) {
      out << "survey skipped: " << e.what() << "\n";
    }
  }

  switch (cert.status) {
    case Certificate::Status::Yes:
      return kExitProven;
    case Certificate::Status::NoInstance:
      return kExitMaybe;
    case Certificate::Status::Budget:
      return kExitBudget;
  }
  return kExitInternal;
}

int cmd_trace(const std::string& path, const std::string& term_text, std::size_t fuel,
              std::ostream& out, std::ostream& err) {
  try {
    const TrsFile file = load_trs_file(path);
    const Trs trs(file.sig, file.rules);
    const Term start = parse_term(term_text, file.sig, file.vars);

    // Plain bounded stepping: the trace printer reports what happens within
    // fuel and nothing more; nontermination certificates are normalize's job.
    Term cur = start;
    out << "start: " << to_string(file.sig, cur) << "\n";
    std::size_t steps = 0;
    while (steps < fuel) {
      std::vector<RewriteResult> nexts = rewrite_once(trs, cur);
      if (nexts.empty()) break;
      RewriteResult& first = nexts.front();
      ++steps;
      out << "step " << steps << ": rule " << first.rule << " at " << to_string(first.position)
          << ": " << to_string(file.sig, first.term) << "\n";
      cur = std::move(first.term);
    }
    if (rewrite_once(trs, cur).empty())
      out << "normal form: " << to_string(file.sig, cur) << "\n";
    else
      out << "fuel exhausted after " << steps << " steps\n";
    return kExitProven;
  } catch (const ParseError& e) {
    err << "parse error at byte " << e.position << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_lab(const std::string& sub, const LabOptions& opt, std::ostream& out,
            std::ostream& err) {
  static const std::set<std::string> known = {"stp", "gl", "mbs", "bi", "lemma34", "lemma44"};
  if (!known.count(sub)) {
    err << "unknown lab check '" << sub << "'\n";
    return kExitParse;
  }

  if (opt.random) {
    if (sub == "lemma34") {
      Lemma34CampaignConfig cfg;
      cfg.seed = opt.seed;
      cfg.count = opt.count;
      return finish_campaign(lemma34_campaign(cfg), "lemma34", opt.json, out);
    }
    CampaignConfig cfg;
    cfg.seed = opt.seed;
    cfg.count = opt.count;
    cfg.seq_cap = opt.seq_cap;
    if (sub == "stp") return finish_campaign(stp_campaign(cfg), "stp", opt.json, out);
    if (sub == "gl") return finish_campaign(gl_campaign(cfg), "gl", opt.json, out);
    if (sub == "mbs") return finish_campaign(mbs_campaign(cfg), "mbs", opt.json, out);
    if (sub == "bi") return finish_campaign(bi_campaign(cfg), "bi", opt.json, out);
    return finish_campaign(lemma44_campaign(cfg), "lemma44", opt.json, out);
  }

  if (!opt.from_trs.empty()) {
    if (sub != "stp" && sub != "gl") {
      err << "--from-trs supports the stp and gl checks\n";
      return kExitParse;
    }
    try {
      const TrsFile file = load_trs_file(opt.from_trs);
      const Certificate cert = orient_trs(file.sig, file.rules, {});
      if (cert.status != Certificate::Status::Yes) {
        err << "cannot derive an instance: orientation is not YES\n";
        return kExitMaybe;
      }
      const PrincipleInstance inst = instance_from_certificate(*cert.instance, opt.depth);
      out << "carrier: " << inst.size() << " ground terms (height <= " << opt.depth << ")\n";
      return lab_single(sub, inst, opt, out, err);
    } catch (const ParseError& e) {
      err << opt.from_trs << ": parse error at byte " << e.position << ": " << e.what() << "\n";
      return kExitParse;
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return kExitParse;
    }
  }

  if (opt.instance_path.empty()) {
    err << "lab " << sub << " needs an instance file, --random, or --from-trs\n";
    return kExitParse;
  }
  try {
    const PrincipleInstance inst = load_instance(opt.instance_path);
    return lab_single(sub, inst, opt, out, err);
  } catch (const std::exception& e) {
    err << opt.instance_path << ": " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_phi(const PhiOptions& opt, std::ostream& out, std::ostream& err) {
  std::pair<std::vector<int>, int> spec;
  try {
    spec = parse_alpha_spec(opt.alpha);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
  const LazySequence<int> alpha =
      spec.first.empty() ? LazySequence<int>::constant(spec.second)
                         : LazySequence<int>::eventually_constant(spec.first, spec.second);

  const PhiDomain dom = nat_gt_domain();
  Realizer f;
  if (opt.realizer == "scan")
    f = scan_realizer(dom);
  else if (opt.realizer == "consult")
    f = consult_realizer(dom);
  else {
    err << "unknown realizer '" << opt.realizer << "' (scan or consult)\n";
    return kExitParse;
  }

  PhiBudget budget;
  budget.max_depth = opt.budget_depth;
  budget.max_probes = opt.budget_probes;
  const PhiOutcome res = phi(dom, f, alpha, budget);

  if (opt.json) {
    OrderedJson j;
    j["realizer"] = opt.realizer;
    j["alpha"] = opt.alpha;
    j["budget_exceeded"] = res.budget_exceeded;
    if (res.budget_exceeded) {
      j["diagnostic"] = res.diagnostic;
    } else {
      j["index"] = res.index;
      j["conclusion_holds"] = res.conclusion_holds;
      j["trace"] = phi_trace_to_json(res.trace);
    }
    out << j.dump(2) << "\n";
  } else if (res.budget_exceeded) {
    out << "budget exceeded: " << res.diagnostic << "\n";
  } else {
    out << "index: " << res.index << "\n";
    out << "alpha[" << res.index << "] = " << alpha.at(res.index) << ", alpha[" << res.index + 1
        << "] = " << alpha.at(res.index + 1) << "\n";
    out << "non-descent assertion: " << (res.conclusion_holds ? "holds" : "FAILS") << "\n";
    out << "recursive frames: " << res.trace.frames.size() << "\n";
  }

  if (res.budget_exceeded) return kExitPhiBudget;
  if (!res.conclusion_holds) {
    err << "realizer violated its contract\n";
    return kExitInternal;
  }
  return kExitProven;
}

}  // namespace descent
