#include "descent/term.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <utility>

namespace descent {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const Symbol& sym = symbols_[i];
    if (sym.name.empty()) throw std::invalid_argument("signature: empty symbol name");
    if (sym.arity < 0) throw std::invalid_argument("signature: negative arity for " + sym.name);
    auto [it, fresh] = index_.emplace(sym.name, static_cast<SymbolId>(i));
    if (!fresh) throw std::invalid_argument("signature: duplicate symbol " + sym.name);
  }
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Term Term::var(std::string name) {
  return Term(VarNode{std::move(name)}, 0);
}

Term Term::app(SymbolId symbol, std::vector<Term> args) {
  int h = 0;
  for (const Term& a : args) h = std::max(h, a.height() + 1);
  return Term(AppNode{symbol, std::move(args)}, h);
}

std::span<const Term> Term::args() const {
  if (is_var()) return {};
  return std::get<AppNode>(node_).args;
}

int compare(const Term& a, const Term& b) {
  if (a.height() != b.height()) return a.height() < b.height() ? -1 : 1;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (a.is_var()) return a.var_name().compare(b.var_name());
  if (a.symbol() != b.symbol()) return a.symbol() < b.symbol() ? -1 : 1;
  auto as = a.args(), bs = b.args();
  // same symbol implies same arity for well-formed terms; guard anyway
  for (std::size_t i = 0; i < std::min(as.size(), bs.size()); ++i) {
    if (int c = compare(as[i], bs[i])) return c;
  }
  if (as.size() != bs.size()) return as.size() < bs.size() ? -1 : 1;
  return 0;
}

bool well_formed(const Signature& sig, const Term& t) {
  if (t.is_var()) return true;
  if (t.symbol() < 0 || static_cast<std::size_t>(t.symbol()) >= sig.size()) return false;
  if (static_cast<int>(t.args().size()) != sig.arity(t.symbol())) return false;
  for (const Term& a : t.args())
    if (!well_formed(sig, a)) return false;
  return true;
}

static void print_rec(std::ostream& out, const Signature& sig, const Term& t) {
  if (t.is_var()) {
    out << t.var_name();
    return;
  }
  out << sig.name(t.symbol());
  if (!t.args().empty()) {
    out << '(';
    bool first = true;
    for (const Term& a : t.args()) {
      if (!first) out << ',';
      first = false;
      print_rec(out, sig, a);
    }
    out << ')';
  }
}

std::string to_string(const Signature& sig, const Term& t) {
  std::ostringstream out;
  print_rec(out, sig, t);
  return out.str();
}

std::span<const Term> immediate_subterms(const Term& t) {
  return t.args();
}

bool contains_subterm(const Term& t, const Term& s) {
  if (s.height() > t.height()) return false;
  if (t == s) return true;
  for (const Term& a : t.args())
    if (contains_subterm(a, s)) return true;
  return false;
}

Term apply_substitution(const Term& t, const Substitution& s) {
  if (t.is_var()) {
    if (const Term* bound = s.lookup(t.var_name())) return *bound;
    return t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply_substitution(a, s));
  return Term::app(t.symbol(), std::move(args));
}

static void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.var_name());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

std::set<std::string> variables_of(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

const std::string& Context::hole_name() {
  static const std::string name = "\xe2\x96\xa1";  // U+25A1 WHITE SQUARE
  return name;
}

static int count_holes(const Term& t) {
  if (t.is_var()) return t.var_name() == Context::hole_name() ? 1 : 0;
  int n = 0;
  for (const Term& a : t.args()) n += count_holes(a);
  return n;
}

Context::Context(Term skeleton) : skeleton_(std::move(skeleton)) {
  if (count_holes(skeleton_) != 1)
    throw std::invalid_argument("context: skeleton must contain exactly one hole");
}

Term Context::plug(const Term& t) const {
  Substitution s;
  s.bindings.emplace(hole_name(), t);
  return apply_substitution(skeleton_, s);
}

std::vector<Term> enumerate_ground_terms(const Signature& sig, int depth, int max_height) {
  if (depth < 0) throw std::invalid_argument("enumerate_ground_terms: negative depth");
  if (depth > max_height)
    throw LimitError("enumerate_ground_terms: depth " + std::to_string(depth) +
                     " exceeds height cap " + std::to_string(max_height));

  // by_height[h] holds terms of height exactly h
  std::vector<std::vector<Term>> by_height;
  std::vector<Term> pool;  // all terms of height < current level

  for (int h = 0; h <= depth; ++h) {
    std::vector<Term> level;
    for (std::size_t id = 0; id < sig.size(); ++id) {
      int arity = sig.arity(static_cast<SymbolId>(id));
      if (h == 0) {
        if (arity == 0) level.push_back(Term::app(static_cast<SymbolId>(id), {}));
        continue;
      }
      if (arity == 0) continue;
      // argument tuples over pool with at least one argument of height h-1
      std::vector<std::size_t> odo(arity, 0);
      if (pool.empty()) continue;
      while (true) {
        bool hits_top = false;
        for (std::size_t k : odo)
          if (pool[k].height() == h - 1) hits_top = true;
        if (hits_top) {
          std::vector<Term> args;
          args.reserve(arity);
          for (std::size_t k : odo) args.push_back(pool[k]);
          level.push_back(Term::app(static_cast<SymbolId>(id), std::move(args)));
        }
        int pos = arity - 1;
        while (pos >= 0 && ++odo[pos] == pool.size()) odo[pos--] = 0;
        if (pos < 0) break;
      }
    }
    pool.insert(pool.end(), level.begin(), level.end());
    by_height.push_back(std::move(level));
  }

  std::vector<Term> out = std::move(pool);
  std::sort(out.begin(), out.end(), TermLess{});
  return out;
}

namespace {

struct Token {
  enum class Kind { Ident, LParen, RParen, Comma, End };
  Kind kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  Token peek() {
    if (!cached_) cached_ = lex();
    return *cached_;
  }

  Token take() {
    Token t = peek();
    cached_.reset();
    return t;
  }

 private:
  Token lex() {
    while (at_ < input_.size() &&
           (input_[at_] == ' ' || input_[at_] == '\t' || input_[at_] == '\n' ||
            input_[at_] == '\r'))
      ++at_;
    if (at_ >= input_.size()) return {Token::Kind::End, {}, at_};
    char c = input_[at_];
    if (c == '(') return {Token::Kind::LParen, input_.substr(at_, 1), at_++};
    if (c == ')') return {Token::Kind::RParen, input_.substr(at_, 1), at_++};
    if (c == ',') return {Token::Kind::Comma, input_.substr(at_, 1), at_++};
    if (c == '#')
      throw ParseError(ParseError::Kind::Syntax, "unexpected '#' in term", at_);
    std::size_t start = at_;
    while (at_ < input_.size()) {
      char d = input_[at_];
      if (d == '(' || d == ')' || d == ',' || d == '#' || d == ' ' || d == '\t' ||
          d == '\n' || d == '\r')
        break;
      ++at_;
    }
    return {Token::Kind::Ident, input_.substr(start, at_ - start), start};
  }

  std::string_view input_;
  std::size_t at_ = 0;
  std::optional<Token> cached_;
};

Term parse_rec(Lexer& lex, const Signature& sig, const std::set<std::string>& vars) {
  Token head = lex.take();
  if (head.kind != Token::Kind::Ident)
    throw ParseError(ParseError::Kind::Syntax,
                     "expected identifier at offset " + std::to_string(head.pos), head.pos);
  std::string name(head.text);

  bool has_args = lex.peek().kind == Token::Kind::LParen;
  if (vars.count(name)) {
    if (has_args)
      throw ParseError(ParseError::Kind::Syntax,
                       "variable " + name + " cannot take arguments", head.pos);
    return Term::var(std::move(name));
  }

  std::optional<SymbolId> id = sig.find(name);
  if (!id)
    throw ParseError(ParseError::Kind::UnknownSymbol,
                     "unknown symbol " + name + " at offset " + std::to_string(head.pos),
                     head.pos);

  std::vector<Term> args;
  if (has_args) {
    lex.take();  // '('
    if (lex.peek().kind == Token::Kind::RParen) {
      Token t = lex.take();
      if (sig.arity(*id) != 0)
        throw ParseError(ParseError::Kind::ArityMismatch,
                         name + " expects " + std::to_string(sig.arity(*id)) +
                             " arguments, got 0",
                         t.pos);
      return Term::app(*id, {});
    }
    while (true) {
      args.push_back(parse_rec(lex, sig, vars));
      Token t = lex.take();
      if (t.kind == Token::Kind::RParen) break;
      if (t.kind != Token::Kind::Comma)
        throw ParseError(ParseError::Kind::Syntax,
                         "expected ',' or ')' at offset " + std::to_string(t.pos), t.pos);
    }
  }
  if (static_cast<int>(args.size()) != sig.arity(*id))
    throw ParseError(ParseError::Kind::ArityMismatch,
                     name + " expects " + std::to_string(sig.arity(*id)) +
                         " arguments, got " + std::to_string(args.size()),
                     head.pos);
  return Term::app(*id, std::move(args));
}

}  // namespace

Term parse_term(std::string_view input, const Signature& sig,
                const std::set<std::string>& vars) {
  Lexer lex(input);
  Term t = parse_rec(lex, sig, vars);
  Token tail = lex.take();
  if (tail.kind != Token::Kind::End)
    throw ParseError(ParseError::Kind::Syntax,
                     "trailing input at offset " + std::to_string(tail.pos), tail.pos);
  return t;
}

}  // namespace descent
