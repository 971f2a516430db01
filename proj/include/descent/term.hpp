#pragma once

// First-order terms over a finite signature: construction, a canonical total
// order, printing and parsing, substitutions, one-hole contexts, and bounded
// enumeration of ground terms.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace descent {

using SymbolId = int;

// Raised when a configurable resource cap (term height, carrier size) would
// be exceeded; never silently truncates.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  enum class Kind { Syntax, UnknownSymbol, ArityMismatch };
  ParseError(Kind k, const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), kind(k), position(pos) {}
  Kind kind;
  std::size_t position;  // byte offset of the offending token
};

// Function symbols with fixed arities. Declaration order is the canonical
// symbol order used by term enumeration and precedence search.
class Signature {
 public:
  struct Symbol {
    std::string name;
    int arity;
  };

  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(SymbolId id) const { return symbols_.at(id).name; }
  int arity(SymbolId id) const { return symbols_.at(id).arity; }
  std::optional<SymbolId> find(std::string_view name) const;
  std::span<const Symbol> symbols() const { return symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::map<std::string, SymbolId, std::less<>> index_;
};

// Immutable term tree: a variable or an application with exactly
// arity-many arguments (enforced wherever a Signature is in scope).
// Height: variables and constants have height 0.
class Term {
 public:
  static Term var(std::string name);
  static Term app(SymbolId symbol, std::vector<Term> args);

  bool is_var() const { return std::holds_alternative<VarNode>(node_); }
  bool is_app() const { return !is_var(); }
  const std::string& var_name() const { return std::get<VarNode>(node_).name; }
  SymbolId symbol() const { return std::get<AppNode>(node_).symbol; }
  std::span<const Term> args() const;
  int height() const { return height_; }

  bool operator==(const Term& other) const { return node_ == other.node_; }

 private:
  struct VarNode {
    std::string name;
    bool operator==(const VarNode&) const = default;
  };
  struct AppNode {
    SymbolId symbol;
    std::vector<Term> args;
    bool operator==(const AppNode&) const = default;
  };

  Term(std::variant<VarNode, AppNode> node, int height)
      : node_(std::move(node)), height_(height) {}

  std::variant<VarNode, AppNode> node_;
  int height_;
};

// Canonical total order: by height, then variables before applications,
// then variable name / symbol id, then arguments lexicographically.
// enumerate_ground_terms lists terms in exactly this order.
int compare(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

// Arity consistency of every App node against sig.
bool well_formed(const Signature& sig, const Term& t);

std::string to_string(const Signature& sig, const Term& t);

// Immediate subterms: the argument list for applications, empty for
// variables. The view borrows from t.
std::span<const Term> immediate_subterms(const Term& t);

// Exact containment: s occurs somewhere inside t (t itself counts).
bool contains_subterm(const Term& t, const Term& s);

struct Substitution {
  std::map<std::string, Term, std::less<>> bindings;

  const Term* lookup(std::string_view var) const {
    auto it = bindings.find(var);
    return it == bindings.end() ? nullptr : &it->second;
  }
};

// Variables without a binding are left in place.
Term apply_substitution(const Term& t, const Substitution& s);

std::set<std::string> variables_of(const Term& t);

// A term with exactly one occurrence of the reserved hole marker.
// plug substitutes the hole; plugging the hole itself is the identity.
class Context {
 public:
  static const std::string& hole_name();
  static Term hole() { return Term::var(hole_name()); }

  explicit Context(Term skeleton);  // throws std::invalid_argument unless exactly one hole

  const Term& skeleton() const { return skeleton_; }
  Term plug(const Term& t) const;

 private:
  Term skeleton_;
};

inline constexpr int kDefaultMaxHeight = 12;

// All ground terms of height <= depth, in canonical order, duplicate-free.
// Signatures without constants yield an empty universe. Throws LimitError
// when depth exceeds the cap (default 12) rather than recursing unbounded.
std::vector<Term> enumerate_ground_terms(const Signature& sig, int depth,
                                         int max_height = kDefaultMaxHeight);

// Parses name(arg,...) syntax. Identifiers may not contain whitespace,
// parentheses, commas, or '#'. Names in vars parse as variables and must not
// collide with symbol names; all other identifiers must be declared in sig
// with matching arity. Errors carry the offending token's byte offset.
Term parse_term(std::string_view input, const Signature& sig,
                const std::set<std::string>& vars);

}  // namespace descent
