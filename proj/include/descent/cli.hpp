#pragma once

// TRS file ingestion and the command bodies behind the binary, kept callable
// so tests can drive them directly as well as through the executable.

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "descent/rewrite.hpp"
#include "descent/rpo.hpp"

namespace descent {

// Exit codes are a stable contract.
inline constexpr int kExitProven = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitMaybe = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitPhiBudget = 4;
inline constexpr int kExitInternal = 10;  // a soundness property was falsified

// Parsed TRS file: `(VAR x y ...)` then `(RULES lhs -> rhs ...)`.
// The signature is inferred, symbols in first-appearance order; arities must
// be consistent across every occurrence. `#` starts a line comment.
struct TrsFile {
  Signature sig;
  std::set<std::string> vars;
  std::vector<Rule> rules;
};

TrsFile load_trs(std::string_view text);               // throws ParseError
TrsFile load_trs_file(const std::string& path);        // also std::runtime_error on IO

struct CheckOptions {
  SearchConfig::StatusMode status_mode = SearchConfig::StatusMode::Auto;
  long budget = 100000;
  bool json = false;
  bool empirical = false;  // survey ground terms as a sanity layer
  int depth = 2;           // survey universe height
  std::size_t fuel = 64;   // survey normalization fuel
};

int cmd_check(const std::string& path, const CheckOptions& opt, std::ostream& out,
              std::ostream& err);

int cmd_trace(const std::string& path, const std::string& term_text, std::size_t fuel,
              std::ostream& out, std::ostream& err);

struct LabOptions {
  std::string instance_path;  // JSON instance; empty for --random / --from-trs
  bool random = false;
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::string from_trs;  // derive the instance from a TRS's ground universe
  int depth = 2;
  std::size_t seq_cap = 3;
  bool json = false;
};

int cmd_lab(const std::string& sub, const LabOptions& opt, std::ostream& out,
            std::ostream& err);

struct PhiOptions {
  std::string realizer = "scan";  // scan | consult
  std::string alpha = ";0";
  std::size_t budget_depth = 16;
  std::size_t budget_probes = 4096;
  bool json = false;
};

int cmd_phi(const PhiOptions& opt, std::ostream& out, std::ostream& err);

// "5,4,3;7": prefix values, then the value repeated forever. ";0" is the
// constant sequence. Values are nonnegative integers.
std::pair<std::vector<int>, int> parse_alpha_spec(std::string_view spec);

// Environment default helper: numeric value of `name`, or `fallback` when
// unset or unparsable.
long env_long(const char* name, long fallback);

}  // namespace descent
