#pragma once

// Finite strict relations: dense edge matrices, cycle search, multiset and
// lexicographic liftings of a base relation, and the sampled lifting law
// (wellfounded base => wellfounded lifted relation on tuples).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "descent/parallel.hpp"

namespace descent {

// Dense boolean matrix over carrier indices 0..n-1. at(i,j) reads "i is
// strictly above j".
class EdgeMatrix {
 public:
  EdgeMatrix() = default;
  explicit EdgeMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { cells_[i * n_ + j] = v ? 1 : 0; }

  bool is_irreflexive() const;
  bool is_transitive() const;
  EdgeMatrix transitive_closure() const;

  bool operator==(const EdgeMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

// First cycle in deterministic DFS order (lowest start index first), as
// indices [x0,...,xk] with edges x0->x1->...->xk->x0. nullopt if acyclic.
std::optional<std::vector<std::size_t>> find_cycle(const EdgeMatrix& m);

inline bool is_acyclic(const EdgeMatrix& m) { return !find_cycle(m).has_value(); }

// can_reach_cycle[i]: some infinite edge path starts at i (finite carrier:
// i reaches a cycle or lies on one).
std::vector<char> reaches_cycle(const EdgeMatrix& m);

// A binary relation given by a decision procedure plus an optional finite
// carrier. Operations that need to materialize edges reject abstract
// carriers (carrier == nullopt) instead of guessing.
template <class T>
struct RelationSpec {
  std::function<bool(const T&, const T&)> holds;
  std::optional<std::vector<T>> carrier;

  bool finite() const { return carrier.has_value(); }
};

// Materializes holds() over a finite carrier. The Parallel mode splits rows
// across workers; both modes produce the identical matrix.
template <class T>
EdgeMatrix materialize(std::span<const T> carrier,
                       const std::function<bool(const T&, const T&)>& holds,
                       par::Mode mode = par::Mode::Serial) {
  EdgeMatrix m(carrier.size());
  par::for_index(carrier.size(), mode, [&](std::size_t i) {
    for (std::size_t j = 0; j < carrier.size(); ++j)
      if (holds(carrier[i], carrier[j])) m.set(i, j);
  });
  return m;
}

template <class T>
struct WellFoundedReport {
  bool wellfounded;
  std::vector<T> cycle;  // witness when !wellfounded, in carrier elements
};

// Finite carriers only: wellfounded iff the materialized relation is acyclic.
// Throws std::invalid_argument on an abstract carrier.
template <class T>
WellFoundedReport<T> is_wellfounded_finite(const RelationSpec<T>& rel,
                                           par::Mode mode = par::Mode::Serial) {
  if (!rel.finite())
    throw std::invalid_argument("is_wellfounded_finite: carrier is not finite");
  EdgeMatrix m = materialize<T>(*rel.carrier, rel.holds, mode);
  auto cyc = find_cycle(m);
  if (!cyc) return {true, {}};
  WellFoundedReport<T> report{false, {}};
  for (std::size_t idx : *cyc) report.cycle.push_back((*rel.carrier)[idx]);
  return report;
}

// Strict multiset extension (Dershowitz-Manna): ys is obtained from xs by
// removing a nonempty sub-multiset and adding elements each strictly below
// some removed element. Equal multisets compare false. eq must be an
// equivalence compatible with gt.
template <class T>
bool multiset_ext(const std::function<bool(const T&, const T&)>& gt,
                  const std::function<bool(const T&, const T&)>& eq,
                  std::span<const T> xs, std::span<const T> ys) {
  std::vector<char> used(ys.size(), 0);
  std::vector<const T*> rest_xs;
  for (const T& x : xs) {
    bool cancelled = false;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!used[j] && eq(x, ys[j])) {
        used[j] = 1;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) rest_xs.push_back(&x);
  }
  if (rest_xs.empty()) return false;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (used[j]) continue;
    bool dominated = false;
    for (const T* x : rest_xs) {
      if (gt(*x, ys[j])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

// Left-to-right lexicographic extension at fixed arity. Length mismatch is a
// usage error, reported rather than silently false.
template <class T>
bool lex_ext(const std::function<bool(const T&, const T&)>& gt,
             const std::function<bool(const T&, const T&)>& eq,
             std::span<const T> xs, std::span<const T> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("lex_ext: tuple lengths differ");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (eq(xs[i], ys[i])) continue;
    return gt(xs[i], ys[i]);
  }
  return false;
}

enum class Lifting { Lexicographic, Multiset };

const char* to_string(Lifting l);

template <class T>
bool lifted_gt(Lifting l, const std::function<bool(const T&, const T&)>& gt,
               const std::function<bool(const T&, const T&)>& eq,
               std::span<const T> xs, std::span<const T> ys) {
  return l == Lifting::Lexicographic ? lex_ext(gt, eq, xs, ys)
                                     : multiset_ext(gt, eq, xs, ys);
}

// Sampled lifting law: for each finite base relation, either the base has a
// cycle (sample skipped: the law's premise fails) or the lifted relation on
// n-tuples must be acyclic.
struct LiftingLawReport {
  struct Entry {
    enum class Status { Pass, Skipped, Violation };
    Status status;
    std::vector<std::size_t> base_cycle;                 // when Skipped
    std::vector<std::vector<std::size_t>> tuple_cycle;   // when Violation
  };
  std::vector<Entry> entries;

  bool all_ok() const {
    for (const Entry& e : entries)
      if (e.status == Entry::Status::Violation) return false;
    return true;
  }
};

LiftingLawReport check_lifting_law(Lifting l, int n,
                                   std::span<const EdgeMatrix> samples,
                                   par::Mode mode = par::Mode::Serial);

}  // namespace descent
