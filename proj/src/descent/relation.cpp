#include "descent/relation.hpp"

#include <algorithm>

namespace descent {

bool EdgeMatrix::is_irreflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (at(i, i)) return false;
  return true;
}

bool EdgeMatrix::is_transitive() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (!at(i, j)) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (at(j, k) && !at(i, k)) return false;
    }
  return true;
}

EdgeMatrix EdgeMatrix::transitive_closure() const {
  EdgeMatrix c = *this;
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i) {
      if (!c.at(i, k)) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (c.at(k, j)) c.set(i, j);
    }
  return c;
}

namespace {

// Colored DFS; fills cycle with the back-edge loop when one is found.
bool dfs_cycle(const EdgeMatrix& m, std::size_t v, std::vector<int>& color,
               std::vector<std::size_t>& stack, std::vector<std::size_t>& cycle) {
  color[v] = 1;
  stack.push_back(v);
  for (std::size_t w = 0; w < m.size(); ++w) {
    if (!m.at(v, w)) continue;
    if (color[w] == 1) {
      auto it = std::find(stack.begin(), stack.end(), w);
      cycle.assign(it, stack.end());
      return true;
    }
    if (color[w] == 0 && dfs_cycle(m, w, color, stack, cycle)) return true;
  }
  stack.pop_back();
  color[v] = 2;
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_cycle(const EdgeMatrix& m) {
  std::vector<int> color(m.size(), 0);
  std::vector<std::size_t> stack, cycle;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (color[v] == 0 && dfs_cycle(m, v, color, stack, cycle)) return cycle;
  }
  return std::nullopt;
}

std::vector<char> reaches_cycle(const EdgeMatrix& m) {
  std::size_t n = m.size();
  // vertices on cycles: i is on a cycle iff closure has i above itself
  EdgeMatrix closure = m.transitive_closure();
  std::vector<char> bad(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (closure.at(i, i)) bad[i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (bad[i]) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (closure.at(i, j) && closure.at(j, j)) {
        bad[i] = 1;
        break;
      }
  }
  return bad;
}

const char* to_string(Lifting l) {
  return l == Lifting::Lexicographic ? "lex" : "mul";
}

namespace {

std::vector<std::vector<std::size_t>> all_tuples(std::size_t carrier, int n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> odo(n, 0);
  if (carrier == 0) return out;
  while (true) {
    out.push_back(odo);
    int pos = n - 1;
    while (pos >= 0 && ++odo[pos] == carrier) odo[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

LiftingLawReport check_lifting_law(Lifting l, int n,
                                   std::span<const EdgeMatrix> samples,
                                   par::Mode mode) {
  if (n <= 0) throw std::invalid_argument("check_lifting_law: n must be positive");
  LiftingLawReport report;
  report.entries.resize(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const EdgeMatrix& base = samples[s];
    LiftingLawReport::Entry& entry = report.entries[s];
    if (auto base_cycle = find_cycle(base)) {
      entry.status = LiftingLawReport::Entry::Status::Skipped;
      entry.base_cycle = *base_cycle;
      continue;
    }
    std::vector<std::vector<std::size_t>> tuples = all_tuples(base.size(), n);
    std::function<bool(const std::size_t&, const std::size_t&)> gt =
        [&base](const std::size_t& a, const std::size_t& b) { return base.at(a, b); };
    std::function<bool(const std::size_t&, const std::size_t&)> eq =
        [](const std::size_t& a, const std::size_t& b) { return a == b; };
    std::function<bool(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>
        lifted = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
          return lifted_gt<std::size_t>(l, gt, eq, a, b);
        };
    EdgeMatrix m = materialize<std::vector<std::size_t>>(tuples, lifted, mode);
    if (auto cyc = find_cycle(m)) {
      entry.status = LiftingLawReport::Entry::Status::Violation;
      for (std::size_t idx : *cyc) entry.tuple_cycle.push_back(tuples[idx]);
    } else {
      entry.status = LiftingLawReport::Entry::Status::Pass;
    }
  }
  return report;
}

}  // namespace descent
