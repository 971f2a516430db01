#pragma once

// Infinite sequences probed by index: a base callable plus finite overrides,
// memoized so every index evaluates once. Memoization is guarded by a mutex
// (probes may race across campaign workers); splicing builds a new sequence
// that shares the originals.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace descent {

template <class T>
class LazySequence {
 public:
  using Base = std::function<T(std::size_t)>;

  explicit LazySequence(Base base, std::map<std::size_t, T> overrides = {})
      : state_(std::make_shared<State>(std::move(base))),
        overrides_(std::move(overrides)) {}

  static LazySequence constant(T value) {
    return LazySequence([value](std::size_t) { return value; });
  }

  // prefix[0], ..., prefix[k-1], tail, tail, ...
  static LazySequence eventually_constant(std::vector<T> prefix, T tail) {
    return LazySequence([prefix = std::move(prefix), tail = std::move(tail)](std::size_t i) {
      return i < prefix.size() ? prefix[i] : tail;
    });
  }

  static LazySequence periodic(std::vector<T> cycle) {
    if (cycle.empty()) throw std::invalid_argument("periodic: empty cycle");
    return LazySequence([cycle = std::move(cycle)](std::size_t i) {
      return cycle[i % cycle.size()];
    });
  }

  T at(std::size_t i) const {
    auto ov = overrides_.find(i);
    if (ov != overrides_.end()) return ov->second;
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(i);
    if (it != state_->memo.end()) return it->second;
    T value = state_->base(i);
    // idempotent write: the base is only ever consulted once per index
    return state_->memo.emplace(i, std::move(value)).first->second;
  }

  // A copy with value at index i, on top of the shared base.
  LazySequence with_override(std::size_t i, T value) const {
    LazySequence copy = *this;
    copy.overrides_[i] = std::move(value);
    return copy;
  }

 private:
  struct State {
    explicit State(Base b) : base(std::move(b)) {}
    Base base;
    std::mutex mu;
    std::map<std::size_t, T> memo;
  };

  std::shared_ptr<State> state_;
  std::map<std::size_t, T> overrides_;
};

// alpha[0..n), then y, then beta shifted after it:
// result_i = alpha_i (i < n), result_n = y, result_{n+1+j} = beta_j.
template <class T>
LazySequence<T> splice(const LazySequence<T>& alpha, std::size_t n, T y,
                       const LazySequence<T>& beta) {
  return LazySequence<T>([alpha, n, y = std::move(y), beta](std::size_t i) {
    if (i < n) return alpha.at(i);
    if (i == n) return y;
    return beta.at(i - n - 1);
  });
}

// An open predicate on infinite sequences, given by its finite-prefix kernel:
// U(alpha) holds iff some prefix satisfies the kernel. probe scans prefixes
// up to the given length.
template <class T>
class OpenPredicate {
 public:
  using Kernel = std::function<bool(std::span<const T>)>;

  explicit OpenPredicate(Kernel kernel) : kernel_(std::move(kernel)) {}

  bool kernel(std::span<const T> prefix) const { return kernel_(prefix); }

  // least prefix length <= bound whose kernel holds, if any
  std::optional<std::size_t> probe(const LazySequence<T>& alpha, std::size_t bound) const {
    std::vector<T> prefix;
    for (std::size_t n = 0; n <= bound; ++n) {
      if (kernel_(prefix)) return n;
      prefix.push_back(alpha.at(n));
    }
    return std::nullopt;
  }

 private:
  Kernel kernel_;
};

}  // namespace descent
