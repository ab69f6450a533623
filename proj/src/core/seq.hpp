#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace conreal {

// Memoized total sequence.  Entries are filled strictly in order, so the step
// function may depend on all earlier entries (used for stateful rewrites and
// seeded random walks) and concurrent probes always observe identical values.
// Dependency graphs between sequences are acyclic, so holding the fill lock
// while the step function probes other sequences cannot deadlock.
template <typename T>
class LazySeq {
 public:
  using Step = std::function<T(std::size_t, const std::vector<T>&)>;

  explicit LazySeq(Step step) : impl_(std::make_shared<Impl>(std::move(step))) {}

  static LazySeq from_fn(std::function<T(std::size_t)> f) {
    return LazySeq([f = std::move(f)](std::size_t n, const std::vector<T>&) { return f(n); });
  }

  T at(std::size_t n) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto& cache = impl_->cache;
    while (cache.size() <= n) cache.push_back(impl_->step(cache.size(), cache));
    return cache[n];
  }

 private:
  struct Impl {
    explicit Impl(Step s) : step(std::move(s)) {}
    Step step;
    std::vector<T> cache;
    std::mutex mu;
  };
  std::shared_ptr<Impl> impl_;
};

}  // namespace conreal
