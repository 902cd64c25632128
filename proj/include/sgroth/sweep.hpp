#ifndef SGROTH_SWEEP_HPP
#define SGROTH_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

#include "sgroth/core.hpp"

namespace sgroth {

/// A (λ, n) pair.
struct Case {
  Partition lambda;
  int n = 1;
};

/// Every λ with at most `max_n` rows and λ_1 ≤ max_part, paired with every
/// n from max(ℓ(λ), 1) to max_n.
inline std::vector<Case> desk_sweep(int max_n, int max_part) {
  std::vector<Case> out;
  for (auto& lambda : partitions_in_box(max_n, max_part)) {
    for (int n = std::max(lambda.length(), 1); n <= max_n; ++n) out.push_back({lambda, n});
  }
  return out;
}

/// Applies `f` to every element on up to `jobs` threads. Results keep the
/// input order; the first exception thrown by any call is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f, int jobs)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<R> results(items.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = f(items[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
          try {
            results[i] = f(items[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace sgroth

#endif  // SGROTH_SWEEP_HPP
