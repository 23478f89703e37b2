#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fiberalg {

/// out[i] = fn(i) for i < n, split across up to `threads` workers. Results land
/// in index order, so output does not depend on scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, int threads, Fn&& fn) {
  std::vector<T> out(n);
  const std::size_t workers = threads > 1 ? std::min<std::size_t>(static_cast<std::size_t>(threads), n) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace fiberalg
