#pragma once

#include <cstddef>
#include <future>
#include <utility>

namespace sgfact {

// Worker threads allowed: MF_THREADS when set and positive, otherwise the
// hardware concurrency (at least 1).
std::size_t thread_budget();

// Runs f on another thread when the budget allows, inline otherwise.
template <class F>
auto maybe_async(F&& f) {
  return std::async(thread_budget() > 1 ? std::launch::async : std::launch::deferred, std::forward<F>(f));
}

}  // namespace sgfact
