#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace splitcount {

/// Partition plan: the sweep domain is cut into `tasks` disjoint pieces and
/// handed to `threads` workers. Each worker owns a private State; callers
/// merge the returned states with a commutative operation (sum or union),
/// so the result does not depend on the layout.
struct PartitionPlan {
  std::size_t tasks = 1;
  unsigned threads = 1;
};

template <class State, class MakeState, class Body>
std::vector<State> run_partitioned(const PartitionPlan &plan,
                                   MakeState make_state, Body body) {
  const unsigned workers =
      plan.threads == 0 ? 1U
                        : static_cast<unsigned>(std::min<std::size_t>(
                              plan.threads, std::max<std::size_t>(plan.tasks, 1)));
  std::vector<State> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    states.push_back(make_state());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned w) {
    try {
      for (std::size_t t = next++; t < plan.tasks; t = next++)
        body(t, states[w]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
      next = plan.tasks;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }
  if (failure)
    std::rethrow_exception(failure);
  return states;
}

} // namespace splitcount
