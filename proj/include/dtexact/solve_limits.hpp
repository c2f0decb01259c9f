#pragma once

#include <chrono>
#include <stdexcept>

namespace dtexact {

// Cooperative wall-clock limit for the solvers. Recursions check it
// periodically and abort with SolveTimeout; used by the bench runner.
struct SolveDeadline {
  std::chrono::steady_clock::time_point at;

  static SolveDeadline after(std::chrono::milliseconds budget) {
    return SolveDeadline{std::chrono::steady_clock::now() + budget};
  }
  bool expired() const { return std::chrono::steady_clock::now() >= at; }
};

class SolveTimeout : public std::runtime_error {
 public:
  SolveTimeout() : std::runtime_error("solve deadline exceeded") {}
};

inline void check_deadline(const SolveDeadline* deadline) {
  if (deadline && deadline->expired()) throw SolveTimeout();
}

}  // namespace dtexact
