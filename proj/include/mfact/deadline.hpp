#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace mfact {

class DeadlineExceeded : public std::runtime_error {
public:
    DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

/// Installs a cooperative deadline for the current thread. Long-running
/// kernels poll check_deadline(); nesting keeps the earliest deadline.
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::chrono::duration<double> budget);
    ~ScopedDeadline();
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> previous_;
};

/// Throws DeadlineExceeded if the current thread's deadline has passed.
void check_deadline();

}  // namespace mfact
