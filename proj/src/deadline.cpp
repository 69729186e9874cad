#include "mfact/deadline.hpp"

namespace mfact {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
thread_local unsigned t_polls = 0;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::duration<double> budget) : previous_(t_deadline) {
    auto until = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
    if (!t_deadline || until < *t_deadline) t_deadline = until;
}

ScopedDeadline::~ScopedDeadline() { t_deadline = previous_; }

void check_deadline() {
    if (!t_deadline) return;
    if ((++t_polls & 0x3f) != 0) return;  // the clock is comparatively slow
    if (std::chrono::steady_clock::now() > *t_deadline) throw DeadlineExceeded();
}

}  // namespace mfact
