#pragma once

#include <chrono>

namespace k3 {

using Clock = std::chrono::steady_clock;

// Per-thread deadline checked cooperatively by long-running loops.
// time_point::max() means no deadline.
Clock::time_point current_deadline();
void check_deadline();

class DeadlineScope {
public:
    explicit DeadlineScope(Clock::time_point t);
    ~DeadlineScope();
    DeadlineScope(const DeadlineScope&) = delete;
    DeadlineScope& operator=(const DeadlineScope&) = delete;

private:
    Clock::time_point saved_;
};

}  // namespace k3
