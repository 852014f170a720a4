#include "k3/deadline.hpp"

#include "k3/errors.hpp"

namespace k3 {

namespace {
thread_local Clock::time_point tl_deadline = Clock::time_point::max();
thread_local unsigned tl_tick = 0;
}  // namespace

Clock::time_point current_deadline() { return tl_deadline; }

void check_deadline() {
    if (tl_deadline == Clock::time_point::max()) return;
    if ((++tl_tick & 63u) != 0) return;
    if (Clock::now() > tl_deadline) throw Timeout("timeout");
}

DeadlineScope::DeadlineScope(Clock::time_point t) : saved_(tl_deadline) { tl_deadline = t; }
DeadlineScope::~DeadlineScope() { tl_deadline = saved_; }

}  // namespace k3
