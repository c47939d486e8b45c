#pragma once

#include "dynrel/assignment.hpp"
#include "dynrel/expr.hpp"
#include "dynrel/ext_time.hpp"

namespace dynrel {

/// Failure instant of the top event under the given assignment.
ExtTime eval_dft(const DftPtr& expr, const Assignment& a);

/// Failure instant of the structure function under the given assignment.
ExtTime eval_drbd(const DrbdPtr& expr, const Assignment& a);

/// True iff the top event has occurred by time t (inclusive).
bool dft_event_holds(const DftPtr& expr, const Assignment& a, double t);

/// True iff the structure survives strictly past time t.
bool drbd_event_holds(const DrbdPtr& expr, const Assignment& a, double t);

}  // namespace dynrel
