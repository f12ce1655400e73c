// sweep.hpp — parameter-sweep execution over a bounded worker pool
//
// Every sweep point is an independent task; results land in preallocated,
// disjoint row slots, so the output is byte-identical for any worker count.
// Random baths derive their generator from (seed, point index), never from
// execution order.

#pragma once

#include "bigeo/config.hpp"
#include "bigeo/table.hpp"

namespace bigeo::sweep {

// Execute the sweep. workers_override > 0 wins over config/run.workers.
// Throws config_error for output/state/environment combinations that can
// never produce a value; per-row regime violations become the row's status.
Table run_sweep(const ExperimentConfig& cfg, unsigned workers_override = 0);

} // namespace bigeo::sweep
