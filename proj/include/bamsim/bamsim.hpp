#pragma once

// Umbrella header for the whole library.

#include "bamsim/core/admission.hpp"
#include "bamsim/core/fixed_point.hpp"
#include "bamsim/core/invariants.hpp"
#include "bamsim/core/link_state.hpp"
#include "bamsim/core/loans.hpp"
#include "bamsim/core/types.hpp"
#include "bamsim/sim/engine.hpp"
#include "bamsim/sim/summary.hpp"
#include "bamsim/workload/rng.hpp"
#include "bamsim/workload/trace.hpp"
