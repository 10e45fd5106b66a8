#pragma once

// Umbrella header.

#include "safestab/blend.hpp"
#include "safestab/config.hpp"
#include "safestab/csv.hpp"
#include "safestab/errors.hpp"
#include "safestab/formulas.hpp"
#include "safestab/lie_data.hpp"
#include "safestab/oracle.hpp"
#include "safestab/plant.hpp"
#include "safestab/priority.hpp"
#include "safestab/search.hpp"
#include "safestab/sim.hpp"
#include "safestab/state.hpp"
#include "safestab/sweep.hpp"
#include "safestab/systems.hpp"
