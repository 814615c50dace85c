#pragma once

#include "ransomlot/breakeven.hpp"
#include "ransomlot/econ.hpp"
#include "ransomlot/errors.hpp"
#include "ransomlot/format.hpp"
#include "ransomlot/mitigation.hpp"
#include "ransomlot/montecarlo.hpp"
#include "ransomlot/rng.hpp"
#include "ransomlot/scenario_io.hpp"
