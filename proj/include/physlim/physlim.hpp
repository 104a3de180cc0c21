#pragma once

#include "physlim/blackhole.hpp"
#include "physlim/constants.hpp"
#include "physlim/limits.hpp"
#include "physlim/parallelism_errors.hpp"
#include "physlim/qdyn.hpp"
#include "physlim/radiation_memory.hpp"
#include "physlim/scenarios.hpp"
#include "physlim/speed_limits.hpp"
