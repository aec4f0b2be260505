#pragma once

// Umbrella header for the solver library.

#include "eo/bench.hpp"
#include "eo/config.hpp"
#include "eo/control.hpp"
#include "eo/density.hpp"
#include "eo/flow.hpp"
#include "eo/generators.hpp"
#include "eo/graph.hpp"
#include "eo/initialization.hpp"
#include "eo/io.hpp"
#include "eo/kowalik.hpp"
#include "eo/layers.hpp"
#include "eo/path_search.hpp"
#include "eo/profile.hpp"
#include "eo/reduction.hpp"
#include "eo/report.hpp"
#include "eo/solve.hpp"
#include "eo/verify.hpp"
