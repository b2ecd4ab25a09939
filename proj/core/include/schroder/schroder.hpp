#pragma once

// Umbrella header for the Schröder pattern poset library.

#include "schroder/bigint.hpp"
#include "schroder/counting.hpp"
#include "schroder/error.hpp"
#include "schroder/gen.hpp"
#include "schroder/pattern.hpp"
#include "schroder/poset.hpp"
#include "schroder/series.hpp"
#include "schroder/stats.hpp"
#include "schroder/step.hpp"
#include "schroder/word.hpp"
