#pragma once
// Umbrella header.

#include "symcon/linalg.hpp"
#include "symcon/core.hpp"
#include "symcon/wootters.hpp"
#include "symcon/symmetry.hpp"
#include "symcon/models.hpp"
#include "symcon/simplex.hpp"
#include "symcon/catalog.hpp"
#include "symcon/decomposer.hpp"
#include "symcon/sweep.hpp"
