#pragma once

// Rotated {0, 90} kernels of orthogonal polygons and their optimal orientation.

#include "ortho_classify.hpp"
#include "ortho_optimize.hpp"
#include "ortho_sweep.hpp"
