#pragma once

// Planar primitives shared by every kernel module.
#include "clip.hpp"
#include "errors.hpp"
#include "hull.hpp"
#include "line.hpp"
#include "point.hpp"
#include "polygon.hpp"
