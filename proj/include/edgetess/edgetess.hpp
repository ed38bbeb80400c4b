#pragma once

#include "edgetess/angle_solver.hpp"
#include "edgetess/catalog.hpp"
#include "edgetess/corpus.hpp"
#include "edgetess/errors.hpp"
#include "edgetess/ext_scalar.hpp"
#include "edgetess/geometry.hpp"
#include "edgetess/polygon.hpp"
#include "edgetess/svg.hpp"
#include "edgetess/tiling.hpp"
