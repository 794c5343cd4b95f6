#pragma once

#include "tpminors/census.hpp"
#include "tpminors/determinant.hpp"
#include "tpminors/divisors.hpp"
#include "tpminors/errors.hpp"
#include "tpminors/fit.hpp"
#include "tpminors/geometry.hpp"
#include "tpminors/hyperplanes.hpp"
#include "tpminors/incidence_config.hpp"
#include "tpminors/incidences.hpp"
#include "tpminors/matrix.hpp"
#include "tpminors/multiset.hpp"
#include "tpminors/parallel.hpp"
#include "tpminors/rational.hpp"
#include "tpminors/rectangles.hpp"
#include "tpminors/scan.hpp"
#include "tpminors/st_bound.hpp"
#include "tpminors/structured_matrices.hpp"
#include "tpminors/total_positivity.hpp"
#include "tpminors/tp_assembly.hpp"
