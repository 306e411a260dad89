#pragma once

#include "bseries.hpp"
#include "canonical.hpp"
#include "coefficient_map.hpp"
#include "convolution.hpp"
#include "error.hpp"
#include "increasing.hpp"
#include "json_io.hpp"
#include "poly.hpp"
#include "prufer.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "trees.hpp"
