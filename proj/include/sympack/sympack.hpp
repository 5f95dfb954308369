#pragma once

#include "sympack/core/quadratic.hpp"
#include "sympack/core/rational.hpp"
#include "sympack/ech.hpp"
#include "sympack/errors.hpp"
#include "sympack/exceptional.hpp"
#include "sympack/highdim.hpp"
#include "sympack/io/domain_document.hpp"
#include "sympack/io/json.hpp"
#include "sympack/packing.hpp"
#include "sympack/stabilized.hpp"
#include "sympack/staircase.hpp"
#include "sympack/toric.hpp"
